#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace canon {

/// Malformed word or path literal. `position` is the 0-based character
/// offset of the first offending character.
class parse_error : public std::invalid_argument {
public:
    parse_error(std::size_t position, const std::string& what)
        : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An enumeration would emit more objects than the configured cap.
class cap_exceeded : public std::runtime_error {
public:
    cap_exceeded(std::uint64_t requested, std::uint64_t cap)
        : std::runtime_error("enumeration of " + std::to_string(requested) +
                             " objects exceeds cap " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

/// Input is well formed but outside the domain of the operation
/// (wrong class, wrong multiplicity, size mismatch).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Default hard cap on objects enumerated by a single call.
inline constexpr std::uint64_t default_cap = 500'000;

inline void check_cap(std::uint64_t requested, std::uint64_t cap) {
    if (requested > cap) throw cap_exceeded(requested, cap);
}

} // namespace canon
