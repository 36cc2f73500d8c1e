#pragma once

#include "canon/bijections/peaks.hpp"
#include "canon/bijections/removal.hpp"
#include "canon/nonnesting.hpp"

namespace canon {

inline Multipermutation reverse(const Multipermutation& w) { return w.reversed(); }

/// lk transported to the identity class through dy.
inline Multipermutation lkc(const Multipermutation& w) {
    if (!s_of(w).is_identity()) throw domain_error("lkc needs a word in the identity class, got " + format_word(w));
    return pi_from(Permutation::identity(w.n()), lk(dy(w)));
}

/// Involution on the class of s(w); wdes(w) - des(sigma) -> n + 1 - (wdes - des(sigma)).
inline Multipermutation Phi_sigma(const Multipermutation& w) {
    return phi_sigma_inverse(lkc(phi_sigma(w)), s_of(w));
}

/// Global involution; wdes -> 2n - wdes, class sigma -> class sigma^R.
inline Multipermutation Psi(const Multipermutation& w) {
    return phi_sigma_inverse(lkc(phi_sigma(w)), s_of(w).reversed());
}

/// Involution on the class of s(w); des window n - 1.
inline Multipermutation Phi_bar_sigma(const Multipermutation& w) { return reverse(Phi_sigma(reverse(w))); }

/// Global involution; des -> 2n - 2 - des.
inline Multipermutation Psi_bar(const Multipermutation& w) { return reverse(Psi(reverse(w))); }

} // namespace canon
