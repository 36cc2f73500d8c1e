#include "canon/canon.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace canon;

namespace {

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    const auto dots = s.find("..");
    auto num = [&](std::string_view part, std::size_t offset) {
        if (part.empty()) throw parse_error(offset, "expected a number");
        int v = 0;
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw parse_error(offset + i, "expected a digit");
            v = v * 10 + (part[i] - '0');
            if (v > 1000) throw parse_error(offset + i, "value too large");
        }
        return v;
    };
    if (dots == std::string::npos) {
        const int v = num(s, 0);
        return {v, v};
    }
    const Range r{num(std::string_view(s).substr(0, dots), 0), num(std::string_view(s).substr(dots + 2), dots + 2)};
    if (r.hi < r.lo) throw domain_error("empty range " + s);
    return r;
}

std::vector<int> parse_set(const std::string& s) {
    std::vector<int> out;
    if (s.empty() || s == "{}") return out;
    std::string body = s;
    std::size_t shift = 0;
    if (body.front() == '{') {
        if (body.back() != '}') throw parse_error(body.size() - 1, "expected '}'");
        body = body.substr(1, body.size() - 2);
        shift = 1;
    }
    int cur = -1;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == ',') {
            if (cur < 0) throw parse_error(shift + i, "expected a number");
            out.push_back(cur);
            cur = -1;
        } else if (body[i] >= '0' && body[i] <= '9') {
            cur = (cur < 0 ? 0 : cur * 10) + (body[i] - '0');
        } else {
            throw parse_error(shift + i, "unexpected character '" + std::string(1, body[i]) + "'");
        }
    }
    return out;
}

Multipermutation word_arg(const std::string& text, std::optional<int> k) {
    return k ? parse_multipermutation(text, *k) : Multipermutation::infer(parse_word(text));
}

bool looks_like_path(const std::string& s) {
    return !s.empty() && s.find_first_not_of("EN") == std::string::npos;
}

json poly_json(const BivariatePoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"t", e.first}, {"u", e.second}, {"c", c.str()}});
    return {{"text", p.to_string()}, {"terms", terms}};
}

json stats_json(std::span<const int> w) {
    const WordStatistics s = statistics(w);
    return {{"des", s.des}, {"plat", s.plat}, {"wdes", s.wdes}, {"descent_set", s.descent_set}};
}

struct Common {
    std::optional<std::string> n;
    std::optional<int> k;
    std::optional<std::string> sigma;
    std::optional<std::string> set;
    std::uint64_t cap = default_cap;
    bool json_out = false;
    std::optional<std::string> out;
};

void add_common(CLI::App* app, Common& c, bool with_n = true) {
    if (with_n) app->add_option("--n", c.n, "size N or range A..B");
    app->add_option("--k", c.k, "multiplicity or flip value");
    app->add_option("--sigma", c.sigma, "permutation literal");
    app->add_option("--set", c.set, "descent set, e.g. 2,5,6 or {2,5,6}");
    app->add_option("--cap", c.cap, "enumeration cap");
    app->add_flag("--json", c.json_out, "machine-readable output");
}

Permutation need_sigma(const Common& c) {
    if (!c.sigma) throw domain_error("--sigma is required");
    return parse_permutation(*c.sigma);
}

int need_n(const Common& c, const std::optional<int>& positional) {
    if (positional) return *positional;
    if (!c.n) throw domain_error("n is required");
    const Range r = parse_range(*c.n);
    if (r.lo != r.hi) throw domain_error("a single n is required here");
    return r.lo;
}

// ---- subcommands ------------------------------------------------------------

int cmd_stats(const std::string& input, const Common& c) {
    json j;
    if (looks_like_path(input)) {
        const DyckPath d = parse_path(input);
        const PeakStats ps = peak_stats(d);
        j = {{"path", format_path(d)}, {"n", d.n()}, {"pea", ps.pea}, {"lpea", ps.lpea}, {"hpea", ps.hpea}};
        json peaks = json::array(), valleys = json::array();
        for (const Point& p : ps.peak_corners) peaks.push_back({p.x, p.y});
        for (const Point& p : ps.valley_corners) valleys.push_back({p.x, p.y});
        j["peak_corners"] = peaks;
        j["valley_corners"] = valleys;
    } else {
        const Multipermutation w = word_arg(input, c.k);
        j = {{"word", format_word(w)}, {"n", w.n()}, {"k", w.k()}};
        j.update(stats_json(w.word()));
        if (w.k() == 2) {
            const bool nn = is_nonnesting(w);
            j["nonnesting"] = nn;
            j["arcs"] = format_arcs(mat(w));
            if (nn) {
                j["s"] = format_word(s_of(w));
                j["dy"] = format_path(dy(w));
            }
        }
    }
    if (c.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [key, v] : j.items()) std::cout << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return 0;
}

int cmd_check(const std::string& predicate, const std::string& input, const std::optional<std::string>& pattern, const Common& c) {
    const Multipermutation w = word_arg(input, c.k);
    bool result = false;
    if (predicate == "nonnesting") result = is_nonnesting(w);
    else if (predicate == "A") result = is_in_A(w);
    else if (predicate == "B") result = is_in_B(w);
    else if (predicate == "canon" || predicate == "C") result = is_canon(w);
    else if (predicate == "pattern") {
        if (!pattern) throw domain_error("--pattern is required for predicate 'pattern'");
        result = pattern_occurs(w.word(), parse_word(*pattern));
    } else {
        throw domain_error("unknown predicate '" + predicate + "' (nonnesting, A, B, canon, pattern)");
    }
    if (c.json_out) std::cout << json{{"predicate", predicate}, {"word", format_word(w)}, {"result", result}}.dump() << "\n";
    else std::cout << (result ? "true" : "false") << "\n";
    return result ? 0 : 1;
}

int cmd_map(const std::string& name, const std::string& input, const Common& c) {
    auto word = [&] { return word_arg(input, 2); };
    auto path = [&] { return parse_path(input); };
    auto set = [&]() -> std::vector<int> {
        if (!c.set) throw domain_error("--set is required");
        return parse_set(*c.set);
    };
    std::vector<std::string> out;
    if (name == "rho") out = {format_path(rho(path()))};
    else if (name == "rho_inv") out = {format_path(rho_inv(path()))};
    else if (name == "lk") out = {format_path(lk(path()))};
    else if (name == "lk_rho") out = {format_path(lk_rho(path()))};
    else if (name == "hat_g") out = {format_path(hat_g(path(), set()))};
    else if (name == "hat_g_inv") out = {format_path(hat_g_inverse(path(), set()))};
    else if (name == "pi") out = {format_word(pi_from(need_sigma(c), path()))};
    else if (name == "s") out = {format_word(s_of(word()))};
    else if (name == "dy") out = {format_path(dy(word()))};
    else if (name == "mat") out = {format_arcs(mat(word()))};
    else if (name == "reverse") out = {format_word(reverse(word()))};
    else if (name == "fk") {
        if (!c.k) throw domain_error("--k is required for fk");
        out = {format_word(f_k_flip(word(), *c.k))};
    } else if (name == "f_sigma") out = {format_word(f_sigma(word()))};
    else if (name == "f_sigma_inv") out = {format_word(f_sigma_inverse(word(), need_sigma(c)))};
    else if (name == "g") out = {format_word(g_step(word()))};
    else if (name == "g_chain") {
        for (const Multipermutation& x : g_chain(word())) out.push_back(format_word(x) + " des=" + std::to_string(des(x)));
    } else if (name == "g_S") out = {format_word(g_S(word()))};
    else if (name == "g_S_inv") out = {format_word(g_S_inverse(word(), set()))};
    else if (name == "phi") out = {format_word(phi_sigma(word()))};
    else if (name == "phi_inv") out = {format_word(phi_sigma_inverse(word(), need_sigma(c)))};
    else if (name == "lkc") out = {format_word(lkc(word()))};
    else if (name == "Phi") out = {format_word(Phi_sigma(word()))};
    else if (name == "psi" || name == "Psi") out = {format_word(Psi(word()))};
    else if (name == "Phi_bar") out = {format_word(Phi_bar_sigma(word()))};
    else if (name == "psi_bar" || name == "Psi_bar") out = {format_word(Psi_bar(word()))};
    else if (name == "valid_sequence") {
        std::string s;
        for (int k : valid_sequence(parse_permutation(input))) s += (s.empty() ? "" : ",") + std::to_string(k);
        out = {s};
    } else if (name == "lambda") {
        const int n = need_n(c, std::nullopt);
        out = {format_word(lambda_of(parse_set(input), n))};
    } else {
        throw domain_error("unknown map '" + name + "'");
    }
    if (c.json_out) std::cout << json{{"map", name}, {"input", input}, {"output", out}}.dump() << "\n";
    else
        for (const auto& line : out) std::cout << line << "\n";
    return 0;
}

int cmd_poly(const std::string& family, const std::optional<int>& npos, const Common& c) {
    BivariatePoly p;
    json params;
    auto k_or = [&](int def) { return c.k.value_or(def); };
    if (family == "eulerian") p = eulerian(need_n(c, npos));
    else if (family == "narayana") p = narayana(need_n(c, npos), c.cap);
    else if (family == "narayana_closed") p = narayana_closed(need_n(c, npos));
    else if (family == "nonnesting" || family == "C") p = nonnesting_distribution(need_n(c, npos), c.cap);
    else if (family == "class") p = class_distribution(need_sigma(c), c.cap);
    else if (family == "A") p = a_poly(need_n(c, npos), k_or(3), c.cap);
    else if (family == "A_closed") p = a_closed(need_n(c, npos), k_or(3));
    else if (family == "B") p = b_poly(need_n(c, npos), k_or(3), c.cap);
    else if (family == "canon") p = c_k_poly(need_n(c, npos), k_or(3), c.cap);
    else if (family == "canon_class") p = c_k_class_poly(need_sigma(c), k_or(3), c.cap);
    else throw domain_error("unknown family '" + family + "'");
    if (c.json_out) {
        json j = {{"family", family}};
        if (npos || c.n) j["n"] = need_n(c, npos);
        if (c.k) j["k"] = *c.k;
        if (c.sigma) j["sigma"] = *c.sigma;
        j.update(poly_json(p));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& name, const Common& c, bool details, bool timing) {
    IdentityParams ip;
    if (c.n) {
        const Range r = parse_range(*c.n);
        ip.n_lo = r.lo;
        ip.n_hi = r.hi;
    }
    ip.k = c.k;
    if (c.sigma) ip.sigma = parse_permutation(*c.sigma);
    ip.cap = c.cap;
    const VerificationReport r = check_identity(name, ip);
    if (c.json_out) {
        json j = {{"identity", r.name}, {"params", r.params}, {"status", r.pass ? "pass" : "fail"}};
        j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
        if (r.echo) j["value"] = *r.echo;
        j["details"] = r.details;
        if (timing) j["seconds"] = r.seconds;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " " << r.params << "\n";
        if (r.witness) std::cout << "witness: " << *r.witness << "\n";
        if (r.echo) std::cout << "value: " << *r.echo << "\n";
        if (details)
            for (const auto& d : r.details) std::cout << "  " << d << "\n";
        if (timing) std::cout << "seconds: " << r.seconds << "\n";
    }
    return r.pass ? 0 : 1;
}

int cmd_render(const std::string& path_text, const std::optional<std::string>& second, bool with_lk, const Common& c) {
    const Permutation sigma = need_sigma(c);
    const DyckPath d = parse_path(path_text);
    std::optional<DyckPath> other;
    if (second) other = parse_path(*second);
    else if (with_lk) other = lk(d);
    const std::string svg = render_svg(sigma, d, other);
    if (c.out) {
        std::ofstream f(*c.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + *c.out);
        f << svg;
        std::cout << "wrote " << *c.out << "\n";
    } else {
        std::cout << svg;
    }
    return 0;
}

int cmd_enum(const std::string& family, const Common& c) {
    auto print = [&](const std::string& s) { std::cout << s << "\n"; };
    const auto words = [&](const Multipermutation& w) { print(format_word(w)); };
    auto n = [&] { return need_n(c, std::nullopt); };
    if (family == "dyck") for_each_dyck(n(), [&](const DyckPath& d) { print(format_path(d)); }, c.cap);
    else if (family == "perms") for_each_permutation(n(), [&](const Permutation& p) { print(format_word(p)); }, c.cap);
    else if (family == "nonnesting" || family == "C") for_each_nonnesting(n(), words, c.cap);
    else if (family == "class") for_each_in_class(need_sigma(c), words, c.cap);
    else if (family == "multiperms") for_each_multiperm(n(), c.k.value_or(2), words, c.cap);
    else if (family == "A") for_each_A(n(), c.k.value_or(3), words, c.cap);
    else if (family == "B") for_each_B(n(), c.k.value_or(3), words, c.cap);
    else if (family == "canon") for_each_canon(n(), c.k.value_or(3), words, c.cap);
    else if (family == "canon_class") for_each_canon_class(need_sigma(c), c.k.value_or(3), words, c.cap);
    else throw domain_error("unknown family '" + family + "'");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonnesting permutations, Dyck paths and their statistics"};
    app.require_subcommand(1);

    Common common;
    std::string arg1, arg2;
    std::optional<int> npos;
    std::optional<std::string> pattern, second;
    bool details = false, timing = false, with_lk = false;

    auto* stats = app.add_subcommand("stats", "statistics of a word or an E/N path");
    stats->add_option("input", arg1)->required();
    add_common(stats, common);

    auto* check = app.add_subcommand("check", "test a predicate: nonnesting, A, B, canon, pattern");
    check->add_option("predicate", arg1)->required();
    check->add_option("word", arg2)->required();
    check->add_option("--pattern", pattern, "pattern word for 'pattern'");
    add_common(check, common);

    auto* map = app.add_subcommand("map", "apply a bijection to a word or path");
    map->add_option("bijection", arg1)->required();
    map->add_option("input", arg2)->required();
    add_common(map, common);

    auto* poly = app.add_subcommand("poly", "compute a polynomial family");
    poly->add_option("family", arg1)->required();
    poly->add_option("N", npos, "size (alternative to --n)");
    add_common(poly, common);

    auto* verify = app.add_subcommand("verify", "verify a named identity over a range");
    verify->add_option("identity", arg1)->required();
    verify->add_flag("--details", details, "print one line per checked instance");
    verify->add_flag("--timing", timing, "include elapsed time (not deterministic)");
    add_common(verify, common);

    auto* render = app.add_subcommand("render", "SVG of the decorated grid with a path");
    render->add_option("path", arg1)->required();
    render->add_option("--second", second, "second path, drawn reflected");
    render->add_flag("--lk", with_lk, "draw lk(path) as the second path");
    render->add_option("--out", common.out, "output SVG file");
    add_common(render, common);

    auto* enumerate = app.add_subcommand("enum", "enumerate a family, one object per line");
    enumerate->add_option("family", arg1)->required();
    add_common(enumerate, common);

    auto* list = app.add_subcommand("identities", "list identity names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*stats) return cmd_stats(arg1, common);
        if (*check) return cmd_check(arg1, arg2, pattern, common);
        if (*map) return cmd_map(arg1, arg2, common);
        if (*poly) return cmd_poly(arg1, npos, common);
        if (*verify) return cmd_verify(arg1, common, details, timing);
        if (*render) return cmd_render(arg1, second, with_lk, common);
        if (*enumerate) return cmd_enum(arg1, common);
        if (*list) {
            for (const auto& i : identity_catalog()) std::cout << i.name << "  " << i.summary << "\n";
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << " (raise with --cap)\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
