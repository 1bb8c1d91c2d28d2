#pragma once

// Named verification checks behind `tritrade verify`. Each check runs at one
// dimension and reports pass/fail plus a counterexample payload.

#include <tritrade/construct.hpp>
#include <tritrade/enumerate.hpp>
#include <tritrade/monomial.hpp>

#include <json.hpp>

#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <vector>

namespace tritrade {

struct CheckArgs {
    int n = 0;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct CheckResult {
    bool pass = false;
    nlohmann::json detail = nlohmann::json::object();
    nlohmann::json counterexample; // null on pass
};

struct CheckSpec {
    std::string name;
    std::string summary;
    int min_n;
    int max_n;
    std::function<CheckResult(const CheckArgs &)> run;
};

namespace detail {

inline const SpectrumTable &cached_spectrum(int n, int workers) {
    static std::mutex mu;
    static std::map<int, SpectrumTable> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        EnumOptions opt;
        opt.workers = workers;
        it = cache.emplace(n, spectrum(n, opt)).first;
    }
    return it->second;
}

inline BigInt entry(const SpectrumTable &t, std::uint64_t size) {
    const auto it = t.entries.find(size);
    return it == t.entries.end() ? BigInt(0) : it->second;
}

inline nlohmann::json big(const BigInt &x) { return x.str(); }

inline CheckResult check_mod3(const CheckArgs &a) {
    const auto &t = cached_spectrum(a.n, a.workers);
    CheckResult r;
    r.pass = true;
    for (const auto &[size, c] : t.entries) {
        if (c != 0 && !mod3_admissible(a.n, size)) {
            r.pass = false;
            r.counterexample = {{"size", size}, {"sets", big(c)}};
            break;
        }
    }
    const auto twice = std::uint64_t{1} << (a.n + 1);
    const auto at_twice = entry(t, twice);
    r.detail = {{"sizes", t.entries.size()}, {"sets_at_2^(n+1)", big(at_twice)}};
    if (r.pass && at_twice != 0) {
        r.pass = false;
        r.counterexample = {{"size", twice}, {"sets", big(at_twice)}};
    }
    return r;
}

inline CheckResult check_small_spectrum(const CheckArgs &a) {
    const auto &t = cached_spectrum(a.n, a.workers);
    CheckResult r;
    r.pass = true;
    const auto lo = std::uint64_t{1} << (a.n + 1);
    const auto hi = 5 * (std::uint64_t{1} << (a.n - 1));
    nlohmann::json nonzero = nlohmann::json::array();
    for (auto c = lo + 1; c <= hi; ++c) {
        const bool pred = small_bitrade_admissible(a.n, c);
        const bool present = entry(t, c) != 0;
        if (present) {
            nonzero.push_back(c);
        }
        if (pred != present && r.pass) {
            r.pass = false;
            r.counterexample = {{"size", c}, {"predicate", pred}, {"sets", big(entry(t, c))}};
        }
    }
    r.detail = {{"window", {lo, hi}}, {"nonzero_sizes", nonzero}};
    return r;
}

inline CheckResult check_alpha(const CheckArgs &a) {
    CheckResult r;
    r.pass = true;
    const auto all = all_unitrades(a.n);
    std::set<std::uint64_t> sizes;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto s = all[i].size();
        sizes.insert(s);
        if (!unitrade_alpha_admissible(a.n, s) && r.pass) {
            r.pass = false;
            r.counterexample = {{"size", s}, {"truth_table", i}, {"support", all[i].str()}};
        }
    }
    r.detail = {{"unitrades", all.size()}, {"sizes", sizes}};
    return r;
}

inline CheckResult check_rank2(const CheckArgs &a) {
    CheckResult r;
    r.pass = true;
    const auto all = all_unitrades(a.n);
    const auto lo = std::uint64_t{1} << a.n;
    std::set<std::uint64_t> formula;
    for (int s = 0; s < a.n; ++s) {
        formula.insert((std::uint64_t{1} << (a.n + 1)) - (std::uint64_t{1} << (s + 1)));
    }
    std::uint64_t below = 0;
    std::uint64_t rank2 = 0;
    const auto fail = [&](std::size_t i, const char *why) {
        if (r.pass) {
            r.pass = false;
            r.counterexample = {{"truth_table", i}, {"support", all[i].str()}, {"size", all[i].size()}, {"reason", why}};
        }
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto &u = all[i];
        const auto s = u.size();
        const int rk = rank(u);
        if (rk == 2) {
            ++rank2;
            if (!is_bitrade(u)) {
                fail(i, "rank 2 but not a bitrade");
            }
        }
        if (s < lo || s >= 2 * lo) {
            continue;
        }
        ++below;
        if (!is_bitrade(u)) {
            fail(i, "not a bitrade");
        } else if (!formula.contains(s)) {
            fail(i, "size not of the form 2^(n+1) - 2^(s+1)");
        } else if (rk != (s == lo ? 1 : 2)) {
            fail(i, "rank is not 2 (1 at the minimal size)");
        }
    }
    r.detail = {{"unitrades_below_2^(n+1)", below}, {"rank2_unitrades", rank2}};
    return r;
}

inline CheckResult check_minimal_count(const CheckArgs &a) {
    const auto &t = cached_spectrum(a.n, a.workers);
    const auto lo = std::uint64_t{1} << a.n;
    const BigInt want = ipow(3, static_cast<unsigned>(a.n));
    CheckResult r;
    const auto got = entry(t, lo);
    r.detail = {{"size", lo}, {"count", big(got)}};
    r.pass = got == want;
    if (a.n <= 4) {
        std::uint64_t direct = 0;
        for (const auto &u : all_unitrades(a.n)) {
            direct += u.size() == lo;
        }
        r.detail["catalog_count"] = direct;
        r.pass = r.pass && direct == want;
    }
    if (!r.pass) {
        r.counterexample = {{"expected", big(want)}, {"count", big(got)}};
    }
    return r;
}

inline CheckResult check_max_unique(const CheckArgs &a) {
    const int n = a.n;
    const auto top = 2 * ipow(3, static_cast<unsigned>(n - 1));
    std::set<CanonicalKey> keys;
    std::uint64_t count = 0;
    bool mds = true;
    bool larger = false;
    const auto reference = signed_fn(maximal_bitrade(n));
    bool found_reference = false;
    enumerate_functions(n, [&](const TernFn &f) {
        const auto s = f.support_size();
        larger = larger || s > top;
        if (s != top) {
            return;
        }
        ++count;
        keys.insert(canonical_form(f));
        mds = mds && complement_is_mds(f.support());
        found_reference = found_reference || f == reference;
    });
    CheckResult r;
    r.detail = {{"size", top}, {"sets", count / 2}, {"classes", keys.size()}};
    r.pass = !larger && count == 2 * maximal_bitrade_count(n) && keys.size() == 1 && mds && found_reference &&
             *keys.begin() == canonical_form(reference);
    if (!r.pass) {
        r.counterexample = {{"larger_support", larger}, {"complements_mds", mds}, {"contains_maximal_bitrade", found_reference}};
    }
    return r;
}

inline CheckResult check_gap14(const CheckArgs &a) {
    const auto &t = cached_spectrum(a.n, a.workers);
    const auto lo = 14 * ipow(3, static_cast<unsigned>(a.n - 3));
    const auto hi = 2 * ipow(3, static_cast<unsigned>(a.n - 1));
    CheckResult r;
    r.pass = true;
    for (const auto &[size, c] : t.entries) {
        if (size > lo && size < hi && c != 0) {
            r.pass = false;
            r.counterexample = {{"size", size}, {"sets", big(c)}};
            break;
        }
    }
    const auto b = bitrade14(a.n);
    r.detail = {{"window", {lo, hi}}, {"sets_at_lower_end", big(entry(t, lo))}, {"construction_size", b.size()}};
    if (r.pass && (entry(t, lo) == 0 || b.size() != lo)) {
        r.pass = false;
        r.counterexample = {{"size", lo}, {"reason", "no bitrade at the lower end"}};
    }
    return r;
}

inline CheckResult check_pot12(const CheckArgs &a) {
    CheckResult r;
    r.pass = true;
    std::uint64_t balanced = 0;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1U << a.n)); ++t) {
        const auto f = BoolFn::from_table(a.n, t);
        if (!almost_balanced_in_faces(f)) {
            continue;
        }
        ++balanced;
        if (!bipartition(u_from_bool(f ^ parity(a.n))) && r.pass) {
            r.pass = false;
            r.counterexample = {{"truth_table", t}};
        }
    }
    r.detail = {{"almost_balanced_functions", balanced}};
    return r;
}

inline CheckResult check_hprime(const CheckArgs &a) {
    const int t = a.n;
    const auto code = hprime(t);
    int length = static_cast<int>((ipow(3, static_cast<unsigned>(t)) - 1) / 2);
    for (int j = 2; j <= t; ++j) {
        length += 1 << (j - 1);
    }
    const auto report = verify_odd_distance_bound(code.words());
    bool unique = true;
    for (int i = 0; i < code.dimension(); ++i) {
        unique = unique && code.row_composition_unique(static_cast<std::size_t>(i));
    }
    const auto dual = hamming_dual(t);
    bool equidistant = true;
    for (const auto &w : dual.words()) {
        const int wt = dual.length() - composition(w).n0;
        equidistant = equidistant && (wt == 0 || wt == static_cast<int>(ipow(3, static_cast<unsigned>(t - 1))));
    }
    CheckResult r;
    r.detail = {{"length", code.length()},         {"expected_length", length}, {"words", code.words().size()},
                {"pairwise_odd", report.pairwise_odd}, {"unique_compositions", unique}, {"dual_hamming_equidistant", equidistant}};
    r.pass = code.length() == length && code.words().size() == ipow(3, static_cast<unsigned>(t)) && report.pairwise_odd && unique &&
             equidistant;
    if (!r.pass) {
        r.counterexample = r.detail;
    }
    return r;
}

inline CheckResult check_recover(const CheckArgs &a) {
    const int n = a.n;
    std::mt19937_64 rng(a.seed);
    CheckResult r;
    r.pass = true;
    int done = 0;
    int attempts = 0;
    while (done < 100 && attempts < 100000) {
        ++attempts;
        const int m = 1 + static_cast<int>(rng() % 3);
        std::vector<Word> ws;
        for (int i = 0; i < m; ++i) {
            ws.push_back(Word::from_cell(static_cast<Cell>(rng() % cell_count(n, 3)), n, 3));
        }
        int d = n + 1;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            for (std::size_t j = i + 1; j < ws.size(); ++j) {
                d = std::min(d, hamming_distance(ws[i], ws[j]));
            }
        }
        if (m == 1) {
            d = 4;
        } else if (d < 3 || static_cast<std::uint64_t>(m) >= (std::uint64_t{1} << (d - 3))) {
            continue;
        }
        const MonomialSet v(n, ws);
        const auto u = u_from_bool(f_from_monomials(v));
        std::vector<Word> want = ws;
        std::sort(want.begin(), want.end());
        std::vector<Word> have;
        try {
            have = recover_monomials(u, d).words();
        } catch (const error &) {
        }
        std::sort(have.begin(), have.end());
        if (have != want && r.pass) {
            r.pass = false;
            r.counterexample = {{"monomials", v.str()}, {"distance", d}};
        }
        ++done;
    }
    r.detail = {{"instances", done}, {"seed", a.seed}};
    r.pass = r.pass && done == 100;
    return r;
}

inline CheckResult check_testset(const CheckArgs &a) {
    const int m = a.n;
    const auto all = all_unitrades(m);
    std::vector<TradeSet> bitrades;
    for (const auto &u : all) {
        if (is_bitrade(u)) {
            bitrades.push_back(u);
        }
    }
    CheckResult r;
    r.pass = distinguishes(boolean_testset(m), all);
    std::vector<std::size_t> picks;
    if (m <= 3) {
        for (std::size_t i = 1; i < all.size(); ++i) {
            picks.push_back(i);
        }
    } else {
        std::mt19937_64 rng(a.seed);
        for (int i = 0; i < 50; ++i) {
            picks.push_back(1 + rng() % (all.size() - 1));
        }
    }
    std::uint64_t xor_pairs = 0;
    for (auto i : picks) {
        const auto &u = all[i];
        const auto ex = extract_testset(u);
        const auto mask = ex.testset.mask();
        bool ok = (mask & u.support()).none();
        if (const auto pair = xor_of_two_bitrades(u, bitrades)) {
            ++xor_pairs;
            ok = ok && (pair->first.support() & mask) == (pair->second.support() & mask);
        }
        if (!ok && r.pass) {
            r.pass = false;
            r.counterexample = {{"truth_table", i}, {"support", u.str()}};
        }
    }
    r.detail = {{"unitrades_checked", picks.size()},
                {"xor_of_two_bitrades", xor_pairs},
                {"testset_size", (std::uint64_t{1} << m) - 1},
                {"line_rank", line_system_rank(m)}};
    return r;
}

} // namespace detail

/// Registered checks, in documentation order.
inline const std::vector<CheckSpec> &check_registry() {
    static const std::vector<CheckSpec> registry = {
        {"mod3", "every bitrade size is 0 or 2^n mod 3; none at 2^(n+1)", 1, 5, detail::check_mod3},
        {"small-spectrum", "small-size predicate matches the spectrum on (2^(n+1), 5*2^(n-1)]", 1, 5, detail::check_small_spectrum},
        {"alpha", "every unitrade size passes the alpha predicate", 1, 4, detail::check_alpha},
        {"rank2", "unitrades below 2^(n+1) are rank <= 2 bitrades of size 2^(n+1) - 2^(s+1); rank 2 implies bitrade", 1, 4,
         detail::check_rank2},
        {"minimal-count", "3^n bitrades of size 2^n", 1, 5, detail::check_minimal_count},
        {"max-unique", "3*2^(n-1) bitrades of size 2*3^(n-1), one class, MDS complements", 1, 5, detail::check_max_unique},
        {"gap-14", "no bitrade size strictly between 14*3^(n-3) and 2*3^(n-1); the lower end occurs", 3, 5, detail::check_gap14},
        {"pot12", "U[f + parity] is a bitrade for every almost balanced f", 1, 4, detail::check_pot12},
        {"hprime", "H'_t length, pairwise odd distances, unique row compositions; H_t equidistant", 2, 4, detail::check_hprime},
        {"recover", "monomial recovery round-trips 100 random instances", 4, 12, detail::check_recover},
        {"testset", "testing-set extraction ranks and separation", 1, 4, detail::check_testset},
    };
    return registry;
}

inline const CheckSpec &find_check(std::string_view name) {
    for (const auto &c : check_registry()) {
        if (c.name == name) {
            return c;
        }
    }
    throw error(errc::invalid_argument, "unknown check " + std::string(name));
}

inline CheckResult run_check(std::string_view name, const CheckArgs &args) {
    const auto &c = find_check(name);
    if (args.n < c.min_n || args.n > c.max_n) {
        throw error(errc::out_of_range, c.name + " runs for n in [" + std::to_string(c.min_n) + ", " + std::to_string(c.max_n) + "]");
    }
    return c.run(args);
}

} // namespace tritrade
