// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <tritrade/checks.hpp>
#include <tritrade/reference.hpp>
#include <tritrade/tables.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace tritrade;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t) { return std::chrono::duration<double>(clock_type::now() - t).count(); }

std::string fixed(double x, int digits) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << x;
    return os.str();
}

int failures = 0;

void report(int id, bool pass, const std::string &detail) {
    failures += !pass;
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

std::optional<EnumResult> n5_counts;

void criterion1() {
    bool ok = true;
    std::string bad;
    const auto t4 = clock_type::now();
    for (int n = 0; n <= 4; ++n) {
        if (enumerate_count(n).count != reference::function_counts[static_cast<std::size_t>(n)]) {
            ok = false;
            bad += " n=" + std::to_string(n);
        }
    }
    const double small = seconds_since(t4);

    auto t = clock_type::now();
    EnumOptions one;
    n5_counts = enumerate_count(5, one);
    const double single = seconds_since(t);

    t = clock_type::now();
    EnumOptions eight;
    eight.workers = 8;
    const auto r8 = enumerate_count(5, eight);
    const double multi = seconds_since(t);

    const bool counts = ok && n5_counts->count == reference::function_counts[5] && r8.count == n5_counts->count;
    const bool timing = small < 5 && single < 30 * 60 && multi < 5 * 60;
    report(1, counts && timing,
           "N(0..5) " + std::string(counts ? "exact" : "MISMATCH" + bad) + "; n<=4 " + fixed(small, 2) + "s (<5), n=5 " +
               fixed(single, 1) + "s single worker (<1800), " + fixed(multi, 1) + "s with 8 workers (<300) on " +
               std::to_string(std::thread::hardware_concurrency()) + " hardware thread(s)");
}

void criterion2() {
    bool ok = true;
    std::string detail = "N'(0..4) =";
    for (int n = 0; n <= 4; ++n) {
        const auto c = classify_all(n);
        detail += " " + std::to_string(c.class_count);
        ok = ok && c.class_count == reference::class_counts[static_cast<std::size_t>(n)] && c.double_count_ok &&
             c.total_functions == reference::function_counts[static_cast<std::size_t>(n)];
    }
    detail += ok ? " with exact double count" : " (mismatch)";
    const auto t = clock_type::now();
    const auto c5 = classify_all(5);
    const double secs = seconds_since(t);
    const bool ok5 = c5.class_count == reference::class_counts[5] && c5.double_count_ok && secs < 12 * 3600;
    detail += "; N'(5) = " + std::to_string(c5.class_count) + " in " + fixed(secs, 0) + "s (<43200)";
    report(2, ok && ok5, detail);
}

void criterion3() {
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= 5; ++n) {
        const auto t = n == 5 ? spectrum_from(*n5_counts) : spectrum(n);
        const auto got = t.padded_list();
        const auto ref = reference::spectrum(n);
        bool same = got.size() == ref.size();
        for (std::size_t i = 0; same && i < ref.size(); ++i) {
            same = got[i] == ref[i];
        }
        if (!same) {
            ok = false;
            bad += " n=" + std::to_string(n);
        }
    }
    // spot values at n = 5, independent of the table
    const auto t5 = spectrum_from(*n5_counts);
    const auto at = [&](std::uint64_t s) { return detail::entry(t5, s); };
    const bool spots = at(68) == 58320 && at(72) == 41580 && at(74) == 77760 && at(78) == 116640 && at(80) == 301320 && at(64) == 0 &&
                       at(66) == 0 && at(70) == 0 && at(76) == 0;
    const auto t3 = spectrum(3);
    const bool spots3 = t3.entries.size() == 4 && t3.entries.at(8) == 27 && t3.entries.at(12) == 54 && t3.entries.at(14) == 108 &&
                        t3.entries.at(18) == 12;
    report(3, ok && spots && spots3,
           std::string("spectra n=1..5 ") + (ok ? "match entry-for-entry" : "differ at" + bad) + "; spot values n=3 " +
               (spots3 ? "ok" : "WRONG") + ", n=5 " + (spots ? "ok" : "WRONG"));
}

void criterion4() {
    struct Part {
        const char *label;
        const char *check;
        int lo, hi;
    };
    const Part parts[] = {
        {"mod-3 sizes and zero at 2^(n+1)", "mod3", 1, 5},   {"minimal count 3^n", "minimal-count", 1, 5},
        {"rank-2 classification", "rank2", 1, 4},           {"alpha-admissibility", "alpha", 1, 4},
        {"small-cardinality predicate", "small-spectrum", 1, 5}, {"gap theorem", "gap-14", 3, 5},
        {"maximal class", "max-unique", 3, 5},
    };
    bool all = true;
    std::string detail;
    for (const auto &p : parts) {
        std::string failed;
        for (int n = p.lo; n <= p.hi; ++n) {
            const auto r = run_check(p.check, CheckArgs{n, 0, 1});
            if (!r.pass) {
                failed += " n=" + std::to_string(n) + " " + r.counterexample.dump();
            }
            if (std::string(p.check) == "max-unique") {
                const auto want = maximal_bitrade_count(n);
                if (r.detail["sets"].get<std::uint64_t>() != want) {
                    failed += " n=" + std::to_string(n) + " count " + r.detail["sets"].dump();
                }
            }
        }
        all = all && failed.empty();
        detail += std::string(detail.empty() ? "" : "; ") + p.label + (failed.empty() ? " ok" : " FAILED:" + failed);
    }
    detail += " (maximal counts 12/24/48 at n=3/4/5 checked)";
    report(4, all, detail);
}

void criterion5() {
    const auto t = clock_type::now();
    std::uint64_t cases = 0;
    std::string bad;
    const auto direct = [](const MonomialSet &v) { return static_cast<std::int64_t>(u_from_bool(f_from_monomials(v)).size()); };
    for (int n = 1; n <= 3; ++n) {
        const Cell m = cell_count(n, 3);
        for (Cell a = 0; a < m; ++a) {
            for (Cell b = a; b < m; ++b) {
                for (Cell c = b; c < m; ++c) {
                    const MonomialSet v(n, {Word::from_cell(a, n, 3), Word::from_cell(b, n, 3), Word::from_cell(c, n, 3)});
                    ++cases;
                    if (cardinality_formula(v) != direct(v) && bad.empty()) {
                        bad = "formula " + v.str();
                    }
                }
            }
        }
    }
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t size = 1 + rng() % 5;
        std::vector<Word> words;
        for (std::size_t i = 0; i < size; ++i) {
            words.push_back(Word::from_cell(static_cast<Cell>(rng() % 81), 4, 3));
        }
        const MonomialSet v(4, words);
        ++cases;
        if (cardinality_formula(v) != direct(v) && bad.empty()) {
            bad = "formula " + v.str();
        }
    }
    std::uint64_t triples = 0;
    for (int n = 1; n <= 4; ++n) {
        const Cell m = cell_count(n, 3);
        for (Cell a = 0; a < m; ++a) {
            for (Cell b = a + 1; b < m; ++b) {
                for (Cell c = b + 1; c < m; ++c) {
                    const MonomialSet v(n, {Word::from_cell(a, n, 3), Word::from_cell(b, n, 3), Word::from_cell(c, n, 3)});
                    if (normalize_monomials(v).size() != 3) {
                        continue;
                    }
                    ++triples;
                    const bool oracle = bipartition(u_from_bool(f_from_monomials(v))).has_value();
                    if (triple_is_bitrade(v).bitrade != oracle && bad.empty()) {
                        bad = "triple " + v.str();
                    }
                }
            }
        }
    }
    const double secs = seconds_since(t);
    report(5, bad.empty() && secs < 600,
           std::to_string(cases) + " cardinality cases, " + std::to_string(triples) + " normalized triples" +
               (bad.empty() ? ", all agree" : ", first disagreement " + bad) + "; " + fixed(secs, 1) + "s (<600)");
}

void criterion6() {
    std::string detail;
    bool ok = true;
    const double want[][2] = {{2.4, 0.490}, {6.448, 1.188}};
    for (int n = 2; n <= 3; ++n) {
        std::vector<BipartiteTrade> catalog;
        for (const auto &u : all_unitrades(n)) {
            if (auto b = u.empty() ? std::nullopt : bipartition(u)) {
                catalog.push_back(*b);
            }
        }
        const auto s = half_cardinality_stats(catalog);
        const auto &w = want[n - 2];
        const bool match = fixed(s.mean, 3) == fixed(w[0], 3) && fixed(s.stddev, 3) == fixed(w[1], 3);
        ok = ok && match;
        detail += (detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + " mean " + fixed(s.mean, 3) + " std " +
                  fixed(s.stddev, 3);
    }
    report(6, ok, detail);
}

void criterion7() {
    std::string bad;
    const auto h = hprime(2);
    const auto rep = verify_odd_distance_bound(h.words());
    if (h.length() != 6 || h.words().size() != 9 || !rep.pairwise_odd) {
        bad += " hprime(2)";
    }
    for (int t = 1; t <= 3; ++t) {
        const auto d = hamming_dual(t);
        const int w = static_cast<int>(ipow(3, static_cast<unsigned>(t - 1)));
        for (const auto &x : d.words()) {
            for (const auto &y : d.words()) {
                if (!(x == y) && hamming_distance(x, y) != w) {
                    bad += " hamming_dual(" + std::to_string(t) + ")";
                    goto next_t;
                }
            }
        }
    next_t:;
    }
    const auto rec = run_check("recover", CheckArgs{8, 0, 1});
    if (!rec.pass) {
        bad += " recover " + rec.counterexample.dump();
    }

    std::mt19937_64 rng(9);
    int embedded = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        TradeSet u(0, 4, Bits(1, 1));
        for (int i = 0; i < n; ++i) {
            const Cell a = rng() % 4;
            Cell c = rng() % 4;
            while (c == a) {
                c = rng() % 4;
            }
            Bits line(4);
            line[a] = true;
            line[c] = true;
            u = product(*bipartition(u), *bipartition(TradeSet(1, 4, line))).base();
        }
        const auto e = rm_embed(u);
        if (is_unitrade(u) && e.weight() == u.size() && degree(e) <= n) {
            ++embedded;
        }
    }
    if (embedded != 100) {
        bad += " rm_embed " + std::to_string(embedded) + "/100";
    }
    report(7, bad.empty(),
           "hprime(2) length " + std::to_string(h.length()) + ", " + std::to_string(h.words().size()) + " words, odd distances; H_t equidistant t<=3; recover " +
               rec.detail["instances"].dump() + "/100; rm_embed " + std::to_string(embedded) + "/100" + (bad.empty() ? "" : "; FAILED:" + bad));
}

void criterion8() {
    const auto checks = check_reference_tables(load_reference_tables());
    std::string bad;
    for (const auto &c : checks) {
        if (!c.pass) {
            bad += " [" + c.name + "]";
        }
    }
    report(8, bad.empty(),
           std::to_string(checks.size()) + " consistency checks on shipped tables for n<=7 (sums, mod-3 zeros, head/tail values, gap, stats, class bounds)" +
               (bad.empty() ? ", all hold" : "; failing:" + bad));
}

} // namespace

int main() {
    const std::pair<int, void (*)()> steps[] = {{1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
                                                {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
    for (const auto &[id, step] : steps) {
        try {
            step();
        } catch (const std::exception &e) {
            report(id, false, std::string("exception: ") + e.what());
        }
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) failing") << std::endl;
    return failures == 0 ? 0 : 1;
}
