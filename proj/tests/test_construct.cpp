#include <tritrade/construct.hpp>
#include <tritrade/reference.hpp>
#include <tritrade/symmetry.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace tritrade;

namespace {

BipartiteTrade minimal1() { return *bipartition(TradeSet::parse("110", 3)); }

void expect_valid(const BipartiteTrade &b) {
    EXPECT_TRUE(is_unitrade(b.base()));
    EXPECT_TRUE(bipartition(b.base()).has_value());
}

// Bitrade sizes present in the shipped spectrum for dimension n.
std::set<std::size_t> spectrum_sizes(int n) {
    std::set<std::size_t> out;
    const auto s = reference::spectrum(n);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 0) {
            out.insert((std::size_t{1} << n) + 2 * i);
        }
    }
    return out;
}

// Brute-force k=4 unitrade check: every line carries 0 or 2 points.
bool unitrade_brute(const TradeSet &s) {
    for (const auto &line : lines(s.n(), s.k())) {
        int hits = 0;
        for (const auto &w : line.members) {
            hits += s.contains(w.cell());
        }
        if (hits != 0 && hits != 2) {
            return false;
        }
    }
    return true;
}

// Algebraic degree by explicit ANF: coefficient of each monomial via subset sums.
int degree_brute(const BoolFn &f) {
    int best = -1;
    const auto size = std::uint64_t{1} << f.n();
    for (std::uint64_t m = 0; m < size; ++m) {
        int coef = 0;
        for (std::uint64_t s = m;; s = (s - 1) & m) {
            coef ^= f(s) ? 1 : 0;
            if (s == 0) {
                break;
            }
        }
        if (coef) {
            best = std::max(best, std::popcount(m));
        }
    }
    return best;
}

} // namespace

TEST(Construct, Product) {
    const auto m = maximal_bitrade(2);
    const auto p = product(m, m);
    EXPECT_EQ(p.n(), 4);
    EXPECT_EQ(p.size(), 36u);
    expect_valid(p);

    const auto b14 = bitrade14(3);
    const auto q = product(b14, minimal1());
    EXPECT_EQ(q.n(), 4);
    EXPECT_EQ(q.size(), 28u);
    expect_valid(q);

    const BipartiteTrade empty(TradeSet(2, 3), Bits(9), Bits(9));
    EXPECT_TRUE(product(empty, m).base().empty());
}

TEST(Construct, KExtension) {
    const auto m1 = maximal_bitrade(1);
    EXPECT_EQ(k_extension(m1, 0).base(), m1.base());
    const auto e = k_extension(m1, 1);
    EXPECT_EQ(e.size(), 6u);
    EXPECT_EQ(canonical_form(signed_fn(e)), canonical_form(signed_fn(maximal_bitrade(2))));
    const auto e14 = k_extension(bitrade14(3), 1);
    EXPECT_EQ(e14.size(), 42u);
    expect_valid(e14);
    std::mt19937_64 rng(3);
    for (const auto &u : all_unitrades(3)) {
        if (rng() % 8 != 0) {
            continue;
        }
        if (auto b = bipartition(u)) {
            const auto x = k_extension(*b, 2);
            EXPECT_EQ(x.size(), 9 * b->size());
            expect_valid(x);
        }
    }
}

TEST(Construct, MaximalBitrade) {
    const auto m2 = maximal_bitrade(2);
    EXPECT_EQ(m2.size(), 6u);
    EXPECT_EQ(m2.part0().count(), 3u);
    for (int n = 1; n <= 6; ++n) {
        const auto m = maximal_bitrade(n);
        EXPECT_EQ(m.size(), 2 * ipow(3, static_cast<unsigned>(n - 1)));
        EXPECT_TRUE(complement_is_mds(m.base()));
        expect_valid(m);
    }
    // the shipped spectra end with the number of maximal bitrades
    for (int n = 3; n <= 7; ++n) {
        EXPECT_EQ(reference::spectrum(n).back(), maximal_bitrade_count(n));
    }
    std::size_t count3 = 0;
    for (const auto &u : all_unitrades(3)) {
        count3 += u.size() == 18 && is_bitrade(u);
    }
    EXPECT_EQ(count3, maximal_bitrade_count(3));
}

TEST(Construct, Rank2Family) {
    EXPECT_EQ(rank2_family(3, 1).size(), 12u);
    const std::vector<std::size_t> sizes5{62, 60, 56, 48, 32};
    for (int s = 0; s <= 4; ++s) {
        const auto b = rank2_family(5, s);
        EXPECT_EQ(b.size(), sizes5[static_cast<std::size_t>(s)]);
        EXPECT_EQ(rank(b.base(), true), s == 4 ? 1 : 2);
        EXPECT_TRUE(spectrum_sizes(5).contains(b.size()));
    }
    std::set<std::size_t> below64;
    for (auto s : spectrum_sizes(5)) {
        if (s < 64) {
            below64.insert(s);
        }
    }
    EXPECT_EQ(below64, (std::set<std::size_t>{32, 48, 56, 60, 62}));
    EXPECT_EQ(rank2_family(4, 3).size(), 16u);
    EXPECT_THROW(rank2_family(3, 3), error);
    EXPECT_THROW(rank2_family(3, -1), error);
}

TEST(Construct, Bitrade14) {
    const auto b3 = bitrade14(3);
    EXPECT_EQ(b3.size(), 14u);
    expect_valid(b3);
    // printed witness x1 + x2 + x3 + 1 gives 16 points and fails mod 3
    const auto printed = u_from_bool(BoolFn::from_predicate(3, [](const Word &x) { return (x[0] ^ x[1] ^ x[2] ^ 1) != 0; }));
    EXPECT_EQ(printed.size(), 16u);
    EXPECT_FALSE(is_bitrade(printed));

    EXPECT_EQ(bitrade14(4).size(), 42u);
    EXPECT_EQ(bitrade14(5).size(), 126u);
    expect_valid(bitrade14(5));
    EXPECT_THROW(bitrade14(2), error);

    // nothing in the spectrum strictly between 14*3^{n-3} and 2*3^{n-1}
    for (int n = 3; n <= 7; ++n) {
        const auto lo = 14 * ipow(3, static_cast<unsigned>(n - 3));
        const auto hi = 2 * ipow(3, static_cast<unsigned>(n - 1));
        const auto sizes = spectrum_sizes(n);
        EXPECT_TRUE(sizes.contains(lo)) << n;
        EXPECT_TRUE(sizes.contains(hi)) << n;
        for (auto s : sizes) {
            EXPECT_FALSE(s > lo && s < hi) << n << " " << s;
        }
    }
}

TEST(Construct, HammingDual) {
    const auto h1 = hamming_dual(1);
    EXPECT_EQ(h1.length(), 1);
    EXPECT_EQ(h1.words().size(), 3u);
    const auto h2 = hamming_dual(2);
    EXPECT_EQ(h2.length(), 4);
    EXPECT_EQ(h2.rows(), (std::vector<std::vector<std::uint8_t>>{{0, 1, 1, 1}, {1, 0, 1, 2}}));
    for (int t = 1; t <= 3; ++t) {
        const auto h = hamming_dual(t);
        EXPECT_EQ(h.length(), static_cast<int>((ipow(3, static_cast<unsigned>(t)) - 1) / 2));
        EXPECT_EQ(h.words().size(), ipow(3, static_cast<unsigned>(t)));
        const auto w = h.words();
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                EXPECT_EQ(static_cast<std::uint64_t>(hamming_distance(w[i], w[j])), ipow(3, static_cast<unsigned>(t - 1)));
            }
        }
    }
}

TEST(Construct, HPrime) {
    for (int t = 2; t <= 3; ++t) {
        const auto h = hprime(t);
        EXPECT_EQ(h.length(), (1 << t) - 2 + static_cast<int>((ipow(3, static_cast<unsigned>(t)) - 1) / 2));
        const auto &w = h.words();
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                EXPECT_EQ(hamming_distance(w[i], w[j]) % 2, 1);
            }
        }
        std::set<Composition> comps;
        for (std::size_t i = 0; i < static_cast<std::size_t>(t); ++i) {
            EXPECT_TRUE(h.row_composition_unique(i)) << t << " " << i;
            comps.insert(composition(h.row(i)));
        }
        EXPECT_EQ(comps.size(), static_cast<std::size_t>(t));
        EXPECT_EQ(h.min_distance(), static_cast<int>(ipow(3, static_cast<unsigned>(t - 1))));
    }
    EXPECT_EQ(hprime(2).length(), 6);
    EXPECT_EQ(hprime(2).words().size(), 9u);
    EXPECT_THROW(hprime(1), error);
}

TEST(Construct, HPrimeScalingMatters) {
    // duplicating unit columns onto the first-nonzero scaling leaves row 2
    // with the same composition as row2 + row1 and row2 - row1
    for (int t = 2; t <= 3; ++t) {
        auto rows = hamming_dual(t).rows();
        for (int j = 2; j <= t; ++j) {
            for (int copy = 0; copy < (1 << (j - 1)); ++copy) {
                for (int i = 0; i < t; ++i) {
                    rows[static_cast<std::size_t>(i)].push_back(i == j - 1 ? 1 : 0);
                }
            }
        }
        const TernaryCode c(static_cast<int>(rows[0].size()), rows);
        EXPECT_TRUE(c.row_composition_unique(0));
        EXPECT_FALSE(c.row_composition_unique(1));
    }
    for (int t = 1; t <= 4; ++t) {
        const auto h = hamming_dual(t, ColumnScaling::last_nonzero_one);
        EXPECT_EQ(h.min_distance(), static_cast<int>(ipow(3, static_cast<unsigned>(t - 1))));
    }
    const auto h4 = hprime(4);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_TRUE(h4.row_composition_unique(i));
    }
}

TEST(Construct, OddDistanceBound) {
    const auto h = hprime(2);
    const auto r = verify_odd_distance_bound(h.words());
    EXPECT_TRUE(r.pairwise_odd);
    EXPECT_EQ(r.bound, 14u);
    EXPECT_TRUE(r.within_bound);

    const std::vector<Word> one{Word::parse("012", 3)};
    EXPECT_TRUE(verify_odd_distance_bound(one).within_bound);

    for (int t = 1; t <= 3; ++t) {
        const auto d = hamming_dual(t);
        const auto rr = verify_odd_distance_bound(d.words());
        EXPECT_TRUE(rr.pairwise_odd);
        EXPECT_EQ(rr.size + 1, rr.bound);
    }

    const std::vector<Word> bin{Word::parse("000", 2), Word::parse("001", 2), Word::parse("010", 2), Word::parse("100", 2)};
    EXPECT_FALSE(verify_odd_distance_bound(bin).pairwise_odd);
    // every subset of Q_2^2
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
        std::vector<Word> a;
        for (Cell c = 0; c < 4; ++c) {
            if ((mask >> c) & 1U) {
                a.push_back(Word::from_cell(c, 2, 2));
            }
        }
        const auto rr = verify_odd_distance_bound(a);
        EXPECT_TRUE(rr.within_bound);
        EXPECT_TRUE(rr.mod4_holds);
    }
}

TEST(Construct, RecoverMonomials) {
    const auto v1 = MonomialSet::parse("0120");
    EXPECT_EQ(recover_monomials(u_from_bool(f_from_monomials(v1)), 5).str(), v1.str());

    const MonomialSet v2(10, {Word::parse("0000000000", 3), Word::parse("1111111111", 3)});
    const auto r = recover_monomials(u_from_bool(f_from_monomials(v2)), 10);
    EXPECT_EQ(r.words(), v2.words());

    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 100) {
        const int n = 8;
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
        if (m > 1 && (d < 3 || static_cast<std::uint64_t>(m) >= (std::uint64_t{1} << (d - 3)))) {
            continue;
        }
        if (m == 1) {
            d = 5;
        }
        const MonomialSet v(n, ws);
        const auto u = u_from_bool(f_from_monomials(v));
        const auto got = recover_monomials(u, d);
        std::vector<Word> want = ws;
        std::sort(want.begin(), want.end());
        auto have = got.words();
        std::sort(have.begin(), have.end());
        EXPECT_EQ(have, want);
        EXPECT_EQ(u_from_bool(f_from_monomials(got)), u);
        ++done;
    }

    EXPECT_THROW(recover_monomials(u_from_bool(f_from_monomials(MonomialSet::parse("000;111"))), 3), error);
}

TEST(Construct, CubeIntersections) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        Bits b(27);
        for (std::size_t i = 0; i < 27; ++i) {
            b[i] = rng() & 1U;
        }
        const TradeSet s(3, 3, b);
        const auto counts = cube_intersections(s);
        for (Cell v = 0; v < 27; ++v) {
            const auto cube = monomial_cube(Word::from_cell(v, 3, 3));
            EXPECT_EQ(counts[v], (cube.support() & s.support()).count());
        }
    }
}

TEST(Construct, Pot12) {
    const auto x1 = BoolFn::from_predicate(2, [](const Word &x) { return x[0] != 0; });
    const auto b = pot12(x1);
    const auto x2 = BoolFn::from_predicate(2, [](const Word &x) { return x[1] != 0; });
    EXPECT_EQ(b.base(), u_from_bool(x2));
    EXPECT_TRUE(pot12(parity(3)).base().empty());
    EXPECT_THROW(pot12(BoolFn(2)), error);

    // every almost-balanced function at n <= 3, exhaustively, plus n = 4
    int balanced = 0;
    int counterexamples = 0;
    for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1U << n)); ++t) {
            const auto f = BoolFn::from_table(n, t);
            if (!almost_balanced_in_faces(f)) {
                continue;
            }
            ++balanced;
            counterexamples += !bipartition(u_from_bool(f ^ parity(n))).has_value();
        }
    }
    EXPECT_GT(balanced, 0);
    EXPECT_EQ(counterexamples, 0);
}

TEST(Construct, AlmostBalancedMatchesBruteForce) {
    for (std::uint64_t t = 0; t < 256; ++t) {
        const auto f = BoolFn::from_table(3, t);
        bool ok = true;
        for (Cell face = 0; face < 27; ++face) {
            const auto d = digits_of(face, 3, 3);
            int ones = 0;
            int size = 0;
            for (Cell x = 0; x < 8; ++x) {
                const auto w = digits_of(x, 3, 2);
                bool in = true;
                for (int i = 0; i < 3; ++i) {
                    in = in && (d[static_cast<std::size_t>(i)] == 2 || d[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(i)]);
                }
                if (in) {
                    ++size;
                    ones += f(x);
                }
            }
            ok = ok && std::abs(2 * ones - size) <= 2;
        }
        EXPECT_EQ(almost_balanced_in_faces(f), ok) << t;
    }
}

TEST(Construct, RmEmbed) {
    const auto pair = TradeSet::parse("1100", 4);
    const auto f = rm_embed(pair);
    EXPECT_EQ(f.weight(), 2u);
    EXPECT_LE(degree(f), 1);
    EXPECT_LE(degree_brute(f), 1);

    Bits b(16);
    for (Cell c : {0u, 1u, 4u, 5u}) {
        b[c] = true;
    }
    const TradeSet square(2, 4, b);
    ASSERT_TRUE(unitrade_brute(square));
    const auto g = rm_embed(square);
    EXPECT_EQ(g.weight(), 4u);
    EXPECT_LE(degree_brute(g), 2);
    EXPECT_THROW(rm_embed(TradeSet::parse("1000", 4)), error);
    EXPECT_THROW(rm_embed(TradeSet::parse("110", 3)), error);

    // random k = 4 unitrades from products of line pairs and 2-dim latin cycles
    std::mt19937_64 rng(9);
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
            const auto one = *bipartition(TradeSet(1, 4, line));
            const auto cur = bipartition(u);
            u = product(*cur, one).base();
        }
        ASSERT_TRUE(unitrade_brute(u));
        const auto e = rm_embed(u);
        EXPECT_EQ(e.weight(), u.size());
        EXPECT_LE(degree_brute(e), n);
    }
}
