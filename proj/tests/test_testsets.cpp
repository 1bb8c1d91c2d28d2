#include <tritrade/reference.hpp>
#include <tritrade/testsets.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace tritrade;

namespace {

std::vector<TradeSet> bitrade_catalog(int n) {
    std::vector<TradeSet> out;
    for (const auto &u : all_unitrades(n)) {
        if (is_bitrade(u)) {
            out.push_back(u);
        }
    }
    return out;
}

// Rank over GF(2) by plain elimination on 0/1 matrices (vector<vector<int>>).
std::size_t rank_brute(std::vector<std::vector<int>> rows) {
    std::size_t r = 0;
    const std::size_t w = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < w && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][col]) {
                for (std::size_t j = 0; j < w; ++j) {
                    rows[i][j] ^= rows[r][j];
                }
            }
        }
        ++r;
    }
    return r;
}

} // namespace

TEST(Testsets, ProductTestset) {
    const auto t = boolean_testset(2);
    const auto t1 = product_testset(t, 1);
    EXPECT_EQ(t1.points, t.points);
    const auto t2 = product_testset(t, 2);
    EXPECT_EQ(t2.m, 4);
    EXPECT_EQ(t2.size(), 16u);
    EXPECT_EQ(t2.mask(), boolean_testset(4).mask());
}

TEST(Testsets, BooleanCubeDistinguishesUnitrades) {
    for (int n = 1; n <= 3; ++n) {
        const auto all = all_unitrades(n);
        EXPECT_TRUE(distinguishes(boolean_testset(n), all));
        // one point fewer is never enough
        auto t = boolean_testset(n);
        t.points.pop_back();
        EXPECT_FALSE(distinguishes(t, all));
    }
    const auto all4 = all_unitrades(4);
    EXPECT_TRUE(distinguishes(product_testset(boolean_testset(2), 2), all4));

    // sampled pairs at dimension 6 = 3 * 2
    std::mt19937_64 rng(8);
    const auto t6 = product_testset(boolean_testset(2), 3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = u_from_bool(BoolFn(6, Bits(64, rng())));
        const auto b = u_from_bool(BoolFn(6, Bits(64, rng())));
        const std::vector<TradeSet> pair{a, b};
        EXPECT_EQ(distinguishes(t6, pair), !(a == b));
    }
}

TEST(Testsets, FamilyBound) {
    EXPECT_EQ(family_bound(127, 1, 2), BigInt(1) << 127);
    for (int m = 1; m <= 2; ++m) {
        for (int l = 1; l <= 2; ++l) {
            const auto b = family_bound(std::uint64_t{1} << m, l, 2);
            EXPECT_EQ(b, BigInt(1) << (1U << (m * l)));
        }
    }
    EXPECT_EQ(family_bound(8, 1, 2), BigInt(all_unitrades(3).size()));
    EXPECT_LT(BigInt(reference::function_counts[7]), family_bound(64, 1, 2));
    EXPECT_LT(family_bound(3, 2, 2), family_bound(4, 2, 2));
    EXPECT_LT(family_bound(3, 2, 2), family_bound(3, 3, 2));
    EXPECT_THROW(family_bound(1U << 13, 2, 2), error);
    EXPECT_DOUBLE_EQ(log2_family_bound(127, 1, 2), 127.0);
    EXPECT_LT(testset_alpha(7), 2.0);
    EXPECT_NEAR(testset_alpha(7), 1.9977, 1e-4);
}

TEST(Testsets, LineSystemRank) {
    for (int m = 1; m <= 4; ++m) {
        const auto total = cell_count(m, 3);
        EXPECT_EQ(line_system_rank(m), total - (Cell{1} << m));
    }
    // dense cross-check at m <= 3
    for (int m = 1; m <= 3; ++m) {
        std::vector<std::vector<int>> rows;
        for (const auto &line : lines(m, 3)) {
            std::vector<int> r(cell_count(m, 3), 0);
            for (const auto &w : line.members) {
                r[w.cell()] = 1;
            }
            rows.push_back(r);
        }
        EXPECT_EQ(rank_brute(rows), line_system_rank(m));
    }
}

TEST(Testsets, ExtractPreconditionFails) {
    const auto cat1 = bitrade_catalog(1);
    const auto u = TradeSet::parse("110", 3);
    try {
        extract_testset(u, std::span<const TradeSet>(cat1));
        FAIL() << "expected precondition failure";
    } catch (const precondition_failed &e) {
        EXPECT_EQ(e.code(), errc::precondition_failed);
        EXPECT_EQ(e.witness.first ^ e.witness.second, u);
        const std::set<std::string> got{e.witness.first.str(), e.witness.second.str()};
        EXPECT_EQ(got, (std::set<std::string>{"101", "011"}));
    }
}

TEST(Testsets, ExtractMechanics) {
    for (int m = 1; m <= 4; ++m) {
        std::mt19937_64 rng(static_cast<unsigned>(m));
        const auto all = all_unitrades(m);
        for (int trial = 0; trial < 10; ++trial) {
            const auto &u = all[1 + rng() % (all.size() - 1)];
            const auto ex = extract_testset(u);
            EXPECT_EQ(ex.line_rank, cell_count(m, 3) - (Cell{1} << m));
            EXPECT_EQ(ex.combined_rank, cell_count(m, 3) - 1);
            EXPECT_EQ(ex.testset.size(), (std::size_t{1} << m) - 1);
            for (const auto &p : ex.testset.points) {
                EXPECT_FALSE(u.contains(p.cell()));
            }
        }
    }
    EXPECT_THROW(extract_testset(TradeSet(2, 3)), error);
    EXPECT_THROW(extract_testset(TradeSet::parse("100", 3)), error);
}

TEST(Testsets, ExtractedSetFailsWhenPreconditionFails) {
    // U = A xor B makes A and B agree off U, hence on T
    for (int m = 1; m <= 3; ++m) {
        const auto cat = bitrade_catalog(m);
        std::size_t xor_count = 0;
        std::size_t total = 0;
        for (const auto &u : all_unitrades(m)) {
            if (u.empty()) {
                continue;
            }
            ++total;
            const auto pair = xor_of_two_bitrades(u, cat);
            if (!pair) {
                continue;
            }
            ++xor_count;
            const auto mask = extract_testset(u).testset.mask();
            EXPECT_EQ(pair->first.support() & mask, pair->second.support() & mask);
        }
        // every unitrade of dimension <= 3 is a XOR of two bitrades
        EXPECT_EQ(xor_count, total);
    }
}
