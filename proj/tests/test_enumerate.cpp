#include <tritrade/enumerate.hpp>
#include <tritrade/reference.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace tritrade;

namespace {

// Every {-1,0,1} vector on Q_3^n whose line sums vanish, by trying all 3^(3^n).
std::set<std::string> brute_functions(int n) {
    const Cell total = cell_count(n, 3);
    const auto &table = line_table(n, 3);
    std::set<std::string> out;
    std::vector<std::int8_t> v(total, -1);
    while (true) {
        bool ok = true;
        for (std::size_t l = 0; l < table.size() && ok; ++l) {
            int s = 0;
            for (auto c : table.cells(l)) {
                s += v[c];
            }
            ok = s == 0;
        }
        if (ok) {
            out.insert(TernFn(n, v).str());
        }
        std::size_t i = 0;
        while (i < v.size() && v[i] == 1) {
            v[i++] = -1;
        }
        if (i == v.size()) {
            break;
        }
        ++v[i];
    }
    return out;
}

// Same set, built from the bitrade catalog.
std::set<std::string> catalog_functions(int n) {
    std::set<std::string> out{TernFn(n).str()};
    for (const auto &u : all_unitrades(n)) {
        if (auto b = u.empty() ? std::nullopt : bipartition(u)) {
            out.insert(signed_fn(*b).str());
            out.insert(signed_fn(*b).negated().str());
        }
    }
    return out;
}

std::vector<std::uint64_t> as_u64(const std::vector<BigInt> &v) {
    std::vector<std::uint64_t> out;
    for (const auto &x : v) {
        out.push_back(x.convert_to<std::uint64_t>());
    }
    return out;
}

} // namespace

TEST(Enumerate, MatchesBruteForce) {
    for (int n = 0; n <= 2; ++n) {
        std::set<std::string> got;
        for (const auto &f : all_functions(n)) {
            got.insert(f.str());
        }
        EXPECT_EQ(got, brute_functions(n)) << n;
    }
}

TEST(Enumerate, MatchesBitradeCatalog) {
    for (int n = 1; n <= 4; ++n) {
        std::set<std::string> got;
        for (const auto &f : all_functions(n)) {
            got.insert(f.str());
        }
        EXPECT_EQ(got, catalog_functions(n)) << n;
    }
}

TEST(Enumerate, StreamIsLexOrdered) {
    for (int n = 1; n <= 3; ++n) {
        const auto fs = all_functions(n);
        for (std::size_t i = 1; i < fs.size(); ++i) {
            ASSERT_TRUE(std::lexicographical_compare(fs[i - 1].values().begin(), fs[i - 1].values().end(),
                                                     fs[i].values().begin(), fs[i].values().end()));
        }
    }
}

TEST(Enumerate, CountsMatchReference) {
    for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(enumerate_count(n).count, BigInt(reference::function_counts[static_cast<std::size_t>(n)])) << n;
    }
}

TEST(Enumerate, SpectraMatchReference) {
    for (int n = 1; n <= 4; ++n) {
        const auto t = spectrum(n);
        const auto ref = reference::spectrum(n);
        EXPECT_EQ(as_u64(t.padded_list()), std::vector<std::uint64_t>(ref.begin(), ref.end())) << n;
        BigInt sum = 1;
        for (const auto &[size, c] : t.entries) {
            sum += 2 * c;
        }
        EXPECT_EQ(sum, t.total_functions);
    }
}

TEST(Enumerate, WorkersAndPrefixDepthDoNotChangeResult) {
    const auto base = enumerate_count(4);
    for (int workers : {1, 3}) {
        for (int depth : {0, 3, 8, 16}) {
            EnumOptions opt;
            opt.workers = workers;
            opt.prefix_depth = depth;
            const auto r = enumerate_count(4, opt);
            EXPECT_EQ(r.count, base.count);
            EXPECT_EQ(r.by_support, base.by_support);
        }
    }
}

TEST(Enumerate, DomainsRestrictSolutions) {
    // forbid -1 at the origin: exactly the functions with f(0) in {0,+1}
    for (int n = 1; n <= 3; ++n) {
        CellDomains d(cell_count(n, 3), domain_all);
        d[0] = domain_bit(0) | domain_bit(1);
        std::uint64_t expected = 0;
        for (const auto &f : all_functions(n)) {
            expected += f.values()[0] != -1;
        }
        EnumOptions opt;
        opt.domains = d;
        EXPECT_EQ(enumerate_count(n, opt).count, BigInt(expected));
        EXPECT_EQ(enumerate_functions(n, [](const TernFn &f) { ASSERT_NE(f.values()[0], -1); }, d), BigInt(expected));
    }
    EnumOptions bad;
    bad.domains = CellDomains(5, domain_all);
    EXPECT_THROW(enumerate_count(2, bad), error);
}

TEST(Enumerate, RetractClassesAgree) {
    for (int n = 1; n <= 4; ++n) {
        const auto lower = classify_all(n - 1);
        EXPECT_EQ(count_by_retract_classes(n, lower.classes), BigInt(reference::function_counts[static_cast<std::size_t>(n)])) << n;
    }
}

TEST(Enumerate, ClassifyAll) {
    for (int n = 0; n <= 4; ++n) {
        const auto c = classify_all(n);
        EXPECT_EQ(c.class_count, reference::class_counts[static_cast<std::size_t>(n)]);
        EXPECT_TRUE(c.double_count_ok);
    }
}

TEST(Enumerate, DimensionLimits) {
    EXPECT_THROW(enumerate_count(6), error);
    EXPECT_THROW(enumerate_count(-1), error);
    EXPECT_THROW(all_functions(6), error);
}

TEST(Enumerate, CheckpointResume) {
    const auto path = std::filesystem::temp_directory_path() / "tritrade_test_checkpoint.json";
    std::filesystem::remove(path);
    const auto base = enumerate_count(4);

    EnumOptions opt;
    opt.checkpoint = path;
    opt.job_budget = 5;
    int rounds = 0;
    std::optional<EnumResult> r;
    while (!r) {
        try {
            r = enumerate_count(4, opt);
        } catch (const error &e) {
            ASSERT_EQ(e.code(), errc::interrupted);
            ASSERT_TRUE(std::filesystem::exists(path));
        }
        ASSERT_LT(++rounds, 100);
    }
    EXPECT_GT(rounds, 1);
    EXPECT_EQ(r->count, base.count);
    EXPECT_EQ(r->by_support, base.by_support);
    EXPECT_FALSE(std::filesystem::exists(path));

    // a checkpoint from another run is refused
    opt.job_budget = 1;
    EXPECT_THROW(enumerate_count(4, opt), error);
    EnumOptions other;
    other.checkpoint = path;
    try {
        enumerate_count(3, other);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::checkpoint_mismatch);
    }
    std::filesystem::remove(path);
}

TEST(Enumerate, StopFlag) {
    std::atomic<bool> stop{true};
    EnumOptions opt;
    opt.stop = &stop;
    try {
        enumerate_count(3, opt);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::interrupted);
    }
}
