#include <tritrade/checks.hpp>

#include <gtest/gtest.h>

#include <fstream>

using namespace tritrade;

TEST(Checks, RegistryMatchesDocs) {
    std::ifstream in(std::string(TRITRADE_DATA_DIR) + "/../docs/checks.txt");
    ASSERT_TRUE(in);
    std::vector<std::string> documented;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) {
            documented.push_back(line);
        }
    }
    std::vector<std::string> registered;
    for (const auto &c : check_registry()) {
        registered.push_back(c.name);
    }
    EXPECT_EQ(registered, documented);
}

TEST(Checks, SmallDimensionsPass) {
    for (const auto &c : check_registry()) {
        const int top = std::min(c.max_n, c.name == "recover" ? 6 : 3);
        for (int n = c.min_n; n <= top; ++n) {
            const auto r = run_check(c.name, CheckArgs{n, 0, 1});
            EXPECT_TRUE(r.pass) << c.name << " n=" << n << " " << r.counterexample.dump();
            EXPECT_EQ(r.pass, r.counterexample.is_null()) << c.name;
        }
    }
}

TEST(Checks, DimensionFour) {
    for (const auto *name : {"mod3", "small-spectrum", "rank2", "minimal-count", "max-unique", "gap-14", "pot12", "hprime", "testset"}) {
        const auto r = run_check(name, CheckArgs{4, 0, 1});
        EXPECT_TRUE(r.pass) << name << " " << r.counterexample.dump();
    }
    EXPECT_EQ(run_check("gap-14", CheckArgs{4, 0, 1}).detail["window"], nlohmann::json::array({42, 54}));
    EXPECT_EQ(run_check("minimal-count", CheckArgs{4, 0, 1}).detail["count"], "81");
}

TEST(Checks, AlphaPredicateRejectsSize34AtN4) {
    const auto r = run_check("alpha", CheckArgs{4, 0, 1});
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.counterexample["size"], 34);
}

TEST(Checks, BadArguments) {
    EXPECT_THROW(run_check("nope", CheckArgs{}), error);
    EXPECT_THROW(run_check("alpha", CheckArgs{5, 0, 1}), error);
    EXPECT_THROW(run_check("gap-14", CheckArgs{2, 0, 1}), error);
}
