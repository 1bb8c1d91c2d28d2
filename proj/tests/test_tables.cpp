#include <tritrade/tables.hpp>

#include <gtest/gtest.h>

using namespace tritrade;

TEST(Tables, ShippedTablesAreConsistent) {
    const auto t = load_reference_tables();
    EXPECT_EQ(t.counts.size(), 8u);
    EXPECT_EQ(t.spectra.size(), 7u);
    EXPECT_TRUE(t.counts.at(7).classes_lower_bound);
    EXPECT_FALSE(t.counts.at(6).classes_lower_bound);
    const auto checks = check_reference_tables(t);
    EXPECT_GT(checks.size(), 50u);
    for (const auto &c : checks) {
        EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    }
}

TEST(Tables, CorruptionIsDetected) {
    const auto failing = [](const ReferenceTables &t) {
        std::set<std::string> out;
        for (const auto &c : check_reference_tables(t)) {
            if (!c.pass) {
                out.insert(c.name);
            }
        }
        return out;
    };
    auto t = load_reference_tables();
    t.spectra.at(6).sets.back() += 1;
    EXPECT_EQ(failing(t), (std::set<std::string>{"n=6 sum", "n=6 tail", "header"}));

    t = load_reference_tables();
    // 68 = 2 mod 3 while 2^6 = 1 mod 3
    t.spectra.at(6).sets[2] += 1;
    EXPECT_TRUE(failing(t).contains("n=6 mod3"));

    t = load_reference_tables();
    t.counts.at(5).classes = 10;
    EXPECT_EQ(failing(t), (std::set<std::string>{"n=5 classes", "header"}));
    EXPECT_THROW(load_reference_tables("/nonexistent.json"), error);
}
