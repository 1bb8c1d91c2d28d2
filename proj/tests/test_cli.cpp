#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
    const std::string cmd = env + " " + TRITRADE_CLI + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p) != nullptr) {
        out += buf.data();
    }
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const Run &r) { return nlohmann::json::parse(r.out); }

std::filesystem::path tmp(const std::string &name) { return std::filesystem::temp_directory_path() / ("tritrade_cli_" + name); }

} // namespace

TEST(Cli, EnumerateCount) {
    EXPECT_EQ(run("enumerate --n 3 --mode count").out, "403\n");
    EXPECT_EQ(run("enumerate --n 0 --mode count").out, "3\n");
    const auto j = json_of(run("enumerate --n 4 --format json --jobs 2"));
    EXPECT_EQ(j["N"], "29875");
    EXPECT_EQ(j["schema"], "tritrade/1");
    EXPECT_EQ(j["manifest"]["workers"], 2);
}

TEST(Cli, EnumerateClassesAndSpectrum) {
    const auto c = json_of(run("enumerate --n 2 --mode classes"));
    EXPECT_EQ(c["classes_count"], 3);
    EXPECT_EQ(c["classes"].size(), 3u);
    const auto csv = run("enumerate --n 2 --mode classes --format csv").out;
    EXPECT_NE(csv.find("\nkey,orbit,aut,cardinality\n"), std::string::npos);

    const auto s = json_of(run("enumerate --n 3 --mode spectrum"));
    EXPECT_EQ(s["N"], "403");
    const nlohmann::json want = nlohmann::json::parse(
        R"([{"size":8,"sets":"27"},{"size":12,"sets":"54"},{"size":14,"sets":"108"},{"size":18,"sets":"12"}])");
    EXPECT_EQ(s["entries"], want);
    const auto scsv = run("enumerate --n 1 --mode spectrum --format csv").out;
    EXPECT_NE(scsv.find("\nsize,sets\n2,3\n"), std::string::npos);
}

TEST(Cli, JobsFromEnvironment) {
    const auto j = json_of(run("enumerate --n 3 --format json", "TRITRADE_JOBS=3"));
    EXPECT_EQ(j["manifest"]["workers"], 3);
    EXPECT_EQ(json_of(run("enumerate --n 3 --format json --jobs 1", "TRITRADE_JOBS=3"))["manifest"]["workers"], 1);
}

TEST(Cli, OutputChecksumsAreDeterministic) {
    const auto a = json_of(run("enumerate --n 4 --mode spectrum --jobs 1"));
    const auto b = json_of(run("enumerate --n 4 --mode spectrum --jobs 3"));
    EXPECT_EQ(a["manifest"]["checksums"], b["manifest"]["checksums"]);
    const auto path = tmp("classes.csv");
    ASSERT_EQ(run("enumerate --n 3 --mode classes --format csv --out " + path.string()).code, 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first.rfind("# manifest ", 0), 0u);
    EXPECT_EQ(run("enumerate --n 3 --mode classes --format csv --out " + path.string()).code, 0);
    std::filesystem::remove(path);
}

TEST(Cli, Verify) {
    const auto m = run("verify --check minimal-count --n 5");
    EXPECT_EQ(m.code, 0);
    EXPECT_EQ(json_of(m)["results"][0]["detail"]["count"], "243");
    EXPECT_EQ(run("verify --check mod3 --n 4").code, 0);
    EXPECT_EQ(run("verify --check gap-14 --n 4").code, 0);
    const auto alpha = run("verify --check alpha --n 4");
    EXPECT_EQ(alpha.code, 1);
    EXPECT_EQ(json_of(alpha)["results"][0]["counterexample"]["size"], 34);
    const auto all = json_of(run("verify --check all --n 3"));
    EXPECT_EQ(all["results"].size(), 10u); // recover starts at n = 4
    EXPECT_TRUE(all["pass"]);
    EXPECT_EQ(run("verify --check nope --n 3").code, 2);
}

TEST(Cli, Construct) {
    const auto max3 = json_of(run("construct --what maximal --n 3"));
    EXPECT_EQ(max3["trade"]["size"], 18);
    EXPECT_TRUE(max3["self_check"]["complement_is_mds"]);
    const auto h = json_of(run("construct --what hprime --t 2"));
    EXPECT_EQ(h["code"]["length"], 6);
    EXPECT_TRUE(h["self_check"]["pairwise_odd"]);
    const auto r2 = json_of(run("construct --what rank2 --n 5 --s 2"));
    EXPECT_EQ(r2["trade"]["size"], 56);
    EXPECT_EQ(r2["self_check"]["rank"], 2);
    EXPECT_EQ(json_of(run("construct --what bitrade14 --n 4"))["trade"]["size"], 42);
    const auto p = json_of(run("construct --what product --left 110 --right 011"));
    EXPECT_EQ(p["trade"]["size"], 4);
    EXPECT_TRUE(p["self_check"]["size_matches"]);
    EXPECT_EQ(json_of(run("construct --what kext --base 110 --m 2"))["trade"]["size"], 18);
    EXPECT_EQ(run("construct --what pot12 --f 0110").code, 0);
    EXPECT_EQ(run("construct --what rank2 --n 3 --s 5").code, 2);
    EXPECT_EQ(run("construct --what bitrade14 --n 2").code, 2);
    EXPECT_EQ(run("construct --what product --left 100 --right 011").code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("enumerate").code, 2);
    EXPECT_EQ(run("enumerate --n 3 --mode bogus").code, 2);
    EXPECT_EQ(run("enumerate --n 3 --jobs 0").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("enumerate --n 7").code, 3);
    EXPECT_EQ(run("enumerate --n 6 --mode spectrum").code, 3);
}

TEST(Cli, CheckpointResume) {
    const auto ck = tmp("ck.json");
    std::filesystem::remove(ck);
    EXPECT_EQ(run("enumerate --n 4 --checkpoint " + ck.string() + " --max-jobs 10").code, 3);
    ASSERT_TRUE(std::filesystem::exists(ck));
    EXPECT_EQ(run("enumerate --n 3 --checkpoint " + ck.string()).code, 4);
    EXPECT_EQ(run("enumerate --n 4 --checkpoint " + ck.string() + " --prefix-depth 3").code, 4);
    const auto r = run("enumerate --n 4 --checkpoint " + ck.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "29875\n");
    EXPECT_FALSE(std::filesystem::exists(ck));
}
