#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "awcsp/cli.hpp"

using namespace awcsp;
using namespace awcsp::cli;

namespace {

struct Result {
    int code;
    std::string out;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "awcsp");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    RunConfig c;
    std::ostringstream os;
    if (auto code = parse(static_cast<int>(argv.size()), argv.data(), c, os))
        return {*code, os.str()};
    const int code = run(c, os);
    return {code, os.str()};
}

json invoke_json(std::vector<std::string> args) {
    const auto r = invoke(std::move(args));
    EXPECT_EQ(r.code, exit_ok) << r.out;
    return json::parse(r.out);
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

/// Compares with tests/golden/<name>; AWCSP_UPDATE_GOLDENS=1 rewrites it.
void expect_golden(const std::string& name, const std::vector<std::string>& args) {
    const auto r = invoke(args);
    ASSERT_EQ(r.code, exit_ok) << r.out;
    const std::filesystem::path path = std::filesystem::path(AWCSP_GOLDEN_DIR) / name;
    if (const char* update = std::getenv("AWCSP_UPDATE_GOLDENS"); update && std::string(update) == "1") {
        std::ofstream(path, std::ios::binary) << r.out;
        return;
    }
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(r.out, read_file(path)) << name;
}

}  // namespace

TEST(Cli, CountsExampleRow) {
    const auto j = invoke_json({"counts", "--n", "2"});
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["command"], "counts");
    const auto& row = j["rows"][2];
    EXPECT_EQ(row["n"], 2);
    EXPECT_EQ(row["scU"], 7);
    EXPECT_EQ(row["scT"], 7);
    EXPECT_EQ(row["scU1"], 3);
    EXPECT_EQ(row["scT1prime"], 3);
    EXPECT_EQ(row["result"], "PASS");
}

TEST(Cli, BlocksExample) {
    const auto j = invoke_json({"blocks", "--n", "2", "--q", "3"});
    ASSERT_EQ(j["blocks"].size(), 2u);
    EXPECT_EQ(j["blocks"][0]["ibr_count"], 7);
    EXPECT_EQ(j["blocks"][0]["weight_count"], 7);
    EXPECT_EQ(j["blocks"][1]["ibr_count"], 1);
    EXPECT_EQ(j["blocks"][1]["weight_count"], 1);
    EXPECT_EQ(j["blocks"][1]["centralizer"]["text"], "Sp_0(3) x GU_1(3^2)");
    EXPECT_EQ(j["result"], "PASS");
}

TEST(Cli, Identities) {
    const auto j = invoke_json({"identities", "--max-degree", "128"});
    ASSERT_EQ(j["identities"].size(), 4u);
    for (const auto& id : j["identities"]) {
        EXPECT_EQ(id["result"], "PASS");
        EXPECT_TRUE(id["first_mismatch"].is_null());
    }
}

TEST(Cli, LabelsAndOrbits) {
    const auto w = invoke_json({"labels", "--n", "2", "--q", "3", "--block", "0", "--kind", "weight"});
    EXPECT_EQ(w["labels"].size(), 7u);
    const auto o = invoke_json({"orbits", "--n", "2", "--q", "3", "--block", "0"});
    EXPECT_EQ(o["brauer"]["delta_fixed"], 3);
    EXPECT_EQ(o["weight"]["delta_fixed"], 3);
    EXPECT_EQ(o["brauer"]["orbits"].size(), 5u);
    EXPECT_EQ(o["result"], "PASS");
}

TEST(Cli, Bijection) {
    const auto j = invoke_json({"bijection", "--n", "2", "--q", "5"});
    EXPECT_EQ(j["result"], "PASS");
    for (const auto& b : j["blocks"])
        EXPECT_TRUE(b["report"]["failures"].empty());
}

TEST(Cli, DivisorsOddOrderFilter) {
    const auto all = invoke_json({"divisors", "--q", "3", "--max-degree", "4"});
    const auto odd = invoke_json({"divisors", "--q", "3", "--max-degree", "4", "--odd-order-only"});
    EXPECT_LT(odd["divisors"].size(), all["divisors"].size());
    for (const auto& d : odd["divisors"])
        EXPECT_TRUE(d["odd_order_roots"].get<bool>());
}

TEST(Cli, TsvOutput) {
    const auto r = invoke({"counts", "--n", "3", "--format", "tsv"});
    ASSERT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out,
              "n\tscU\tscT\tscU1\tscT1prime\tresult\n"
              "0\t1\t1\t1\t1\tPASS\n"
              "1\t3\t3\t1\t1\tPASS\n"
              "2\t7\t7\t3\t3\tPASS\n"
              "3\t16\t16\t4\t4\tPASS\n");
    // the global position of the flag works too
    EXPECT_EQ(invoke({"--format", "tsv", "counts", "--n", "3"}).out, r.out);
}

TEST(Cli, TsvUnavailableIsUsageError) {
    const auto r = invoke({"orbits", "--n", "2", "--q", "3", "--block", "0", "--format", "tsv"});
    EXPECT_EQ(r.code, exit_usage);
}

TEST(Cli, ByteDeterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{{"blocks", "--n", "3", "--q", "3"},
                                                                   {"bijection", "--n", "2", "--q", "3"},
                                                                   {"counts", "--n", "6"}})
        EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "awcsp_test_bijection.json";
    std::filesystem::remove(path);
    const auto r = invoke({"bijection", "--n", "2", "--q", "3", "--out", path.string()});
    ASSERT_EQ(r.code, exit_ok);
    EXPECT_TRUE(r.out.empty());
    const auto j = json::parse(read_file(path));
    EXPECT_EQ(j["blocks"].size(), 2u);
    EXPECT_EQ(read_file(path), invoke({"bijection", "--n", "2", "--q", "3"}).out);
    std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
    for (const auto& args : std::vector<std::vector<std::string>>{{"counts", "--bogus"},
                                                                   {"counts"},
                                                                   {},
                                                                   {"blocks", "--n", "2"},
                                                                   {"labels", "--n", "2", "--q", "3"},
                                                                   {"labels", "--n", "2", "--q", "3", "--block", "9"},
                                                                   {"blocks", "--n", "2", "--q", "4"},
                                                                   {"blocks", "--n", "0", "--q", "3"},
                                                                   {"counts", "--n", "-1"},
                                                                   {"counts", "--n", "2", "--format", "xml"}}) {
        const auto r = invoke(args);
        EXPECT_EQ(r.code, exit_usage) << r.out;
    }
    const auto j = json::parse(invoke({"counts", "--bogus"}).out);
    EXPECT_EQ(j["error"]["kind"], "usage");
    EXPECT_EQ(j["schema_version"], 1);
}

TEST(Cli, CapErrors) {
    for (const auto& args : std::vector<std::vector<std::string>>{{"blocks", "--n", "7", "--q", "3"},
                                                                   {"blocks", "--n", "2", "--q", "17"},
                                                                   {"counts", "--n", "31"},
                                                                   {"identities", "--max-degree", "100000"},
                                                                   {"divisors", "--q", "101", "--max-degree", "2"}}) {
        const auto r = invoke(args);
        EXPECT_EQ(r.code, exit_cap) << r.out;
        EXPECT_EQ(json::parse(r.out)["error"]["kind"], "cap");
    }
}

TEST(Cli, HelpExitsZero) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("bijection"), std::string::npos);
}

TEST(Cli, Goldens) {
    expect_golden("counts_n8.tsv", {"counts", "--n", "8", "--format", "tsv"});
    expect_golden("identities_64.json", {"identities", "--max-degree", "64"});
    expect_golden("divisors_q5_d2.json", {"divisors", "--q", "5", "--max-degree", "2"});
    expect_golden("blocks_n2_q3.json", {"blocks", "--n", "2", "--q", "3"});
    expect_golden("blocks_n3_q3.tsv", {"blocks", "--n", "3", "--q", "3", "--format", "tsv"});
    expect_golden("labels_n2_q3_b0_weight.json", {"labels", "--n", "2", "--q", "3", "--block", "0", "--kind", "weight"});
    expect_golden("orbits_n2_q9_b0.json", {"orbits", "--n", "2", "--q", "9", "--block", "0"});
    expect_golden("bijection_n2_q3.json", {"bijection", "--n", "2", "--q", "3"});
}
