#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "ovpcheck");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = ovpcheck::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("ovpcheck-test-" + name);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, ovpcheck::exit_usage);
    EXPECT_EQ(run({"bogus"}).code, ovpcheck::exit_usage);
    EXPECT_EQ(run({"identities", "--order", "0"}).code, ovpcheck::exit_usage);
    EXPECT_EQ(run({"verify", "no-such-family"}).code, ovpcheck::exit_usage);
    EXPECT_EQ(run({"verify"}).code, ovpcheck::exit_usage);
    EXPECT_EQ(run({"families", "--format", "xml"}).code, ovpcheck::exit_usage);
    EXPECT_EQ(run({"replay", "--width", "8"}).code, ovpcheck::exit_usage);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, ovpcheck::exit_pass);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, FamiliesJson) {
    const auto r = run({"families", "--format", "json"});
    ASSERT_EQ(r.code, ovpcheck::exit_pass);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "ovpcheck-families/1");
    EXPECT_EQ(j["families"].size(), 27U);
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
    const std::vector<std::string> base{"verify", "pbar-8n+7-mod32", "opt-3n+1-mod-3^i2", "--t-max", "10",
                                        "--n-max", "30", "--format", "json"};
    auto one = base;
    one.insert(one.end(), {"--jobs", "1"});
    auto three = base;
    three.insert(three.end(), {"--jobs", "3"});
    const auto a = run(one);
    const auto b = run(three);
    EXPECT_EQ(a.code, ovpcheck::exit_pass) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ConjectureFailureDoesNotFailTheRun) {
    const auto r = run({"verify", "opt-8n+4-mod-2^{2i+4}", "--i-max", "1", "--r-max", "1", "--n-max", "5",
                        "--format", "csv"});
    EXPECT_EQ(r.code, ovpcheck::exit_pass);
    EXPECT_NE(r.out.find("key,params,n,value,modulus,expected"), std::string::npos);
    EXPECT_NE(r.out.find(",0,32,64,0"), std::string::npos);
}

TEST(Cli, IdentitiesReportR13) {
    const auto r = run({"identities", "--order", "50"});
    EXPECT_EQ(r.code, ovpcheck::exit_mismatch);
    EXPECT_NE(r.out.find("R13"), std::string::npos);
    EXPECT_EQ(run({"identities", "--order", "50", "--only", "D1,JACOBI"}).code, ovpcheck::exit_pass);
}

TEST(Cli, OracleCsv) {
    const auto r = run({"oracle", "--t", "0", "--upto", "5", "--format", "csv"});
    ASSERT_EQ(r.code, ovpcheck::exit_pass) << r.err;
    EXPECT_NE(r.out.find("family,parameter,n,count"), std::string::npos);
}

TEST(Cli, ReplaySelections) {
    EXPECT_EQ(run({"replay", "--width", "16"}).code, ovpcheck::exit_pass);
    EXPECT_EQ(run({"replay", "--step", "G8", "--t", "3", "--order", "60"}).code, ovpcheck::exit_pass);
    EXPECT_EQ(run({"replay", "--step", "T11-4n+3", "--r", "1", "--order", "40"}).code, ovpcheck::exit_mismatch);
}

TEST(Cli, ConfigFileAndOutDir) {
    const auto dir = temp_dir("config");
    const auto cfg = dir / "run.ini";
    std::ofstream(cfg) << "format=json\nn-max=20\n";
    const auto r = run({"verify", "pbar-8n+5-mod8", "--t-max", "4", "--config", cfg.string(), "--out",
                        dir.string()});
    ASSERT_EQ(r.code, ovpcheck::exit_pass) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "ovpcheck-verify/1");
    EXPECT_TRUE(std::filesystem::exists(dir / "verify.json"));

    // flags override the file
    const auto csv = run({"verify", "pbar-8n+5-mod8", "--t-max", "4", "--config", cfg.string(), "--format", "csv"});
    EXPECT_EQ(csv.code, ovpcheck::exit_pass);
    EXPECT_EQ(csv.out.rfind("key,", 0), 0U);
    std::filesystem::remove_all(dir);
}
