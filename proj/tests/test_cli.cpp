#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bf/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

Outcome bf_run(const std::string& args, const std::string& env = {}) {
    const fs::path err_file = fs::temp_directory_path() / ("bf-cli-stderr-" + std::to_string(::getpid()));
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" BF_EXE "' " + args + " 2>'" + err_file.string() + "'";
    Outcome r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err_file);
    r.err.assign(std::istreambuf_iterator<char>(in), {});
    fs::remove(err_file);
    return r;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

fs::path fresh_dir(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / ("bf-cli-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    return d;
}

}  // namespace

TEST(CliEval, Examples) {
    const Outcome a = bf_run("eval a");
    EXPECT_EQ(a.code, 0);
    EXPECT_TRUE(has(a.out, "1 - y")) << a.out;
    const Outcome id = bf_run("eval ''");
    EXPECT_EQ(id.code, 0);
    const Outcome c = bf_run("eval c");
    EXPECT_EQ(c.code, 3);
    EXPECT_TRUE(has(c.err, "unknown generator"));
}

TEST(CliEval, EntrywiseMembershipWithQ) {
    const Outcome r = bf_run("eval 'a^2' --q 2");
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_TRUE(has(r.out, "Member"));
}

TEST(CliMember, Examples) {
    const Outcome m = bf_run("member '1 - x' --ideal iq --q 2");
    EXPECT_EQ(m.code, 0);
    EXPECT_TRUE(has(m.out, "Member"));
    const Outcome n = bf_run("member '1 - x' --ideal jq --q 2");
    EXPECT_EQ(n.code, 0);
    EXPECT_TRUE(has(n.out, "RootOfUnity(q=2, a=1, b=0"));
    const Outcome s = bf_run("member '(1-x)*(1-y)' --ideal iq --q 3");
    EXPECT_TRUE(s.code == 0 || s.code == 2);
    const Outcome u = bf_run("member '(1-x)^2' --ideal iq --q 3 --d-unit 1 --d-shift 0 --window 1");
    EXPECT_EQ(u.code, 2);
    EXPECT_TRUE(has(u.out, "Unknown"));
    EXPECT_EQ(bf_run("member '1 +* x' --ideal iq --q 2").code, 3);
    EXPECT_EQ(bf_run("member 1 --ideal iq --q 6").code, 3);
}

TEST(CliMember, JsonVerdict) {
    const Outcome r = bf_run("member '1 - x' --ideal jq --q 2 --json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("status"), "NonMember");
    EXPECT_EQ(j.at("certificate").at("image"), nlohmann::json::array({"2"}));
}

TEST(CliUsage, Errors) {
    EXPECT_EQ(bf_run("").code, 3);
    EXPECT_EQ(bf_run("bogus").code, 3);
    EXPECT_EQ(bf_run("verify nonsense").code, 3);
    EXPECT_EQ(bf_run("bounds --q 6").code, 3);
    EXPECT_EQ(bf_run("verify bounds --q 6").code, 3);
    EXPECT_EQ(bf_run("verify bounds --samples 0").code, 3);
    EXPECT_EQ(bf_run("--help").code, 0);
}

TEST(CliVerify, ExitCodes) {
    const Outcome pass = bf_run("verify bounds prop1 t-commute --q 2");
    EXPECT_EQ(pass.code, 0) << pass.out;
    EXPECT_TRUE(has(pass.out, "pass 3, fail 0, inconclusive 0"));

    const Outcome inc = bf_run("verify exponent --q 2 --d-unit 1 --d-shift 0 --window 2 --samples 2");
    EXPECT_EQ(inc.code, 2) << inc.out;
    EXPECT_TRUE(has(inc.out, "Inconclusive  exponent"));

    // The exponent-q commutator claim is refuted at q = 4 by a root-of-unity certificate.
    const Outcome fail = bf_run("verify exponent --q 4 --samples 2");
    EXPECT_EQ(fail.code, 1) << fail.out;
    EXPECT_TRUE(has(fail.out, "Fail  exponent"));
    EXPECT_TRUE(has(fail.out, "RootOfUnity"));
}

TEST(CliVerify, DeterministicJson) {
    const std::string args = "verify metabelian order exponent square --q 3 --seed 11 --samples 5 --auto-grow --json";
    const Outcome a = bf_run(args), b = bf_run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0);
    const auto ja = bf::strip_timing(nlohmann::json::parse(a.out));
    const auto jb = bf::strip_timing(nlohmann::json::parse(b.out));
    EXPECT_EQ(ja.dump(), jb.dump());
    EXPECT_EQ(ja.at("summary").at("pass"), 4);
    EXPECT_EQ(ja.at("config").at("seed"), "11");
    const auto c = bf::strip_timing(nlohmann::json::parse(bf_run("verify metabelian --q 3 --seed 12 --samples 5 --json").out));
    EXPECT_NE(c.at("claims").at(0).at("details"), ja.at("claims").at(0).at("details"));
}

TEST(CliVerify, TextAndJsonAgree) {
    const Outcome text = bf_run("verify order square --q 2");
    const Outcome json = bf_run("verify order square --q 2 --json");
    const auto j = nlohmann::json::parse(json.out);
    for (const auto& c : j.at("claims")) {
        EXPECT_TRUE(has(text.out, c.at("status").get<std::string>() + "  " + c.at("claim_id").get<std::string>()));
    }
    EXPECT_EQ(text.code, json.code);
}

TEST(CliCache, CorruptionIsRebuiltWithWarning) {
    const fs::path dir = fresh_dir("corrupt");
    const std::string args = "member '(1-x)*(1-y)' --ideal iq --q 3 --cache-dir '" + dir.string() + "'";
    const Outcome first = bf_run(args);
    ASSERT_EQ(first.code, 0);
    EXPECT_TRUE(first.err.empty()) << first.err;
    int files = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ofstream(e.path(), std::ios::trunc) << "{\"format_version\": 1, \"hnf";
        ++files;
    }
    ASSERT_GT(files, 0);
    const Outcome second = bf_run(args);
    EXPECT_EQ(second.code, 0);
    EXPECT_EQ(second.out, first.out);
    EXPECT_TRUE(has(second.err, "rebuilding")) << second.err;
    const Outcome third = bf_run(args);
    EXPECT_TRUE(third.err.empty()) << third.err;
    fs::remove_all(dir);
}

TEST(CliCache, EnvironmentOverridesFlag) {
    const fs::path env_dir = fresh_dir("env"), flag_dir = fresh_dir("flag");
    const Outcome r = bf_run("member '1 - x' --ideal iq --q 2 --cache-dir '" + flag_dir.string() + "'",
                         "BF_CACHE_DIR='" + env_dir.string() + "'");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(fs::exists(env_dir));
    EXPECT_FALSE(fs::exists(flag_dir));
    fs::remove_all(env_dir);
}

TEST(CliBounds, Table) {
    const Outcome r = bf_run("bounds --q 8");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "13")) << r.out;
}

TEST(CliWord, Examples) {
    const Outcome r = bf_run("word '[a,b]'");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "ABab"));
    EXPECT_EQ(bf_run("word '[a,b'").code, 3);
}
