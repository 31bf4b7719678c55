#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bf/lattice_cache.hpp"

using namespace bf;
namespace fs = std::filesystem;

namespace {

class CacheDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("bf-cache-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    fs::path file(const IdealSpec& s, const Box& b) const { return dir / cache_file_name(s, b); }

    void overwrite(const fs::path& p, const std::string& text) const {
        std::ofstream out(p, std::ios::trunc);
        out << text;
    }

    fs::path dir;
    std::vector<std::string> warnings;
    WarningSink sink = [this](const std::string& m) { warnings.push_back(m); };
};

const IdealSpec kSpec = IdealSpec::jq(3);
const Box kBox{1, 1, 4};

void expect_same(const LatticeBasis& a, const LatticeBasis& b) {
    EXPECT_EQ(a.monomial_index, b.monomial_index);
    EXPECT_EQ(a.hnf.pivots, b.hnf.pivots);
    EXPECT_EQ(a.hnf.vectors, b.hnf.vectors);
    EXPECT_EQ(a.hnf.combos, b.hnf.combos);
    EXPECT_EQ(a.columns.size(), b.columns.size());
    EXPECT_EQ(a.discarded, b.discarded);
}

}  // namespace

TEST(CacheJson, RoundTrip) {
    const LatticeBasis lb = build_lattice_uncached(kSpec, kBox);
    const nlohmann::json j = lattice_to_json(lb);
    EXPECT_EQ(j.at("format_version"), kLatticeFormatVersion);
    EXPECT_TRUE(j.at("hnf_matrix").at(0).at(0).at(1).is_string());
    std::string why;
    const auto back = lattice_from_json(nlohmann::json::parse(j.dump()), kSpec, kBox, &why);
    ASSERT_TRUE(back) << why;
    expect_same(lb, *back);
}

TEST(CacheJson, RejectsMismatchAndTampering) {
    const LatticeBasis lb = build_lattice_uncached(kSpec, kBox);
    nlohmann::json j = lattice_to_json(lb);
    std::string why;

    nlohmann::json v = j;
    v["format_version"] = kLatticeFormatVersion + 1;
    EXPECT_FALSE(lattice_from_json(v, kSpec, kBox, &why));
    EXPECT_NE(why.find("version"), std::string::npos);

    EXPECT_FALSE(lattice_from_json(j, IdealSpec::jq(2), kBox, &why));
    EXPECT_FALSE(lattice_from_json(j, kSpec, Box{1, 2, 4}, &why));

    nlohmann::json t = j;
    t["hnf_matrix"][0][0][1] = "7";
    EXPECT_FALSE(lattice_from_json(t, kSpec, kBox, &why));

    nlohmann::json m = j;
    m.erase("transform");
    EXPECT_FALSE(lattice_from_json(m, kSpec, kBox, &why));
    EXPECT_NE(why.find("malformed"), std::string::npos);
}

TEST_F(CacheDir, StoreThenLoad) {
    IdealEngine eng(dir.string(), sink);
    const auto built = eng.build_lattice(kSpec, kBox);
    ASSERT_TRUE(fs::exists(file(kSpec, kBox)));
    EXPECT_FALSE(fs::exists(file(kSpec, kBox).string() + ".lock"));

    IdealEngine second(dir.string(), sink);
    const auto loaded = second.build_lattice(kSpec, kBox);
    EXPECT_EQ(second.builds(), 0u);
    expect_same(*built, *loaded);
    EXPECT_TRUE(warnings.empty());
}

TEST_F(CacheDir, CorruptFileIsRebuiltWithWarning) {
    IdealEngine(dir.string(), sink).build_lattice(kSpec, kBox);
    overwrite(file(kSpec, kBox), "{\"format_version\": 1, \"hnf_matrix\": [[[0, \"oops");

    IdealEngine eng(dir.string(), sink);
    const auto lb = eng.build_lattice(kSpec, kBox);
    EXPECT_EQ(eng.builds(), 1u);
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("rebuilding"), std::string::npos);
    EXPECT_TRUE(lattice_consistent(*lb));
    // The rebuilt lattice replaced the bad file.
    EXPECT_TRUE(cache_load(dir.string(), kSpec, kBox, sink));
    EXPECT_EQ(warnings.size(), 1u);
}

TEST_F(CacheDir, VersionMismatchIsRebuilt) {
    const LatticeBasis lb = build_lattice_uncached(kSpec, kBox);
    fs::create_directories(dir);
    nlohmann::json j = lattice_to_json(lb);
    j["format_version"] = 0;
    overwrite(file(kSpec, kBox), j.dump());
    EXPECT_FALSE(cache_load(dir.string(), kSpec, kBox, sink));
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("version"), std::string::npos);
}

TEST_F(CacheDir, TamperedBasisIsNotTrusted) {
    IdealEngine(dir.string(), sink).build_lattice(kSpec, kBox);
    std::ifstream in(file(kSpec, kBox));
    nlohmann::json j = nlohmann::json::parse(in);
    in.close();
    // Doubling a pivot keeps the file well formed but breaks the transform check.
    auto& entry = j["hnf_matrix"][0][0][1];
    entry = (Integer(entry.get<std::string>()) * 2).str();
    overwrite(file(kSpec, kBox), j.dump());

    IdealEngine eng(dir.string(), sink);
    const auto lb = eng.build_lattice(kSpec, kBox);
    EXPECT_EQ(eng.builds(), 1u);
    EXPECT_EQ(warnings.size(), 1u);
    // Answers come from the rebuilt lattice.
    const LaurentPoly p = LaurentPoly::parse(Ring(2), "(1-y)*(1+x+x^2)");
    EXPECT_EQ(eng.member(p, kSpec, kBox, false).status(), Verdict::Member);
}
