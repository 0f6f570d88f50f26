#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "glgu/verify.hpp"

using namespace glgu;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("glgu-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const Claim& find(const std::vector<Claim>& claims, const std::string& prefix) {
  for (const auto& c : claims)
    if (c.id.rfind(prefix, 0) == 0) return c;
  throw std::logic_error("no claim " + prefix);
}

void flip_byte(const fs::path& file, std::uintmax_t offset) {
  std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
  f.seekg(static_cast<std::streamoff>(offset));
  char ch = 0;
  f.get(ch);
  f.seekp(static_cast<std::streamoff>(offset));
  f.put(static_cast<char>(ch ^ 0x5A));
}

}  // namespace

// ---- values behind the two red acceptance criteria ----

TEST(Pins, GL2RealClassesAtQ5L1) {
  cache::Store store;
  Context ctx(store, kDefaultBudget, 1);
  const auto claims = census_claims(ctx, desk_spec(GroupKind::GL2, 5, 1));
  const Claim& c = find(claims, "real-class-count");
  EXPECT_EQ(c.computed, 8);
  EXPECT_TRUE(c.pass);  // 1 + q + 2 = 8; the literal 10 in criterion 1 is off.
}

TEST(Pins, CentralizerOrdersFollowTheOppositeSign) {
  // Enumeration agrees with centralizer_formula after exchanging d_GL and d_GU.
  const std::map<GroupKind, std::array<std::uint64_t, 3>> computed{{GroupKind::GL2, {36, 54, 72}},
                                                                   {GroupKind::GU2, {72, 108, 144}}};
  const OrbitType types[] = {OrbitType::ss, OrbitType::sns, OrbitType::cus};
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    const auto other = kind == GroupKind::GL2 ? GroupKind::GU2 : GroupKind::GL2;
    const Ring R = group_ring(desk_spec(kind, 3, 2));
    for (int k = 0; k < 3; ++k) {
      const auto rep = centralizer_and_za(kind, R, least_regular_of_type(kind, R, types[k]));
      EXPECT_EQ(rep.centralizer_order, computed.at(kind)[k]);
      EXPECT_EQ(rep.centralizer_order, centralizer_formula(other, types[k], 3, 2));
      EXPECT_NE(rep.centralizer_order, centralizer_formula(kind, types[k], 3, 2));
    }
  }
  // Independent check for GL2 ss: the centralizer of a regular diagonal
  // matrix is the diagonal torus, (|o_2^x|)^2 = 6^2.
  const Ring R = group_ring(desk_spec(GroupKind::GL2, 3, 2));
  EXPECT_EQ(R.units().size() * R.units().size(), 36U);
}

// ---- claim builders ----

TEST(Verify, DeskSpec) {
  const auto s = desk_spec(GroupKind::GU2, 9, 2);
  EXPECT_EQ(s.family, Family::Equal);
  EXPECT_EQ(s.p, 3U);
  EXPECT_EQ(s.f, 2U);
  EXPECT_EQ(desk_spec(GroupKind::GL2, 7, 1).family, Family::Mixed);
  EXPECT_THROW(desk_spec(GroupKind::GL2, 15, 1), std::invalid_argument);
}

TEST(Verify, CentralizerFormulaLiterals) {
  EXPECT_EQ(centralizer_formula(GroupKind::GL2, OrbitType::ss, 3, 2), 72U);
  EXPECT_EQ(centralizer_formula(GroupKind::GL2, OrbitType::sns, 3, 2), 108U);
  EXPECT_EQ(centralizer_formula(GroupKind::GL2, OrbitType::cus, 3, 2), 144U);
  EXPECT_EQ(centralizer_formula(GroupKind::GU2, OrbitType::ss, 3, 2), 36U);
  EXPECT_THROW(centralizer_formula(GroupKind::GU2, OrbitType::nreg, 3, 2), std::invalid_argument);
}

TEST(Verify, FormulaRegressionHolds) {
  const auto claims = formula_regression_claims();
  EXPECT_GT(claims.size(), 40U);
  for (const auto& c : claims) EXPECT_TRUE(c.pass) << claim_line(c);
  // Symbolic GL2 counts are present up to |o_l| = 729.
  EXPECT_NO_THROW(find(claims, "regression.symbolic.gl2.q9.l3"));
}

TEST(Verify, CommandClaimsPassAtDeskScale) {
  cache::Store store;
  Context ctx(store, kDefaultBudget, 7);
  for (auto kind : {GroupKind::GL2, GroupKind::GU2}) {
    const auto s = desk_spec(kind, 3, 1);
    ordered_json result;
    for (const auto& c : census_claims(ctx, s, &result)) EXPECT_TRUE(c.pass) << claim_line(c);
    EXPECT_EQ(result["realTotal"], 6);
    for (const auto& c : classify_claims(ctx, s)) EXPECT_TRUE(c.pass) << claim_line(c);
    for (const auto& c : chartab_claims(ctx, s, false)) EXPECT_TRUE(c.pass) << claim_line(c);
  }
}

TEST(Verify, RunCommandErrors) {
  RunConfig cfg;
  cfg.command = "plot";
  EXPECT_THROW(run_command(cfg), std::invalid_argument);
  cfg.command = "census";
  cfg.ell = 3;
  cfg.budget = 1000;
  EXPECT_THROW(run_command(cfg), BudgetExceeded);
  // The character table refuses on the class-algebra size, after enumeration.
  cfg.command = "chartab";
  cfg.ell = 2;
  cfg.budget = 100000;
  EXPECT_THROW(run_command(cfg), BudgetExceeded);
}

// ---- reports ----

TEST(Report, JsonShapeAndDeterminism) {
  RunConfig cfg;
  cfg.kind = GroupKind::GU2;
  cfg.ell = 2;
  cfg.command = "involutions";
  const std::string a = to_json(run_command(cfg));
  EXPECT_EQ(a, to_json(run_command(cfg)));
  const auto j = ordered_json::parse(a);
  EXPECT_EQ(j["result"]["count"], 56);
  EXPECT_TRUE(j["timing"].is_null());
  for (const char* k : {"id", "paperRef", "expected", "computed", "pass"}) EXPECT_TRUE(j["claims"][0].contains(k));
  cfg.timing = true;
  EXPECT_TRUE(ordered_json::parse(to_json(run_command(cfg)))["timing"].contains("total"));
}

TEST(Report, CsvQuoting) {
  Report r;
  r.claims.push_back(make_claim("x", "a, \"b\"", ordered_json{1, 2}, ordered_json{1, 2}));
  EXPECT_EQ(to_csv(r), "id,paperRef,expected,computed,pass\nx,\"a, \"\"b\"\"\",\"[1,2]\",\"[1,2]\",true\n");
  EXPECT_EQ(claim_line(make_claim("y", "", 1, 2)), "FAIL y: expected=1 computed=2");
}

// ---- cache ----

TEST(Cache, DirectoryResolution) {
  ::unsetenv(cache::kEnvVar);
  EXPECT_FALSE(cache::resolve_dir("").has_value());
  ::setenv(cache::kEnvVar, "/tmp/from-env", 1);
  EXPECT_EQ(*cache::resolve_dir(""), fs::path("/tmp/from-env"));
  EXPECT_EQ(*cache::resolve_dir("/tmp/flag"), fs::path("/tmp/flag"));
  ::unsetenv(cache::kEnvVar);
}

TEST(Cache, KeysSeparateConfigurations) {
  const auto a = desk_spec(GroupKind::GL2, 3, 2);
  const auto b = desk_spec(GroupKind::GU2, 3, 2);
  EXPECT_NE(cache::key(a), cache::key(b));
  EXPECT_NE(cache::key(a, 1), cache::key(a, 2));
  EXPECT_EQ(cache::key(a, 1), cache::key(a, 1));
}

TEST(Cache, GroupRoundTripAndCorruption) {
  TempDir tmp;
  const auto spec = desk_spec(GroupKind::GU2, 3, 2);
  const Group fresh = Group::enumerate(spec);
  {
    cache::Store store(tmp.path);
    EXPECT_EQ(store.group(spec).keys(), fresh.keys());
    EXPECT_TRUE(fs::exists(store.path_for(spec, ".grp")));
    EXPECT_EQ(store.group(spec).keys(), fresh.keys());
    EXPECT_TRUE(store.warnings().empty());
  }
  cache::Store store(tmp.path);
  const auto file = store.path_for(spec, ".grp");
  flip_byte(file, fs::file_size(file) - 3);  // inside the checksum
  EXPECT_THROW(cache::read_group(file, spec), cache::CacheError);
  EXPECT_EQ(store.group(spec).keys(), fresh.keys());
  ASSERT_EQ(store.warnings().size(), 1U);
  EXPECT_NE(store.warnings()[0].find("damaged"), std::string::npos);
  EXPECT_NO_THROW(cache::read_group(file, spec));  // rebuilt
  // Wrong spec for the file.
  EXPECT_THROW(cache::read_group(file, desk_spec(GroupKind::GL2, 3, 2)), cache::CacheError);
}

TEST(Cache, TableAndLabelsRoundTrip) {
  TempDir tmp;
  const auto spec = desk_spec(GroupKind::GU2, 3, 1);
  const Group G = Group::enumerate(spec);
  const ClassPartition P = conjugacy_partition(G);
  const ClassData D = class_structure(G, P);
  cache::Store first(tmp.path);
  const CharTable a = first.character_table(G, D, 11);
  const GU2Classifier la = first.gu2_labels(G, P);
  cache::Store second(tmp.path);
  const CharTable b = second.character_table(G, D, 11);
  const GU2Classifier lb = second.gu2_labels(G, P);
  EXPECT_TRUE(second.warnings().empty());
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.fs, b.fs);
  EXPECT_EQ(a.modulus, b.modulus);
  for (std::uint32_t c = 0; c < P.count(); ++c) {
    EXPECT_EQ(la.class_label(c).tag, lb.class_label(c).tag);
    EXPECT_EQ(la.class_label(c).matrix, lb.class_label(c).matrix);
  }
  // A tampered value breaks orthogonality and forces a rebuild.
  const auto file = second.path_for(spec, ".chartab.json", 11);
  std::ifstream in(file);
  auto j = ordered_json::parse(in);
  in.close();
  j["values"][1][1] = (j["values"][1][1].get<std::uint64_t>() + 1) % j["modulus"].get<std::uint64_t>();
  std::ofstream(file) << j.dump();
  cache::Store third(tmp.path);
  EXPECT_EQ(third.character_table(G, D, 11).values, a.values);
  EXPECT_EQ(third.warnings().size(), 1U);
}
