#include "tga/harness.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace tga {
namespace {

namespace fs = std::filesystem;

const char* kKlein = R"({"kind":"product","params":[{"kind":"cyclic","params":[2]},{"kind":"cyclic","params":[2]}]})";

Json instance(const std::string& field, const std::string& group, const std::string& cocycle = R"({"kind":"trivial"})") {
  return Json{{"field", Json::parse(field)}, {"group", Json::parse(group)}, {"cocycle", Json::parse(cocycle)}};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("tga-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return path_ / name;
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const TempDir& dir, const std::string& args) {
  const fs::path out = dir.path() / "stdout.txt";
  const std::string cmd = std::string("\"") + TGA_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

Json strip_timings(Json j) {
  j.erase("timings");
  return j;
}

TEST(Harness, ParseCatalogShapes) {
  const auto single = parse_catalog(instance(R"({"p":5,"k":1})", kKlein));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].id, "instance-0");
  Json arr = Json::array({instance(R"({"p":5,"k":1})", kKlein), instance(R"({"p":3,"k":1})", R"({"kind":"cyclic","params":[3]})")});
  arr[1]["id"] = "c3";
  arr[1]["seed"] = 11;
  arr[1]["budget"] = 50;
  EXPECT_EQ(parse_catalog(arr).size(), 2u);
  const auto wrapped = parse_catalog(Json{{"instances", arr}});
  ASSERT_EQ(wrapped.size(), 2u);
  EXPECT_EQ(wrapped[1].id, "c3");
  EXPECT_EQ(wrapped[1].seed.value_or(0), 11u);
  EXPECT_EQ(wrapped[1].budget.value_or(0), 50u);
  EXPECT_TRUE(parse_catalog(Json::array()).empty());
  // Round trip through JSON.
  const auto again = parse_catalog(instance_to_json(wrapped[1]));
  EXPECT_EQ(instance_to_json(again[0]), instance_to_json(wrapped[1]));

  EXPECT_THROW(parse_catalog(Json::parse(R"({"group":{"kind":"cyclic","params":[2]}})")), Error);
  EXPECT_THROW(parse_catalog(Json(3)), Error);
  Json bad_seed = instance(R"({"p":5,"k":1})", kKlein);
  bad_seed["seed"] = "x";
  EXPECT_THROW(parse_catalog(bad_seed), Error);
}

TEST(Harness, ResolveBuildsTheAlgebra) {
  const auto spec = parse_catalog(instance(R"({"p":5,"k":1})", kKlein, R"({"kind":"lambda_pairing","lambda":4})"))[0];
  const auto inst = resolve(spec);
  EXPECT_EQ(inst.algebra->dim(), 4u);
  EXPECT_FALSE(inst.algebra->is_commutative());
  const auto bad = parse_catalog(instance(R"({"p":7,"k":1})", kKlein, R"({"kind":"lambda_pairing","lambda":3})"))[0];
  EXPECT_THROW(resolve(bad), Error);
}

TEST(Harness, DefaultCatalogCoversTheGrid) {
  const auto cat = default_catalog();
  std::set<std::string> ids;
  for (const auto& s : cat) ids.insert(s.id);
  EXPECT_EQ(ids.size(), cat.size());
  // 7 fields x 13 groups x (trivial + 3 coboundaries) plus lambda pairings.
  EXPECT_GT(cat.size(), 7u * 13u * 4u);
  EXPECT_TRUE(ids.count("GF(5)/C2xC2/trivial"));
  EXPECT_TRUE(ids.count("GF(5)/C2xC2/lambda4"));
  EXPECT_TRUE(ids.count("GF(9)/Q8xC3/coboundary3"));
  for (const auto& s : cat) EXPECT_NO_THROW(resolve(s)) << s.id;
}

TEST(Harness, SweepRowsAndReports) {
  Json arr = Json::array({instance(R"({"p":5,"k":1})", kKlein, R"({"kind":"lambda_pairing","lambda":4})"),
                          instance(R"({"p":7,"k":1})", R"({"kind":"quaternion8"})"),
                          instance(R"({"p":3,"k":1})", R"({"kind":"cyclic","params":[3]})")});
  SweepOptions o;
  o.properties = {{Property::NoNilpotents, 2}, {Property::XiN, 2}, {Property::NWeaklyRegular, 3}};
  const auto rep = run_sweep(parse_catalog(arr), o);
  ASSERT_EQ(rep.rows.size(), 9u);
  EXPECT_EQ(rep.disagreements(), 0u);
  for (const auto& r : rep.rows) {
    if (r.instance == "instance-1") {
      EXPECT_EQ(r.status, RowStatus::NotAdmissible);
    } else {
      EXPECT_EQ(r.status, RowStatus::Completed);
      EXPECT_EQ(r.agreement, r.decider == r.oracle);
      EXPECT_TRUE(r.oracle_exhaustive);
    }
  }
  EXPECT_EQ(rep.rows[0].property, "no_nilpotents");
  EXPECT_FALSE(rep.rows[0].decider);
  EXPECT_EQ(rep.rows[2].property, "n_weakly_regular(3)");
  // GF(3)[C3]: xi_N holds, n-weak does not.
  EXPECT_TRUE(rep.rows[7].decider);
  EXPECT_FALSE(rep.rows[8].decider);

  const auto j = rep.to_json();
  EXPECT_EQ(j.at("schema"), kSchemaVersion);
  EXPECT_EQ(j.at("rows").size(), 9u);
  EXPECT_TRUE(j.contains("timings"));
  const auto csv = rep.to_csv();
  EXPECT_EQ(csv.rfind("csv_version,instance,property,", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
  EXPECT_NE(rep.to_markdown().find("instance-1"), std::string::npos);

  // Same seed, same content; worker count does not matter.
  SweepOptions p = o;
  p.parallelism = 3;
  EXPECT_EQ(strip_timings(run_sweep(parse_catalog(arr), p).to_json()), strip_timings(j));
}

TEST(Harness, SweepEmptyCatalog) {
  const auto rep = run_sweep({}, SweepOptions{});
  EXPECT_TRUE(rep.rows.empty());
  EXPECT_EQ(rep.disagreements(), 0u);
}

TEST(Cli, Validate) {
  TempDir dir;
  const auto lam = dir.write("lam.json", instance(R"({"p":5,"k":1})", kKlein, R"({"kind":"lambda_pairing","lambda":4})").dump());
  EXPECT_EQ(run_cli(dir, "validate --config " + lam.string()).code, 0);
  const auto triv = dir.write("triv.json", instance(R"({"p":5,"k":1})", R"({"kind":"quaternion8"})").dump());
  EXPECT_EQ(run_cli(dir, "validate --config " + triv.string()).code, 0);

  // Trivial table on C2 x C2 with rho((1,g),(g,1)) changed to 2.
  const auto bad = dir.write(
      "bad.json", instance(R"({"p":5,"k":1})", kKlein,
                           R"({"kind":"explicit","table":[[1,1,1,1],[1,1,2,1],[1,1,1,1],[1,1,1,1]]})")
                      .dump());
  const auto r = run_cli(dir, "validate --config " + bad.string() + " --out-dir " + (dir.path() / "v").string());
  EXPECT_EQ(r.code, 1);
  const auto report = Json::parse(slurp(dir.path() / "v" / "report.json"));
  EXPECT_EQ(report.at("valid"), false);
  EXPECT_FALSE(report.at("identity_violations").empty());

  EXPECT_EQ(run_cli(dir, "validate --config " + dir.write("junk.json", "{not json").string()).code, 2);
  EXPECT_EQ(run_cli(dir, "validate --config " + (dir.path() / "missing.json").string()).code, 2);
}

TEST(Cli, Decide) {
  TempDir dir;
  const auto k = dir.write("k.json", instance(R"({"p":5,"k":1})", kKlein).dump());
  auto r = run_cli(dir, "decide --config " + k.string() + " --property no_nilpotents");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("verdict"), true);

  const auto q7 = dir.write("q7.json", instance(R"({"p":7,"k":1})", R"({"kind":"quaternion8"})").dump());
  r = run_cli(dir, "decide --config " + q7.string() + " --property no_nilpotents");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(Json::parse(r.out).at("closure").at("suggested_degree"), 2);

  const auto c3 = dir.write("c3.json", instance(R"({"p":3,"k":1})", R"({"kind":"cyclic","params":[3]})").dump());
  r = run_cli(dir, "decide --config " + c3.string() + " --property xi_N");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("verdict"), true);

  EXPECT_EQ(run_cli(dir, "decide --config " + c3.string() + " --property bogus").code, 2);
  EXPECT_EQ(run_cli(dir, "decide --config " + c3.string() + " --property n_weak --n 1").code, 2);
}

TEST(Cli, Witness) {
  TempDir dir;
  const auto q5 = dir.write("q5.json", instance(R"({"p":5,"k":1})", R"({"kind":"quaternion8"})").dump());
  auto r = run_cli(dir, "witness --config " + q5.string() + " --kind quaternion");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("holds"), true);

  const auto c2 = dir.write("c2.json", instance(R"({"p":3,"k":1})", R"({"kind":"cyclic","params":[2]})").dump());
  r = run_cli(dir, "witness --config " + c2.string() + " --kind regularity --element \"1+g\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("expressions").at("b"), "2");

  const auto k = dir.write("k.json", instance(R"({"p":5,"k":1})", kKlein).dump());
  r = run_cli(dir, "witness --config " + k.string() + " --kind unit_commutation");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(Json::parse(r.out).at("kind"), "none_found");

  EXPECT_EQ(run_cli(dir, "witness --config " + c2.string() + " --kind regularity --element \"1+q\"").code, 2);
  EXPECT_EQ(run_cli(dir, "witness --config " + c2.string() + " --kind regularity").code, 2);
}

TEST(Cli, Sweep) {
  TempDir dir;
  const auto empty = dir.write("empty.json", "[]");
  auto r = run_cli(dir, "sweep --config " + empty.string() + " --out-dir " + (dir.path() / "e").string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(slurp(dir.path() / "e" / "report.json")).at("rows").empty());

  Json arr = Json::array({instance(R"({"p":7,"k":1})", R"({"kind":"quaternion8"})"),
                          instance(R"({"p":5,"k":1})", kKlein)});
  const auto cat = dir.write("cat.json", arr.dump());
  const std::string out1 = (dir.path() / "s1").string(), out2 = (dir.path() / "s2").string();
  r = run_cli(dir, "sweep --config " + cat.string() + " --seed 3 --out-dir " + out1);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("disagreements: 0"), std::string::npos);
  const auto j1 = Json::parse(slurp(fs::path(out1) / "report.json"));
  EXPECT_EQ(j1.at("rows")[0].at("status"), "not_admissible");
  EXPECT_TRUE(fs::exists(fs::path(out1) / "report.csv"));
  EXPECT_TRUE(fs::exists(fs::path(out1) / "report.md"));
  EXPECT_EQ(run_cli(dir, "sweep --config " + cat.string() + " --seed 3 --parallelism 2 --out-dir " + out2).code, 0);
  EXPECT_EQ(strip_timings(Json::parse(slurp(fs::path(out2) / "report.json"))), strip_timings(j1));
}

}  // namespace
}  // namespace tga
