#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "specsum/cli/commands.hpp"
#include "specsum/cli/config.hpp"
#include "specsum/cli/manifest.hpp"

using namespace specsum;
using namespace specsum::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(SPECSUM_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("specsum_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

class SeedEnv {
 public:
  explicit SeedEnv(const char* value) { ::setenv("SPECSUM_SEED", value, 1); }
  ~SeedEnv() { ::unsetenv("SPECSUM_SEED"); }
};

}  // namespace

TEST_CASE("config round trip is idempotent") {
  for (const char* name : {"multipoint.json", "diagonal_linear.json", "shift_diagonal.json", "reciprocal_scalars.json",
                           "pi_family.json", "random_blocks.json", "multipoint_diagonal.json", "ode_family.json",
                           "square_diagonal.json"}) {
    const FamilyConfig first = load_config(data(name));
    const std::string once = serialize_config(first);
    const std::string twice = serialize_config(parse_config(once));
    CHECK(once == twice);
  }
  const std::string rich = R"({
    "operators": [
      {"kind": "matrix", "entries": [[1, [0, 2]], [0.1, 3]]},
      {"kind": "diagonal", "rule": {"type": "explicit", "values": [1, [2, -1]]}},
      {"kind": "declared", "point": [[1, 1]], "continuous": [[0, 0]], "norm": 2, "compact": false},
      {"kind": "ode", "s": 2, "a": 0, "b": 2, "theta": 0.5},
      {"kind": "multipoint", "a": -1, "b": 1, "amplitude": [0, 1]}
    ],
    "tail": {"kind": "diagonal", "k0": 1, "ratio": 3, "alpha": 2, "beta": 0.25,
             "limits": {"operator_norm": "infinity", "resolvent_norm": {"bounded_by": 0.5}}},
    "tolerance": {"eps_membership": 1e-10},
    "defaults": {"lambda": [-2, 0.5], "fit_range": [3, 40], "counting_grid": {"start": 2, "ratio": 3, "count": 4}},
    "seed": 12345678901234
  })";
  const std::string once = serialize_config(parse_config(rich));
  CHECK(once == serialize_config(parse_config(once)));
  CHECK(parse_config(once).seed == 12345678901234ULL);
}

TEST_CASE("config errors name the field path") {
  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"operators": [{"kind": "shift"}, {"kind": "laplacian"}]})").rfind("operators[1].kind", 0) == 0);
  CHECK(message(R"({"operators": [{"kind": "diagonal", "rule": {"type": "power", "k": 1, "alpha": -1}}]})")
            .rfind("operators[0]", 0) == 0);
  CHECK(message(R"({"operators": [{"kind": "multipoint", "a": 0}]})").rfind("operators[0].b", 0) == 0);
  CHECK(message(R"({"operators": [{"kind": "shift", "radius": 2}]})").rfind("operators[0].radius", 0) == 0);
  CHECK(message(R"({"operators": [{"kind": "matrix", "entries": [[1, 2]]}]})").rfind("operators[0].entries", 0) == 0);
  CHECK(message(R"({"operators": [{"kind": "shift"}], "defaults": {"blocks": 0}})").rfind("defaults.blocks", 0) == 0);
  CHECK(message(R"({"tail": {"kind": "scalar", "k": 1, "p": 1, "limits": {"operator_norm": "tiny"}}})")
            .rfind("tail.limits.operator_norm", 0) == 0);
  CHECK(message(R"({"operators": []})").rfind("operators", 0) == 0);
  CHECK(message("{not json").rfind("<root>", 0) == 0);
  CHECK(message(R"({"operators": [{"kind": "shift"}], "speed": 3})").rfind("speed", 0) == 0);
  CHECK(message(R"({"operators": [{"kind": "diagonal", "rule": {"type": "power", "k": 1, "alpha": 1}},
                                   {"kind": "diagonal", "rule": {"type": "power", "k": 2, "alpha": 1}}],
                    "assert_disjoint": true})")
            .rfind("assert_disjoint", 0) == 0);
}

TEST_CASE("classify verdict lines") {
  const auto point = run({"classify", data("multipoint.json"), "--point", "0,6.283185307"});
  CHECK(point.code == kExitOk);
  CHECK(point.out.rfind("PointSpectrum (witness 1)\n", 0) == 0);

  const auto resolvent = run({"classify", data("diagonal_linear.json"), "--point", "2.5,0"});
  CHECK(resolvent.code == kExitOk);
  CHECK(resolvent.out.rfind("Resolvent, sup=2.0\n", 0) == 0);

  const auto residual = run({"classify", data("shift_diagonal.json"), "--point", "0,0"});
  CHECK(residual.code == kExitOk);
  CHECK(residual.out.rfind("ResidualSpectrum", 0) == 0);

  const auto continuous = run({"classify", data("reciprocal_scalars.json"), "--point", "0,0"});
  CHECK(continuous.out.rfind("ContinuousSpectrum, sup=inf\n", 0) == 0);
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(run({"classify", data("bad_kind.json"), "--point", "0,0"}).code == kExitConfigError);
  CHECK(run({"classify", data("bad_kind.json"), "--point", "0,0"}).err.find("operators[1].kind") != std::string::npos);
  CHECK(run({"classify", data("no_such_file.json"), "--point", "0,0"}).code == kExitConfigError);
  CHECK(run({"classify", data("multipoint.json")}).code == kExitConfigError);
  CHECK(run({"classify", data("multipoint.json"), "--point", "nan,0"}).code == kExitConfigError);
  CHECK(run({"frobnicate"}).code == kExitConfigError);
  CHECK(run({"scan", data("multipoint.json"), "--region", "1,0,0,1", "--grid", "2,2"}).code == kExitConfigError);

  CHECK(run({"counting", data("shift_diagonal.json")}).code == kExitUnsupported);
  CHECK(run({"verify", data("shift_diagonal.json"), "--suite", "union", "--blocks", "2"}).code == kExitUnsupported);
  CHECK(run({"fit", data("shift_diagonal.json")}).code == kExitUnsupported);

  const std::string unknown = dir.write(
      "unknown.json",
      R"({"tail": {"kind": "scalar", "k": 1, "p": 1, "prefix_count": 1,
                   "limits": {"operator_norm": "unknown", "resolvent_norm": "unknown", "first_eigenvalue": "unknown"}}})");
  CHECK(run({"classify", unknown, "--point", "0.5,0.5"}).code == kExitInconclusive);
  CHECK(run({"scan", unknown, "--region", "0,1,0,1", "--grid", "2,2"}).code == kExitInconclusive);
  CHECK(run({"counting", unknown}).code == kExitInconclusive);

  // Condition number near 1e15: the inverse cannot reproduce the identity to 1e-8.
  const std::string fragile = data("ill_conditioned.json");
  CHECK(run({"verify", fragile, "--suite", "resolvent", "--blocks", "1", "--size", "6", "--point", "0,0"}).code ==
        kExitVerifyFailed);
  CHECK(run({"verify", fragile, "--suite", "norm", "--blocks", "1", "--size", "6"}).code == kExitOk);

  CHECK(run({"scan", data("multipoint.json"), "--region", "0,1,0,1", "--grid", "2,2", "--out",
             "/nonexistent/dir/x.csv"})
            .code == kExitIoError);
}

TEST_CASE("one-node scan reproduces classify") {
  TempDir dir;
  for (const auto& [config, point] : std::vector<std::pair<std::string, std::string>>{
           {"multipoint.json", "0,6.283185307179586"}, {"shift_diagonal.json", "1,0"},
           {"diagonal_linear.json", "2.5,0"}, {"reciprocal_scalars.json", "0,0"}}) {
    const std::string c = (dir / "classify.csv").string();
    const std::string s = (dir / "scan.csv").string();
    const auto comma = point.find(',');
    const std::string re = point.substr(0, comma), im = point.substr(comma + 1);
    REQUIRE(run({"classify", data(config), "--point", point, "--out", c}).code == kExitOk);
    REQUIRE(run({"scan", data(config), "--region", re + "," + re + "," + im + "," + im, "--grid", "1,1", "--out", s})
                .code == kExitOk);
    const auto cl = lines(slurp(c));
    const auto sl = lines(slurp(s));
    REQUIRE(cl.size() == 3);
    REQUIRE(sl.size() == 3);
    CHECK(cl[1] == sl[1]);
    CHECK(cl[2] == sl[2]);
  }
}

TEST_CASE("scan output is byte-identical across runs and thread counts") {
  TempDir dir;
  const std::vector<std::string> base{"scan", data("multipoint.json"), "--region=-1,8,-8,8", "--grid", "21,21"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  };
  REQUIRE(run(with({"--out", (dir / "a.csv").string()})).code == kExitOk);
  REQUIRE(run(with({"--out", (dir / "b.csv").string()})).code == kExitOk);
  REQUIRE(run(with({"--out", (dir / "c.csv").string(), "--threads", "4"})).code == kExitOk);
  const std::string a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a == slurp(dir / "c.csv"));

  const auto rows = lines(a);
  REQUIRE(rows.size() == 2 + 21 * 21);
  CHECK(rows[0].rfind("# manifest ", 0) == 0);
  CHECK(rows[0].size() == std::string("# manifest ").size() + 16);
  CHECK(rows[1] == "re,im,class,witness,resolvent_sup");
  // No node has re = 0, so the lattice 2 pi k i is missed and every node is a resolvent point.
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].find(",Resolvent,,") != std::string::npos);

  const std::string sidecar = slurp(dir / "a.csv.manifest.json");
  CHECK(sidecar.find("\"wall_clock\"") != std::string::npos);
  CHECK(sidecar.find(rows[0].substr(11)) != std::string::npos);

  const auto printed = run(base);
  CHECK(printed.code == kExitOk);
  CHECK(printed.out == a);
}

TEST_CASE("counting grids") {
  const auto geometric = run({"counting", data("square_diagonal.json"), "--lambda-grid", "1,10,3"});
  REQUIRE(geometric.code == kExitOk);
  auto rows = lines(geometric.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[1] == "lambda,count,overlap_flag");
  CHECK(rows[2] == "1,1,false");
  CHECK(rows[3] == "10,3,false");
  CHECK(rows[4] == "100,10,false");

  const auto listed = run({"counting", data("square_diagonal.json"), "--lambda-grid", "list:0,100"});
  REQUIRE(listed.code == kExitOk);
  rows = lines(listed.out);
  CHECK(rows[2] == "0,0,false");

  TempDir dir;
  const std::string two = dir.write("two.json", R"({"operators": [
      {"kind": "diagonal", "rule": {"type": "power", "k": 3.141592653589793, "alpha": 2}},
      {"kind": "diagonal", "rule": {"type": "power", "k": 9.869604401089358, "alpha": 2}}]})");
  rows = lines(run({"counting", two, "--lambda-grid", "list:40"}).out);
  CHECK(rows[2] == "40,5,false");

  const std::string same = dir.write("same.json", R"({"operators": [
      {"kind": "matrix", "entries": [[1]]}, {"kind": "matrix", "entries": [[1]]}]})");
  const auto overlap = run({"counting", same, "--lambda-grid", "list:1"});
  CHECK(overlap.code == kExitOk);
  CHECK(lines(overlap.out)[2] == "1,2,true");
  CHECK(overlap.err.find("overlap") != std::string::npos);

  CHECK(run({"counting", data("square_diagonal.json"), "--lambda-grid", "list:10,1"}).code == kExitConfigError);
  CHECK(run({"counting", data("square_diagonal.json"), "--lambda-grid", "geom:1,0.5,3"}).code == kExitConfigError);
}

TEST_CASE("fit command") {
  TempDir dir;
  const auto fit = run({"fit", data("pi_family.json"), "--out", (dir / "fit.csv").string()});
  REQUIRE(fit.code == kExitOk);
  CHECK(fit.out.find("alpha_hat=1.97") != std::string::npos);
  CHECK(fit.out.find("fit_range=101..200") != std::string::npos);
  const auto rows = lines(slurp(dir / "fit.csv"));
  REQUIRE(rows.size() == 202);
  CHECK(rows[1] == "n,lambda_n,fitted");
  CHECK(rows[2].rfind("1,3.1415926535897931,", 0) == 0);

  const auto full = run({"fit", data("pi_family.json"), "--range", "1,200"});
  CHECK(full.out.find("holds") != std::string::npos);

  const std::string exact = dir.write("exact.json", R"({"operators": [
      {"kind": "diagonal", "rule": {"type": "power", "k": 3, "alpha": 2}}]})");
  const auto e = run({"fit", exact, "--count", "50"});
  CHECK(e.out.rfind("gamma_hat=3.0 alpha_hat=2.0 ", 0) == 0);
  CHECK(run({"fit", exact, "--count", "5"}).code == kExitConfigError);
}

TEST_CASE("verify command") {
  const auto norm = run({"verify", data("random_blocks.json"), "--suite", "norm"});
  CHECK(norm.code == kExitOk);
  CHECK(norm.out.rfind("PASS norm", 0) == 0);
  CHECK(run({"verify", data("multipoint_diagonal.json"), "--suite", "union", "--blocks", "2", "--size", "21"}).code ==
        kExitOk);
  CHECK(run({"verify", data("ode_family.json"), "--suite", "resolvent"}).code == kExitOk);
  CHECK(run({"verify", data("ode_family.json")}).code == kExitOk);
  CHECK(run({"verify", data("random_blocks.json"), "--blocks", "6"}).code == kExitConfigError);
  CHECK(run({"verify", data("random_blocks.json"), "--suite", "bogus"}).code == kExitConfigError);
}

TEST_CASE("seed override changes random families and the manifest") {
  TempDir dir;
  REQUIRE(run({"verify", data("random_blocks.json"), "--suite", "norm", "--out", (dir / "a.csv").string()}).code == kExitOk);
  {
    SeedEnv env("11");
    REQUIRE(run({"verify", data("random_blocks.json"), "--suite", "norm", "--out", (dir / "b.csv").string()}).code ==
            kExitOk);
  }
  const auto a = lines(slurp(dir / "a.csv"));
  const auto b = lines(slurp(dir / "b.csv"));
  CHECK(a[0] != b[0]);
  CHECK(a[2].substr(a[2].rfind(',') + 1) == "7");
  CHECK(b[2].substr(b[2].rfind(',') + 1) == "11");
  CHECK(a[2] != b[2]);

  SeedEnv bad("seven");
  CHECK(run({"verify", data("random_blocks.json"), "--suite", "norm"}).code == kExitConfigError);
}

TEST_CASE("manifest ids") {
  RunManifest m{"scan", {"grid=2,2"}, sha256_hex("config"), 3, {"a.csv"}, "1.0.0", "2026-01-01T00:00:00Z"};
  RunManifest moved = m;
  moved.outputs = {"elsewhere/b.csv"};
  moved.wall_clock = "2027-01-01T00:00:00Z";
  CHECK(m.id() == moved.id());
  RunManifest reseeded = m;
  reseeded.seed = 4;
  CHECK(m.id() != reseeded.id());
  RunManifest other = m;
  other.arguments = {"grid=3,3"};
  CHECK(m.id() != other.id());
  CHECK(m.id().size() == 16);

  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(resolve_seed(9) == 9);
}
