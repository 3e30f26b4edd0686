#include "chaincert/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chaincert;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::filesystem::path> samples() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(CHAINCERT_SAMPLES)) {
    if (e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* kTriangle = R"({
  "ring": "Z",
  "complexes": {"t": {"simplexes": [["a", "b", "c"]]}},
  "morphisms": {"id": {"source": "t", "target": "t", "degree_cap": 1, "assignment": [
    {"simplex": ["a"], "chain": [["1", ["a"]]]},
    {"simplex": ["b"], "chain": [["1", ["b"]]]},
    {"simplex": ["c"], "chain": [["1", ["c"]]]},
    {"simplex": ["b", "a"], "chain": [["1", ["b", "a"]]]},
    {"simplex": ["a", "c"], "chain": [["-1", ["c", "a"]]]},
    {"simplex": ["b", "c"], "chain": [["1", ["b", "c"]]]}]}}
})";

std::string error_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ProblemFile, OrientationFollowsListedOrder) {
  auto p = parse_problem(kTriangle);
  const auto& id = p.morphism("id").morphism;
  EXPECT_EQ(id({"a", "b"}), Chain::elementary({"a", "b"}, p.ring));
  EXPECT_EQ(id({"a", "c"}), Chain::elementary({"a", "c"}, p.ring));
  EXPECT_TRUE(verify_chain_morphism(id).ok);
  EXPECT_EQ(p.complex("t")->size(), 7u);
}

TEST(ProblemFile, RoundTripIsIdentity) {
  auto p = parse_problem(kTriangle);
  const std::string once = serialize(p);
  const std::string twice = serialize(parse_problem(once));
  EXPECT_EQ(once, twice);
  EXPECT_EQ(parse_problem(once).morphism("id").morphism, p.morphism("id").morphism);
}

TEST(ProblemFile, SamplesRoundTrip) {
  auto files = samples();
  ASSERT_GE(files.size(), 10u);
  for (const auto& f : files) {
    auto p = load_problem(f.string());
    const std::string text = serialize(p);
    auto q = parse_problem(text);
    EXPECT_EQ(serialize(q), text) << f;
    EXPECT_EQ(q.complexes.size(), p.complexes.size());
    for (const auto& [name, c] : p.complexes) EXPECT_EQ(*q.complex(name), *c) << f << " " << name;
    for (const auto& [name, m] : p.morphisms) EXPECT_EQ(q.morphism(name).morphism, m.morphism);
  }
}

TEST(ProblemFile, GeneratedInstancesRoundTrip) {
  for (const auto& family : instance_families()) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto p = problem_from_instance(generate_instance(family, seed, Ring::integers()));
      const std::string text = serialize(p);
      EXPECT_EQ(serialize(parse_problem(text)), text) << family << " " << seed;
    }
  }
}

TEST(ProblemFile, RingOverrideRenormalizes) {
  auto p = parse_problem(kTriangle, Ring::integers_mod(2));
  EXPECT_EQ(p.ring, Ring::integers_mod(2));
  EXPECT_EQ(p.morphism("id").morphism({"a", "c"}).coefficient({"a", "c"}), Scalar(1));
}

TEST(ProblemFile, Diagnostics) {
  EXPECT_NE(error_of("{\"ring\": \"Z\",\n\n  \"complexes\": }").find("line 3"), std::string::npos);
  EXPECT_NE(error_of(R"({"ring": "Z", "extra": {}})").find("extra: unknown top-level key"), std::string::npos);
  EXPECT_NE(error_of(R"({"ring": "R"})").find("ring"), std::string::npos);
  EXPECT_NE(error_of(R"({"complexes": {}})").find("ring: missing"), std::string::npos);
  EXPECT_NE(error_of(R"({"ring": "Z", "complexes": {"k": {"vertices": ["a"], "simplexes": [["a", "b"]]}}})")
                .find("complexes.k"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ring": "Z", "complexes": {"k": {"simplexes": [["a"]]}},
                         "maps": {"f": {"source": "k", "target": "z", "vertices": {"a": "a"}}}})")
                .find("maps.f.target: unknown complex 'z'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ring": "Z", "complexes": {"k": {"simplexes": [["a", "b"]]}},
                         "morphisms": {"m": {"source": "k", "target": "k", "degree_cap": 0,
                           "assignment": [{"simplex": ["a"], "chain": [["x", ["a"]]]}]}}})")
                .find("morphisms.m.assignment[0].chain[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"ring": "Z", "complexes": {"k": {"simplexes": [["a", "b"]]}},
                         "morphisms": {"m": {"source": "k", "target": "k", "degree_cap": 0,
                           "assignment": [{"simplex": ["a"], "chain": [["1", ["a", "b"]]]}]}}})")
                .find("expected a 0-simplex"),
            std::string::npos);
  EXPECT_THROW(load_problem("/nonexistent/problem.json"), InputError);
}

TEST(Commands, SampleExitCodes) {
  const std::map<std::string, std::pair<std::string, int>> cases = {
      {"hollow_triangle.json", {"homology", 0}},    {"edge_triangle.json", {"extend-realization", 0}},
      {"missing_cell.json", {"extend-realization", 1}}, {"circle_in_disk.json", {"check-alcn", 0}},
      {"simplex_homotopy.json", {"build-homotopy", 0}}, {"circle_homotopy.json", {"build-homotopy", 1}},
      {"dugundji_path.json", {"dugundji-extend", 0}},   {"square_nerve.json", {"nerve-factorize", 0}},
      {"prism_lift.json", {"lift", 0}},                  {"uvn_instance.json", {"check-uvn", 0}}};
  for (const auto& [file, expect] : cases) {
    CommandOptions o;
    o.command = expect.first;
    auto out = run_command(o, slurp(std::filesystem::path(CHAINCERT_SAMPLES) / file));
    EXPECT_EQ(out.exit_code, expect.second) << file << "\n" << out.report;
    ASSERT_TRUE(out.certificate) << file;
    EXPECT_TRUE(verify_certificate(*out.certificate).empty()) << file;
  }
}

TEST(Commands, HomologyReport) {
  CommandOptions o;
  o.command = "homology";
  o.dim = 1;
  auto out = run_command(o, slurp(std::filesystem::path(CHAINCERT_SAMPLES) / "hollow_triangle.json"));
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_NE(out.report.find("H_1 = Z^1\n"), std::string::npos);
}

TEST(Commands, PairNeedsN) {
  CommandOptions o;
  o.command = "check-uvn";
  auto text = slurp(std::filesystem::path(CHAINCERT_SAMPLES) / "hollow_triangle.json");
  EXPECT_EQ(run_command(o, text).exit_code, exit_bad_input);
  o.n = 1;
  auto out = run_command(o, text);
  EXPECT_EQ(out.exit_code, exit_false);
  EXPECT_NE(out.report.find("witness"), std::string::npos);
}

TEST(Commands, PreconditionsExitTwo) {
  CommandOptions o;
  o.command = "dugundji-extend";
  auto text = slurp(std::filesystem::path(CHAINCERT_SAMPLES) / "dugundji_path.json");
  auto doc = Json::parse(text);
  doc["command_args"]["dugundji-extend"]["a"] = Json::array();
  auto out = run_command(o, doc.dump());
  EXPECT_EQ(out.exit_code, exit_bad_input);
  EXPECT_NE(out.report.find("precondition"), std::string::npos);
}

TEST(Commands, TamperedCertificatesAreRejected) {
  CommandOptions o;
  o.command = "extend-realization";
  auto out = run_command(o, slurp(std::filesystem::path(CHAINCERT_SAMPLES) / "uvn_instance.json"));
  ASSERT_EQ(out.exit_code, 0);
  Json cert = *out.certificate;
  auto& fills = cert["result"]["extension"]["cover_assignment"];
  ASSERT_FALSE(fills.empty());
  fills.back()["member"] = "m00";
  Json changed_phi = *out.certificate;
  for (auto& entry : changed_phi["result"]["extension"]["phi"]["assignment"]) {
    if (entry["simplex"].size() == 2 && !entry["chain"].empty()) {
      entry["chain"][0][0] = "5";
      break;
    }
  }
  Json wrong_ring = *out.certificate;
  wrong_ring["ring"] = "Q";
  EXPECT_FALSE(verify_certificate(cert).empty());
  EXPECT_FALSE(verify_certificate(changed_phi).empty());
  EXPECT_THROW(verify_certificate(wrong_ring), InputError);
  EXPECT_THROW(verify_certificate(Json::object()), InputError);
}

TEST(Commands, DeterministicOutput) {
  for (const auto& f : samples()) {
    auto p = load_problem(f.string());
    for (const auto& [command, args] : p.command_args.items()) {
      CommandOptions o;
      o.command = command;
      if (command == "check-uvn" && !args.contains("map") && !args.contains("n")) o.n = 1;
      auto a = run_command(o, slurp(f));
      auto b = run_command(o, slurp(f));
      EXPECT_EQ(a.report, b.report) << f << " " << command;
      ASSERT_EQ(a.certificate.has_value(), b.certificate.has_value());
      if (a.certificate) {
        EXPECT_EQ(certificate_text(*a.certificate), certificate_text(*b.certificate));
        EXPECT_TRUE(verify_certificate(*a.certificate).empty()) << f << " " << command;
      }
    }
  }
}

TEST(Commands, GeneratedInstancesCertify) {
  for (const auto& family : instance_families()) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      CommandOptions g;
      g.command = "gen-instance";
      g.family = family;
      g.seed = seed;
      auto problem = run_command(g, "");
      ASSERT_EQ(problem.exit_code, 0);
      for (const auto& command : {"extend-realization", "check-uvn"}) {
        CommandOptions o;
        o.command = command;
        auto out = run_command(o, problem.report);
        ASSERT_TRUE(out.certificate) << family << seed << command << out.report;
        EXPECT_TRUE(verify_certificate(*out.certificate).empty()) << family << " " << seed << " " << command;
        if (std::string(command) == "extend-realization") {
          EXPECT_EQ(out.exit_code, family.rfind("obstruction", 0) == 0 ? 1 : 0) << family << seed;
        }
      }
    }
  }
}

TEST(Commands, UnknownCommand) {
  CommandOptions o;
  o.command = "triangulate";
  EXPECT_EQ(run_command(o, "{}").exit_code, exit_bad_input);
  o.command = "verify-certificate";
  EXPECT_EQ(run_command(o, "not json").exit_code, exit_bad_input);
}
