#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "domroots/cli.hpp"
#include "domroots/density.hpp"
#include "domroots/io.hpp"

using namespace domroots;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "domroots");
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  const int code = run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poly") {
  CHECK(run({"poly", "--graph6", "A_"}).out == "x^2 + 2x\n");
  CHECK(run({"poly", "--family", "complete:3"}).out == "x^3 + 3x^2 + 3x\n");
  // x(x+1)^3 + x^3, confirmed by the brute-force cross-check in auto mode
  CHECK(run({"poly", "--family", "star:3"}).out == "x^4 + 4x^3 + 3x^2 + x\n");
  CHECK(run({"poly", "--family", "kbip:2,2", "--method", "brute"}).out == "x^4 + 4x^3 + 6x^2\n");
  CHECK(run({"poly", "--family", "kkk:2", "--method", "inex"}).out == "x^4 + 4x^3 + 6x^2\n");
  CHECK(run({"poly", "--family", "k2l:2"}).out == "x^4 + 4x^3 + 6x^2\n");
  CHECK(run({"poly", "--graph6", "A_", "--format", "json"}).out == "{\"coeffs\":[\"0\",\"2\",\"1\"],\"n\":2}\n");
  CHECK(run({"poly", "--graph6", "A_", "--format", "csv"}).out == "k,coeff\n0,0\n1,2\n2,1\n");
  // closed form beyond the vertex cap
  const Run big = run({"poly", "--family", "star:100", "--format", "json"});
  CHECK(big.code == 0);
  CHECK(poly_from_json(Json::parse(big.out)) == dom_poly_closed_form({ClosedFormKind::kStar, 100}));
}

TEST_CASE("poly errors") {
  const Run bad = run({"poly", "--graph6", "A"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("byte") != std::string::npos);
  CHECK(run({"poly", "--family", "wheel:5"}).code == kExitUsage);
  CHECK(run({"poly", "--family", "star:x"}).code == kExitUsage);
  CHECK(run({"poly"}).code == kExitUsage);
  CHECK(run({"poly", "--graph6", "A_", "--family", "star:1"}).code == kExitUsage);
  CHECK(run({"poly", "--family", "complete:30", "--method", "brute"}).code == kExitCapacity);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("roots") {
  const Run r = run({"roots", "--family", "star:2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-2.618033989") != std::string::npos);
  CHECK(r.out.find("-0.381966011") != std::string::npos);
  CHECK(r.out.find("0.000000000  [0.000000000000, 0.000000000000]  exact") != std::string::npos);

  const Run k2 = run({"roots", "--graph6", "A_", "--format", "json"});
  const Json j = Json::parse(k2.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["lo"] == "-2/1");
  CHECK(j[0]["multiplicity_note"] == "exact");
  CHECK(j[1]["lo"] == "0/1");

  const Run k5 = run({"roots", "--family", "complete:5", "--format", "csv"});
  CHECK(k5.out == "root_lo,root_hi,sign_lo,sign_hi,certification\n0.000000000000,0.000000000000,0,0,exact\n");

  CHECK(run({"roots", "--graph6", "A_", "--lo", "-3/2", "--hi", "-1"}).out.empty());
  CHECK(run({"roots", "--graph6", "A_", "--tol", "0"}).code == kExitUsage);
}

TEST_CASE("compose") {
  CHECK(run({"compose", "--graph6", "A_", "-m", "2"}).out == "x^4 + 4x^3 + 6x^2 + 4x\n");
  CHECK(run({"compose", "--graph6", "A_", "-m", "0"}).code == kExitUsage);
}

TEST_CASE("witness and verify") {
  const Run w = run({"witness", "-z", "-1.5", "-e", "0.05"});
  REQUIRE(w.code == 0);
  const Json j = Json::parse(w.out);
  CHECK(j["case_tag"] == "case-1.1");
  CHECK(j["verification"]["all_passed"] == true);

  const Run v = run({"verify", "--cert", "-"}, w.out);
  CHECK(v.code == 0);
  CHECK(v.out.find("certificate verified") != std::string::npos);

  Json tampered = j;
  tampered["m"] = 2;
  const Run t = run({"verify", "--cert", "-"}, tampered.dump());
  CHECK(t.code == kExitInvariant);
  CHECK(t.out.find("FAIL parity-m") != std::string::npos);

  CHECK(run({"verify", "--cert", "-"}, "{not json").code == kExitUsage);

  const Run zero = run({"witness", "-z", "0", "-e", "0.1"});
  CHECK(Json::parse(zero.out)["family"]["tag"] == "exact_K2");
  CHECK(run({"witness", "-z", "1", "-e", "0.1"}).code == kExitUsage);
  CHECK(run({"witness", "-z", "-3/2", "-e", "1/20", "--format", "plain"}).out.find("verified yes") !=
        std::string::npos);
  const Run budget = run({"witness", "-z", "-10", "-e", "0.01", "--max-m", "3", "--max-param", "5"});
  CHECK(budget.code == kExitCapacity);
  CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("atlas") {
  const Run a = run({"atlas", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("graph6,n,root_lo,root_hi\n", 0) == 0);
  CHECK(run({"atlas", "3", "--serial"}).out == a.out);
  CHECK(run({"atlas", "3", "--workers", "2"}).out == a.out);
  CHECK(run({"atlas", "8"}).code == kExitCapacity);
  CHECK(run({"atlas", "3", "--mode", "dedup"}).code == 0);
  CHECK(run({"atlas", "3", "--mode", "corpus_file"}).code == kExitUsage);
  CHECK(run({"atlas", "3", "--mode", "bogus"}).code == kExitUsage);
  CHECK(run({"atlas", "3", "--workers", "0"}).code == kExitUsage);
}

TEST_CASE("table, growth, star-roots") {
  const Run t = run({"table", "4"});
  CHECK(t.out.find("3,-2.6180339") != std::string::npos);
  CHECK(t.err.find("typo") != std::string::npos);

  const Run s = run({"star-roots", "8"});
  const auto last = s.out.substr(s.out.rfind("\n8,") + 1);
  CHECK(last.rfind("8,5.30933006", 0) == 0);

  const Run g = run({"growth", "9"});
  CHECK(g.out.find("9,5.309330065") != std::string::npos);
  CHECK(run({"growth", "2"}).code == kExitUsage);
}
