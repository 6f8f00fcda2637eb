#include <numeric>
#include <set>
#include <sstream>

#include "belyi/verify.hpp"
#include "commands.hpp"
#include "doctest.h"

using namespace belyi;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string drop_elapsed(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string kept;
  while (std::getline(in, line)) {
    if (line.rfind("elapsed:", 0) != 0) kept += line + "\n";
  }
  return kept;
}

}  // namespace

TEST_CASE("delta golden outputs") {
  CHECK(call({"delta", "5", "1"}).out ==
        "-[E_1]^[E_2] + [E_1]^[E_3] - [E_1]^[E_4] - [E_2]^[E_3] + [E_2]^[E_4] - [E_3]^[E_4]\n");
  CHECK(call({"delta", "5", "2", "--format", "latex"}).out ==
        "-[E_1]\\wedge[E_3]+[E_1]\\wedge[E_4]-[E_2]\\wedge[E_4]\n");
  CHECK(call({"delta", "11", "6", "--basis", "t"}).out == "-T_1 + T_3 - T_4\n");
  CHECK(call({"delta", "11", "7", "--basis", "t"}).out == "-T_1 + T_2 - T_3 + T_5\n");
  CHECK(call({"delta", "5", "1", "--basis", "t", "--format", "latex"}).out == "-T_1+T_2\n");
  CHECK(call({"delta", "11", "6", "--basis", "t", "--format", "json"}).out ==
        R"({"basis":"T","c":8,"k":6,"n":11,"object":"delta","terms":[{"coeff":-1,"r":1},{"coeff":1,"r":3},{"coeff":-1,"r":4}]})"
        "\n");
}

TEST_CASE("other command golden outputs") {
  CHECK(call({"validate", "11", "6"}).out == "n = 11, k = 6, c = 8, genus = 5, inertia = (1, 6, 4)\n");
  CHECK(call({"word", "5", "1"}).out == "E_1·E_4·E_3^-1·E_2·E_1^-1·E_4^-1·E_3·E_2^-1\n");
  CHECK(call({"word", "5", "2"}).out == "E_1·E_3·E_2^-1·E_4^-1·E_2·E_1^-1·E_4·E_3^-1\n");
  CHECK(call({"word", "5", "1", "--placeholders"}).out ==
        "E_1·E_0^-1·E_4·E_3^-1·E_2·E_1^-1·E_0·E_4^-1·E_3·E_2^-1\n");
  CHECK(call({"between", "5", "1", "1"}).out == "E_0·E_4^-1·E_3·E_2^-1\n");
  CHECK(call({"fermat-image", "5", "2", "1", "1"}).out == "[E_1] + [E_2] - [E_3]\n");
  CHECK(call({"subst", "5", "2", "3"}).out == "-[E_1]^[E_2] - [E_2]^[E_3] - [E_3]^[E_4]\n");

  const std::string sheets = call({"sheets", "5", "1"}).out;
  CHECK(sheets.find("alpha: 0 -> 3\n") != std::string::npos);
  CHECK(sheets.find("tau: 0 -> 4\n") != std::string::npos);

  const Result modsym = call({"modsym", "5", "2", "--check"});
  CHECK(modsym.code == cli::kOk);
  CHECK(modsym.out.find("[A^2] = [A^1 tau] - [A^4 tau]\n") != std::string::npos);
  CHECK(modsym.out.find("rho_3 -> [E_3]\n") != std::string::npos);
  CHECK(modsym.out.find("FAIL") == std::string::npos);
  for (const std::string& prop : pair_properties()) {
    CHECK(modsym.out.find("pass " + prop + "\n") != std::string::npos);
  }
}

TEST_CASE("json output round-trips byte for byte") {
  for (const CurveParams& p : valid_pairs(31)) {
    for (const char* basis : {"e", "t"}) {
      const std::string text =
          call({"delta", std::to_string(p.n()), std::to_string(p.k()), "--basis", basis, "--format", "json"}).out;
      const nlohmann::json doc = nlohmann::json::parse(text);
      CHECK(doc.dump() + "\n" == text);
      CHECK(doc["n"] == p.n());
      CHECK(doc["k"] == p.k());
      CHECK(doc["c"] == p.c());
    }
  }
}

TEST_CASE("json terms reproduce Delta") {
  const CurveParams p = validate(13, 4);
  const nlohmann::json doc = cli::delta_document(p, closed_form_delta(p));
  WedgeClass back(13);
  for (const auto& t : doc["terms"]) back.add(t["i"], t["j"], t["coeff"]);
  CHECK(back == closed_form_delta(p));

  const nlohmann::json tdoc = cli::delta_document(p, t_decomposition(p));
  TDecomposition t{13, std::vector<Integer>(6, 0)};
  for (const auto& term : tdoc["terms"]) t.coefficients[term["r"].get<std::size_t>() - 1] = term["coeff"];
  CHECK(t == t_decomposition(p));
}

TEST_CASE("invalid input exits 2") {
  const Result ram = call({"delta", "6", "1"});
  CHECK(ram.code == cli::kInvalidInput);
  CHECK(ram.out.empty());
  CHECK(ram.err.find("gcd") != std::string::npos);

  CHECK(call({"delta", "5", "4"}).code == cli::kInvalidInput);
  CHECK(call({"delta", "5"}).code == cli::kInvalidInput);
  CHECK(call({"delta", "5", "x"}).code == cli::kInvalidInput);
  CHECK(call({"delta", "5", "1", "--basis", "q"}).code == cli::kInvalidInput);
  CHECK(call({"frobnicate"}).code == cli::kInvalidInput);
  CHECK(call({"between", "5", "1", "one"}).code == cli::kInvalidInput);
  CHECK(call({"subst", "15", "1", "3"}).code == cli::kInvalidInput);
  CHECK(call({"verify", "--max-n", "2"}).code == cli::kInvalidInput);
  CHECK(call({"--help"}).code == cli::kOk);
}

TEST_CASE("outputs are deterministic") {
  CHECK(call({"delta", "31", "9", "--format", "json"}).out == call({"delta", "31", "9", "--format", "json"}).out);
  const std::vector<std::string> args{"verify", "--max-n", "13", "--fuzz-words", "50", "--threads", "1"};
  const std::vector<std::string> threaded{"verify", "--max-n", "13", "--fuzz-words", "50", "--threads", "4"};
  const Result a = call(args);
  const Result b = call(threaded);
  CHECK(a.code == cli::kOk);
  CHECK(drop_elapsed(a.out) == drop_elapsed(b.out));
}

TEST_CASE("verify covers every pair and every operation") {
  Integer expected_pairs = 0;
  for (Integer n = 3; n <= 11; ++n)
    for (Integer k = 1; k <= n - 2; ++k)
      if (std::gcd(n, k * (k + 1)) == 1) ++expected_pairs;
  CHECK(expected_pairs == 21);

  VerifyOptions options;
  options.max_n = 11;
  options.fuzz_words = 100;
  const VerifyReport report = run_verify(options);
  CHECK(report.ok());
  CHECK(!report.first_failure());
  CHECK(static_cast<Integer>(report.pairs.size()) == expected_pairs);
  CHECK(report.substitution_sign == -1);
  const std::set<std::string> all(library_operations().begin(), library_operations().end());
  CHECK(report.operations == all);

  const Result r = call({"verify", "--max-n", "11", "--fuzz-words", "100"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("21 (n,k) pairs checked") != std::string::npos);

  options.max_n = 2;
  CHECK_THROWS_AS(run_verify(options), RangeError);
}

TEST_CASE("corollary clauses are reported") {
  const auto clauses = corollary_clauses(validate(11, 1));
  CHECK(!clauses.empty());
  for (const CorollaryClause& c : clauses) CHECK(c.coefficients == t_decomposition(validate(11, 1)).coefficients);
  CHECK(substitution_remark_sign() == -1);
}
