#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "belyi/params.hpp"

namespace belyi {

struct VerifyOptions {
  Integer max_n = 11;
  /// Random words per (n, k) for the coset invariance fuzz.
  Integer fuzz_words = 1000;
  /// Fuzz, the exhaustive shift law and the rho/E compatibility run for n up to this bound.
  Integer modsym_max_n = 31;
  /// Family-formula checks for the T-coefficients run for n up to this bound.
  Integer corollary_max_n = 31;
  unsigned threads = 0;  ///< 0 picks the hardware concurrency
  std::uint64_t seed = 0x5eed5eedULL;
};

struct PropertyFailure {
  Integer n;
  Integer k;
  std::string property;
  std::string detail;
};

struct PairResult {
  Integer n;
  Integer k;
  std::vector<std::string> passed;
  std::optional<PropertyFailure> failure;
  std::set<std::string> operations;
  /// Family clauses that applied to this pair and matched.
  std::vector<std::string> corollary_clauses;
  Integer fuzzed_words = 0;
};

struct VerifyReport {
  std::vector<PairResult> pairs;
  /// Sign s with substitute(Delta_{5,(3,1,1)}, 3) = s * Delta_{5,2} (0 if neither).
  Integer substitution_sign = 0;
  std::set<std::string> operations;
  std::map<std::string, Integer> corollary_counts;

  bool ok() const;
  std::optional<PropertyFailure> first_failure() const;
};

/// The public operations a full sweep must touch.
const std::vector<std::string>& library_operations();

/// Property names checked for every pair, in evaluation order.
const std::vector<std::string>& pair_properties();

/// Cross-verifies every valid (n, k) with 3 <= n <= max_n. Throws RangeError if
/// max_n < 3.
VerifyReport run_verify(const VerifyOptions& options);

/// Checks one pair; used by run_verify and directly by tests.
PairResult verify_pair(const CurveParams& p, const VerifyOptions& options);

/// A closed form for the T-coefficients stated for a family of k.
struct CorollaryClause {
  std::string name;
  std::vector<Integer> coefficients;  ///< t_1 .. t_{(n-1)/2}
};

/// Every family clause that applies to (n, k): k = 1, 2, n-2, n-3, (n-1)/2,
/// (n-3)/2, (n-2)/3 with n = 2 mod 3, (2n-2)/3 with n = 1 mod 3.
std::vector<CorollaryClause> corollary_clauses(const CurveParams& p);

/// Sign of the substitution example: the literal Delta_{5,(3,1,1)} relabeled by
/// i -> 3i compared against Delta_{5,2}.
Integer substitution_remark_sign();

}  // namespace belyi
