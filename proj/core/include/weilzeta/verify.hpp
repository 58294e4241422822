#pragma once

// Exhaustive scans of the representability propositions for x^2 + y^2,
// x^2 + 2y^2, x^2 + 3y^2, the S-part corollaries on P_f, and the
// class-number / genus facts at small discriminants.

#include "weilzeta/arith.hpp"
#include "weilzeta/primesets.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weilzeta {

inline constexpr std::size_t kMaxCounterexamples = 100;

struct Counterexample {
  i64 input = 0;
  std::string expected;
  std::string found;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string claim_id;
  i64 range_lo = 0;
  i64 range_hi = 0;
  /// Inputs in range satisfying the claim's hypothesis.
  u64 checked_count = 0;
  /// All inputs visited, hypothesis or not.
  u64 scanned_count = 0;
  /// Sorted by input, at most kMaxCounterexamples.
  std::vector<Counterexample> counterexamples;
  /// Informational statistics; never part of the pass/fail decision.
  std::map<std::string, u64> info;
  bool passed = false;
};

/// Allowed factorization shape: v_2(n) <= max_v2, v_3(n) <= *max_v3 when set,
/// and every other prime factor satisfies `allowed`.
struct ShapeRule {
  unsigned max_v2 = 0;
  std::optional<unsigned> max_v3;
  std::function<bool(u64)> allowed;
  std::string description;

  bool matches(const Factorization& f) const;
};

/// Scans n in [1, limit]: coprime-representable by f implies the shape, and
/// the converse too when `biconditional`. One-directional scans record the
/// converse as informational statistics only.
VerificationReport verify_representation_shape(std::string claim_id, const BinaryQuadraticForm& f,
                                               const ShapeRule& rule, u64 limit, bool biconditional,
                                               unsigned threads = 1);

/// n <= limit is coprime-representable by x^2 + y^2 iff n = 2^d prod p_i^a_i, d <= 1, p_i = 1 mod 4.
VerificationReport verify_two_squares(u64 limit, unsigned threads = 1);

/// Coprime x^2 + 2y^2 = n implies n = 2^d prod p_i^a_i, d <= 1, p_i = 1, 3 mod 8.
VerificationReport verify_x2_2y2(u64 limit, unsigned threads = 1);

/// Coprime x^2 + 3y^2 = n implies v_2(n) <= 2, v_3(n) <= 1, other p_i = 1 mod 3.
VerificationReport verify_x2_3y2(u64 limit, unsigned threads = 1);

/// (p - 1)_S >= (p - 1) / c for every p <= limit in P_f, for the standard triple.
VerificationReport verify_corollary(StandardSet which, u64 limit, unsigned threads = 1);

/// One class at disc -4, -8, -12; disc -56 has four reduced forms in two genera
/// of two; x^2 + 14y^2 and 2x^2 + 7y^2 share a genus while 71 separates them.
VerificationReport verify_class_numbers();

} // namespace weilzeta
