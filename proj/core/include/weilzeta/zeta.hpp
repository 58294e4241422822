#pragma once

// Partial sums around the Weil representation zeta function of H_S:
//
//   ln zeta^W(s) = sum_p sum_{j>=1} (p^j - 1)_S p^{-sj} / j
//
// together with its j = 1 minorant, the P_f sums sum_{p in P_f} p^{-(1-eps)},
// the shifted partial Euler product prod_{p in S} (1 - p^{1-s})^{-1}, and the
// normalized prime count pi(N; f) ln(N)^{3/2} / N.
//
// Every series is reported at checkpoints N (powers of ten up to the limit,
// plus the limit itself, unless given explicitly). Terms are computed in
// parallel; each interval between checkpoints is summed with compensated
// summation and the interval sums are folded in order, so the values do not
// depend on the thread count.

#include "weilzeta/arith.hpp"
#include "weilzeta/primesets.hpp"
#include "weilzeta/quadform.hpp"
#include "weilzeta/summation.hpp"

#include <optional>
#include <vector>

namespace weilzeta {

struct SeriesOptions {
  /// Strictly ascending values in [1, limit]; empty means decade_checkpoints(limit).
  std::vector<u64> checkpoints;
  unsigned threads = 1;
};

struct Checkpoint {
  u64 N = 0;
  real value = 0;
  /// Number of primes <= N that contributed a term.
  u64 terms = 0;
  /// Upper bound on the discarded j > j_limit tail of the primes <= N (Weil series with s > 1 only).
  std::optional<real> tail_bound;
};

struct PartialSumSeries {
  real parameter_s = 0;
  std::optional<real> epsilon;
  std::vector<Checkpoint> checkpoints;
};

/// 10, 100, ... <= limit, followed by limit itself when it is not a power of ten.
std::vector<u64> decade_checkpoints(u64 limit);

/// Largest j with p^j representable in 64 bits, capped at 64.
unsigned max_exponent_in_range(u64 p);

/// |Hom(H_S, F_{p^j}^x)| = (p^j - 1)_S. Throws RangeError if p^j overflows 64 bits
/// and DomainError if p is not prime.
u64 hom_count(const PrimeSet& S, u64 p, unsigned j);

/// sum_{p <= N} sum_{j <= J_p} (p^j - 1)_S p^{-sj} / j with J_p = min(j_limit, max_exponent_in_range(p)).
/// Without j_limit, J_p = max_exponent_in_range(p) and s must exceed 1.
PartialSumSeries weil_log_partial(const PrimeSet& S, real s, u64 prime_limit,
                                  std::optional<unsigned> j_limit = std::nullopt,
                                  const SeriesOptions& options = {});

/// sum_{p <= N} (p - 1)_S p^{eps - 2}; eps in (0, 1).
PartialSumSeries minorant_partial(const PrimeSet& S, real epsilon, u64 prime_limit,
                                  const SeriesOptions& options = {});

/// sum_{p in P_f, p <= N} p^{eps - 1}; eps in (0, 1).
PartialSumSeries pf_sum_partial(const BinaryQuadraticForm& f, real epsilon, u64 prime_limit,
                                const SeriesOptions& options = {});

/// sum_{p in P_f, p <= N} (p - 1) / (c p^{2 - eps}): the lower end of the minorant chain.
PartialSumSeries pf_chain_partial(const BinaryQuadraticForm& f, u64 constant, real epsilon,
                                  u64 prime_limit, const SeriesOptions& options = {});

/// prod_{p in S, p <= N} (1 - p^{-(s-1)})^{-1}. Throws ParameterError if some
/// p in S below the limit has p^{-(s-1)} >= 1.
PartialSumSeries partial_zeta_S(const PrimeSet& S, real s, u64 prime_limit,
                                const SeriesOptions& options = {});

struct IwaniecPoint {
  u64 N = 0;
  u64 count = 0;
  real ratio = 0;
};

/// pi(N; f) ln(N)^{3/2} / N at each checkpoint. Descriptive only.
std::vector<IwaniecPoint> iwaniec_ratio(const BinaryQuadraticForm& f, u64 limit,
                                        const SeriesOptions& options = {});

} // namespace weilzeta
