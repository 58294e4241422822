#include "weilzeta/zeta.hpp"

#include "weilzeta/errors.hpp"
#include "weilzeta/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace weilzeta {

namespace {

std::vector<u64> resolve_checkpoints(u64 limit, const SeriesOptions& options) {
  if (options.checkpoints.empty()) return decade_checkpoints(limit);
  const auto& cps = options.checkpoints;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] == 0 || cps[i] > limit)
      throw ParameterError("checkpoint " + std::to_string(cps[i]) + " outside [1, " +
                           std::to_string(limit) + "]");
    if (i > 0 && cps[i] <= cps[i - 1]) throw ParameterError("checkpoints must be strictly ascending");
  }
  return cps;
}

u64 sieve_bound(const std::vector<u64>& checkpoints) {
  return checkpoints.empty() ? 0 : checkpoints.back();
}

// Sums terms[i] (belonging to primes[i]) over each checkpoint interval, then
// folds the interval sums in order. Interval boundaries depend only on the
// checkpoints, so the result is independent of the thread count.
std::vector<Checkpoint> accumulate(const std::vector<u64>& primes, const std::vector<real>& terms,
                                   const std::vector<char>& present,
                                   const std::vector<u64>& checkpoints, unsigned threads) {
  const std::size_t intervals = checkpoints.size();
  std::vector<std::size_t> bounds(intervals + 1, 0);
  for (std::size_t k = 0; k < intervals; ++k)
    bounds[k + 1] = std::upper_bound(primes.begin(), primes.end(), checkpoints[k]) - primes.begin();

  std::vector<CompensatedSum> sums(intervals);
  std::vector<u64> counts(intervals, 0);
  parallel_blocks(intervals, threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t k = first; k < last; ++k)
      for (std::size_t i = bounds[k]; i < bounds[k + 1]; ++i) {
        if (!present[i]) continue;
        sums[k] += terms[i];
        ++counts[k];
      }
  });

  std::vector<Checkpoint> out;
  out.reserve(intervals);
  CompensatedSum running;
  u64 count = 0;
  for (std::size_t k = 0; k < intervals; ++k) {
    running += sums[k];
    count += counts[k];
    out.push_back({checkpoints[k], running.value(), count, std::nullopt});
  }
  return out;
}

void require_epsilon(real epsilon) {
  if (!(epsilon > 0 && epsilon < 1))
    throw ParameterError("epsilon must lie in (0, 1), got " + std::to_string(static_cast<double>(epsilon)));
}

// p^e, or nullopt on 64-bit overflow.
std::optional<u64> checked_pow(u64 p, unsigned e) {
  u64 v = 1;
  for (unsigned i = 0; i < e; ++i)
    if (__builtin_mul_overflow(v, p, &v)) return std::nullopt;
  return v;
}

// Divisors of j, ascending.
std::vector<unsigned> divisors(unsigned j) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= j; ++d)
    if (j % d == 0) out.push_back(d);
  return out;
}

} // namespace

std::vector<u64> decade_checkpoints(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 10; n <= limit; n *= 10) {
    out.push_back(n);
    if (n > UINT64_MAX / 10) break;
  }
  if (limit >= 1 && (out.empty() || out.back() != limit)) out.push_back(limit);
  return out;
}

unsigned max_exponent_in_range(u64 p) {
  if (p < 2) return 64;
  unsigned j = 0;
  u64 v = 1;
  while (j < 64 && !__builtin_mul_overflow(v, p, &v)) ++j;
  return j;
}

u64 hom_count(const PrimeSet& S, u64 p, unsigned j) {
  if (j == 0) throw DomainError("hom_count requires j >= 1");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (!checked_pow(p, j)) throw RangeError(std::to_string(p) + "^" + std::to_string(j) + " exceeds 64 bits");
  // p^j - 1 = prod_{d | j} Phi_d(p) and the S-part is completely multiplicative,
  // so factor the (much smaller) cyclotomic values one by one.
  const auto ds = divisors(j);
  std::vector<u64> phi(ds.size());
  u64 result = 1;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    u64 v = *checked_pow(p, ds[k]) - 1;
    for (std::size_t e = 0; e < k; ++e)
      if (ds[k] % ds[e] == 0) v /= phi[e];
    phi[k] = v;
    result *= s_part(v, S);
  }
  return result;
}

PartialSumSeries weil_log_partial(const PrimeSet& S, real s, u64 prime_limit,
                                  std::optional<unsigned> j_limit, const SeriesOptions& options) {
  if (!j_limit && !(s > 1))
    throw ParameterError("weil_log_partial needs s > 1 or an explicit j limit");
  if (j_limit && *j_limit == 0) throw ParameterError("j limit must be positive");
  if (prime_limit < 2) throw ParameterError("prime limit must be at least 2");
  const auto cps = resolve_checkpoints(prime_limit, options);
  const auto primes = sieve_primes(sieve_bound(cps), options.threads);

  std::vector<real> terms(primes.size()), tails(primes.size(), 0);
  parallel_blocks(primes.size(), options.threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      const u64 p = primes[i];
      unsigned jmax = max_exponent_in_range(p);
      if (j_limit) jmax = std::min(jmax, *j_limit);
      const real lp = std::log(static_cast<real>(p));
      CompensatedSum inner;
      for (unsigned j = 1; j <= jmax; ++j)
        inner += static_cast<real>(hom_count(S, p, j)) * std::exp(-s * j * lp) / j;
      terms[i] = inner.value();
      if (s > 1) {
        // sum_{j > J} p^{(1-s) j} / j <= r^{J+1} / ((J+1)(1-r)), r = p^{1-s}
        const real r = std::exp((1 - s) * lp);
        tails[i] = std::pow(r, static_cast<real>(jmax + 1)) / ((jmax + 1) * (1 - r));
      }
    }
  });

  const std::vector<char> all(primes.size(), 1);
  PartialSumSeries series{s, std::nullopt, accumulate(primes, terms, all, cps, options.threads)};
  if (s > 1) {
    const auto tail_series = accumulate(primes, tails, all, cps, options.threads);
    for (std::size_t k = 0; k < cps.size(); ++k) series.checkpoints[k].tail_bound = tail_series[k].value;
  }
  return series;
}

PartialSumSeries minorant_partial(const PrimeSet& S, real epsilon, u64 prime_limit,
                                  const SeriesOptions& options) {
  require_epsilon(epsilon);
  const auto cps = resolve_checkpoints(prime_limit, options);
  const auto primes = sieve_primes(sieve_bound(cps), options.threads);
  std::vector<real> terms(primes.size());
  parallel_blocks(primes.size(), options.threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      const u64 p = primes[i];
      terms[i] = static_cast<real>(s_part(p - 1, S)) *
                 std::exp((epsilon - 2) * std::log(static_cast<real>(p)));
    }
  });
  const std::vector<char> all(primes.size(), 1);
  return {2 - epsilon, epsilon, accumulate(primes, terms, all, cps, options.threads)};
}

namespace {

PartialSumSeries pf_series(const BinaryQuadraticForm& f, real epsilon, u64 prime_limit,
                           const SeriesOptions& options, real s, auto term_of) {
  require_epsilon(epsilon);
  const auto genus = genus_classes(f);
  const auto cps = resolve_checkpoints(prime_limit, options);
  const auto primes = sieve_primes(sieve_bound(cps), options.threads);
  std::vector<real> terms(primes.size(), 0);
  std::vector<char> present(primes.size(), 0);
  parallel_blocks(primes.size(), options.threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      if (!in_form_prime_set(primes[i], genus)) continue;
      present[i] = 1;
      terms[i] = term_of(primes[i]);
    }
  });
  return {s, epsilon, accumulate(primes, terms, present, cps, options.threads)};
}

} // namespace

PartialSumSeries pf_sum_partial(const BinaryQuadraticForm& f, real epsilon, u64 prime_limit,
                                const SeriesOptions& options) {
  return pf_series(f, epsilon, prime_limit, options, 1 - epsilon, [epsilon](u64 p) {
    return std::exp((epsilon - 1) * std::log(static_cast<real>(p)));
  });
}

PartialSumSeries pf_chain_partial(const BinaryQuadraticForm& f, u64 constant, real epsilon,
                                  u64 prime_limit, const SeriesOptions& options) {
  if (constant == 0) throw ParameterError("chain constant must be positive");
  return pf_series(f, epsilon, prime_limit, options, 2 - epsilon, [epsilon, constant](u64 p) {
    return static_cast<real>(p - 1) / constant * std::exp((epsilon - 2) * std::log(static_cast<real>(p)));
  });
}

PartialSumSeries partial_zeta_S(const PrimeSet& S, real s, u64 prime_limit,
                                const SeriesOptions& options) {
  const auto cps = resolve_checkpoints(prime_limit, options);
  const auto primes = sieve_primes(sieve_bound(cps), options.threads);
  std::vector<real> terms(primes.size(), 0);
  std::vector<char> present(primes.size(), 0);
  for (std::size_t i = 0; i < primes.size(); ++i) present[i] = S.contains(primes[i]);
  if (!(s > 1))
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (present[i])
        throw ParameterError("factor for p = " + std::to_string(primes[i]) +
                             " diverges: p^{-(s-1)} >= 1");
  parallel_blocks(primes.size(), options.threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i)
      if (present[i]) terms[i] = -std::log1p(-std::exp((1 - s) * std::log(static_cast<real>(primes[i]))));
  });
  // accumulated as a log-sum, reported as the product
  auto checkpoints = accumulate(primes, terms, present, cps, options.threads);
  for (auto& cp : checkpoints) cp.value = std::exp(cp.value);
  return {s, std::nullopt, std::move(checkpoints)};
}

std::vector<IwaniecPoint> iwaniec_ratio(const BinaryQuadraticForm& f, u64 limit,
                                        const SeriesOptions& options) {
  const auto cps = resolve_checkpoints(limit, options);
  const auto members = enumerate_Pf(f, sieve_bound(cps), options.threads).primes;
  std::vector<IwaniecPoint> out;
  for (u64 N : cps) {
    const u64 count = std::upper_bound(members.begin(), members.end(), N) - members.begin();
    const real logN = std::log(static_cast<real>(N));
    out.push_back({N, count, static_cast<real>(count) * std::pow(logN, 1.5L) / N});
  }
  return out;
}

} // namespace weilzeta
