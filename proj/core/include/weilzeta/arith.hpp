#pragma once

// Integer arithmetic on 64-bit words: sieving, primality, factorization,
// S-parts and Legendre symbols.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace weilzeta {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest limit accepted by sieve_primes.
inline constexpr u64 kSieveLimitMax = u64{1} << 42;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes; empty for 1.
struct Factorization {
  std::vector<PrimePower> factors;

  /// Product of all prime powers. Throws RangeError if it does not fit in 64 bits.
  u64 value() const;
  /// Exponent of `prime`, 0 if absent.
  unsigned valuation(u64 prime) const;
  /// "2^2*3" style rendering; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// A set of primes described by residue classes modulo `modulus`, adjusted
/// by explicit include/exclude lists. Residues must be units mod modulus;
/// primes dividing the modulus can only enter through the include list.
class PrimeSet {
public:
  /// Throws DomainError on modulus 0, residues outside [0, modulus) or not coprime to it.
  PrimeSet(u64 modulus, std::vector<u64> residues,
           std::vector<u64> include = {}, std::vector<u64> exclude = {});

  static PrimeSet all_primes();
  static PrimeSet empty();

  /// Membership for a prime p. The result is unspecified for non-primes.
  bool contains(u64 p) const;

  u64 modulus() const { return modulus_; }
  const std::vector<u64>& residues() const { return residues_; }
  const std::vector<u64>& include() const { return include_; }
  const std::vector<u64>& exclude() const { return exclude_; }

  /// "mod:4:1" plus "+2" / "-5" suffixes for explicit lists.
  std::string to_string() const;

private:
  u64 modulus_;
  std::vector<u64> residues_;
  std::vector<u64> include_;
  std::vector<u64> exclude_;
  std::vector<bool> residue_mask_;
};

u64 gcd(i64 x, i64 y);

/// Integer square root: largest r with r*r <= n.
u64 isqrt(u64 n);

/// (a * b) mod m and a^e mod m without overflow.
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

/// All primes in [2, limit], ascending. Segmented, so working memory is
/// O(sqrt(limit) + segment) besides the output. The result does not depend on `threads`.
/// Throws RangeError if limit > kSieveLimitMax.
std::vector<u64> sieve_primes(u64 limit, unsigned threads = 1);

/// Deterministic Miller-Rabin for all 64-bit n.
bool is_prime(u64 n);

/// Trial division by small primes, then Brent's cycle-finding for what remains.
Factorization factorize(u64 n);

/// n_S: the largest divisor of n whose prime factors all lie in S. Requires n >= 1.
u64 s_part(u64 n, const PrimeSet& S);
u64 s_part(const Factorization& f, const PrimeSet& S);

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
/// Throws DomainError if p is not an odd prime.
int legendre(i64 a, u64 p);

} // namespace weilzeta
