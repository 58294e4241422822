#include "oracles.hpp"

#include "weilzeta/arith.hpp"
#include "weilzeta/errors.hpp"
#include "weilzeta/primesets.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace weilzeta;

TEST_CASE("sieve_primes small cases") {
  CHECK(sieve_primes(10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(sieve_primes(2) == std::vector<u64>{2});
  CHECK(sieve_primes(1).empty());
}

TEST_CASE("sieve_primes matches trial division across segment boundaries") {
  // limits straddle the 2^18 segment size
  for (u64 limit : {u64{262143}, u64{262144}, u64{262145}, u64{600011}}) {
    auto primes = sieve_primes(limit, 3);
    auto expected = oracle::trial_primes(limit);
    CHECK(primes == expected);
  }
}

TEST_CASE("sieve_primes to 10^6 has 78498 primes independent of thread count") {
  auto one = sieve_primes(1'000'000, 1);
  CHECK(one.size() == 78498);
  CHECK(sieve_primes(1'000'000, 4) == one);
  CHECK(sieve_primes(1'000'000, 8) == one);
}

TEST_CASE("sieve_primes rejects limits beyond the configured range") {
  CHECK_THROWS_AS(sieve_primes(kSieveLimitMax + 1), RangeError);
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(71));
  CHECK_FALSE(is_prime(91));
  // Carmichael and strong pseudoprimes to small bases
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK_FALSE(is_prime(3825123056546413051ull));
  CHECK(is_prime(18446744073709551557ull));
}

TEST_CASE("2^61 - 1 is prime, confirmed by an independent Solovay-Strassen test") {
  const u64 m61 = (u64{1} << 61) - 1;
  CHECK(is_prime(m61));
  CHECK(oracle::solovay_strassen(m61, 64, 12345));
  CHECK_FALSE(is_prime(m61 - 2));
}

TEST_CASE("is_prime agrees with the sieve up to 10^4") {
  std::set<u64> fromSieve;
  for (u64 p : sieve_primes(10'000)) fromSieve.insert(p);
  for (u64 n = 0; n <= 10'000; ++n) CHECK(is_prime(n) == fromSieve.count(n));
}

TEST_CASE("factorize") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(12) == Factorization{{{2, 2}, {3, 1}}});
  CHECK(factorize(40) == Factorization{{{2, 3}, {5, 1}}});
  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK(factorize(40).to_string() == "2^3*5");
}

TEST_CASE("factorize agrees with trial division") {
  for (u64 n = 1; n <= 20'000; ++n) {
    auto f = factorize(n);
    auto ref = oracle::trial_factor(n);
    REQUIRE(f.factors.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(f.factors[i].prime == ref[i].first);
      CHECK(f.factors[i].exponent == ref[i].second);
    }
  }
}

TEST_CASE("factorize handles large semiprimes and prime powers") {
  std::mt19937_64 rng(7);
  const u64 cases[] = {
      1000003ull * 1000033ull,
      4294967291ull * 4294967279ull,
      999999999989ull * 7ull * 7ull,
      (u64{1} << 63),
      3ull * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3,
  };
  for (u64 n : cases) {
    auto f = factorize(n);
    CHECK(f.value() == n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(is_prime(f.factors[i].prime));
      if (i) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
    }
  }
  for (int i = 0; i < 300; ++i) {
    u64 n = rng() | 1;
    auto f = factorize(n);
    CHECK(f.value() == n);
    for (const auto& pp : f.factors) CHECK(is_prime(pp.prime));
  }
}

TEST_CASE("PrimeSet construction and membership") {
  CHECK_THROWS_AS(PrimeSet(4, {2}), DomainError);
  CHECK_THROWS_AS(PrimeSet(4, {5}), DomainError);
  CHECK_THROWS_AS(PrimeSet(0, {}), DomainError);
  PrimeSet s(4, {1}, {2}, {5});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(5));
  CHECK(s.contains(13));
  CHECK_FALSE(s.contains(7));
  CHECK(PrimeSet::all_primes().contains(7));
  CHECK_FALSE(PrimeSet::empty().contains(7));
  CHECK(s.to_string() == "mod:4:1+2-5");
}

TEST_CASE("s_part examples") {
  const auto S1 = standard_set(StandardSet::S1);
  CHECK(s_part(1, S1) == 1);
  CHECK(s_part(1, PrimeSet::all_primes()) == 1);
  CHECK(s_part(10, S1) == 5);
  CHECK(s_part(12, S1) == 1);
  CHECK(s_part(12, PrimeSet::all_primes()) == 12);
  CHECK_THROWS_AS(s_part(0, S1), DomainError);
}

TEST_CASE("s_part divides n and leaves no S-prime in the cofactor") {
  const PrimeSet sets[] = {standard_set(StandardSet::S1), standard_set(StandardSet::S3)};
  for (const auto& S : sets) {
    for (u64 n = 1; n <= 100'000; ++n) {
      const u64 part = s_part(n, S);
      REQUIRE(n % part == 0);
      for (const auto& pp : factorize(n / part).factors) REQUIRE_FALSE(S.contains(pp.prime));
    }
  }
}

TEST_CASE("s_part is multiplicative on coprime arguments") {
  const auto S1 = standard_set(StandardSet::S1), S2 = standard_set(StandardSet::S2);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<u64> pick(1, 10'000);
  for (int i = 0; i < 5000; ++i) {
    u64 m = pick(rng), n = pick(rng);
    if (std::gcd(m, n) != 1) continue;
    CHECK(s_part(m * n, S1) == s_part(m, S1) * s_part(n, S1));
    CHECK(s_part(m * n, S2) == s_part(m, S2) * s_part(n, S2));
  }
}

TEST_CASE("legendre examples and domain errors") {
  CHECK(legendre(5, 5) == 0);
  CHECK(legendre(-1, 5) == 1);
  CHECK(legendre(-2, 3) == 1);
  CHECK(legendre(2, 3) == -1);
  CHECK_THROWS_AS(legendre(1, 2), DomainError);
  CHECK_THROWS_AS(legendre(1, 9), DomainError);
}

TEST_CASE("legendre agrees with enumeration of squares for odd p <= 500") {
  for (u64 p : sieve_primes(500)) {
    if (p == 2) continue;
    for (i64 a = -(i64)p; a <= 2 * (i64)p; ++a) REQUIRE(legendre(a, p) == oracle::brute_legendre(a, p));
  }
}

TEST_CASE("legendre is completely multiplicative") {
  for (u64 p : sieve_primes(100)) {
    if (p == 2) continue;
    for (i64 a = 1; a < (i64)p; ++a)
      for (i64 b = 1; b < (i64)p; ++b) CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
  }
}

TEST_CASE("gcd convention and isqrt") {
  CHECK(gcd(1, 0) == 1);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-4, 6) == 2);
  CHECK(gcd(0, -7) == 7);
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(UINT64_MAX) == 0xFFFFFFFFull);
}
