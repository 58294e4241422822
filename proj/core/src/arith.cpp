#include "weilzeta/arith.hpp"

#include "weilzeta/errors.hpp"
#include "weilzeta/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace weilzeta {

namespace {

using u128 = unsigned __int128;

constexpr u64 kSegmentBytes = u64{1} << 18;
constexpr u64 kTrialBound = 1u << 12;

std::vector<u64> simple_sieve(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

const std::vector<u64>& trial_primes() {
  static const std::vector<u64> primes = simple_sieve(kTrialBound);
  return primes;
}

bool miller_rabin_witness(u64 n, u64 d, unsigned r, u64 base) {
  u64 x = powmod(base % n, d, n);
  if (x == 0 || x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard's rho; returns a nontrivial divisor of the odd composite n.
u64 brent_divisor(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 batch = 128;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 r = isqrt(n);
  if (r * r == n) {
    factor_into(r, out);
    factor_into(r, out);
    return;
  }
  u64 d = brent_divisor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& [p, e] : factors)
    for (unsigned i = 0; i < e; ++i)
      if (__builtin_mul_overflow(v, p, &v)) throw RangeError("factorization value exceeds 64 bits");
  return v;
}

unsigned Factorization::valuation(u64 prime) const {
  for (const auto& pp : factors)
    if (pp.prime == prime) return pp.exponent;
  return 0;
}

std::string Factorization::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << '*';
    os << factors[i].prime;
    if (factors[i].exponent != 1) os << '^' << factors[i].exponent;
  }
  return os.str();
}

PrimeSet::PrimeSet(u64 modulus, std::vector<u64> residues, std::vector<u64> include,
                   std::vector<u64> exclude)
    : modulus_(modulus), residues_(std::move(residues)), include_(std::move(include)),
      exclude_(std::move(exclude)) {
  if (modulus_ == 0) throw DomainError("prime set modulus must be positive");
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  for (u64 r : residues_) {
    if (r >= modulus_) throw DomainError("residue " + std::to_string(r) + " outside [0, modulus)");
    if (std::gcd(r, modulus_) != 1)
      throw DomainError("residue " + std::to_string(r) + " is not coprime to " +
                        std::to_string(modulus_));
  }
  for (auto* list : {&include_, &exclude_}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  // residues_ is sorted, so a mask is only worth building for moderate moduli
  if (modulus_ <= (u64{1} << 20)) {
    residue_mask_.assign(modulus_, false);
    for (u64 r : residues_) residue_mask_[r] = true;
  }
}

PrimeSet PrimeSet::all_primes() { return PrimeSet(1, {0}); }
PrimeSet PrimeSet::empty() { return PrimeSet(1, {}); }

bool PrimeSet::contains(u64 p) const {
  if (std::binary_search(exclude_.begin(), exclude_.end(), p)) return false;
  if (std::binary_search(include_.begin(), include_.end(), p)) return true;
  u64 r = p % modulus_;
  if (!residue_mask_.empty()) return residue_mask_[r];
  return std::binary_search(residues_.begin(), residues_.end(), r);
}

std::string PrimeSet::to_string() const {
  std::ostringstream os;
  os << "mod:" << modulus_ << ':';
  for (std::size_t i = 0; i < residues_.size(); ++i) os << (i ? "," : "") << residues_[i];
  for (u64 p : include_) os << '+' << p;
  for (u64 p : exclude_) os << '-' << p;
  return os.str();
}

u64 gcd(i64 x, i64 y) {
  u64 ux = x < 0 ? u64(0) - u64(x) : u64(x);
  u64 uy = y < 0 ? u64(0) - u64(y) : u64(y);
  return std::gcd(ux, uy);
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (r > 0xFFFFFFFFull || r * r > n)) --r;
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 result = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::vector<u64> sieve_primes(u64 limit, unsigned threads) {
  if (limit > kSieveLimitMax)
    throw RangeError("sieve limit " + std::to_string(limit) + " exceeds " +
                     std::to_string(kSieveLimitMax));
  if (limit < 2) return {};

  const std::vector<u64> base = simple_sieve(isqrt(limit));
  if (limit <= kSegmentBytes) {
    // one segment: mark directly
    std::vector<char> composite(limit + 1, 0);
    for (u64 p : base)
      for (u64 j = p * p; j <= limit; j += p) composite[j] = 1;
    std::vector<u64> primes;
    for (u64 n = 2; n <= limit; ++n)
      if (!composite[n]) primes.push_back(n);
    return primes;
  }

  const u64 segments = (limit + 1 + kSegmentBytes - 1) / kSegmentBytes;
  std::vector<std::vector<u64>> found(segments);
  parallel_blocks(segments, threads, [&](std::size_t first, std::size_t last) {
    std::vector<char> composite(kSegmentBytes);
    for (std::size_t seg = first; seg < last; ++seg) {
      const u64 low = seg * kSegmentBytes;
      const u64 high = std::min(low + kSegmentBytes - 1, limit);
      std::fill(composite.begin(), composite.end(), 0);
      for (u64 p : base) {
        if (p * p > high) break;
        u64 start = std::max(p * p, (low + p - 1) / p * p);
        for (u64 j = start; j <= high; j += p) composite[j - low] = 1;
      }
      auto& out = found[seg];
      for (u64 n = std::max<u64>(low, 2); n <= high; ++n)
        if (!composite[n - low]) out.push_back(n);
    }
  });

  std::size_t total = 0;
  for (const auto& v : found) total += v.size();
  std::vector<u64> primes;
  primes.reserve(total);
  for (const auto& v : found) primes.insert(primes.end(), v.begin(), v.end());
  return primes;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // these twelve bases are a proven witness set below 3.3e24
  for (u64 base : small)
    if (miller_rabin_witness(n, d, r, base)) return false;
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("factorize requires n >= 1");
  std::vector<u64> primes;
  for (u64 p : trial_primes()) {
    if (p * p > n) break;
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) {
    if (n < kTrialBound * kTrialBound) {
      primes.push_back(n);
    } else {
      factor_into(n, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  Factorization f;
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().prime == p) {
      ++f.factors.back().exponent;
    } else {
      f.factors.push_back({p, 1});
    }
  }
  return f;
}

u64 s_part(const Factorization& f, const PrimeSet& S) {
  u64 v = 1;
  for (const auto& [p, e] : f.factors)
    if (S.contains(p))
      for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

u64 s_part(u64 n, const PrimeSet& S) {
  if (n == 0) throw DomainError("s_part requires n >= 1");
  return s_part(factorize(n), S);
}

int legendre(i64 a, u64 p) {
  if (p == 2 || !is_prime(p)) throw DomainError("legendre requires an odd prime, got " + std::to_string(p));
  i64 m = static_cast<i64>(p);
  i64 r = a % m;
  if (r < 0) r += m;
  if (r == 0) return 0;
  u64 e = powmod(static_cast<u64>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

} // namespace weilzeta
