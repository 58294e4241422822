#include "weilzeta/quadform.hpp"

#include "weilzeta/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace weilzeta {

namespace {

using i128 = __int128;

i64 narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw RangeError("quadratic form arithmetic overflow");
  return static_cast<i64>(v);
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw RangeError("matrix entry overflow");
  return out;
}

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw RangeError("matrix entry overflow");
  return out;
}

i64 floor_div(i64 num, i64 den) {
  i64 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

// Exact integer square root of a nonnegative 128-bit value, if it is a square.
std::optional<i128> exact_sqrt(i128 v) {
  if (v < 0) return std::nullopt;
  if (v <= static_cast<i128>(UINT64_MAX)) {
    u64 r = isqrt(static_cast<u64>(v));
    if (static_cast<i128>(r) * r == v) return static_cast<i128>(r);
    return std::nullopt;
  }
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r == v) return r;
  return std::nullopt;
}

} // namespace

i64 BinaryQuadraticForm::discriminant() const {
  return narrow(static_cast<i128>(b) * b - static_cast<i128>(4) * a * c);
}

bool BinaryQuadraticForm::is_primitive() const { return gcd(static_cast<i64>(gcd(a, b)), c) == 1; }

bool BinaryQuadraticForm::is_positive_definite() const { return a > 0 && discriminant() < 0; }

i64 BinaryQuadraticForm::operator()(i64 x, i64 y) const {
  i128 v = static_cast<i128>(a) * x * x + static_cast<i128>(b) * x * y + static_cast<i128>(c) * y * y;
  return narrow(v);
}

std::string BinaryQuadraticForm::to_string() const {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

Unimodular Unimodular::operator*(const Unimodular& o) const {
  return {checked_add(checked_mul(p, o.p), checked_mul(q, o.r)),
          checked_add(checked_mul(p, o.q), checked_mul(q, o.s)),
          checked_add(checked_mul(r, o.p), checked_mul(s, o.r)),
          checked_add(checked_mul(r, o.q), checked_mul(s, o.s))};
}

BinaryQuadraticForm transform(const BinaryQuadraticForm& f, const Unimodular& m) {
  const i128 a = f.a, b = f.b, c = f.c;
  const i128 p = m.p, q = m.q, r = m.r, s = m.s;
  return {narrow(a * p * p + b * p * r + c * r * r),
          narrow(2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s),
          narrow(a * q * q + b * q * s + c * s * s)};
}

void require_definite_primitive(const BinaryQuadraticForm& f) {
  if (!f.is_positive_definite())
    throw UnsupportedFormError("form " + f.to_string() + " is not positive definite");
  if (!f.is_primitive()) throw UnsupportedFormError("form " + f.to_string() + " is not primitive");
}

bool is_reduced(const BinaryQuadraticForm& f) {
  if (!(std::abs(f.b) <= f.a && f.a <= f.c)) return false;
  if ((std::abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

std::optional<Representation> represents_coprime(const BinaryQuadraticForm& f, u64 n) {
  require_definite_primitive(f);
  const i128 disc = -static_cast<i128>(f.discriminant());
  const i128 a = f.a, b = f.b;
  const i128 target = n;
  // |disc| y^2 <= 4 a n
  const i128 y_bound_sq = 4 * a * target / disc;
  const i64 y_max = static_cast<i64>(isqrt(static_cast<u64>(std::min<i128>(y_bound_sq, UINT64_MAX))));
  for (i64 y = 0; y <= y_max; ++y) {
    // a x^2 + (b y) x + (c y^2 - n) = 0, root discriminant 4 a n - |disc| y^2
    const i128 root_disc = 4 * a * target - disc * y * y;
    auto root = exact_sqrt(root_disc);
    if (!root) continue;
    for (i128 num : {-b * y + *root, -b * y - *root}) {
      if (num % (2 * a) != 0) continue;
      const i64 x = static_cast<i64>(num / (2 * a));
      if (y == 0 && x < 0) continue;
      if (gcd(x, y) != 1) continue;
      return Representation{x, y, n};
    }
  }
  return std::nullopt;
}

Reduction reduce_with_witness(const BinaryQuadraticForm& f) {
  require_definite_primitive(f);
  BinaryQuadraticForm h = f;
  Unimodular m; // invariant: h == transform(f, m)
  const Unimodular swap{0, -1, 1, 0};
  for (;;) {
    if (h.b <= -h.a || h.b > h.a) {
      const i64 k = floor_div(h.a - h.b, 2 * h.a);
      const Unimodular shift{1, k, 0, 1};
      h = transform(h, shift);
      m = m * shift;
    }
    if (h.a > h.c || (h.a == h.c && h.b < 0)) {
      h = transform(h, swap);
      m = m * swap;
      continue;
    }
    break;
  }
  return {h, m.inverse()};
}

BinaryQuadraticForm reduce(const BinaryQuadraticForm& f) { return reduce_with_witness(f).form; }

bool properly_equivalent(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
  require_definite_primitive(f);
  require_definite_primitive(g);
  if (f.discriminant() != g.discriminant()) return false;
  return reduce(f) == reduce(g);
}

std::vector<BinaryQuadraticForm> reduced_forms_of_discriminant(i64 disc) {
  if (disc >= 0) throw DomainError("discriminant must be negative, got " + std::to_string(disc));
  const i64 mod4 = ((disc % 4) + 4) % 4;
  if (mod4 == 2 || mod4 == 3)
    throw DomainError("discriminant must be 0 or 1 mod 4, got " + std::to_string(disc));
  const i64 abs_disc = -disc;
  std::vector<BinaryQuadraticForm> forms;
  for (i64 a = 1; 3 * a * a <= abs_disc; ++a) {
    for (i64 babs = 0; babs <= a; ++babs) {
      const int signs = (babs == 0 || babs == a) ? 1 : 2;
      for (int k = 0; k < signs; ++k) {
        const i64 b = k == 0 ? babs : -babs;
        const i64 num = b * b - disc;
        if (num % (4 * a) != 0) continue;
        const i64 c = num / (4 * a);
        BinaryQuadraticForm g{a, b, c};
        if (c < a || !is_reduced(g) || !g.is_primitive()) continue;
        forms.push_back(g);
      }
    }
  }
  return forms;
}

GenusSignature genus_signature(const BinaryQuadraticForm& f) {
  require_definite_primitive(f);
  const i64 disc = f.discriminant();
  const u64 m = static_cast<u64>(-disc);
  if (m > kGenusModulusMax)
    throw RangeError("genus scan modulus " + std::to_string(m) + " exceeds " +
                     std::to_string(kGenusModulusMax));
  const i64 mi = static_cast<i64>(m);
  const i64 a = ((f.a % mi) + mi) % mi, b = ((f.b % mi) + mi) % mi, c = ((f.c % mi) + mi) % mi;
  std::vector<bool> hit(m, false);
  for (i64 x = 0; x < mi; ++x) {
    const i64 ax2 = a * x % mi * x % mi;
    const i64 bx = b * x % mi;
    for (i64 y = 0; y < mi; ++y) hit[(ax2 + bx * y + c * y % mi * y) % mi] = true;
  }
  GenusSignature sig{disc, {}};
  for (u64 r = 0; r < m; ++r)
    if (hit[r] && std::gcd(r, m) == 1) sig.residues.push_back(r);
  return sig;
}

std::vector<BinaryQuadraticForm> genus_classes(const BinaryQuadraticForm& f) {
  const GenusSignature target = genus_signature(f);
  std::vector<BinaryQuadraticForm> out;
  for (const auto& g : reduced_forms_of_discriminant(target.discriminant))
    if (genus_signature(g) == target) out.push_back(g);
  return out;
}

BinaryQuadraticForm parse_form(const std::string& text) {
  std::array<i64, 3> coeffs{};
  const char* cur = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    if (i > 0) {
      if (cur == end || *cur != ',') throw ParameterError("form must be a,b,c: '" + text + "'");
      ++cur;
    }
    if (cur != end && *cur == '+') ++cur;
    auto [ptr, ec] = std::from_chars(cur, end, coeffs[i]);
    if (ec != std::errc{}) throw ParameterError("form must be a,b,c: '" + text + "'");
    cur = ptr;
  }
  if (cur != end) throw ParameterError("form must be a,b,c: '" + text + "'");
  return {coeffs[0], coeffs[1], coeffs[2]};
}

} // namespace weilzeta
