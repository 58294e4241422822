#include "oracles.hpp"

#include "weilzeta/errors.hpp"
#include "weilzeta/quadform.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace weilzeta;

namespace {

// Random determinant-one matrix built from elementary moves.
Unimodular random_unimodular(std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<int> kind(0, 2), shift(-3, 3);
  Unimodular m;
  for (int i = 0; i < steps; ++i) {
    switch (kind(rng)) {
    case 0: m = m * Unimodular{1, shift(rng), 0, 1}; break;
    case 1: m = m * Unimodular{1, 0, shift(rng), 1}; break;
    default: m = m * Unimodular{0, -1, 1, 0}; break;
    }
  }
  return m;
}

} // namespace

TEST_CASE("discriminant") {
  CHECK(BinaryQuadraticForm{1, 0, 1}.discriminant() == -4);
  CHECK(BinaryQuadraticForm{1, 0, 14}.discriminant() == -56);
  CHECK(BinaryQuadraticForm{1, 1, 1}.discriminant() == -3);
  CHECK(BinaryQuadraticForm{1, 0, 2}.discriminant() == -8);
}

TEST_CASE("form predicates") {
  CHECK(BinaryQuadraticForm{1, 0, 1}.is_positive_definite());
  CHECK_FALSE(BinaryQuadraticForm{1, 0, -1}.is_positive_definite());
  CHECK_FALSE(BinaryQuadraticForm{-1, 0, -1}.is_positive_definite());
  CHECK_FALSE(BinaryQuadraticForm{2, 2, 2}.is_primitive());
  CHECK(BinaryQuadraticForm{2, 0, 7}.is_primitive());
}

TEST_CASE("represents_coprime examples") {
  auto r5 = represents_coprime({1, 0, 1}, 5);
  REQUIRE(r5);
  CHECK(std::abs(r5->x) * std::abs(r5->x) + r5->y * r5->y == 5);
  CHECK(std::set<i64>{std::abs(r5->x), std::abs(r5->y)} == std::set<i64>{1, 2});

  CHECK_FALSE(represents_coprime({1, 0, 14}, 71));
  auto r71 = represents_coprime({2, 0, 7}, 71);
  REQUIRE(r71);
  CHECK(r71->x == 2);
  CHECK(r71->y == 3);
  CHECK(r71->value == 71);

  // gcd(1, 0) = 1, so 1 = 1^2 + 0^2 counts; 4 = 2^2 + 0^2 does not
  CHECK(represents_coprime({1, 0, 1}, 1));
  CHECK_FALSE(represents_coprime({1, 0, 1}, 4));
}

TEST_CASE("represents_coprime rejects unsupported forms") {
  CHECK_THROWS_AS(represents_coprime({1, 0, -2}, 7), UnsupportedFormError);
  CHECK_THROWS_AS(represents_coprime({2, 0, 2}, 8), UnsupportedFormError);
  CHECK_THROWS_AS(represents_coprime({1, 2, 1}, 1), UnsupportedFormError);
}

TEST_CASE("represents_coprime witnesses are valid for non-diagonal forms") {
  const BinaryQuadraticForm forms[] = {{3, 2, 5}, {3, -2, 5}, {1, 1, 1}, {2, 1, 3}, {4, 3, 5}};
  for (const auto& f : forms) {
    const auto hit = oracle::coprime_values(f.a, f.b, f.c, 3000);
    for (u64 n = 1; n <= 3000; ++n) {
      auto r = represents_coprime(f, n);
      REQUIRE(r.has_value() == bool(hit[n]));
      if (r) {
        CHECK(f(r->x, r->y) == (i64)n);
        CHECK(gcd(r->x, r->y) == 1);
      }
    }
  }
}

TEST_CASE("represents_coprime for x^2 + y^2 agrees with a naive |x|,|y| <= sqrt(n) loop") {
  for (u64 n = 1; n <= 10'000; ++n) {
    const i64 r = (i64)isqrt(n);
    bool naive = false;
    for (i64 x = -r; x <= r && !naive; ++x)
      for (i64 y = -r; y <= r && !naive; ++y)
        naive = x * x + y * y == (i64)n && oracle::gcd_abs(x, y) == 1;
    REQUIRE(represents_coprime({1, 0, 1}, n).has_value() == naive);
  }
}

TEST_CASE("reduce examples") {
  CHECK(reduce({1, 0, 1}) == BinaryQuadraticForm{1, 0, 1});
  CHECK(reduce({1, 2, 2}) == BinaryQuadraticForm{1, 0, 1});
  CHECK(reduce({2, 0, 7}) == BinaryQuadraticForm{2, 0, 7});
  CHECK(reduce({5, 2, 3}) == BinaryQuadraticForm{3, -2, 5});
  CHECK_THROWS_AS(reduce({2, -2, 2}), UnsupportedFormError);
  CHECK_THROWS_AS(reduce({1, 3, 1}), UnsupportedFormError);

  auto red = reduce_with_witness({1, 2, 2});
  CHECK(red.witness.determinant() == 1);
  CHECK(transform(red.form, red.witness) == BinaryQuadraticForm{1, 2, 2});
}

TEST_CASE("tie-break: b >= 0 when |b| = a or a = c") {
  CHECK(reduce({2, -2, 3}) == BinaryQuadraticForm{2, 2, 3});
  CHECK(reduce({3, -2, 3}) == BinaryQuadraticForm{3, 2, 3});
  CHECK(is_reduced({3, 2, 5}));
  CHECK(is_reduced({3, -2, 5}));
  CHECK_FALSE(is_reduced({2, -2, 3}));
  CHECK_FALSE(is_reduced({3, -1, 3}));
}

TEST_CASE("unimodular transforms preserve the discriminant") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<i64> coeff(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    BinaryQuadraticForm f{coeff(rng), coeff(rng), coeff(rng)};
    auto m = random_unimodular(rng, 6);
    REQUIRE(m.determinant() == 1);
    CHECK(transform(f, m).discriminant() == f.discriminant());
  }
}

TEST_CASE("reduction is idempotent, canonical and its witness reproduces the input") {
  std::mt19937_64 rng(99);
  const BinaryQuadraticForm seeds[] = {{1, 0, 1}, {1, 0, 14}, {2, 0, 7}, {3, 2, 5}, {1, 1, 6}, {2, 1, 3}};
  for (const auto& seed : seeds) {
    for (int i = 0; i < 200; ++i) {
      const auto f = transform(seed, random_unimodular(rng, 8));
      const auto red = reduce_with_witness(f);
      CHECK(is_reduced(red.form));
      CHECK(reduce(red.form) == red.form);
      CHECK(red.form == seed); // seeds are reduced
      CHECK(red.witness.determinant() == 1);
      CHECK(transform(red.form, red.witness) == f);
      CHECK(properly_equivalent(f, seed));
    }
  }
}

TEST_CASE("properly_equivalent") {
  const BinaryQuadraticForm f{1, 0, 14}, g{2, 0, 7};
  CHECK(properly_equivalent(f, f));
  CHECK_FALSE(properly_equivalent(f, g));
  CHECK(properly_equivalent({1, 2, 2}, {1, 0, 1}));
  CHECK_FALSE(properly_equivalent({1, 0, 1}, {1, 0, 2}));
  // improperly but not properly equivalent
  CHECK_FALSE(properly_equivalent({3, 2, 5}, {3, -2, 5}));
}

TEST_CASE("representability is an equivalence invariant") {
  std::mt19937_64 rng(5);
  const BinaryQuadraticForm seeds[] = {{1, 0, 1}, {2, 0, 7}, {3, 2, 5}};
  for (const auto& seed : seeds) {
    const auto g = transform(seed, random_unimodular(rng, 5));
    for (u64 n = 1; n <= 2000; ++n)
      REQUIRE(represents_coprime(seed, n).has_value() == represents_coprime(g, n).has_value());
  }
}

TEST_CASE("reduced_forms_of_discriminant") {
  using V = std::vector<BinaryQuadraticForm>;
  CHECK(reduced_forms_of_discriminant(-4) == V{{1, 0, 1}});
  CHECK(reduced_forms_of_discriminant(-8) == V{{1, 0, 2}});
  CHECK(reduced_forms_of_discriminant(-12) == V{{1, 0, 3}});
  CHECK(reduced_forms_of_discriminant(-3) == V{{1, 1, 1}});
  CHECK(reduced_forms_of_discriminant(-56) == V{{1, 0, 14}, {2, 0, 7}, {3, 2, 5}, {3, -2, 5}});
  CHECK(reduced_forms_of_discriminant(-20).size() == 2);
  CHECK(reduced_forms_of_discriminant(-23).size() == 3);
  CHECK_THROWS_AS(reduced_forms_of_discriminant(0), DomainError);
  CHECK_THROWS_AS(reduced_forms_of_discriminant(5), DomainError);
  CHECK_THROWS_AS(reduced_forms_of_discriminant(-5), DomainError);
  CHECK_THROWS_AS(reduced_forms_of_discriminant(-6), DomainError);
}

TEST_CASE("reduced forms match an exhaustive scan of all small reduced triples") {
  for (i64 disc = -3; disc >= -400; --disc) {
    const i64 m = ((disc % 4) + 4) % 4;
    if (m == 2 || m == 3) continue;
    std::vector<BinaryQuadraticForm> scan;
    for (i64 a = 1; a <= -disc; ++a)
      for (i64 b = -a; b <= a; ++b)
        for (i64 c = a; c <= -disc; ++c) {
          BinaryQuadraticForm f{a, b, c};
          if (f.discriminant() == disc && is_reduced(f) && f.is_primitive()) scan.push_back(f);
        }
    auto listed = reduced_forms_of_discriminant(disc);
    std::sort(scan.begin(), scan.end());
    std::sort(listed.begin(), listed.end());
    REQUIRE(listed == scan);
  }
}

TEST_CASE("genus signatures at disc -56") {
  const auto s14 = genus_signature({1, 0, 14});
  CHECK(s14 == genus_signature({1, 0, 14}));
  CHECK(s14 == genus_signature({2, 0, 7}));
  CHECK_FALSE(s14 == genus_signature({3, 2, 5}));
  CHECK(genus_signature({3, 2, 5}) == genus_signature({3, -2, 5}));
  for (u64 r : s14.residues) CHECK(std::gcd(r, u64{56}) == 1);

  // independent evaluation of x^2 + 14y^2 and 3x^2 + 2xy + 5y^2 mod 56
  std::set<u64> a, b;
  for (i64 x = 0; x < 56; ++x)
    for (i64 y = 0; y < 56; ++y) {
      u64 va = (x * x + 14 * y * y) % 56, vb = (3 * x * x + 2 * x * y + 5 * y * y) % 56;
      if (std::gcd(va, u64{56}) == 1) a.insert(va);
      if (std::gcd(vb, u64{56}) == 1) b.insert(vb);
    }
  CHECK(std::vector<u64>(a.begin(), a.end()) == s14.residues);
  CHECK(std::vector<u64>(b.begin(), b.end()) == genus_signature({3, 2, 5}).residues);
  CHECK(a != b);
}

TEST_CASE("genus_classes") {
  using V = std::vector<BinaryQuadraticForm>;
  CHECK(genus_classes({1, 0, 1}) == V{{1, 0, 1}});
  CHECK(genus_classes({1, 0, 2}) == V{{1, 0, 2}});
  CHECK(genus_classes({1, 0, 3}) == V{{1, 0, 3}});
  CHECK(genus_classes({1, 0, 14}) == V{{1, 0, 14}, {2, 0, 7}});
  CHECK(genus_classes({3, 2, 5}) == V{{3, 2, 5}, {3, -2, 5}});
  CHECK_THROWS_AS(genus_classes({1, 0, -1}), UnsupportedFormError);
}

TEST_CASE("same-genus is an equivalence relation refined by proper equivalence") {
  for (i64 disc : {-4, -8, -12, -20, -56}) {
    const auto forms = reduced_forms_of_discriminant(disc);
    for (const auto& f : forms)
      for (const auto& g : forms) {
        const bool fg = genus_signature(f) == genus_signature(g);
        CHECK(fg == (genus_signature(g) == genus_signature(f)));
        if (properly_equivalent(f, g)) CHECK(fg);
        for (const auto& h : forms)
          if (fg && genus_signature(g) == genus_signature(h)) CHECK(genus_signature(f) == genus_signature(h));
      }
  }
}

TEST_CASE("parse_form") {
  CHECK(parse_form("1,0,14") == BinaryQuadraticForm{1, 0, 14});
  CHECK(parse_form("3,-2,5") == BinaryQuadraticForm{3, -2, 5});
  CHECK_THROWS_AS(parse_form("1,0"), ParameterError);
  CHECK_THROWS_AS(parse_form("1,0,1,2"), ParameterError);
  CHECK_THROWS_AS(parse_form("a,b,c"), ParameterError);
}
