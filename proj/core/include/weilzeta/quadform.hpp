#pragma once

// Binary quadratic forms ax^2 + bxy + cy^2: coprime representability,
// reduction and proper equivalence for positive definite forms, and genus
// membership by represented unit residues mod |disc|.

#include "weilzeta/arith.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace weilzeta {

/// Largest |disc| for which genus_signature performs its |disc|^2 scan.
inline constexpr u64 kGenusModulusMax = u64{1} << 15;

struct BinaryQuadraticForm {
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;

  i64 discriminant() const;
  bool is_primitive() const;
  bool is_positive_definite() const;
  /// Evaluates f(x, y); throws RangeError on 64-bit overflow.
  i64 operator()(i64 x, i64 y) const;

  /// "a,b,c"
  std::string to_string() const;

  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
  friend auto operator<=>(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

/// The substitution (x, y) -> (p x + q y, r x + s y).
struct Unimodular {
  i64 p = 1, q = 0, r = 0, s = 1;

  i64 determinant() const { return p * s - q * r; }
  Unimodular operator*(const Unimodular& rhs) const;
  /// Inverse of a determinant-one matrix.
  Unimodular inverse() const { return {s, -q, -r, p}; }

  friend bool operator==(const Unimodular&, const Unimodular&) = default;
};

/// g(x, y) = f(p x + q y, r x + s y). Throws RangeError on overflow.
BinaryQuadraticForm transform(const BinaryQuadraticForm& f, const Unimodular& m);

struct Representation {
  i64 x = 0;
  i64 y = 0;
  u64 value = 0;
  friend bool operator==(const Representation&, const Representation&) = default;
};

struct Reduction {
  BinaryQuadraticForm form;
  /// Witness with determinant 1 such that transform(form, witness) equals the input.
  Unimodular witness;
};

struct GenusSignature {
  i64 discriminant = 0;
  /// Ascending units mod |discriminant| attained by the form.
  std::vector<u64> residues;
  friend bool operator==(const GenusSignature&, const GenusSignature&) = default;
};

/// Throws UnsupportedFormError unless f is primitive and positive definite.
void require_definite_primitive(const BinaryQuadraticForm& f);

/// Reduced means |b| <= a <= c, with b >= 0 when |b| == a or a == c.
bool is_reduced(const BinaryQuadraticForm& f);

/// Finds (x, y) with gcd(x, y) = 1 and f(x, y) = n, or nothing. The search is
/// complete: 4a f(x,y) = (2ax + by)^2 + |disc| y^2 bounds |y|, and x is solved
/// exactly for each y. Prefers the smallest y >= 0, then the larger root x.
std::optional<Representation> represents_coprime(const BinaryQuadraticForm& f, u64 n);

Reduction reduce_with_witness(const BinaryQuadraticForm& f);
BinaryQuadraticForm reduce(const BinaryQuadraticForm& f);

bool properly_equivalent(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g);

/// Primitive reduced forms of a negative discriminant, ordered by a, then |b|, positive b first.
/// Throws DomainError unless disc < 0 and disc = 0 or 1 mod 4.
std::vector<BinaryQuadraticForm> reduced_forms_of_discriminant(i64 disc);

/// Units mod |disc| represented by f(x, y) as (x, y) ranges over [0, |disc|)^2.
GenusSignature genus_signature(const BinaryQuadraticForm& f);

/// Reduced forms of f's discriminant sharing f's genus signature.
std::vector<BinaryQuadraticForm> genus_classes(const BinaryQuadraticForm& f);

/// Parses "a,b,c". Throws ParameterError on malformed input.
BinaryQuadraticForm parse_form(const std::string& text);

} // namespace weilzeta
