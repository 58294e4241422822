#pragma once

// The prime sets S1 = {p = 1 mod 4}, S2 = {p = 1, 3 mod 8}, S3 = {p = 1 mod 3}
// and the form prime sets P_f = {p prime : p - 1 = g(x, y), g in the genus of f,
// gcd(x, y) = 1}.

#include "weilzeta/arith.hpp"
#include "weilzeta/quadform.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace weilzeta {

enum class StandardSet { S1, S2, S3 };

PrimeSet standard_set(StandardSet which);

/// Parses "S1" | "S2" | "S3".
std::optional<StandardSet> parse_standard_set(std::string_view name);

/// A standard set together with the form whose values + 1 land in it and the
/// constant c with (p - 1)_S >= (p - 1) / c on P_f.
struct StandardTriple {
  StandardSet which;
  PrimeSet set;
  BinaryQuadraticForm form;
  u64 constant;
};

StandardTriple standard_triple(StandardSet which);

struct FormPrimeSet {
  BinaryQuadraticForm base_form;
  std::vector<BinaryQuadraticForm> genus_forms;
  u64 limit = 0;
  std::vector<u64> primes;
};

/// True iff p - 1 has a coprime representation by one of `genus_forms`.
bool in_form_prime_set(u64 p, const std::vector<BinaryQuadraticForm>& genus_forms);

/// All primes p <= limit in P_f. The search over the form's genus uses reduced
/// representatives. Throws UnsupportedFormError for indefinite or non-primitive f.
FormPrimeSet enumerate_Pf(const BinaryQuadraticForm& f, u64 limit, unsigned threads = 1);

/// Same membership test applied to an already sieved, ascending list of primes.
std::vector<u64> filter_Pf(const std::vector<BinaryQuadraticForm>& genus_forms,
                           const std::vector<u64>& primes, unsigned threads = 1);

/// pi(N; f) = |P_f cap [2, N]|.
u64 pi_f(u64 limit, const BinaryQuadraticForm& f, unsigned threads = 1);

} // namespace weilzeta
