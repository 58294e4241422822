#include "weilzeta/primesets.hpp"

#include "weilzeta/parallel.hpp"

namespace weilzeta {

PrimeSet standard_set(StandardSet which) {
  switch (which) {
  case StandardSet::S1:
    return PrimeSet(4, {1});
  case StandardSet::S2:
    return PrimeSet(8, {1, 3});
  case StandardSet::S3:
    return PrimeSet(3, {1});
  }
  return PrimeSet::empty();
}

std::optional<StandardSet> parse_standard_set(std::string_view name) {
  if (name == "S1") return StandardSet::S1;
  if (name == "S2") return StandardSet::S2;
  if (name == "S3") return StandardSet::S3;
  return std::nullopt;
}

StandardTriple standard_triple(StandardSet which) {
  switch (which) {
  case StandardSet::S1:
    return {which, standard_set(which), {1, 0, 1}, 2};
  case StandardSet::S2:
    return {which, standard_set(which), {1, 0, 2}, 2};
  case StandardSet::S3:
    return {which, standard_set(which), {1, 0, 3}, 12};
  }
  return {which, standard_set(which), {1, 0, 1}, 2};
}

bool in_form_prime_set(u64 p, const std::vector<BinaryQuadraticForm>& genus_forms) {
  if (p < 2) return false;
  for (const auto& g : genus_forms)
    if (represents_coprime(g, p - 1)) return true;
  return false;
}

std::vector<u64> filter_Pf(const std::vector<BinaryQuadraticForm>& genus_forms,
                           const std::vector<u64>& primes, unsigned threads) {
  for (const auto& g : genus_forms) require_definite_primitive(g);
  std::vector<char> member(primes.size(), 0);
  parallel_blocks(primes.size(), threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) member[i] = in_form_prime_set(primes[i], genus_forms);
  });
  std::vector<u64> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (member[i]) out.push_back(primes[i]);
  return out;
}

FormPrimeSet enumerate_Pf(const BinaryQuadraticForm& f, u64 limit, unsigned threads) {
  FormPrimeSet result{f, genus_classes(f), limit, {}};
  result.primes = filter_Pf(result.genus_forms, sieve_primes(limit, threads), threads);
  return result;
}

u64 pi_f(u64 limit, const BinaryQuadraticForm& f, unsigned threads) {
  return enumerate_Pf(f, limit, threads).primes.size();
}

} // namespace weilzeta
