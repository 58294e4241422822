#include "weilzeta/verify.hpp"

#include "weilzeta/parallel.hpp"
#include "weilzeta/quadform.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace weilzeta {

namespace {

// Outcome of checking a single input.
struct Verdict {
  bool hypothesis = false;
  bool ok = true;
  std::string expected;
  std::string found;
};

std::string rep_string(const std::optional<Representation>& r) {
  if (!r) return "no coprime representation";
  return "coprime representation (" + std::to_string(r->x) + "," + std::to_string(r->y) + ")";
}

template <class Check>
VerificationReport scan(std::string claim_id, u64 lo, u64 hi, unsigned threads, const Check& check) {
  VerificationReport report;
  report.claim_id = std::move(claim_id);
  report.range_lo = static_cast<i64>(lo);
  report.range_hi = static_cast<i64>(hi);
  if (hi < lo) {
    report.passed = true;
    return report;
  }
  const std::size_t count = hi - lo + 1;
  std::vector<char> hypothesis(count, 0);
  std::vector<std::pair<u64, Verdict>> bad;
  std::mutex bad_mutex;
  parallel_blocks(count, threads, [&](std::size_t first, std::size_t last) {
    std::vector<std::pair<u64, Verdict>> local;
    for (std::size_t i = first; i < last; ++i) {
      Verdict v = check(lo + i);
      hypothesis[i] = v.hypothesis;
      if (!v.ok) local.emplace_back(lo + i, std::move(v));
    }
    std::lock_guard lock(bad_mutex);
    for (auto& item : local) bad.push_back(std::move(item));
  });
  std::sort(bad.begin(), bad.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  report.scanned_count = count;
  report.checked_count = std::count(hypothesis.begin(), hypothesis.end(), 1);
  report.info["counterexamples_total"] = bad.size();
  for (std::size_t k = 0; k < bad.size() && k < kMaxCounterexamples; ++k)
    report.counterexamples.push_back(
        {static_cast<i64>(bad[k].first), bad[k].second.expected, bad[k].second.found});
  report.passed = bad.empty();
  return report;
}

} // namespace

bool ShapeRule::matches(const Factorization& f) const {
  for (const auto& [p, e] : f.factors) {
    if (p == 2) {
      if (e > max_v2) return false;
    } else if (p == 3 && max_v3) {
      if (e > *max_v3) return false;
    } else if (!allowed(p)) {
      return false;
    }
  }
  return true;
}

VerificationReport verify_representation_shape(std::string claim_id, const BinaryQuadraticForm& f,
                                               const ShapeRule& rule, u64 limit, bool biconditional,
                                               unsigned threads) {
  require_definite_primitive(f);
  std::atomic<u64> shape_and_rep{0}, shape_only{0};
  auto report = scan(std::move(claim_id), 1, limit, threads, [&](u64 n) {
    const auto rep = represents_coprime(f, n);
    const auto fac = factorize(n);
    const bool has_shape = rule.matches(fac);
    if (has_shape) (rep ? shape_and_rep : shape_only).fetch_add(1, std::memory_order_relaxed);
    Verdict v;
    v.hypothesis = rep.has_value();
    v.ok = biconditional ? rep.has_value() == has_shape : (!rep || has_shape);
    if (!v.ok) {
      v.expected = (rep ? "shape " : "no shape ") + rule.description;
      v.found = rep_string(rep) + "; factorization " + fac.to_string();
    }
    return v;
  });
  if (!biconditional) {
    report.info["shape_and_representable"] = shape_and_rep.load();
    report.info["shape_not_representable"] = shape_only.load();
  }
  return report;
}

VerificationReport verify_two_squares(u64 limit, unsigned threads) {
  const ShapeRule rule{1, std::nullopt, [](u64 p) { return p % 4 == 1; }, "2^d*prod(p=1 mod 4), d<=1"};
  return verify_representation_shape("two-squares", {1, 0, 1}, rule, limit, true, threads);
}

VerificationReport verify_x2_2y2(u64 limit, unsigned threads) {
  const ShapeRule rule{1, std::nullopt, [](u64 p) { return p % 8 == 1 || p % 8 == 3; },
                       "2^d*prod(p=1,3 mod 8), d<=1"};
  return verify_representation_shape("x2-2y2", {1, 0, 2}, rule, limit, false, threads);
}

VerificationReport verify_x2_3y2(u64 limit, unsigned threads) {
  const ShapeRule rule{2, 1u, [](u64 p) { return p % 3 == 1; }, "2^d1*3^d2*prod(p=1 mod 3), d1<=2, d2<=1"};
  return verify_representation_shape("x2-3y2", {1, 0, 3}, rule, limit, false, threads);
}

VerificationReport verify_corollary(StandardSet which, u64 limit, unsigned threads) {
  const auto triple = standard_triple(which);
  const auto genus = genus_classes(triple.form);
  const std::string id = which == StandardSet::S1 ? "cor1" : which == StandardSet::S2 ? "cor2" : "cor3";
  return scan(id, 2, limit, threads, [&](u64 n) {
    Verdict v;
    if (!is_prime(n) || !in_form_prime_set(n, genus)) return v;
    v.hypothesis = true;
    const u64 part = s_part(n - 1, triple.set);
    // (p-1)_S >= (p-1)/c  <=>  c (p-1)_S >= p-1
    v.ok = triple.constant * part >= n - 1;
    if (!v.ok) {
      v.expected = "(p-1)_S >= (p-1)/" + std::to_string(triple.constant);
      v.found = "(p-1)_S = " + std::to_string(part);
    }
    return v;
  });
}

VerificationReport verify_class_numbers() {
  VerificationReport report;
  report.claim_id = "classes";
  report.range_lo = -56;
  report.range_hi = -4;
  auto check = [&](i64 input, bool ok, std::string expected, std::string found) {
    ++report.checked_count;
    ++report.scanned_count;
    if (!ok) report.counterexamples.push_back({input, std::move(expected), std::move(found)});
  };

  for (i64 disc : {-4, -8, -12}) {
    const auto forms = reduced_forms_of_discriminant(disc);
    report.info["class_count_" + std::to_string(-disc)] = forms.size();
    check(disc, forms.size() == 1, "1 reduced form", std::to_string(forms.size()) + " reduced forms");
  }

  const auto forms56 = reduced_forms_of_discriminant(-56);
  std::map<std::vector<u64>, u64> genus_sizes;
  for (const auto& g : forms56) ++genus_sizes[genus_signature(g).residues];
  bool two_by_two = genus_sizes.size() == 2;
  for (const auto& [sig, size] : genus_sizes) two_by_two = two_by_two && size == 2;
  report.info["class_count_56"] = forms56.size();
  report.info["genus_count_56"] = genus_sizes.size();
  check(-56, forms56.size() == 4, "4 reduced forms", std::to_string(forms56.size()) + " reduced forms");
  check(-56, two_by_two, "2 genera of 2 classes", std::to_string(genus_sizes.size()) + " genera");

  const BinaryQuadraticForm principal{1, 0, 14}, other{2, 0, 7};
  check(-56, genus_signature(principal) == genus_signature(other), "1,0,14 and 2,0,7 share a genus",
        "different genus signatures");
  check(-56, !properly_equivalent(principal, other), "1,0,14 and 2,0,7 not equivalent", "equivalent");

  const auto rep71 = represents_coprime(other, 71);
  check(71, rep71 && rep71->x == 2 && rep71->y == 3, "71 = 2*2^2 + 7*3^2", rep_string(rep71));
  const auto rep71p = represents_coprime(principal, 71);
  check(71, !rep71p, "71 not represented by 1,0,14", rep_string(rep71p));

  std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                   [](const auto& x, const auto& y) { return x.input < y.input; });
  report.passed = report.counterexamples.empty();
  return report;
}

} // namespace weilzeta
