#pragma once

#include <cmath>
#include <span>

namespace weilzeta {

using real = long double;

/// Neumaier's variant of Kahan summation: the running compensation also
/// captures low-order bits lost when the addend exceeds the running sum.
class CompensatedSum {
public:
  CompensatedSum() = default;
  explicit CompensatedSum(real initial) : sum_(initial) {}

  CompensatedSum& operator+=(real x) {
    const real t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  /// Folds another partial sum in, keeping both compensations.
  CompensatedSum& operator+=(const CompensatedSum& other) {
    *this += other.sum_;
    comp_ += other.comp_;
    return *this;
  }

  real value() const { return sum_ + comp_; }

private:
  real sum_ = 0;
  real comp_ = 0;
};

inline real compensated_sum(std::span<const real> values) {
  CompensatedSum acc;
  for (real v : values) acc += v;
  return acc.value();
}

} // namespace weilzeta
