// Correctly rounded floating-point summation (Shewchuk's partials scheme).
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace dmag {

/// Accumulates an exact sum as non-overlapping partials; result() rounds once.
/// N copies of x therefore sum to exactly fl(N * x).
template <typename Real = double>
class ExactSum {
 public:
  void add(Real x) {
    std::size_t used = 0;
    for (Real y : partials_) {
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const Real hi = x + y;
      const Real lo = y - (hi - x);
      if (lo != Real(0)) partials_[used++] = lo;
      x = hi;
    }
    partials_.resize(used);
    partials_.push_back(x);
  }

  Real result() const {
    if (partials_.empty()) return Real(0);
    std::size_t n = partials_.size();
    Real hi = partials_[--n];
    Real lo = Real(0);
    while (n > 0) {
      const Real x = hi;
      const Real y = partials_[--n];
      hi = x + y;
      const Real yr = hi - x;
      lo = y - yr;
      if (lo != Real(0)) break;
    }
    // Half-way case: round-half-even must see the sign of the next partial.
    if (n > 0 && ((lo < Real(0) && partials_[n - 1] < Real(0)) || (lo > Real(0) && partials_[n - 1] > Real(0)))) {
      const Real y = lo * Real(2);
      const Real x = hi + y;
      if (y == x - hi) hi = x;
    }
    return hi;
  }

 private:
  std::vector<Real> partials_;
};

}  // namespace dmag
