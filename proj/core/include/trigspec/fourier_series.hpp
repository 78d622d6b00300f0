#pragma once

#include <cstddef>
#include <vector>

namespace trigspec {

/// Cosine/sine coefficient pair of one harmonic.
struct CoeffPair {
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const CoeffPair&, const CoeffPair&) = default;
};

/// Finite real trigonometric series  a0/2 + sum_{j=1}^{J} (a_j cos jt + b_j sin jt).
///
/// Coefficient vectors are indexed from harmonic 1, i.e. a[j-1] is a_j.
struct FourierSeries {
  double a0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  std::size_t degree() const noexcept { return a.size(); }

  double operator()(double t) const;

  /// Exact termwise derivative of the given order.
  FourierSeries derivative(int order) const;
};

}  // namespace trigspec
