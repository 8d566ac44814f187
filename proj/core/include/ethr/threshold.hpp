#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "ethr/polynomial.hpp"

namespace ethr {

/// Break-even line: poly(x) = x, or poly(x) = x / 2 for the worst-case lossy model.
enum class Criterion { BreakEven, HalfBreakEven };

struct ThresholdOptions {
  mpq_class lo = 0;
  mpq_class hi = mpq_class(1, 2);
  double tolerance = 1e-6;
  std::size_t grid_points = 512;
};

struct ThresholdResult {
  std::string label;
  std::string delta_mode;
  std::size_t rounds = 0;
  Criterion criterion = Criterion::BreakEven;
  mpq_class lo;
  mpq_class hi;
  int sign_lo = 0;  // sign of f at lo, f(x) = poly(x) - c x
  int sign_hi = 0;
  /// Grid intervals holding further sign changes, above the reported one.
  std::vector<std::pair<double, double>> other_crossings;

  double value() const { return mpq_class((lo + hi) / 2).get_d(); }
  double width() const { return mpq_class(hi - lo).get_d(); }
};

/// Smallest sign change of poly(x) - c x on (lo, hi), narrowed by exact bisection.
/// Throws std::runtime_error listing the sampled signs when there is none.
ThresholdResult solve_threshold(const FailurePolynomial& poly, Criterion criterion,
                                const ThresholdOptions& options = {});

/// First-level failure of a classical measurement block decoding up to two erasures:
/// sum over i = 3..7 of C(7,i) x^i (1-x)^(7-i), with x the detector failure rate.
FailurePolynomial measurement_polynomial();

ThresholdResult measurement_threshold(double tolerance = 1e-6);

/// Sign of poly(x) - c x evaluated exactly.
int break_even_sign(const FailurePolynomial& poly, Criterion criterion, const mpq_class& x);

}  // namespace ethr
