#include "ethr/threshold.hpp"

#include <stdexcept>

namespace ethr {

int break_even_sign(const FailurePolynomial& poly, Criterion criterion, const mpq_class& x) {
  const mpq_class c = criterion == Criterion::BreakEven ? mpq_class(1) : mpq_class(1, 2);
  const mpq_class f = poly.evaluate(x) - c * x;
  return sgn(f);
}

ThresholdResult solve_threshold(const FailurePolynomial& poly, Criterion criterion,
                                const ThresholdOptions& options) {
  if (!poly.is_univariate()) throw std::invalid_argument("threshold polynomial still depends on delta");
  if (options.lo >= options.hi) throw std::invalid_argument("empty bracket");
  if (options.grid_points < 2) throw std::invalid_argument("grid needs at least two points");
  if (!(options.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");

  const std::size_t g = options.grid_points;
  const mpq_class step = (options.hi - options.lo) / g;
  std::vector<mpq_class> xs;
  std::vector<int> signs;
  // Interior grid; the open bracket excludes both ends.
  for (std::size_t k = 1; k < g; ++k) {
    xs.push_back(options.lo + step * k);
    signs.push_back(break_even_sign(poly, criterion, xs.back()));
  }

  ThresholdResult r;
  r.criterion = criterion;
  std::size_t found = xs.size();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (signs[k] == 0) {
      found = k;
      r.lo = r.hi = xs[k];
      break;
    }
    if (k + 1 < xs.size() && signs[k + 1] != 0 && signs[k] != signs[k + 1]) {
      found = k;
      r.lo = xs[k];
      r.hi = xs[k + 1];
      break;
    }
  }
  if (found == xs.size()) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k % 8 == 0) s += " " + std::to_string(xs[k].get_d()) + ":";
      s += signs[k] > 0 ? '+' : (signs[k] < 0 ? '-' : '0');
    }
    throw std::runtime_error("no break-even crossing in the bracket; sampled signs:" + s);
  }
  for (std::size_t k = found + 1; k + 1 < xs.size(); ++k) {
    if (signs[k] != 0 && signs[k + 1] != 0 && signs[k] != signs[k + 1]) {
      r.other_crossings.emplace_back(xs[k].get_d(), xs[k + 1].get_d());
    }
  }

  r.sign_lo = break_even_sign(poly, criterion, r.lo);
  r.sign_hi = break_even_sign(poly, criterion, r.hi);
  const mpq_class tol(options.tolerance);
  while (r.hi - r.lo > tol) {
    mpq_class mid = (r.lo + r.hi) / 2;
    int s = break_even_sign(poly, criterion, mid);
    if (s == 0) {
      r.lo = r.hi = mid;
      r.sign_lo = r.sign_hi = 0;
      break;
    }
    if (s == r.sign_lo) {
      r.lo = mid;
    } else {
      r.hi = mid;
      r.sign_hi = s;
    }
  }
  return r;
}

FailurePolynomial measurement_polynomial() {
  const FailurePolynomial x = FailurePolynomial::eps();
  const FailurePolynomial q = FailurePolynomial(1) - x;
  FailurePolynomial p;
  for (unsigned i = 3; i <= 7; ++i) {
    p += FailurePolynomial(mpq_class(binomial(7, i))) * x.pow(i) * q.pow(7 - i);
  }
  return p;
}

ThresholdResult measurement_threshold(double tolerance) {
  ThresholdOptions opt;
  opt.hi = mpq_class(1, 2);
  opt.tolerance = tolerance;
  ThresholdResult r = solve_threshold(measurement_polynomial(), Criterion::BreakEven, opt);
  r.label = "measurement";
  r.delta_mode = "n/a";
  r.rounds = 1;
  return r;
}

}  // namespace ethr
