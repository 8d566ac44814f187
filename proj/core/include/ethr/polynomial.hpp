#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace ethr {

/// Exact polynomial in eps and delta with rational coefficients.
///
/// Stored as integer numerators over one positive common denominator, kept in lowest terms.
class FailurePolynomial {
 public:
  struct Term {
    std::size_t deg_eps;
    std::size_t deg_delta;
    mpq_class coeff;
  };

  FailurePolynomial() = default;
  FailurePolynomial(long value);  // NOLINT(google-explicit-constructor)
  FailurePolynomial(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  static FailurePolynomial eps();
  static FailurePolynomial delta();
  static FailurePolynomial monomial(const mpq_class& c, std::size_t deg_eps,
                                    std::size_t deg_delta = 0);

  bool is_zero() const { return num_.empty(); }
  /// -1 for the zero polynomial.
  long degree_eps() const;
  long degree_delta() const;
  bool is_univariate() const { return degree_delta() <= 0; }

  mpq_class coeff(std::size_t deg_eps, std::size_t deg_delta = 0) const;
  const mpz_class& denominator() const { return den_; }
  /// Nonzero terms ordered by delta degree, then eps degree.
  std::vector<Term> terms() const;

  FailurePolynomial& operator+=(const FailurePolynomial& o);
  FailurePolynomial& operator-=(const FailurePolynomial& o);
  FailurePolynomial& operator*=(const FailurePolynomial& o);
  friend FailurePolynomial operator+(FailurePolynomial a, const FailurePolynomial& b) {
    return a += b;
  }
  friend FailurePolynomial operator-(FailurePolynomial a, const FailurePolynomial& b) {
    return a -= b;
  }
  friend FailurePolynomial operator*(const FailurePolynomial& a, const FailurePolynomial& b);
  FailurePolynomial operator-() const;
  friend bool operator==(const FailurePolynomial& a, const FailurePolynomial& b);

  FailurePolynomial pow(unsigned k) const;

  /// Replaces delta by a rational constant or by eps.
  FailurePolynomial substitute_delta(const mpq_class& value) const;
  FailurePolynomial substitute_delta_eps() const;

  mpq_class evaluate(const mpq_class& eps, const mpq_class& delta = 0) const;
  double evaluate_double(double eps, double delta = 0.0) const;

  /// Human-readable form, e.g. "56*e^3 + 406*e^4".
  std::string str() const;

 private:
  // num_[d][e] is the numerator of delta^d eps^e.
  std::vector<std::vector<mpz_class>> num_;
  mpz_class den_ = 1;

  void normalize();
  static FailurePolynomial rescaled_sum(const FailurePolynomial& a, const FailurePolynomial& b,
                                        bool subtract);
};

/// C(n, k) as an exact integer.
mpz_class binomial(unsigned n, unsigned k);

/// c * eps^a (1-eps)^b delta^c (1-delta)^d, the weight of one failure/success path.
FailurePolynomial path_weight(std::size_t eps_fail, std::size_t eps_ok, std::size_t delta_fail,
                              std::size_t delta_ok);

}  // namespace ethr
