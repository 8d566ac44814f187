#include "ethr/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ethr {

namespace {

void trim(std::vector<mpz_class>& row) {
  while (!row.empty() && row.back() == 0) row.pop_back();
}

// Coefficients of (1 - x)^k.
std::vector<mpz_class> one_minus_pow(std::size_t k) {
  std::vector<mpz_class> out(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    out[i] = binomial(static_cast<unsigned>(k), static_cast<unsigned>(i));
    if (i & 1u) out[i] = -out[i];
  }
  return out;
}

}  // namespace

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

FailurePolynomial::FailurePolynomial(long value) : FailurePolynomial(mpq_class(value)) {}

FailurePolynomial::FailurePolynomial(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  if (v != 0) {
    num_ = {{v.get_num()}};
    den_ = v.get_den();
  }
}

FailurePolynomial FailurePolynomial::monomial(const mpq_class& c, std::size_t deg_eps,
                                              std::size_t deg_delta) {
  FailurePolynomial p;
  mpq_class v = c;
  v.canonicalize();
  if (v == 0) return p;
  p.num_.assign(deg_delta + 1, {});
  p.num_[deg_delta].assign(deg_eps + 1, 0);
  p.num_[deg_delta][deg_eps] = v.get_num();
  p.den_ = v.get_den();
  return p;
}

FailurePolynomial FailurePolynomial::eps() { return monomial(1, 1, 0); }
FailurePolynomial FailurePolynomial::delta() { return monomial(1, 0, 1); }

long FailurePolynomial::degree_eps() const {
  long d = -1;
  for (const auto& row : num_) d = std::max(d, static_cast<long>(row.size()) - 1);
  return d;
}

long FailurePolynomial::degree_delta() const { return static_cast<long>(num_.size()) - 1; }

mpq_class FailurePolynomial::coeff(std::size_t deg_eps, std::size_t deg_delta) const {
  if (deg_delta >= num_.size() || deg_eps >= num_[deg_delta].size()) return 0;
  mpq_class q(num_[deg_delta][deg_eps], den_);
  q.canonicalize();
  return q;
}

std::vector<FailurePolynomial::Term> FailurePolynomial::terms() const {
  std::vector<Term> out;
  for (std::size_t d = 0; d < num_.size(); ++d) {
    for (std::size_t e = 0; e < num_[d].size(); ++e) {
      if (num_[d][e] != 0) out.push_back({e, d, coeff(e, d)});
    }
  }
  return out;
}

void FailurePolynomial::normalize() {
  for (auto& row : num_) trim(row);
  while (!num_.empty() && num_.back().empty()) num_.pop_back();
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& row : num_) {
      for (auto& c : row) c = -c;
    }
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& row : num_) {
    for (const auto& c : row) {
      if (c != 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
      }
    }
  }
  den_ /= g;
  for (auto& row : num_) {
    for (auto& c : row) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

FailurePolynomial FailurePolynomial::rescaled_sum(const FailurePolynomial& a,
                                                  const FailurePolynomial& b, bool subtract) {
  FailurePolynomial r;
  mpz_lcm(r.den_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
  const mpz_class fa = r.den_ / a.den_;
  const mpz_class fb = r.den_ / b.den_;
  r.num_.resize(std::max(a.num_.size(), b.num_.size()));
  for (std::size_t d = 0; d < r.num_.size(); ++d) {
    std::size_t la = d < a.num_.size() ? a.num_[d].size() : 0;
    std::size_t lb = d < b.num_.size() ? b.num_[d].size() : 0;
    auto& row = r.num_[d];
    row.assign(std::max(la, lb), 0);
    for (std::size_t e = 0; e < la; ++e) row[e] = a.num_[d][e] * fa;
    for (std::size_t e = 0; e < lb; ++e) {
      if (subtract) {
        mpz_submul(row[e].get_mpz_t(), b.num_[d][e].get_mpz_t(), fb.get_mpz_t());
      } else {
        mpz_addmul(row[e].get_mpz_t(), b.num_[d][e].get_mpz_t(), fb.get_mpz_t());
      }
    }
  }
  r.normalize();
  return r;
}

FailurePolynomial& FailurePolynomial::operator+=(const FailurePolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  return *this = rescaled_sum(*this, o, false);
}

FailurePolynomial& FailurePolynomial::operator-=(const FailurePolynomial& o) {
  if (o.is_zero()) return *this;
  return *this = rescaled_sum(*this, o, true);
}

FailurePolynomial operator*(const FailurePolynomial& a, const FailurePolynomial& b) {
  FailurePolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  r.den_ = a.den_ * b.den_;
  r.num_.resize(a.num_.size() + b.num_.size() - 1);
  for (std::size_t da = 0; da < a.num_.size(); ++da) {
    for (std::size_t db = 0; db < b.num_.size(); ++db) {
      const auto& ra = a.num_[da];
      const auto& rb = b.num_[db];
      if (ra.empty() || rb.empty()) continue;
      auto& row = r.num_[da + db];
      if (row.size() < ra.size() + rb.size() - 1) row.resize(ra.size() + rb.size() - 1);
      for (std::size_t i = 0; i < ra.size(); ++i) {
        if (ra[i] == 0) continue;
        for (std::size_t j = 0; j < rb.size(); ++j) {
          if (rb[j] != 0) mpz_addmul(row[i + j].get_mpz_t(), ra[i].get_mpz_t(), rb[j].get_mpz_t());
        }
      }
    }
  }
  r.normalize();
  return r;
}

FailurePolynomial& FailurePolynomial::operator*=(const FailurePolynomial& o) {
  return *this = *this * o;
}

FailurePolynomial FailurePolynomial::operator-() const {
  FailurePolynomial r = *this;
  for (auto& row : r.num_) {
    for (auto& c : row) c = -c;
  }
  return r;
}

bool operator==(const FailurePolynomial& a, const FailurePolynomial& b) {
  return a.den_ == b.den_ && a.num_ == b.num_;
}

FailurePolynomial FailurePolynomial::pow(unsigned k) const {
  FailurePolynomial result(1);
  FailurePolynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

FailurePolynomial FailurePolynomial::substitute_delta(const mpq_class& value) const {
  FailurePolynomial r;
  const mpq_class v = value;
  mpq_class vpow = 1;
  for (std::size_t d = 0; d < num_.size(); ++d) {
    if (d) vpow *= v;
    if (num_[d].empty() || vpow == 0) continue;
    FailurePolynomial slice;
    slice.num_ = {num_[d]};
    slice.den_ = den_;
    slice.normalize();
    r += slice * FailurePolynomial(vpow);
  }
  return r;
}

FailurePolynomial FailurePolynomial::substitute_delta_eps() const {
  FailurePolynomial r;
  r.den_ = den_;
  r.num_.resize(1);
  auto& row = r.num_[0];
  for (std::size_t d = 0; d < num_.size(); ++d) {
    if (row.size() < num_[d].size() + d) row.resize(num_[d].size() + d);
    for (std::size_t e = 0; e < num_[d].size(); ++e) row[e + d] += num_[d][e];
  }
  r.normalize();
  return r;
}

mpq_class FailurePolynomial::evaluate(const mpq_class& eps, const mpq_class& delta) const {
  // Horner in eps for each delta slice, then Horner in delta.
  mpq_class acc = 0;
  for (std::size_t d = num_.size(); d-- > 0;) {
    mpq_class slice = 0;
    const auto& row = num_[d];
    for (std::size_t e = row.size(); e-- > 0;) {
      slice *= eps;
      slice += mpq_class(row[e]);
    }
    acc *= delta;
    acc += slice;
  }
  acc /= mpq_class(den_);
  return acc;
}

double FailurePolynomial::evaluate_double(double eps, double delta) const {
  return evaluate(mpq_class(eps), mpq_class(delta)).get_d();
}

std::string FailurePolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms()) {
    mpq_class c = t.coeff;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    mpq_class mag = abs(c);
    bool bare = t.deg_eps + t.deg_delta > 0;
    if (!(bare && mag == 1)) {
      out << mag.get_str();
      if (bare) out << "*";
    }
    bool need_star = false;
    if (t.deg_eps) {
      out << "e";
      if (t.deg_eps > 1) out << "^" << t.deg_eps;
      need_star = true;
    }
    if (t.deg_delta) {
      if (need_star) out << "*";
      out << "d";
      if (t.deg_delta > 1) out << "^" << t.deg_delta;
    }
  }
  return out.str();
}

FailurePolynomial path_weight(std::size_t eps_fail, std::size_t eps_ok, std::size_t delta_fail,
                              std::size_t delta_ok) {
  FailurePolynomial r;
  const auto e_ok = one_minus_pow(eps_ok);
  const auto d_ok = one_minus_pow(delta_ok);
  for (std::size_t j = 0; j < d_ok.size(); ++j) {
    for (std::size_t i = 0; i < e_ok.size(); ++i) {
      r += FailurePolynomial::monomial(mpq_class(e_ok[i] * d_ok[j]), eps_fail + i,
                                       delta_fail + j);
    }
  }
  return r;
}

}  // namespace ethr
