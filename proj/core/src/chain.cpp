#include "ethr/chain.hpp"

#include <cctype>
#include <stdexcept>

namespace ethr {

namespace {

using P = FailurePolynomial;

P one_minus(const P& x) { return P(1) - x; }

P frac(long a, long b) { return P(mpq_class(a, b)); }

P choose(unsigned n, unsigned k) { return P(mpq_class(binomial(n, k))); }

}  // namespace

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad fraction '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
  mpz_class mant = 0;
  long scale = 0;
  bool digits = false;
  bool dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mant = mant * 10 + (c - '0');
      digits = true;
      if (dot) --scale;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) throw std::invalid_argument("bad number '" + text + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw std::invalid_argument("bad number '" + text + "'");
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(text.substr(i + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + text + "'");
    }
    if (i + 1 + used != text.size()) throw std::invalid_argument("bad number '" + text + "'");
    scale += e;
  }
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(mant, ten_pow) : mpq_class(mant * ten_pow);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

DeltaSpec DeltaSpec::parse(const std::string& text) {
  if (text == "0" || text == "zero") return zero();
  if (text == "eps" || text == "equal") return equal_eps();
  if (text == "symbolic" || text == "delta") return symbolic();
  mpq_class v = parse_rational(text);
  if (v < 0 || v >= 1) throw std::invalid_argument("delta must lie in [0, 1)");
  if (v == 0) return zero();
  return fixed(v);
}

std::string DeltaSpec::str() const {
  switch (mode) {
    case Mode::Zero:
      return "0";
    case Mode::EqualEps:
      return "eps";
    case Mode::Symbolic:
      return "symbolic";
    case Mode::Value:
      return value.get_str();
  }
  return "?";
}

FailurePolynomial DeltaSpec::apply(const FailurePolynomial& p) const {
  switch (mode) {
    case Mode::Zero:
      return p.substitute_delta(0);
    case Mode::EqualEps:
      return p.substitute_delta_eps();
    case Mode::Symbolic:
      return p;
    case Mode::Value:
      return p.substitute_delta(value);
  }
  return p;
}

TransitionMatrix::TransitionMatrix(std::vector<std::string> states)
    : states_(std::move(states)),
      p_(states_.size(), std::vector<FailurePolynomial>(states_.size())) {}

std::size_t TransitionMatrix::index(const std::string& label) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == label) return i;
  }
  throw std::out_of_range("unknown chain state '" + label + "'");
}

FailurePolynomial TransitionMatrix::column_sum(std::size_t from) const {
  FailurePolynomial s;
  for (std::size_t i = 0; i < size(); ++i) s += p_[i][from];
  return s;
}

TransitionMatrix TransitionMatrix::map(const DeltaSpec& d) const {
  TransitionMatrix out(states_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out.p_[i][j] = d.apply(p_[i][j]);
  }
  return out;
}

Chain Chain::with_delta(const DeltaSpec& d) const {
  Chain out = *this;
  out.matrix = matrix.map(d);
  for (auto& v : out.initial) v = d.apply(v);
  return out;
}

std::size_t default_rounds(Model m) { return m == Model::Ideal ? 6 : 20; }

Chain build_ideal_chain() {
  const P e = P::eps();
  const P q = one_minus(e);
  Chain c;
  c.model = Model::Ideal;
  c.matrix = TransitionMatrix({"0", "1", "2", "3", "fail"});
  auto& m = c.matrix;
  m.set("0", "0", 1);
  m.set("fail", "fail", 1);

  m.set("0", "1", q.pow(3));
  m.set("2", "1", choose(3, 1) * e * q.pow(2));
  m.set("3", "1", frac(2, 3) * choose(3, 2) * e.pow(2) * q);
  m.set("fail", "1", frac(1, 3) * choose(3, 2) * e.pow(2) * q + e.pow(3));

  m.set("1", "2", q.pow(3));
  m.set("3", "2", frac(2, 3) * choose(3, 1) * e * q.pow(2));
  m.set("fail", "2", frac(1, 3) * choose(3, 1) * e * q.pow(2) + choose(3, 2) * e.pow(2) * q +
                         e.pow(3));

  m.set("2", "3", q.pow(3));
  m.set("fail", "3", choose(3, 1) * e * q.pow(2) + choose(3, 2) * e.pow(2) * q + e.pow(3));

  c.initial.assign(5, P());
  for (unsigned j = 0; j < 3; ++j) c.initial[j] = choose(7, j) * e.pow(j) * q.pow(7 - j);
  c.initial[3] = frac(4, 5) * choose(7, 3) * e.pow(3) * q.pow(4);
  c.initial[4] = one_minus(c.initial[0] + c.initial[1] + c.initial[2] + c.initial[3]);
  c.clean = "0";
  return c;
}

Chain build_lossy_chain(const DeltaSpec& delta) {
  const P e = P::eps();
  const P d = P::delta();
  const P qe = one_minus(e);
  const P qd = one_minus(d);

  const P anc = one_minus(qd.pow(4));
  const P loss = e + qe * (choose(2, 1) * d * qd + d.pow(2));
  const P ql = one_minus(loss);
  const P success_z = qd * ql.pow(3);
  const P success_x = qe.pow(8) * one_minus(anc);
  const P stay = qe.pow(6) * (qe.pow(2) * anc + e + qe * e);

  Chain c;
  c.model = Model::Lossy;
  c.matrix = TransitionMatrix(
      {"[0,0]", "[0,1]", "[1,0]", "[1,1]", "[2,0]", "[0,2]", "[3,0]", "[0,3]", "[2,1]", "[1,2]",
       "fail"});
  auto& m = c.matrix;
  m.set("[0,0]", "[0,0]", 1);
  m.set("fail", "fail", 1);

  m.set("[0,0]", "[0,1]", success_z);
  m.set("[1,0]", "[0,1]", d);
  m.set("[1,1]", "[0,1]", qd * choose(3, 1) * loss * ql.pow(2));
  m.set("[2,1]", "[0,1]", qd * frac(2, 3) * choose(3, 2) * loss.pow(2) * ql);

  m.set("[0,1]", "[1,0]", success_x);
  m.set("[1,0]", "[1,0]", stay);
  m.set("[1,1]", "[1,0]", qe.pow(3) * choose(3, 1) * e * qe.pow(2));
  m.set("[2,0]", "[1,0]", choose(3, 1) * e * qe.pow(2) * qe.pow(2));
  m.set("[2,1]", "[1,0]", frac(2, 3) * choose(3, 1) * e * qe.pow(2) * choose(2, 1) * e * qe);
  m.set("[1,2]", "[1,0]", frac(2, 3) * qe.pow(3) * choose(3, 2) * e.pow(2) * qe);
  m.set("[3,0]", "[1,0]", frac(2, 3) * choose(3, 2) * e.pow(2) * qe);

  m.set("[1,0]", "[1,1]", success_z);
  m.set("[2,0]", "[1,1]", d);
  m.set("[2,1]", "[1,1]", qd * frac(2, 3) * choose(3, 1) * loss * ql.pow(2));

  m.set("[1,1]", "[2,0]", success_x);
  m.set("[2,0]", "[2,0]", stay);
  m.set("[2,1]", "[2,0]", frac(2, 3) * qe.pow(3) * choose(3, 1) * e * qe.pow(2));
  m.set("[3,0]", "[2,0]", frac(2, 3) * choose(3, 1) * e * qe.pow(2) * qe.pow(2));

  m.set("[0,1]", "[0,2]", success_z);
  m.set("[1,1]", "[0,2]", d);
  m.set("[1,2]", "[0,2]", qd * frac(2, 3) * choose(3, 1) * loss * ql.pow(2));

  m.set("[2,1]", "[3,0]", success_x);
  m.set("[3,0]", "[3,0]", stay);

  m.set("[0,2]", "[0,3]", success_z);
  m.set("[1,2]", "[0,3]", d);

  m.set("[2,0]", "[2,1]", success_z);
  m.set("[3,0]", "[2,1]", d);

  m.set("[1,1]", "[1,2]", success_z);
  m.set("[2,1]", "[1,2]", d);

  const std::size_t fail = m.index("fail");
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.states()[j] == "[0,0]" || j == fail) continue;
    m.at(fail, j) = one_minus(m.column_sum(j));
  }

  auto& init = c.initial;
  init.assign(m.size(), P());
  auto set = [&](const std::string& s, P v) { init[m.index(s)] = std::move(v); };
  const P b = frac(4, 5);
  set("[0,0]", qe.pow(14));
  set("[0,1]", qe.pow(7) * choose(7, 1) * e * qe.pow(6));
  set("[1,0]", choose(7, 1) * e * qe.pow(6) * qe.pow(6));
  set("[1,1]", choose(7, 1) * e * qe.pow(6) * choose(6, 1) * e * qe.pow(5));
  set("[2,0]", choose(7, 2) * e.pow(2) * qe.pow(5) * qe.pow(5));
  set("[0,2]", qe.pow(7) * choose(7, 2) * e.pow(2) * qe.pow(5));
  set("[3,0]", b * choose(7, 3) * e.pow(3) * qe.pow(4) * qe.pow(4));
  set("[0,3]", b * qe.pow(7) * choose(7, 3) * e.pow(3) * qe.pow(4));
  set("[2,1]", b * choose(7, 2) * e.pow(2) * qe.pow(5) * choose(5, 1) * e * qe.pow(4));
  set("[1,2]", b * choose(7, 1) * e * qe.pow(6) * choose(6, 2) * e.pow(2) * qe.pow(4));
  P listed;
  for (const auto& v : init) listed += v;
  init[fail] = one_minus(listed);
  c.clean = "[0,0]";
  return c.with_delta(delta);
}

InitialDistribution iterate(const TransitionMatrix& m, const InitialDistribution& init,
                            std::size_t rounds) {
  if (init.size() != m.size()) throw std::invalid_argument("distribution size differs from chain");
  InitialDistribution v = init;
  for (std::size_t r = 0; r < rounds; ++r) {
    InitialDistribution w(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& pij = m.at(i, j);
        if (!pij.is_zero()) w[i] += pij * v[j];
      }
    }
    v = std::move(w);
  }
  return v;
}

FailurePolynomial recursion_polynomial(const Chain& chain, std::size_t rounds) {
  const auto v = iterate(chain.matrix, chain.initial, rounds);
  const std::size_t clean = chain.matrix.index(chain.clean);
  FailurePolynomial s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != clean) s += v[i];
  }
  return s;
}

FailurePolynomial recursion_polynomial(Model model, std::size_t rounds, const DeltaSpec& delta) {
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
  const Chain c = model == Model::Ideal ? build_ideal_chain() : build_lossy_chain(delta);
  return recursion_polynomial(c, rounds);
}

std::vector<FailurePolynomial> failure_by_start(const Chain& chain, std::size_t rounds) {
  const std::size_t k = chain.matrix.size();
  const std::size_t clean = chain.matrix.index(chain.clean);
  std::vector<FailurePolynomial> out(k);
  for (std::size_t s = 0; s < k; ++s) {
    if (chain.initial[s].is_zero()) continue;
    InitialDistribution unit(k);
    unit[s] = 1;
    const auto v = iterate(chain.matrix, unit, rounds);
    out[s] = chain.initial[s] * (P(1) - v[clean]);
  }
  return out;
}

}  // namespace ethr
