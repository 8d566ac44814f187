#include <gtest/gtest.h>

#include <set>

#include "ethr/oracle.hpp"

namespace ethr {
namespace {

const FailurePolynomial e = FailurePolynomial::eps();
const FailurePolynomial q = FailurePolynomial(1) - e;

TEST(Oracle, EnumeratesEveryLeaf) {
  auto row = enumerate_paths([](ScriptedSource& src) {
    int failures = 0;
    for (int i = 0; i < 3; ++i) failures += src.fail(Event::Gate);
    return std::to_string(failures);
  });
  EXPECT_EQ(row["0"], q.pow(3));
  EXPECT_EQ(row["1"], FailurePolynomial(3) * e * q.pow(2));
  EXPECT_EQ(row["2"], FailurePolynomial(3) * e.pow(2) * q);
  EXPECT_EQ(row["3"], e.pow(3));
}

TEST(Oracle, ShortCircuitPathsWeighCorrectly) {
  auto d = FailurePolynomial::delta();
  auto row = enumerate_paths([](ScriptedSource& src) {
    return src.fail(Event::Gate) || src.fail(Event::Detector) ? std::string("lost") : std::string("ok");
  });
  EXPECT_EQ(row["ok"], q * (FailurePolynomial(1) - d));
  EXPECT_EQ(row["lost"] + row["ok"], FailurePolynomial(1));
}

TEST(Oracle, IdealRowFromOne) {
  auto r = derive_transitions_by_bruteforce(Procedure(steane(), Model::Ideal), "1");
  EXPECT_TRUE(r.uniform);
  EXPECT_EQ(r.patterns, 7u);
  EXPECT_EQ(r.row["0"], q.pow(3));
  EXPECT_EQ(r.row["2"], FailurePolynomial(3) * e * q.pow(2));
  EXPECT_EQ(r.row["3"], FailurePolynomial(3) * e.pow(2) * q);
  EXPECT_EQ(r.row["fail"], e.pow(3));
}

TEST(Oracle, IdealRowsFromTwoAndThreeMatchTable) {
  Procedure proc(steane(), Model::Ideal);
  auto table = build_ideal_chain();
  for (const std::string from : {"2", "3"}) {
    auto r = derive_transitions_by_bruteforce(proc, from);
    EXPECT_TRUE(r.uniform);
    for (const auto& to : table.matrix.states()) {
      auto it = r.row.find(to);
      FailurePolynomial got = it == r.row.end() ? FailurePolynomial() : it->second;
      EXPECT_EQ(got, table.matrix.at(to, from)) << from << "->" << to;
    }
  }
}

TEST(Oracle, AbsorbingRowIsIdentity) {
  auto r = derive_transitions_by_bruteforce(Procedure(steane(), Model::Ideal), "0");
  EXPECT_EQ(r.row.size(), 1u);
  EXPECT_EQ(r.row["0"], FailurePolynomial(1));
  EXPECT_THROW(derive_transitions_by_bruteforce(Procedure(steane(), Model::Ideal), "9"),
               std::invalid_argument);
}

TEST(Oracle, IdealInitialDistribution) {
  auto init = derive_initial_by_bruteforce(Procedure(steane(), Model::Ideal));
  EXPECT_EQ(init["0"], q.pow(7));
  EXPECT_EQ(init["1"], FailurePolynomial(7) * e * q.pow(6));
  EXPECT_EQ(init["3"], FailurePolynomial(28) * e.pow(3) * q.pow(4));
}

TEST(Oracle, LossyInitialDistributionMatchesTable) {
  auto table = build_lossy_chain(DeltaSpec::symbolic());
  auto init = derive_initial_by_bruteforce(Procedure(steane(), Model::Lossy));
  EXPECT_EQ(init["[0,0]"], q.pow(14));
  for (std::size_t i = 0; i < table.matrix.size(); ++i) {
    EXPECT_EQ(init[table.matrix.states()[i]], table.initial[i]) << table.matrix.states()[i];
  }
}

TEST(Oracle, LossyRowsAreUniform) {
  Procedure proc(steane(), Model::Lossy);
  const auto table = build_lossy_chain(DeltaSpec::symbolic());
  for (const auto& s : table.matrix.states()) {
    if (s == "fail") continue;
    EXPECT_TRUE(derive_transitions_by_bruteforce(proc, s).uniform) << s;
  }
}

TEST(Oracle, LossyDiscrepanciesAreConfinedToKnownEntries) {
  auto table = build_lossy_chain(DeltaSpec::symbolic());
  auto oracle = build_procedure_chain(Procedure(steane(), Model::Lossy));
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& d : compare_chains(table, oracle)) got.insert({d.from, d.to});
  std::set<std::pair<std::string, std::string>> want{
      {"[0,1]", "[2,1]"}, {"[0,1]", "fail"}, {"[1,0]", "[3,0]"},
      {"[1,0]", "[2,1]"}, {"[1,0]", "[1,2]"}, {"[1,0]", "fail"}};
  EXPECT_EQ(got, want);
}

TEST(Oracle, LossyRowFromZeroOne) {
  auto d = FailurePolynomial::delta();
  auto qd = FailurePolynomial(1) - d;
  auto ok = q * qd.pow(2);
  auto loss = FailurePolynomial(1) - ok;
  auto r = derive_transitions_by_bruteforce(Procedure(steane(), Model::Lossy), "[0,1]");
  EXPECT_EQ(r.row["[0,0]"], qd * ok.pow(3));
  EXPECT_EQ(r.row["[1,0]"], d);
  EXPECT_EQ(r.row["[1,1]"], qd * FailurePolynomial(3) * loss * ok.pow(2));
  EXPECT_EQ(r.row["[2,1]"], qd * FailurePolynomial(3) * loss.pow(2) * ok);
}

TEST(Oracle, CountingDecomposition) {
  auto c = build_procedure_chain(Procedure(steane(), Model::Ideal));
  auto parts = failure_by_start(c, 6);
  const auto& states = c.matrix.states();
  std::map<std::string, mpq_class> cubic;
  for (std::size_t i = 0; i < states.size(); ++i) cubic[states[i]] = parts[i].coeff(3);
  EXPECT_EQ(cubic["fail"], 7);
  EXPECT_EQ(cubic["2"], 21);
  EXPECT_EQ(cubic["1"], 21);
  EXPECT_EQ(cubic["3"], 0);
}

}  // namespace
}  // namespace ethr
