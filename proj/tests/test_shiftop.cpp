#include <gtest/gtest.h>

#include <cmath>

#include "liecomp/shiftop/classify.hpp"
#include "liecomp/shiftop/numeric.hpp"
#include "liecomp/shiftop/serialize.hpp"
#include "liecomp/shiftop/weight.hpp"
#include "liecomp/verma/generators.hpp"
#include "support.hpp"

using namespace liecomp;
using exact::parse_qh;
using exact::parse_qhn;
using exact::Qh;
using exact::Rational;
using shiftop::OperatorClass;
using shiftop::ShiftOperator;

namespace {

ShiftOperator op(std::initializer_list<std::pair<int, const char*>> comps) {
  ShiftOperator r;
  for (const auto& [d, c] : comps) r += ShiftOperator::component(d, parse_qhn(c));
  return r;
}

const ShiftOperator kL0 = op({{0, "n + h"}});
const ShiftOperator kZ = op({{1, "1"}});
const ShiftOperator kD = op({{-1, "n"}});
const ShiftOperator kL1 = op({{-1, "n*(n + 2*h - 1)"}});
const ShiftOperator kL2 = op({{-2, "n*(n - 1)*(n + 3*h - 2)"}});
const ShiftOperator kLm2 = op({{2, "(n + 3*h)/((n + 2*h)*(n + 2*h + 1))"}});

shiftop::WeightFunction symbolic_weight() { return shiftop::WeightFunction(Qh::variable()); }

}  // namespace

TEST(ShiftOperatorTest, ApplyToMonomial) {
  auto a = kL0.apply_to_monomial(3);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].first, 3);
  EXPECT_EQ(a[0].second, parse_qh("3 + h"));
  auto b = kZ.apply_to_monomial(5);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].first, 6);
  EXPECT_EQ(b[0].second, Qh(1));
  EXPECT_TRUE(ShiftOperator{}.apply_to_monomial(4).empty());
}

TEST(ShiftOperatorTest, NegativeExponentIsAnError) {
  EXPECT_TRUE(kD.apply_to_monomial(0).empty());
  EXPECT_THROW(op({{-1, "1"}}).apply_to_monomial(0), NegativeExponentError);
}

TEST(ShiftOperatorTest, AddAndScale) {
  EXPECT_TRUE(shiftop::add(op({{0, "n"}}), op({{0, "-n"}})).is_zero());
  EXPECT_TRUE(shiftop::scale(op({{-1, "n"}}), Qh(0)).is_zero());
  auto s = shiftop::add(op({{0, "n"}}), kZ);
  EXPECT_EQ(s.components().size(), 2u);
  EXPECT_EQ(s.coefficient(0), parse_qhn("n"));
  EXPECT_EQ(s.coefficient(1), parse_qhn("1"));
}

TEST(ShiftOperatorTest, ComposeExamples) {
  EXPECT_EQ(shiftop::compose(kD, kZ), op({{0, "n + 1"}}));
  EXPECT_EQ(shiftop::compose(kZ, kD), op({{0, "n"}}));
  const auto expected = op({{0, "(n + 1)*(n + 2)*(n + 3*h)^2/((n + 2*h)*(n + 2*h + 1))"}});
  EXPECT_EQ(shiftop::compose(kL2, kLm2), expected);
  // the same product through the oracle's differential operators
  for (int n = 0; n <= 12; ++n)
    for (auto h0 : {oracle::q(1, 2), oracle::q(3), oracle::q(5, 7)}) {
      auto lhs = support::on_monomial(expected, n, h0);
      auto rhs = oracle::L(2, h0, oracle::L(-2, h0, oracle::monomial(n)));
      EXPECT_EQ(lhs, rhs) << "n=" << n;
    }
}

TEST(ShiftOperatorTest, CommutatorExamples) {
  EXPECT_EQ(shiftop::commutator(kD, kZ), ShiftOperator::identity());
  EXPECT_EQ(shiftop::commutator(kL1, kZ), op({{0, "2*n + 2*h"}}));
  EXPECT_TRUE(shiftop::commutator(kL2, kL2).is_zero());
}

TEST(ShiftOperatorTest, EqualsExamples) {
  EXPECT_TRUE(shiftop::equals(kL0, kL0));
  EXPECT_TRUE(shiftop::equals(shiftop::commutator(kL1, kZ), kL0.scaled(Qh(2))));
  EXPECT_FALSE(shiftop::equals(kL1, kZ));
}

TEST(ShiftOperatorTest, AdjointExamples) {
  const auto w = symbolic_weight();
  EXPECT_EQ(shiftop::adjoint(kZ, w), kL1);
  EXPECT_EQ(shiftop::adjoint(kL2, w), kLm2);
  EXPECT_TRUE(shiftop::adjoint(ShiftOperator{}, w).is_zero());
  EXPECT_EQ(shiftop::adjoint(kL0, w), kL0);
}

TEST(ShiftOperatorTest, ClassifyExamples) {
  EXPECT_EQ(shiftop::classify(ShiftOperator::identity()), OperatorClass::bounded);
  EXPECT_EQ(shiftop::classify(op({{0, "1/(n + 1)^2"}})), OperatorClass::trace_class);
  EXPECT_EQ(shiftop::classify(op({{0, "1/(n + 1)"}})), OperatorClass::hilbert_schmidt);
  EXPECT_EQ(shiftop::classify(kL1), OperatorClass::unbounded);
  EXPECT_EQ(shiftop::classify(ShiftOperator{}), OperatorClass::zero);
  // the orthonormal matrix element of z is ~ n, of d/dz ~ 1/n times n
  EXPECT_EQ(shiftop::classify(kZ), OperatorClass::unbounded);
  EXPECT_EQ(shiftop::classify(op({{1, "1/(n + 2*h)"}})), OperatorClass::bounded);
  EXPECT_TRUE(shiftop::within(OperatorClass::trace_class, OperatorClass::hilbert_schmidt));
  EXPECT_FALSE(shiftop::within(OperatorClass::bounded, OperatorClass::hilbert_schmidt));
}

TEST(ShiftOperatorTest, WeightFunction) {
  const auto w = symbolic_weight();
  EXPECT_EQ(w(0), Qh(1));
  EXPECT_EQ(w(1), parse_qh("2*h"));
  EXPECT_EQ(w(2), parse_qh("4*h*(2*h + 1)"));
  for (auto h0 : {oracle::q(1, 2), oracle::q(2, 3), oracle::q(4)})
    for (int n = 0; n <= 15; ++n) {
      Rational lib = exact::evaluate_at(w(n), support::from_q(h0));
      EXPECT_EQ(support::to_q(lib), oracle::weight(n, h0));
      EXPECT_GT(lib.sign(), 0);
    }
  EXPECT_THROW(w(-1), DomainError);
}

TEST(NumericTest, TruncateExamples) {
  auto m = shiftop::truncate_numeric(kL0, 2, Rational(1, 2));
  ASSERT_EQ(m.size, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(m(i, j), i == j ? 0.5 + i : 0.0);
  auto zero = shiftop::truncate_numeric(ShiftOperator{}, 4, Rational(1, 2));
  for (double v : zero.data) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(shiftop::truncate_numeric(op({{2, "1/(n + 2*h)"}}), 3, Rational(-1)), DomainError);
  EXPECT_THROW(shiftop::truncate_numeric(kL0, 3, Rational(0)), DomainError);
}

TEST(NumericTest, TruncationMatchesOracleMatrixElements) {
  const oracle::Q h0 = oracle::q(1, 2);
  auto m = shiftop::truncate_numeric(kL1, 8, Rational(1, 2));
  for (int col = 0; col <= 8; ++col)
    for (int row = 0; row <= 8; ++row) {
      // <e_row, L_1 e_col> = <L_1 z^col, z^row> / sqrt(w(row) w(col))
      oracle::Q ip = oracle::matrix_element({'e', 1}, col, row, h0);
      double expected = ip.get_d() / std::sqrt(oracle::weight(row, h0).get_d() * oracle::weight(col, h0).get_d());
      EXPECT_NEAR(m(row, col), expected, 1e-9 * (1 + std::abs(expected)));
    }
}

TEST(NumericTest, PartialSumExamples) {
  for (double s : shiftop::hs_partial_sums(ShiftOperator{}, 10, Rational(1, 2))) EXPECT_EQ(s, 0.0);
  auto s = shiftop::hs_partial_sums(op({{0, "1/(n + 1)"}}), 3, Rational(1, 2));
  EXPECT_DOUBLE_EQ(s[3], 1.0 + 1.0 / 4 + 1.0 / 9 + 1.0 / 16);
  auto id = shiftop::hs_partial_sums(ShiftOperator::identity(), 20, Rational(1, 2));
  for (int k = 0; k <= 20; ++k) EXPECT_DOUBLE_EQ(id[k], k + 1.0);
}

TEST(NumericTest, SpecialWeightUsesLimitValue) {
  // A∘D has coefficient n/(n + 2h - 3); at h0 = 3/2 the specialized form is
  // 1, but D still kills z^0.
  ShiftOperator a = shiftop::compose(op({{1, "1/(n + 2*h - 2)"}}), kD);
  EXPECT_EQ(a, op({{0, "n/(n + 2*h - 3)"}}));
  auto m = shiftop::truncate_numeric(a, 4, Rational(3, 2));
  EXPECT_EQ(m(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(m(1, 1), 1.0);
  auto s = shiftop::hs_partial_sums(a, 4, Rational(3, 2));
  EXPECT_DOUBLE_EQ(s[0], 0.0);
  EXPECT_DOUBLE_EQ(s[4], 4.0);
}

TEST(SerializeTest, RoundTrip) {
  for (const auto& a : {kL0, kL1, kL2, kLm2, ShiftOperator{}, shiftop::add(kL1, kLm2)}) {
    auto j = shiftop::to_json(a);
    EXPECT_EQ(shiftop::shift_operator_from_json(j), a);
    EXPECT_EQ(shiftop::shift_operator_from_json(nlohmann::ordered_json::parse(j.dump())), a);
  }
  EXPECT_EQ(shiftop::to_string(kD), "{(-1, n)}");
  EXPECT_EQ(shiftop::to_string(ShiftOperator{}), "{}");
  EXPECT_THROW(shiftop::shift_operator_from_json(nlohmann::ordered_json::parse(R"([{"shift": 1}])")), MalformedInput);
  EXPECT_THROW(shiftop::shift_operator_from_json(nlohmann::ordered_json::parse(R"({"shift": 1})")), MalformedInput);
}

// ---- properties on random operators ----------------------------------------

class RandomOperators : public ::testing::Test {
 protected:
  oracle::Generator gen{424242};
  std::pair<oracle::RandomOperator, ShiftOperator> draw(int comps = 3) {
    auto o = gen.shift_operator(comps);
    return {o, support::from_oracle(o)};
  }
};

TEST_F(RandomOperators, LibraryActionMatchesOracle) {
  for (int t = 0; t < 30; ++t) {
    auto [o, a] = draw();
    for (auto h0 : {oracle::q(1, 2), oracle::q(7, 3)})
      for (int n = 0; n <= 20; ++n) EXPECT_EQ(support::on_monomial(a, n, h0), o.apply(oracle::monomial(n), h0));
  }
}

TEST_F(RandomOperators, ComposeAgreesWithSuccessiveApplication) {
  for (int t = 0; t < 100; ++t) {
    auto [oa, a] = draw();
    auto [ob, b] = draw();
    ShiftOperator ab = shiftop::compose(a, b);
    for (int n = 0; n <= 30; ++n) {
      // exact in Q(h): apply B, then A, term by term
      std::map<int, Qh> expected;
      for (const auto& [k, c] : b.apply_to_monomial(n))
        for (const auto& [k2, c2] : a.apply_to_monomial(k)) {
          Qh& slot = expected[k2];
          slot = slot + c * c2;
        }
      std::map<int, Qh> got;
      for (const auto& [k, c] : ab.apply_to_monomial(n)) got[k] = c;
      for (auto it = expected.begin(); it != expected.end();) it = it->second.is_zero() ? expected.erase(it) : ++it;
      ASSERT_EQ(got, expected) << "trial " << t << " n=" << n;
    }
    // and through the oracle at a numeric weight
    const auto h0 = oracle::q(5, 2);
    for (int n = 0; n <= 10; ++n)
      EXPECT_EQ(support::on_monomial(ab, n, h0), oa.apply(ob.apply(oracle::monomial(n), h0), h0));
  }
}

TEST_F(RandomOperators, CommutatorIsBilinearAntisymmetricAndJacobi) {
  for (int t = 0; t < 10; ++t) {
    auto a = draw(2).second, b = draw(2).second, c = draw(1).second;
    const Qh s = parse_qh("h + 2/3");
    EXPECT_EQ(shiftop::commutator(a, b), -shiftop::commutator(b, a));
    EXPECT_EQ(shiftop::commutator(a + c.scaled(s), b), shiftop::commutator(a, b) + shiftop::commutator(c, b).scaled(s));
    ShiftOperator jac = shiftop::commutator(a, shiftop::commutator(b, c)) +
                        shiftop::commutator(b, shiftop::commutator(c, a)) +
                        shiftop::commutator(c, shiftop::commutator(a, b));
    EXPECT_TRUE(jac.is_zero()) << shiftop::to_string(jac);
  }
}

TEST_F(RandomOperators, AdjointIsAnAntiInvolution) {
  const auto w = symbolic_weight();
  for (int t = 0; t < 20; ++t) {
    auto a = draw().second, b = draw().second;
    EXPECT_EQ(shiftop::adjoint(shiftop::adjoint(a, w), w), a);
    EXPECT_EQ(shiftop::adjoint(shiftop::compose(a, b), w),
              shiftop::compose(shiftop::adjoint(b, w), shiftop::adjoint(a, w)));
  }
}

TEST_F(RandomOperators, AdjointBalancesInnerProducts) {
  const auto w = symbolic_weight();
  const oracle::Q h0 = oracle::q(1, 2);
  for (int t = 0; t < 10; ++t) {
    auto [o, a] = draw();
    ShiftOperator as = shiftop::adjoint(a, w);
    for (int m = 0; m <= 20; ++m) {
      auto am = o.apply(oracle::monomial(m), h0);
      for (int n = 0; n <= 20; ++n) {
        // <A z^m, z^n> = <z^m, A* z^n>
        oracle::Q lhs = am.count(n) ? am.at(n) * oracle::weight(n, h0) : oracle::Q(0);
        auto asn = support::on_monomial(as, n, h0);
        oracle::Q rhs = asn.count(m) ? asn.at(m) * oracle::weight(m, h0) : oracle::Q(0);
        ASSERT_EQ(lhs, rhs) << "m=" << m << " n=" << n;
        EXPECT_EQ(support::to_q(shiftop::monomial_inner_product(a, m, n, support::from_q(h0))), lhs);
      }
    }
  }
}

TEST_F(RandomOperators, ClassMatchesPartialSums) {
  const int N = 200;
  int convergent = 0, divergent = 0;
  for (int t = 0; t < 60; ++t) {
    auto a = draw().second;
    auto s = shiftop::hs_partial_sums(a, 2 * N, Rational(1, 2));
    double late = s[2 * N] - s[N], early = s[N] - s[N / 2];
    double ratio = late / early;
    if (shiftop::within(shiftop::classify(a), OperatorClass::hilbert_schmidt)) {
      ++convergent;
      EXPECT_LT(ratio, 0.75) << shiftop::to_string(a);
      EXPECT_LT(s[2 * N] / s[N] - 1, 0.05) << shiftop::to_string(a);
    } else {
      ++divergent;
      EXPECT_GT(ratio, 1.5) << shiftop::to_string(a);
    }
  }
  EXPECT_GT(convergent, 5);
  EXPECT_GT(divergent, 5);
}
