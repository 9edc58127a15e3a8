#include "hoch/io.hpp"
#include "hoch/testkit.hpp"

#include <gtest/gtest.h>

using namespace hoch;

namespace {

Chain<CuntzMonomial> C(std::string_view s) { return parse_cuntz_chain(s); }
ElementaryTensor<CuntzMonomial> T(std::string_view s) { return C(s).begin()->first; }
using Units = ElementaryTensor<CuntzMonomial>;

Cochain<CuntzMonomial> unit_coefficient() {
  return table_cochain<CuntzMonomial, Rational>(0, {{Units::units(0), Rational(1)}});
}

} // namespace

TEST(Cochain, EvaluatesLinearly) {
  const auto tau = trace_cuntz(Rational(5));
  EXPECT_EQ(tau(C("2 * p[1]q[1] + 1 - p[1]q[2]")), Rational(15));
  EXPECT_EQ(tau(Chain<CuntzMonomial>{}), Rational(0));
  EXPECT_THROW(tau(T("1 (x) 1")), std::invalid_argument);
  EXPECT_THROW(zero_cochain<CuntzMonomial>(-1), std::invalid_argument);
}

TEST(Coboundary, UnitCoefficientFunctional) {
  EXPECT_EQ(coboundary(unit_coefficient())(T("p[1] (x) q[1]")), Rational(1));
  EXPECT_EQ(coboundary(unit_coefficient()).degree(), 1);
}

TEST(Coboundary, IsAdjointOfBoundary) {
  const auto chi = rand_table_cochain(11, 1, 2, 2);
  const auto x = C("p[1] (x) q[2] (x) p[2]q[1] + 3 * (q[1] (x) p[1] (x) p[1,1])");
  EXPECT_EQ(coboundary(chi)(x), chi(boundary(x)));
}

TEST(Symmetrize, Examples) {
  const auto chi = table_cochain<CuntzMonomial, Rational>(1, {{T("p[1] (x) q[1]"), Rational(1)}});
  const auto sym = symmetrize_cochain(chi);
  EXPECT_EQ(sym(T("p[1] (x) q[1]")), Rational(1, 2));
  EXPECT_EQ(sym(T("q[1] (x) p[1]")), Rational(-1, 2));
  const auto again = symmetrize_cochain(sym);
  for (auto s : {"p[1] (x) q[1]", "q[1] (x) p[1]", "1 (x) 1", "p[2] (x) q[1]"})
    EXPECT_EQ(again(T(s)), sym(T(s))) << s;
  EXPECT_EQ(symmetrize_cochain(zero_cochain<CuntzMonomial>(2))(T("p[1] (x) 1 (x) 1")), Rational(0));
}

TEST(TraceCuntz, Examples) {
  const Rational lambda(7, 3);
  const auto tau = trace_cuntz(lambda);
  EXPECT_EQ(tau(T("p[1,2]q[1,2]")), lambda);
  EXPECT_EQ(tau(T("p[1]q[2]")), Rational(0));
  EXPECT_EQ(tau(T("1")), lambda);
}

TEST(TracePower, Examples) {
  const Rational lambda(2);
  const auto tau2 = trace_power(trace_cuntz(lambda), 2);
  EXPECT_EQ(tau2(T("p[1] (x) q[1] (x) 1")), lambda);
  EXPECT_EQ(tau2(T("p[1] (x) q[2] (x) 1")), Rational(0));
  EXPECT_EQ(tau2(T("1 (x) 1 (x) 1")), lambda);
  EXPECT_EQ(tau2(T("q[1] (x) p[2] (x) 1")), Rational(0));
  EXPECT_THROW(trace_power(trace_cuntz(lambda), 1), std::invalid_argument);
  EXPECT_THROW(trace_power(tau2, 2), std::invalid_argument);
}

TEST(OneNormalize, Examples) {
  const auto tau2 = trace_power(trace_cuntz(Rational(1)), 2);
  const auto [lambda, phi0] = one_normalize(Rational(2) * tau2);
  EXPECT_EQ(lambda, Rational(2));
  EXPECT_EQ(phi0(Units::units(2)), Rational(0));

  const auto delta_chi = coboundary(symmetrize_cochain(rand_table_cochain(3, 1)));
  const auto [l2, same] = one_normalize(delta_chi);
  EXPECT_EQ(l2, Rational(0));
  EXPECT_EQ(same(T("p[1] (x) q[1] (x) p[2]")), delta_chi(T("p[1] (x) q[1] (x) p[2]")));

  const auto [l3, zero] = one_normalize(zero_cochain<CuntzMonomial>(2));
  EXPECT_EQ(l3, Rational(0));
  EXPECT_EQ(zero(Units::units(2)), Rational(0));

  EXPECT_THROW(one_normalize(zero_cochain<CuntzMonomial>(1)), std::invalid_argument);
}

TEST(CoboundNormalized, ZeroGivesZero) {
  const std::vector<Units> samples{T("p[1] (x) q[1] (x) 1")};
  const auto psi = cobound_normalized<Rational>(zero_cochain<CuntzMonomial>(2), samples);
  EXPECT_EQ(psi.degree(), 1);
  EXPECT_EQ(psi(T("p[1] (x) q[2]")), Rational(0));
}

TEST(CoboundNormalized, CoboundsDeltaChi) {
  GenParams p;
  p.degree = 2;
  p.seed = 9;
  const auto phi = rand_cocycle(p, Rational(0));
  Rng rng(4);
  std::vector<Units> samples;
  for (int i = 0; i < 3; ++i)
    samples.push_back(rand_tensor(rng, p));
  const auto psi = cobound_normalized<Rational>(phi, samples);
  bool nontrivial = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = rand_chain(rng, p, 2);
    nontrivial = nontrivial || phi(x) != 0;
    EXPECT_EQ(phi(x), psi(boundary(x)));
  }
  EXPECT_TRUE(nontrivial);
}

TEST(CoboundNormalized, RejectsBadInput) {
  const std::vector<Units> samples{T("p[1] (x) q[1] (x) p[2]")};
  const auto tau2 = trace_power(trace_cuntz(Rational(1)), 2);
  EXPECT_THROW(cobound_normalized<Rational>(tau2, samples), std::invalid_argument);
  const auto lopsided = table_cochain<CuntzMonomial, Rational>(2, {{samples[0], Rational(1)}});
  EXPECT_THROW(cobound_normalized<Rational>(lopsided, samples), std::invalid_argument);
  const std::vector<Units> wrong_degree{T("p[1] (x) q[1]")};
  EXPECT_THROW(cobound_normalized<Rational>(zero_cochain<CuntzMonomial>(2), wrong_degree),
               std::invalid_argument);
  EXPECT_THROW(cobound_normalized<Rational>(zero_cochain<CuntzMonomial>(0), samples),
               std::invalid_argument);
}

TEST(TraceFromPair, CyclicClassIndicator) {
  TracePair<Rational> pair{cyclic_class_indicator(Word{1, 2}), [](const Word &) { return Rational(0); },
                           Rational(0)};
  const auto tau = trace_from_pair(pair);
  EXPECT_EQ(tau(T("p[1,2]")), Rational(1));
  EXPECT_EQ(tau(T("p[2,1]")), Rational(1));
  EXPECT_EQ(tau(T("p[1]q[3]")), Rational(0));
  EXPECT_EQ(tau(T("q[1,2]")), Rational(0));
}

TEST(TraceFromPair, UnitMismatchThrows) {
  TracePair<Rational> pair{[](const Word &) { return Rational(1); }, [](const Word &) { return Rational(1); },
                           Rational(2)};
  EXPECT_THROW(trace_from_pair(pair), std::invalid_argument);
}

TEST(InvariantProject, Examples) {
  const LinComb<FreeWord> x(FreeWord{Word{1, 2}});
  LinComb<FreeWord> expected;
  expected.add(FreeWord{Word{1, 2}}, Rational(1, 2));
  expected.add(FreeWord{Word{2, 1}}, Rational(1, 2));
  EXPECT_EQ(invariant_project(x), expected);
  const LinComb<FreeWord> fixed(FreeWord{Word{1, 1}});
  EXPECT_EQ(invariant_project(fixed), fixed);
}

TEST(InvariantProject, Errors) {
  EXPECT_THROW(invariant_project(LinComb<FreeWord>(FreeWord::unit())), std::invalid_argument);
  LinComb<FreeWord> mixed(FreeWord{Word{1}});
  mixed.add(FreeWord{Word{1, 2}}, Rational(1));
  EXPECT_THROW(invariant_project(mixed), std::invalid_argument);
}

TEST(RandCocycle, TracePart) {
  GenParams p;
  p.degree = 2;
  EXPECT_EQ(rand_cocycle(p, Rational(3))(Units::units(2)), Rational(3));
  p.degree = 1;
  EXPECT_THROW(rand_cocycle(p, Rational(1)), std::invalid_argument);
  EXPECT_EQ(rand_cocycle(p, Rational(0))(Units::units(1)), Rational(0));
}
