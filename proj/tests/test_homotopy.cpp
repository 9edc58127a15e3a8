#include "hoch/homotopy.hpp"
#include "hoch/io.hpp"

#include <gtest/gtest.h>

using namespace hoch;

namespace {

Chain<CuntzMonomial> C(std::string_view s) { return parse_cuntz_chain(s); }
Chain<FreeWord> F(std::string_view s) { return parse_free_chain(s); }
ElementaryTensor<CuntzMonomial> T(std::string_view s) { return C(s).begin()->first; }
CuntzMonomial m(std::string_view s) { return parse_cuntz_monomial(s); }
FreeWord w(std::initializer_list<Index> letters) { return {Word(letters)}; }

} // namespace

TEST(RhoSimple, Examples) {
  EXPECT_EQ(rho_simple(m("p[1]q[2]")), C("p[1] (x) q[2]"));
  EXPECT_EQ(rho_simple(m("1")), C("1 (x) 1"));
  EXPECT_EQ(rho_simple(m("q[3]")), C("1 (x) q[3]"));
}

TEST(RhoLong, Examples) {
  EXPECT_EQ(rho_long_cuntz(m("p[1,2]q[3]")),
            C("1 (x) p[1,2]q[3] + p[1] (x) p[2]q[3] + p[1,2] (x) q[3]"));
  EXPECT_TRUE(rho_long_cuntz(m("1")).is_zero());
  EXPECT_EQ(rho_long_cuntz(m("q[1,2]")), C("q[2] (x) q[1] + 1 (x) q[1,2]"));
}

TEST(RhoFree, Examples) {
  EXPECT_EQ(rho_long_free(w({1, 2})), F("w[] (x) w[1,2] + w[1] (x) w[2]"));
  EXPECT_TRUE(rho_long_free(FreeWord::unit()).is_zero());
  EXPECT_EQ(rho_long_free(w({5})), F("w[] (x) w[5]"));
}

TEST(Split, BasisMismatchThrows) {
  const SplitSpec<FreeWord> wrong{SplitKind::simple_cuntz};
  EXPECT_THROW(split(wrong, w({1})), std::invalid_argument);
  const SplitSpec<CuntzMonomial> wrong_cuntz{SplitKind::long_free};
  EXPECT_THROW(split(wrong_cuntz, m("p[1]")), std::invalid_argument);
}

TEST(Split, ElementIsLinear) {
  const auto x = as_element(C("2 * p[1] - q[3]"));
  EXPECT_EQ(split_element(simple_cuntz_spec(), x), C("2 * (p[1] (x) 1) - 1 (x) q[3]"));
}

TEST(SOperator, Examples) {
  EXPECT_EQ(s_apply(simple_cuntz_spec(), C("p[1]q[2] (x) q[3]")),
            C("-1 * (p[1] (x) q[2] (x) q[3]) + p[1]q[2] (x) 1 (x) q[3]"));
  EXPECT_TRUE(s_apply(simple_cuntz_spec(), C("1 (x) 1")).is_zero());
  EXPECT_THROW(s_slot(simple_cuntz_spec(), 3, T("1 (x) 1")), std::out_of_range);
  EXPECT_THROW(s_slot(simple_cuntz_spec(), 0, T("1 (x) 1")), std::out_of_range);
}

TEST(ROperator, Examples) {
  const auto r = long_cuntz_spec(WeightMode::length_weighted);
  EXPECT_EQ(s_apply(r, C("p[1] (x) p[2]")), C("-1/2 * (1 (x) p[1] (x) p[2]) + 1/2 * (p[1] (x) 1 (x) p[2])"));
  EXPECT_TRUE(s_apply(r, C("1 (x) 1")).is_zero());
}

TEST(POperator, Examples) {
  const auto spec = simple_cuntz_spec();
  EXPECT_TRUE(P_apply(spec, C("1 (x) 1")).is_zero());
  EXPECT_EQ(P_apply(spec, C("p[1] (x) q[1]")), C("p[1] (x) q[1] - 1 (x) 1"));
  EXPECT_EQ(P_apply(spec, C("q[1] (x) p[2]")), C("q[1] (x) p[2]"));
  EXPECT_TRUE(P_apply(spec, Chain<CuntzMonomial>{}).is_zero());
}

TEST(POperator, DegreeZeroIsDs) {
  const auto spec = simple_cuntz_spec();
  const auto x = C("p[1]q[2]");
  EXPECT_EQ(P_apply(spec, x), boundary(s_apply(spec, x)));
}

TEST(PTerms, Count) {
  const auto spec = simple_cuntz_spec();
  EXPECT_EQ(P_terms(spec, 1, C("p[1] (x) q[1]")).size(), 8u);
  EXPECT_EQ(P_terms(spec, 2, C("p[1] (x) q[1] (x) p[2]")).size(), 12u);
}

TEST(PTerms, DiagonalReturnsInputForSimpleSplit) {
  const auto spec = simple_cuntz_spec();
  const auto x = T("p[1]q[2] (x) q[1] (x) p[3]");
  for (std::size_t i = 1; i <= 2; ++i)
    EXPECT_EQ(ds_term(spec, i, i, x), chain_of(x));
}

TEST(PTerms, SumIsP) {
  const auto spec = long_cuntz_spec();
  const auto x = C("p[1]q[2] (x) q[1] (x) p[3] + 2 * (q[2] (x) p[1,2] (x) 1)");
  Chain<CuntzMonomial> sum;
  for (const auto &t : P_terms(spec, 2, x))
    sum += t.value;
  EXPECT_EQ(sum, P_apply(spec, x));
}

TEST(PTerms, Errors) {
  const auto x = C("p[1] (x) q[1]");
  EXPECT_THROW(P_terms(long_cuntz_spec(WeightMode::length_weighted), 1, x), std::invalid_argument);
  EXPECT_THROW(P_terms(simple_cuntz_spec(), 0, C("p[1]")), std::invalid_argument);
  EXPECT_THROW(P_terms(simple_cuntz_spec(), 2, x), std::invalid_argument);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi_apply(C("1 (x) 1")), C("1 (x) 1"));
  EXPECT_EQ(phi_apply(C("p[1] (x) q[1]")), C("1 (x) 1"));
  EXPECT_TRUE(phi_apply(C("q[1] (x) p[2]")).is_zero());
  EXPECT_THROW(phi_apply(C("p[1]")), std::invalid_argument);
}

TEST(PhiHomotopy, Examples) {
  const auto h = phi_homotopy(1);
  EXPECT_TRUE(h(C("1 (x) 1")).is_zero());
  EXPECT_TRUE(h(C("p[1] (x) q[1]")).is_zero());
  const auto x = C("p[1] (x) q[1]");
  EXPECT_EQ(boundary(h(x)) + h(boundary(x)), C("p[1] (x) q[1] - 1 (x) 1"));
  EXPECT_THROW(phi_homotopy(0), std::invalid_argument);
}

TEST(PhiHomotopy, MatchesExplicitTwoFactorForm) {
  // n = 1: s~ = s/2 + s o (I - P/2)
  const auto spec = simple_cuntz_spec();
  const auto x = C("p[1,2] (x) p[1]q[2] + q[1] (x) p[1]q[3]");
  const auto y = x - P_apply(spec, x) / Rational(2);
  EXPECT_EQ(phi_homotopy(1)(x), s_apply(spec, x) / Rational(2) + s_apply(spec, y));
}

TEST(FreeSplit, SecondReductionOnWords) {
  const auto r = long_free_spec(WeightMode::length_weighted);
  const auto x = F("w[1,2] (x) w[3]");
  EXPECT_TRUE(cyclic_norm(P_apply(r, x) - x).is_zero());
}
