#include "hoch/chains.hpp"
#include "hoch/io.hpp"

#include <gtest/gtest.h>

using namespace hoch;

namespace {

Chain<CuntzMonomial> C(std::string_view s) { return parse_cuntz_chain(s); }
ElementaryTensor<CuntzMonomial> T(std::string_view s) { return C(s).begin()->first; }

} // namespace

TEST(FaceMap, Examples) {
  EXPECT_EQ(face_map(1, C("p[1] (x) q[1] (x) q[2]")), C("-1 * (p[1]q[1] (x) q[2])"));
  EXPECT_EQ(face_map(2, C("p[1] (x) q[2] (x) p[2]")), C("p[1] (x) 1"));
  EXPECT_TRUE(face_map(1, C("q[1] (x) p[2] (x) 1")).is_zero());
  EXPECT_EQ(face_map(0, C("p[1] (x) q[1]")), C("1"));
}

TEST(FaceMap, Errors) {
  EXPECT_THROW(face_map(0, T("p[1]")), std::invalid_argument);
  EXPECT_THROW(face_map(2, T("p[1] (x) q[1]")), std::out_of_range);
}

TEST(Boundary, Examples) {
  EXPECT_EQ(boundary(C("p[1] (x) q[1]")), C("1 - p[1]q[1]"));
  EXPECT_EQ(boundary(C("1 (x) 1 (x) 1")), C("1 (x) 1"));
  EXPECT_TRUE(boundary(C("1 (x) 1 (x) 1 (x) 1")).is_zero());
  EXPECT_THROW(boundary(C("p[1]")), std::invalid_argument);
}

TEST(Boundary, SquaresToZero) {
  const auto x = C("p[1,2] (x) q[2] (x) p[2]q[1] (x) q[1,1]") + C("2 * (q[3] (x) p[3] (x) p[1] (x) 1)");
  EXPECT_TRUE(boundary(boundary(x)).is_zero());
}

TEST(CyclicShift, Signs) {
  EXPECT_EQ(cyclic_shift(C("p[1] (x) q[1]")), C("-1 * (q[1] (x) p[1])"));
  EXPECT_EQ(cyclic_shift(C("p[1] (x) p[2] (x) p[3]")), C("p[3] (x) p[1] (x) p[2]"));
  const auto x = C("p[1] (x) q[2] (x) p[3] (x) 1");
  EXPECT_EQ(cyclic_shift_pow(x, 4), x);
}

TEST(CyclicNorm, Examples) {
  EXPECT_TRUE(cyclic_norm(C("1 (x) 1")).is_zero());
  EXPECT_EQ(cyclic_norm(C("1 (x) 1 (x) 1")), C("3 * (1 (x) 1 (x) 1)"));
}

TEST(CyclicEquiv, Examples) {
  const auto x = C("p[1] (x) q[2] (x) q[1]");
  EXPECT_TRUE(cyclic_equiv(x, cyclic_shift(x)));
  EXPECT_FALSE(cyclic_equiv(C("1 (x) 1 (x) 1"), Chain<CuntzMonomial>{}));
  EXPECT_TRUE(cyclic_equiv(C("1 (x) 1"), Chain<CuntzMonomial>{}));
  EXPECT_THROW(cyclic_equiv(C("1 (x) 1"), C("1 (x) 1 (x) 1")), std::invalid_argument);
}

TEST(Transitions, Profiles) {
  EXPECT_EQ(transition_profile(T("p[1] (x) q[1]")), (TransitionProfile{1, 0}));
  EXPECT_EQ(transition_profile(T("q[1] (x) p[2]")), (TransitionProfile{1, 1}));
  EXPECT_EQ(transition_profile(T("1 (x) 1")), (TransitionProfile{0, 0}));
  EXPECT_EQ(transition_profile(T("p[1]q[2] (x) p[2]q[1]")), (TransitionProfile{2, 0}));
}

TEST(Transitions, InvariantUnderRotation) {
  const auto x = T("p[1]q[2] (x) p[3] (x) q[1] (x) p[2]q[2]");
  auto y = x;
  for (int j = 0; j < 4; ++j) {
    y = rotate_right(y);
    EXPECT_EQ(transition_profile(y), transition_profile(x));
  }
}

TEST(Length, OfTensors) {
  EXPECT_EQ(chain_length(T("p[1] (x) q[1]")), 2u);
  EXPECT_EQ(chain_length(T("1 (x) 1 (x) 1")), 0u);
  EXPECT_EQ(chain_length(T("p[1,2]q[3] (x) 1")), 3u);
}

TEST(Fault, ScopedFlipRestores) {
  const auto x = C("p[1] (x) q[1] (x) q[2]");
  const auto clean = boundary(x);
  {
    fault::ScopedFaceSignFlip flip;
    EXPECT_NE(boundary(x), clean);
  }
  EXPECT_EQ(boundary(x), clean);
}
