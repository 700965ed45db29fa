#include <gtest/gtest.h>

#include "serrewt/chars.hpp"
#include "serrewt/numeric.hpp"

using namespace serrewt;

TEST(InertialChar, TrivialHasAllDigitsPMinusOne) {
  EXPECT_EQ(InertialChar::trivial(5, 2).digits(), (Tuple{4, 4}));
  EXPECT_EQ(InertialChar::trivial(3, 3).digits(), (Tuple{2, 2, 2}));
}

TEST(InertialChar, DigitExamples) {
  EXPECT_EQ(InertialChar(5, 2, 7).digits(), (Tuple{2, 1}));
  EXPECT_EQ(InertialChar(5, 2, 14).digits(), (Tuple{4, 2}));
  EXPECT_EQ(InertialChar::from_digits(5, 2, {4, 2}).scalar(), 14);
}

TEST(InertialChar, OmegaScalars) {
  EXPECT_EQ(InertialChar::omega(5, 2, 0).scalar(), 1);
  EXPECT_EQ(InertialChar::omega(5, 2, 1).scalar(), 5);
  // omega_{i+1}^p = omega_i
  EXPECT_EQ(InertialChar::omega(5, 2, 1).pow(5), InertialChar::omega(5, 2, 0));
}

TEST(InertialChar, DigitsRoundTripExhaustive) {
  for (int p : {3, 5, 7})
    for (int f : {1, 2, 3}) {
      const std::int64_t N = ipow(p, f) - 1;
      for (std::int64_t t = 0; t < N; ++t) {
        const InertialChar x(p, f, t);
        const Tuple d = x.digits();
        for (auto v : d) {
          EXPECT_GE(v, 0);
          EXPECT_LE(v, p - 1);
        }
        EXPECT_EQ(InertialChar::from_digits(p, f, d), x);
      }
    }
}

TEST(InertialChar, GroupLaws) {
  const int p = 5, f = 2;
  for (std::int64_t s = 0; s < 24; ++s)
    for (std::int64_t t = 0; t < 24; ++t) {
      const InertialChar x(p, f, s), y(p, f, t);
      EXPECT_EQ(x * y, y * x);
      EXPECT_TRUE((x * x.inv()).is_trivial());
      EXPECT_EQ(x.pow(3), x * x * x);
      EXPECT_EQ((x / y) * y, x);
    }
}

TEST(InertialChar, DigitsOfProductAreNotDigitwiseSums) {
  bool found = false;
  for (std::int64_t s = 0; s < 8 && !found; ++s)
    for (std::int64_t t = 0; t < 8 && !found; ++t) {
      const InertialChar x(3, 2, s), y(3, 2, t);
      const Tuple a = x.digits(), b = y.digits(), c = (x * y).digits();
      found = c != Tuple{a[0] + b[0], a[1] + b[1]};
    }
  EXPECT_TRUE(found);
}

TEST(Decompose, EqualCharacters) {
  const InertialChar x(5, 2, 11);
  const DigitDecomp d = decompose(x, x);
  EXPECT_EQ(d.delta, 0);
  EXPECT_EQ(d.delta_digits, (Tuple{0, 0}));
  EXPECT_EQ(d.gamma, (Tuple{0, 0}));
  EXPECT_TRUE(d.C.empty());
}

TEST(Decompose, NoCarry) {
  const DigitDecomp d = decompose(InertialChar(5, 1, 1), InertialChar(5, 1, 3));
  EXPECT_EQ(d.delta, 2);
  EXPECT_EQ(d.gamma, (Tuple{0}));
  EXPECT_TRUE(d.C.empty());
}

TEST(Decompose, ForcedCarry) {
  const DigitDecomp d = decompose(InertialChar(5, 1, 3), InertialChar(5, 1, 1));
  EXPECT_EQ(d.delta, 2);
  EXPECT_EQ(d.gamma, (Tuple{1}));
  EXPECT_EQ(d.C, (std::vector<int>{0}));
  EXPECT_TRUE(d.in_C(0));
}

TEST(Decompose, RecomposesExhaustively) {
  for (int p : {3, 5})
    for (int f : {1, 2}) {
      const std::int64_t N = ipow(p, f) - 1;
      for (std::int64_t s = 0; s < N; ++s)
        for (std::int64_t t = 0; t < N; ++t) {
          const InertialChar lam(p, f, s), lamp(p, f, t);
          const DigitDecomp d = decompose(lam, lamp);
          const Tuple nu = lam.digits(), nup = lamp.digits();
          for (int i = 0; i < f; ++i) {
            const int prev = (i + f - 1) % f;
            EXPECT_EQ(d.delta_digits[i] + nu[i] - p * d.gamma[prev] + d.gamma[i], nup[i])
                << "p=" << p << " f=" << f << " s=" << s << " t=" << t << " i=" << i;
          }
          EXPECT_EQ(InertialChar::from_digits(p, f, d.delta_digits).scalar(), d.delta);
        }
    }
}

TEST(Bracket, Examples) {
  for (int i = 0; i < 4; ++i) EXPECT_EQ(bracket(3, 2, 0, i), 0);
  EXPECT_EQ(bracket(3, 2, 5, 1), 7);
  for (std::int64_t delta = 0; delta < 8; ++delta)
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(bracket(3, 2, delta, i + 2), bracket(3, 2, delta, i));
      EXPECT_GE(bracket(3, 2, delta, i), 0);
      EXPECT_LE(bracket(3, 2, delta, i), 7);
    }
}

TEST(GaloisChar, ProductsAndTrivial) {
  const Params P = make_params(3, 2, 1);
  const GaloisChar one = GaloisChar::trivial(P);
  EXPECT_TRUE(one.is_trivial());
  const GaloisChar x = make_galois_char(P, 3, 5);
  EXPECT_EQ(x * one, x);
  EXPECT_TRUE((x / x).is_trivial());
  EXPECT_EQ((x * x).unramified_dlog, 10 % P.kE_units());
}
