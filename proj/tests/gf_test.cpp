#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "serrewt/errors.hpp"
#include "serrewt/gf.hpp"

using namespace serrewt;
using namespace serrewt::gf;

namespace {

Elt random_elt(const Field& F, std::mt19937_64& rng) {
  return Elt{static_cast<std::uint32_t>(rng() % F.order())};
}

TruncPoly random_poly(const Field& F, RingShape shape, std::mt19937_64& rng) {
  TruncPoly x(shape);
  for (int i = 0; i < shape.f; ++i)
    for (int j = 0; j < shape.length; ++j) x.set(i, j, random_elt(F, rng));
  return x;
}

}  // namespace

TEST(Field, PrimeFieldF3) {
  const auto F = make_field(3, 1);
  EXPECT_EQ(F->degree(), 1);
  EXPECT_EQ(F->order(), 3);
  EXPECT_EQ(F->generator(), Elt{2});
}

TEST(Field, F9GeneratorHasOrder8) {
  const auto F = make_field(3, 2);
  const Elt g = F->generator();
  EXPECT_NE(F->pow(g, 4), F->one());
  EXPECT_EQ(F->pow(g, 8), F->one());
  EXPECT_EQ(F->multiplicative_order(g), 8);
}

TEST(Field, F25ModulusHasNoRoot) {
  const auto F = make_field(5, 2);
  const auto& mod = F->modulus();
  ASSERT_EQ(mod.size(), 3u);
  // A monic quadratic is irreducible iff it has no root in F_5.
  for (int x = 0; x < 5; ++x) EXPECT_NE((mod[0] + mod[1] * x + mod[2] * x * x) % 5, 0) << "root " << x;
  EXPECT_TRUE(is_irreducible(5, mod));
}

TEST(Field, IrreducibilityRejectsProducts) {
  // (X+1)(X+2) = X^2 + 3X + 2 over F_5.
  const std::vector<int> reducible{2, 3, 1};
  EXPECT_FALSE(is_irreducible(5, reducible));
}

TEST(Field, RejectsBadCharacteristic) {
  try {
    make_field(2, 1);
    FAIL() << "p = 2 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharacteristicTwo);
  }
  try {
    make_field(9, 1);
    FAIL() << "p = 9 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(Field, CachedAndDeterministic) {
  EXPECT_EQ(make_field(7, 2).get(), make_field(7, 2).get());
  EXPECT_EQ(make_field(7, 2)->modulus(), Field(7, 2).modulus());
}

TEST(Field, AxiomsOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (auto [p, m] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{7, 3}}) {
    const auto F = make_field(p, m);
    for (int it = 0; it < 300; ++it) {
      const Elt a = random_elt(*F, rng), b = random_elt(*F, rng), c = random_elt(*F, rng);
      EXPECT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
      EXPECT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
      EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
      EXPECT_EQ(F->add(a, F->neg(a)), F->zero());
      EXPECT_EQ(F->frobenius(F->add(a, b)), F->add(F->frobenius(a), F->frobenius(b)));
      if (a != F->zero()) {
        EXPECT_EQ(F->mul(a, F->inv(a)), F->one());
        EXPECT_EQ(F->exp(F->log(a)), a);
      }
    }
  }
}

TEST(Phi, ConstantOneIsFixed) {
  const RingShape shape{3, 2, 24};
  const TruncPoly one = constant(shape, tensor_one(2));
  EXPECT_EQ(phi(one), one);
}

TEST(Phi, KillsUToTheE) {
  const auto F = make_field(3, 2);
  const RingShape shape{3, 2, 24};  // e = 8
  for (int i = 0; i < 2; ++i) EXPECT_TRUE(phi(monomial(shape, i, 8, F->one())).is_zero());
}

TEST(Phi, SubstitutesAndShifts) {
  const auto F = make_field(3, 2);
  const RingShape shape{3, 2, 24};
  EXPECT_EQ(phi(monomial(shape, 0, 2, F->one())), monomial(shape, 1, 6, F->one()));
}

TEST(Phi, FIteratesAreUToUPowQ) {
  std::mt19937_64 rng(11);
  const auto F = make_field(3, 2);
  const RingShape shape{3, 2, 48};
  for (int it = 0; it < 20; ++it) {
    const TruncPoly x = random_poly(*F, shape, rng);
    TruncPoly y = x;
    for (int k = 0; k < 2; ++k) y = phi(y);
    TruncPoly expect(shape);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j * 9 < shape.length; ++j) expect.set(i, j * 9, x.coeff(i, j));
    EXPECT_EQ(y, expect);
  }
}

TEST(GaloisAct, FixesConstants) {
  const auto F = make_field(3, 2);
  const RingShape shape{3, 2, 24};
  const Elt zeta = F->element_of_order(8);
  const std::vector<std::int64_t> w{0, 0};
  const TruncPoly one = constant(shape, tensor_one(2));
  EXPECT_EQ(galois_act(*F, zeta, w, one), one);
}

TEST(GaloisAct, MovesUInDegreeOne) {
  const auto F = make_field(3, 1);
  const RingShape shape{3, 1, 6};
  const Elt zeta = F->element_of_order(2);
  const std::vector<std::int64_t> w{0};
  const TruncPoly u = monomial(shape, 0, 1, F->one());
  const TruncPoly gu = galois_act(*F, zeta, w, u);
  EXPECT_EQ(gu, monomial(shape, 0, 1, zeta));
  EXPECT_NE(gu, u);
}

TEST(GaloisAct, FixedDegreesBelowEKL) {
  // Per component exactly one degree in [0, p^f-1) is fixed when w = 0.
  const auto F = make_field(3, 2);
  const RingShape shape{3, 2, 24};
  const Elt zeta = F->element_of_order(8);
  const std::vector<std::int64_t> w{0, 0};
  for (int i = 0; i < 2; ++i) {
    int fixed = 0;
    for (int j = 0; j < 8; ++j) {
      const TruncPoly x = monomial(shape, i, j, F->one());
      fixed += galois_act(*F, zeta, w, x) == x;
    }
    EXPECT_EQ(fixed, 1) << "component " << i;
  }
}

TEST(GaloisAct, OrderDividesPfMinusOne) {
  std::mt19937_64 rng(3);
  const auto F = make_field(3, 2);
  const RingShape shape{3, 2, 24};
  const Elt zeta = F->element_of_order(8);
  for (int it = 0; it < 5; ++it) {
    const std::vector<std::int64_t> w{static_cast<std::int64_t>(rng() % 8), static_cast<std::int64_t>(rng() % 8)};
    const TruncPoly x = random_poly(*F, shape, rng);
    TruncPoly y = x;
    for (int k = 0; k < 8; ++k) y = galois_act(*F, zeta, w, y);
    EXPECT_EQ(y, x);
  }
}

TEST(GaloisAct, RejectsWrongOrder) {
  const auto F = make_field(3, 2);
  const RingShape shape{3, 2, 24};
  const std::vector<std::int64_t> w{0, 0};
  EXPECT_THROW(galois_act(*F, F->element_of_order(4), w, constant(shape, tensor_one(2))), Error);
}

TEST(Norm, Examples) {
  const auto F = make_field(3, 2);
  EXPECT_EQ(norm(*F, tensor_one(2)), F->one());
  const Elt g = F->generator();
  EXPECT_EQ(norm(*F, TensorElt{{g, F->pow(g, 3)}}), F->pow(g, 4));
}

TEST(Norm, MultiplicativeAndShiftInvariant) {
  std::mt19937_64 rng(5);
  const auto F = make_field(5, 2);
  for (int it = 0; it < 100; ++it) {
    TensorElt a{{random_elt(*F, rng), random_elt(*F, rng)}}, b{{random_elt(*F, rng), random_elt(*F, rng)}};
    EXPECT_EQ(norm(*F, tensor_mul(*F, a, b)), F->mul(norm(*F, a), norm(*F, b)));
    const TensorElt shifted{{a.comp[1], a.comp[0]}};
    EXPECT_EQ(norm(*F, shifted), norm(*F, a));
  }
}
