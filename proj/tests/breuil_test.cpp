#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "serrewt/breuil.hpp"
#include "serrewt/errors.hpp"
#include "serrewt/numeric.hpp"
#include "serrewt/oracle.hpp"
#include "serrewt/weights.hpp"

using namespace serrewt;

namespace {

RankOneBreuil mod(const Params& P, Tuple r, Tuple c, std::int64_t dlog = 0) {
  return RankOneBreuil::make_dlog(P, std::move(r), dlog, std::move(c));
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(RankOneBreuil, TrivialModule) {
  const Params P = make_params(5, 2, 1);
  const auto M = mod(P, {0, 0}, {0, 0});
  EXPECT_EQ(M.alpha(), (Tuple{0, 0}));
  EXPECT_TRUE(generic_fibre(M).is_trivial());
}

TEST(RankOneBreuil, AlphaExamples) {
  EXPECT_EQ(mod(make_params(3, 1, 1), {2}, {0}).alpha(), (Tuple{3}));
  EXPECT_EQ(mod(make_params(3, 2, 1), {8, 0}, {0, 0}).alpha(), (Tuple{9, 3}));
}

TEST(RankOneBreuil, AlphaClosedForm) {
  const Params P = make_params(3, 2, 2);
  const std::int64_t N = P.N();
  for (std::int64_t r0 = 0; r0 <= P.e(); ++r0)
    for (std::int64_t r1 = 0; r1 <= P.e(); ++r1) {
      if ((3 * (3 * r0 + r1)) % N != 0) {
        EXPECT_THROW(alpha_of(P, {r0, r1}), Error);
        continue;
      }
      const Tuple a = alpha_of(P, {r0, r1});
      EXPECT_EQ(N * a[0], 3 * (3 * r0 + r1));
      EXPECT_EQ(N * a[1], 3 * (3 * r1 + r0));
    }
}

TEST(RankOneBreuil, ValidationErrors) {
  const Params P = make_params(3, 2, 1);
  EXPECT_EQ(kind_of([&] { mod(P, {8, 0}, {1, 0}); }), ErrorKind::RecurrenceViolation);
  EXPECT_EQ(kind_of([&] { mod(P, {9, 0}, {0, 0}); }), ErrorKind::RangeViolation);
}

TEST(RankOneBreuil, NormalisesUnit) {
  const Params P = make_params(3, 2, 1);
  const auto F = P.kE();
  const gf::Elt g = F->generator();
  const gf::TensorElt a{{g, F->inv(g)}};  // norm 1
  EXPECT_EQ(RankOneBreuil::make(P, {8, 0}, a, {0, 0}), mod(P, {8, 0}, {0, 0}));
  EXPECT_EQ(ext_basis(RankOneBreuil::make(P, {8, 0}, a, {0, 0}), mod(P, {0, 8}, {0, 0})).dim(),
            ext_basis(mod(P, {8, 0}, {0, 0}), mod(P, {0, 8}, {0, 0})).dim());
}

TEST(GenericFibre, Examples) {
  const Params P = make_params(3, 1, 1);
  const GaloisChar x = generic_fibre(mod(P, {2}, {0}));
  EXPECT_EQ(x.inertial.scalar(), 1);
  EXPECT_EQ(x.unramified_dlog, 0);
}

TEST(GenericFibre, WellDefinedAcrossComponents) {
  for (int e : {1, 2}) {
    const Params P = make_params(3, 2, e);
    for (const auto& M : oracle::all_modules(P, 0)) {
      const std::int64_t N = P.N();
      const std::int64_t v0 = serrewt::mod(M.c()[0] + M.alpha()[0], N);
      const std::int64_t v1 = serrewt::mod((M.c()[1] + M.alpha()[1]) * 3, N);
      EXPECT_EQ(v0, v1);
    }
  }
}

TEST(Hom, Identity) {
  const Params P = make_params(3, 2, 1);
  for (const auto& M : oracle::all_modules(P, 1)) {
    const HomResult h = hom_exists(M, M);
    EXPECT_TRUE(h.exists);
    EXPECT_EQ(h.z, (Tuple{0, 0}));
  }
}

TEST(Hom, ParityObstruction) {
  const Params P = make_params(3, 1, 3);
  EXPECT_FALSE(hom_exists(mod(P, {0}, {0}), mod(P, {6}, {0})).exists);
}

TEST(Hom, EqualFibresAndDominatingBeta) {
  const Params P = make_params(3, 1, 2);
  int checked = 0;
  const auto mods = oracle::all_modules(P, 0);
  for (const auto& M : mods)
    for (const auto& N : mods)
      if (generic_fibre(M) == generic_fibre(N) && N.alpha()[0] >= M.alpha()[0]) {
        EXPECT_TRUE(hom_exists(M, N).exists);
        ++checked;
      }
  EXPECT_GT(checked, 0);
}

TEST(ChiDual, Example) {
  const Params P = make_params(3, 1, 1);
  const auto N = chi_dual(mod(P, {0}, {0}), make_galois_char(P, 1, 0));
  EXPECT_EQ(N.r(), (Tuple{2}));
  EXPECT_EQ(N.c(), (Tuple{0}));
  EXPECT_EQ(N.a_norm_dlog(), 0);
}

TEST(ChiDual, InvolutionAndAlphaSum) {
  const Params P = make_params(3, 2, 1);
  const auto mods = oracle::all_modules(P, 0);
  for (const auto& M : mods)
    for (const auto& X : mods) {
      const GaloisChar chi2 = generic_fibre(X);
      const auto N = chi_dual(M, chi2);
      EXPECT_EQ(generic_fibre(N), chi2);
      for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(N.r()[i], P.e() - M.r()[i]);
        EXPECT_EQ(M.alpha()[i] + N.alpha()[i], P.E());
      }
      EXPECT_EQ(chi_dual(N, generic_fibre(M)), M);
    }
}

TEST(UpperBound, Examples) {
  const Params P = make_params(3, 1, 1);
  const auto M = mod(P, {2}, {0}), N = mod(P, {0}, {1});
  EXPECT_EQ(upper_bound_model(M, M), M);
  EXPECT_EQ(upper_bound_model(M, N), M);
}

TEST(UpperBound, MaxLawAndMaps) {
  for (auto [f, e] : {std::pair{1, 2}, std::pair{2, 1}}) {
    const Params P = make_params(3, f, e);
    const auto mods = oracle::all_modules(P, 1);
    for (const auto& M : mods)
      for (const auto& N : mods) {
        if (!(generic_fibre(M) == generic_fibre(N))) continue;
        const auto U = upper_bound_model(M, N), L = lower_bound_model(M, N);
        for (int i = 0; i < f; ++i) {
          EXPECT_EQ(U.alpha()[i], std::max(M.alpha()[i], N.alpha()[i]));
          EXPECT_EQ(L.alpha()[i], std::min(M.alpha()[i], N.alpha()[i]));
          EXPECT_GE(U.r()[i], 0);
          EXPECT_LE(U.r()[i], P.e());
        }
        EXPECT_TRUE(hom_exists(M, U).exists);
        EXPECT_TRUE(hom_exists(N, U).exists);
        EXPECT_TRUE(hom_exists(L, M).exists);
        EXPECT_TRUE(hom_exists(L, N).exists);
      }
  }
}

TEST(Models, ScalarTrivialTypeContainsTrivialModule) {
  const Params P = make_params(3, 2, 1);
  const TypePair tau{InertialChar::trivial(3, 2), InertialChar::trivial(3, 2)};
  const auto models = models_of_type(P, tau, GaloisChar::trivial(P));
  const auto it = std::find_if(models.begin(), models.end(), [&](const TypedModel& m) {
    return m.J.empty() && m.x == Tuple{0, 0} && m.module == mod(P, {0, 0}, {0, 0});
  });
  EXPECT_NE(it, models.end());
}

TEST(Models, MinimalForTopDigits) {
  const Params P = make_params(3, 2, 1);
  const InertialChar top = InertialChar::trivial(3, 2);  // nu' = (p-1, p-1)
  for (std::int64_t s = 0; s < 8; ++s) {
    const TypePair tau{InertialChar(3, 2, s), top};
    const auto ex = extremal_models(P, tau, GaloisChar::trivial(P));
    EXPECT_EQ(ex.minimal, mod(P, {0, 0}, {0, 0})) << "lambda scalar " << s;
  }
}

TEST(Models, MinimalTrivialModel) {
  int hits = 0;
  for (int e : {1, 2}) {
    const Params P = make_params(5, 2, e);
    const std::int64_t N = P.N();
    for (std::int64_t s = 0; s < N; ++s)
      for (std::int64_t t = 0; t < N; ++t) {
        const TypePair tau{InertialChar(5, 2, s), InertialChar(5, 2, t)};
        const Tuple nu = tau.lambda.digits(), nup = tau.lambda_prime.digits();
        bool hyp = true;
        for (int i = 0; i < 2; ++i) hyp = hyp && nup[i] >= 4 - e && nu[i] <= nup[i];
        if (!hyp) continue;
        const auto ex = extremal_models(P, tau, GaloisChar::trivial(P));
        const auto M = minimal_trivial_model(P, tau);
        EXPECT_EQ(ex.minimal, M);
        EXPECT_TRUE(generic_fibre(M).is_trivial());
        for (int i = 0; i < 2; ++i) {
          EXPECT_EQ(M.r()[i], N * (4 - nup[i]));
          EXPECT_EQ(serrewt::mod(M.c()[i], N), serrewt::mod(nup[i] + 5 * nup[(i + 1) % 2], N));
        }
        ++hits;
      }
  }
  EXPECT_GT(hits, 0);
}

TEST(Models, EveryModelMapsToTheMaximal) {
  const Params P = make_params(3, 2, 1);
  int nonempty = 0;
  for (std::int64_t s = 0; s < 8; ++s)
    for (std::int64_t t = 0; t < 8; ++t)
      for (std::int64_t x = 0; x < 8; ++x) {
        const TypePair tau{InertialChar(3, 2, s), InertialChar(3, 2, t)};
        const GaloisChar chi = make_galois_char(P, x, 0);
        const auto models = models_of_type(P, tau, chi);
        if (models.empty()) continue;
        ++nonempty;
        const auto ex = extremal_models(P, tau, chi);
        for (const auto& m : models) {
          EXPECT_EQ(generic_fibre(m.module), chi);
          EXPECT_TRUE(hom_exists(m.module, ex.maximal).exists);
          EXPECT_TRUE(hom_exists(ex.minimal, m.module).exists);
        }
      }
  EXPECT_GT(nonempty, 0);
}

TEST(Ext, TrivialSelfExtension) {
  const Params P = make_params(3, 1, 1);
  const auto M = mod(P, {0}, {0});
  const ExtBasis B = ext_basis(M, M);
  EXPECT_EQ(B.dim(), 1);
  EXPECT_TRUE(B.delta_slot.has_value());
  EXPECT_EQ(ext_dim(M, M), 1);
}

TEST(Ext, SlotExample) {
  const Params P = make_params(3, 1, 3);
  const ExtBasis B = ext_basis(mod(P, {0}, {0}), mod(P, {6}, {0}));
  EXPECT_FALSE(B.delta_slot.has_value());
  ASSERT_EQ(B.slots.size(), 1u);
  EXPECT_EQ(B.slots[0], (Tuple{0, 2, 4}));
  EXPECT_EQ(B.dim(), 3);
}

TEST(Minimax, FixedPoint) {
  const Params P = make_params(3, 1, 1);
  const auto M = mod(P, {0}, {0});
  const auto N = mod(P, {P.e()}, {0});
  EXPECT_EQ(N.alpha()[0], P.E());
  const gf::RingShape shape{3, 1, static_cast<int>(P.ep())};
  const ExtClass X = ExtClass::make(M, N, gf::TruncPoly(shape));
  const ExtClass Y = minimax_transfer(X);
  EXPECT_EQ(Y.M(), X.M());
  EXPECT_EQ(Y.N(), X.N());
  EXPECT_EQ(Y.h(), X.h());
}

TEST(Minimax, OutputIsWellDefined) {
  const Params P = make_params(3, 1, 2);
  const auto mods = oracle::all_modules(P, 0);
  const gf::RingShape shape{3, 1, static_cast<int>(P.ep())};
  int n = 0;
  for (const auto& M : mods)
    for (const auto& N : mods) {
      const ExtClass X = ExtClass::make(M, N, gf::TruncPoly(shape));
      const ExtClass Y = minimax_transfer(X);
      EXPECT_FALSE(ext_data_problem(Y.M(), Y.N(), Y.h()).has_value());
      ++n;
    }
  EXPECT_GT(n, 0);
}

TEST(LSpace, TopIndexIsZero) {
  const Params P = make_params(5, 2, 1);
  const InertialChar chi2 = InertialChar::from_digits(5, 2, {2, 2});
  const GenericityData gen = genericity(InertialChar::trivial(5, 2), chi2, 1);
  const LSpace L = l_space(P, twisted_type(gen, {1, 1}), make_galois_char(P, chi2.scalar(), 0));
  EXPECT_EQ(L.dim(), 0);
  for (const auto& d : L.degrees) EXPECT_TRUE(d.empty());
}

TEST(Containment, Reflexive) {
  const Params P = make_params(3, 1, 2);
  const auto mods = oracle::all_modules(P, 0);
  for (const auto& M : mods)
    for (const auto& N : mods) EXPECT_TRUE(containment(M, N, M, N));
}

TEST(Containment, HomsImplyContainment) {
  const Params P = make_params(3, 1, 2);
  const auto mods = oracle::all_modules(P, 0);
  int n = 0;
  for (const auto& Mp : mods)
    for (const auto& Np : mods)
      for (const auto& M : mods)
        for (const auto& N : mods)
          if (containment_by_homs(Mp, Np, M, N)) {
            EXPECT_TRUE(containment(Mp, Np, M, N));
            ++n;
          }
  EXPECT_GT(n, 0);
}

TEST(Containment, FailsWhenAlphaDrops) {
  const Params P = make_params(3, 1, 2);
  const auto mods = oracle::all_modules(P, 0);
  bool found = false;
  for (const auto& Mp : mods)
    for (const auto& M : mods)
      for (const auto& N : mods)
        if (Mp.alpha()[0] < M.alpha()[0] && !containment(Mp, N, M, N)) found = true;
  EXPECT_TRUE(found);
}
