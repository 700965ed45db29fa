#include "serrewt/breuil.hpp"

#include <algorithm>
#include <set>

#include "serrewt/errors.hpp"
#include "serrewt/numeric.hpp"

namespace serrewt {
namespace {

std::string tuple_str(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

void check_length(const Params& P, const Tuple& t, const char* what) {
  if (static_cast<int>(t.size()) != P.f)
    fail(ErrorKind::InvalidArgument, std::string(what) + " must have length f = " + std::to_string(P.f));
}

bool contains(const std::vector<int>& J, int i) { return std::find(J.begin(), J.end(), i) != J.end(); }

}  // namespace

Tuple alpha_of(const Params& P, const Tuple& r) {
  check_length(P, r, "r");
  const std::int64_t n = P.N();
  Tuple alpha(P.f);
  for (int i = 0; i < P.f; ++i) {
    std::int64_t num = 0;
    for (int j = 0; j < P.f; ++j) num += ipow(P.p, P.f - 1 - j) * r[cyc(i + j, P.f)];
    num *= P.p;
    if (num % n != 0) fail(ErrorKind::NonIntegralAlpha, "alpha is not integral for r = " + tuple_str(r));
    alpha[i] = num / n;
  }
  return alpha;
}

RankOneBreuil RankOneBreuil::make(const Params& P, Tuple r, const gf::TensorElt& a, Tuple c) {
  check_length(P, r, "r");
  check_length(P, c, "c");
  if (static_cast<int>(a.comp.size()) != P.f) fail(ErrorKind::InvalidArgument, "a must have f components");
  const auto kE = P.kE();
  for (auto x : a.comp)
    if (x.v == 0) fail(ErrorKind::InvalidArgument, "a must be a unit");
  const std::int64_t n = P.N();
  for (int i = 0; i < P.f; ++i) {
    if (r[i] < 0 || r[i] > P.e())
      fail(ErrorKind::RangeViolation, "r_" + std::to_string(i) + " = " + std::to_string(r[i]) + " is outside [0, e]");
    c[i] = mod(c[i], n);
  }
  for (int i = 0; i < P.f; ++i) {
    const int j = cyc(i + 1, P.f);
    if (c[j] != mod(P.p * (c[i] + r[i]), n))
      fail(ErrorKind::RecurrenceViolation, "c_{i+1} = p(c_i + r_i) mod p^f-1 fails at i = " + std::to_string(i));
  }
  RankOneBreuil M;
  M.P_ = P;
  M.alpha_ = alpha_of(P, r);
  M.r_ = std::move(r);
  M.c_ = std::move(c);
  const gf::Elt nm = gf::norm(*kE, a);
  M.a_ = gf::tensor_one(P.f);
  M.a_.comp[0] = nm;
  M.a_norm_dlog_ = kE->log(nm);
  return M;
}

RankOneBreuil RankOneBreuil::make_dlog(const Params& P, Tuple r, std::int64_t a_norm_dlog, Tuple c) {
  const auto kE = P.kE();
  gf::TensorElt a = gf::tensor_one(P.f);
  a.comp[0] = kE->exp(a_norm_dlog);
  return make(P, std::move(r), a, std::move(c));
}

GaloisChar generic_fibre(const RankOneBreuil& M) {
  const Params& P = M.params();
  std::int64_t t = -1;
  for (int i = 0; i < P.f; ++i) {
    const std::int64_t ti = embedded_scalar(P.p, P.f, i, M.c()[i] + M.alpha()[i]);
    if (t != -1 && ti != t) fail(ErrorKind::InconsistentInvariants, "generic fibre depends on the embedding index");
    t = ti;
  }
  return make_galois_char(P, t, -M.a_norm_dlog());
}

HomResult hom_exists(const RankOneBreuil& M, const RankOneBreuil& N) {
  if (!(M.params() == N.params())) fail(ErrorKind::InvalidArgument, "modules have different params");
  const Params& P = M.params();
  HomResult res;
  if (M.a_norm_dlog() != N.a_norm_dlog()) return res;
  Tuple z(P.f);
  for (int i = 0; i < P.f; ++i) {
    z[i] = N.alpha()[i] - M.alpha()[i];
    if (z[i] < 0) return res;
    if (mod(z[i] - (M.c()[i] - N.c()[i]), P.N()) != 0) return res;
  }
  res.exists = true;
  res.z = std::move(z);
  return res;
}

RankOneBreuil chi_dual(const RankOneBreuil& M, const GaloisChar& chi2) {
  const Params& P = M.params();
  if (chi2.unit_order != P.kE_units()) fail(ErrorKind::InvalidArgument, "character uses a different coefficient field");
  Tuple s(P.f), d(P.f);
  for (int i = 0; i < P.f; ++i) s[i] = P.e() - M.r()[i];
  const Tuple beta = alpha_of(P, s);
  const std::int64_t n = P.N();
  for (int i = 0; i < P.f; ++i)
    d[i] = mod(static_cast<std::int64_t>((static_cast<__int128>(chi2.inertial.scalar()) * powmod(P.p, i, n)) % n) - beta[i], n);
  // b = (Nm(b), 1, ..., 1) reaches every norm, so the unramified part is
  // always attainable.
  RankOneBreuil N = RankOneBreuil::make_dlog(P, s, -chi2.unramified_dlog, d);
  ensure(generic_fibre(N) == chi2, "chi-dual has the wrong generic fibre");
  return N;
}

RankOneBreuil upper_bound_model(const RankOneBreuil& M, const RankOneBreuil& N) {
  if (!(M.params() == N.params())) fail(ErrorKind::InvalidArgument, "modules have different params");
  const Params& P = M.params();
  const std::int64_t n = P.N();
  if (M.a_norm_dlog() != N.a_norm_dlog())
    fail(ErrorKind::PreconditionViolation, "norms of the units differ (generic fibres differ)");
  const Tuple& alpha = M.alpha();
  const Tuple& beta = N.alpha();
  for (int i = 0; i < P.f; ++i)
    if (mod(beta[i] - alpha[i] - (M.c()[i] - N.c()[i]), n) != 0)
      fail(ErrorKind::PreconditionViolation, "beta_i - alpha_i is not congruent to c_i - d_i (generic fibres differ)");
  Tuple gamma(P.f), nn(P.f), t(P.f), v(P.f);
  for (int i = 0; i < P.f; ++i) {
    gamma[i] = std::max(alpha[i], beta[i]);
    const std::int64_t diff = std::max<std::int64_t>(0, beta[i] - alpha[i]);
    ensure(diff % P.p == 0, "max(0, beta - alpha) is not divisible by p");
    nn[i] = diff / P.p;
  }
  for (int i = 0; i < P.f; ++i) {
    t[i] = M.r()[i] + P.p * nn[i] - nn[cyc(i + 1, P.f)];
    v[i] = mod(M.c()[i] + alpha[i] - gamma[i], n);
  }
  RankOneBreuil U = RankOneBreuil::make(P, t, M.a(), v);
  ensure(U.alpha() == gamma, "upper bound does not realise gamma = max(alpha, beta)");
  ensure(hom_exists(M, U).exists && hom_exists(N, U).exists, "upper bound lacks a required map");
  return U;
}

RankOneBreuil lower_bound_model(const RankOneBreuil& M, const RankOneBreuil& N) {
  const Params& P = M.params();
  const GaloisChar aux = GaloisChar::trivial(P);
  const RankOneBreuil U = upper_bound_model(chi_dual(M, aux), chi_dual(N, aux));
  RankOneBreuil L = chi_dual(U, generic_fibre(M));
  ensure(hom_exists(L, M).exists && hom_exists(L, N).exists, "lower bound lacks a required map");
  return L;
}

bool allowable(const Params& P, const TypePair& tau, const std::vector<int>& J, const Tuple& x) {
  if (static_cast<int>(x.size()) != P.f) return false;
  const bool same = tau.lambda == tau.lambda_prime;
  if (same && !J.empty()) return false;
  const DigitDecomp dd = decompose(tau.lambda, tau.lambda_prime);
  for (int i = 0; i < P.f; ++i) {
    if (x[i] < 0 || x[i] > P.eprime) return false;
    if (same) continue;
    const bool in = contains(J, i), next = contains(J, cyc(i + 1, P.f)), carry = dd.in_C(i);
    if (((in && !next && !carry) || (!in && next && carry)) && x[i] == P.eprime) return false;
    if (((in && !next && carry) || (!in && next && !carry)) && x[i] == 0) return false;
  }
  return true;
}

std::vector<TypedModel> models_of_type(const Params& P, const TypePair& tau, const GaloisChar& chi) {
  const int f = P.f;
  const std::int64_t n = P.N();
  const bool same = tau.lambda == tau.lambda_prime;
  const DigitDecomp dd = decompose(tau.lambda, tau.lambda_prime);
  const Tuple nu = tau.lambda.digits(), nup = tau.lambda_prime.digits();
  std::vector<TypedModel> out;
  const int masks = same ? 1 : (1 << f);
  for (int mask = 0; mask < masks; ++mask) {
    std::vector<int> J;
    for (int i = 0; i < f; ++i)
      if (mask >> i & 1) J.push_back(i);
    Tuple x(f, 0);
    while (true) {
      if (allowable(P, tau, J, x)) {
        Tuple exps(f);
        for (int i = 0; i < f; ++i) exps[i] = (contains(J, i) ? nu[i] : nup[i]) + x[i];
        if (InertialChar::from_digits(P.p, f, exps) == chi.inertial) {
          Tuple r(f), c(f);
          for (int i = 0; i < f; ++i) {
            const bool in = contains(J, i), next = contains(J, cyc(i + 1, f)), carry = dd.in_C(i);
            const std::int64_t br = bracket(P.p, f, dd.delta, i);
            r[i] = x[i] * n;
            if (in && !next) r[i] += carry ? -(n - br) : br;
            if (!in && next) r[i] += carry ? (n - br) : -br;
            const std::int64_t t = in ? tau.lambda.scalar() : tau.lambda_prime.scalar();
            c[i] = static_cast<std::int64_t>((static_cast<__int128>(t) * powmod(P.p, i, n)) % n);
          }
          RankOneBreuil M = RankOneBreuil::make_dlog(P, r, -chi.unramified_dlog, c);
          ensure(generic_fibre(M) == chi, "model of type has the wrong generic fibre");
          out.push_back(TypedModel{std::move(M), J, x});
        }
      }
      int k = f - 1;
      while (k >= 0 && x[k] == P.eprime) x[k--] = 0;
      if (k < 0) break;
      ++x[k];
    }
  }
  return out;
}

ExtremalModels extremal_models(const Params& P, const TypePair& tau, const GaloisChar& chi) {
  const auto S = models_of_type(P, tau, chi);
  if (S.empty()) fail(ErrorKind::EmptyModelSet, "no model of the given type has the given generic fibre");
  RankOneBreuil hi = S.front().module, lo = S.front().module;
  for (std::size_t k = 1; k < S.size(); ++k) {
    hi = upper_bound_model(hi, S[k].module);
    lo = lower_bound_model(lo, S[k].module);
  }
  auto member = [&](const RankOneBreuil& X) {
    return std::any_of(S.begin(), S.end(), [&](const TypedModel& m) { return m.module == X; });
  };
  ensure(member(hi) && member(lo), "extremal model is not of the given type");
  for (const auto& m : S)
    ensure(hom_exists(m.module, hi).exists && hom_exists(lo, m.module).exists, "extremal model does not dominate");
  return {lo, hi};
}

std::int64_t ExtBasis::dim() const {
  std::int64_t d = delta_slot ? 1 : 0;
  for (const auto& s : slots) d += static_cast<std::int64_t>(s.size());
  return d;
}

ExtBasis ext_basis(const RankOneBreuil& M, const RankOneBreuil& N) {
  if (!(M.params() == N.params())) fail(ErrorKind::InvalidArgument, "modules have different params");
  const Params& P = M.params();
  ExtBasis B;
  B.slots.resize(P.f);
  for (int i = 0; i < P.f; ++i) {
    const std::int64_t ri = M.r()[i], si = N.r()[i];
    const std::int64_t residue = mod(ri + M.c()[i] - N.c()[i], P.N());
    for (std::int64_t j = std::max<std::int64_t>(0, ri + si - P.e()); j < si; ++j)
      if (mod(j, P.N()) == residue) B.slots[i].push_back(j);
  }
  if (hom_exists(M, N).exists) B.delta_slot = M.r()[0] + N.alpha()[0] - M.alpha()[0];
  return B;
}

std::int64_t ext_dim(const RankOneBreuil& M, const RankOneBreuil& N) { return ext_basis(M, N).dim(); }

std::optional<std::string> ext_data_problem(const RankOneBreuil& M, const RankOneBreuil& N, const gf::TruncPoly& h) {
  const Params& P = M.params();
  if (!(P == N.params())) return "modules have different params";
  if (!(h.shape() == gf::RingShape{P.p, P.f, static_cast<int>(P.ep())})) return "h has the wrong ring shape";
  for (int i = 0; i < P.f; ++i) {
    const std::int64_t ri = M.r()[i], si = N.r()[i];
    const std::int64_t low = std::max<std::int64_t>(0, ri + si - P.e());
    const std::int64_t residue = mod(ri + M.c()[i] - N.c()[i], P.N());
    for (int j = 0; j < h.length(); ++j) {
      if (h.coeff(i, j).v == 0) continue;
      if (j < low) return "h_" + std::to_string(i) + " is not divisible by u^" + std::to_string(low);
      if (j < P.e() + si && mod(j, P.N()) != residue)
        return "h_" + std::to_string(i) + " has a term of degree " + std::to_string(j) + " outside the residue class " +
               std::to_string(residue);
    }
  }
  return std::nullopt;
}

ExtClass ExtClass::make(const RankOneBreuil& M, const RankOneBreuil& N, gf::TruncPoly h) {
  if (auto problem = ext_data_problem(M, N, h)) fail(ErrorKind::InvalidArgument, *problem);
  return ExtClass(M, N, std::move(h));
}

bool ExtClass::is_canonical() const {
  const ExtBasis B = ext_basis(M_, N_);
  for (int i = 0; i < h_.components(); ++i)
    for (int j = 0; j < h_.length(); ++j) {
      if (h_.coeff(i, j).v == 0) continue;
      const auto& sl = B.slots[i];
      const bool ok = std::find(sl.begin(), sl.end(), j) != sl.end() || (i == 0 && B.delta_slot == j);
      if (!ok) return false;
    }
  return true;
}

MinimaxShift minimax_shift(const RankOneBreuil& M, const RankOneBreuil& N) {
  const Params& P = M.params();
  MinimaxShift S;
  S.c_dagger.resize(P.f);
  S.d_dagger.resize(P.f);
  S.delta.resize(P.f);
  for (int i = 0; i < P.f; ++i) {
    S.c_dagger[i] = mod(M.c()[i] + M.alpha()[i], P.N());
    S.d_dagger[i] = mod(N.c()[i] + N.alpha()[i] - P.E(), P.N());
    S.delta[i] = P.E() - N.alpha()[i] + M.alpha()[i] - M.r()[i];
    ensure(S.delta[i] >= 0, "minimax shift is negative");
  }
  return S;
}

ExtClass minimax_transfer(const ExtClass& X) {
  const RankOneBreuil& M = X.M();
  const RankOneBreuil& N = X.N();
  const Params& P = M.params();
  const MinimaxShift S = minimax_shift(M, N);
  const RankOneBreuil Md = RankOneBreuil::make(P, Tuple(P.f, 0), M.a(), S.c_dagger);
  const RankOneBreuil Nd = RankOneBreuil::make(P, Tuple(P.f, P.e()), N.a(), S.d_dagger);
  return ExtClass::make(Md, Nd, gf::shift_up(X.h(), S.delta));
}

std::int64_t LSpace::dim() const {
  std::int64_t d = 0;
  for (const auto& s : degrees) d += static_cast<std::int64_t>(s.size());
  return d;
}

LSpace l_space(const Params& P, const TypePair& tau, const GaloisChar& chi) {
  const int p = P.p, f = P.f;
  const Tuple nu = tau.lambda.digits(), nup = tau.lambda_prime.digits();
  for (int i = 0; i < f; ++i) {
    if (nup[i] < p - 1 - P.eprime || nup[i] > p - 1)
      fail(ErrorKind::HypothesisViolation, "nu'_" + std::to_string(i) + " is outside [p-1-e', p-1]");
    if (nu[i] > nup[i]) fail(ErrorKind::HypothesisViolation, "nu_" + std::to_string(i) + " > nu'_" + std::to_string(i));
    if (nu[i] + nup[i] < p - 1)
      fail(ErrorKind::HypothesisViolation, "nu_" + std::to_string(i) + " + nu'_" + std::to_string(i) + " < p-1");
  }
  if (chi.is_trivial()) fail(ErrorKind::HypothesisViolation, "chi is trivial");
  if (!(chi.inertial == tau.lambda * tau.lambda_prime * InertialChar::cyclotomic(p, f, P.eprime)))
    fail(ErrorKind::HypothesisViolation, "chi on inertia is not lambda lambda' times the cyclotomic character");
  LSpace L;
  L.t_values.resize(f);
  L.degrees.resize(f);
  L.d_dagger.resize(f);
  const std::int64_t n = P.N();
  for (int i = 0; i < f; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j < f; ++j) sum += (nu[cyc(i - j, f)] + nup[cyc(i - j, f)] - (p - 1)) * ipow(p, j);
    const std::int64_t br = mod(sum, n);
    L.d_dagger[i] = br;
    for (std::int64_t t = p - nup[i]; t <= P.eprime; ++t) {
      L.t_values[i].push_back(t);
      L.degrees[i].push_back(t * n - br);
    }
  }
  return L;
}

LSpace intersect(const LSpace& x, const LSpace& y) {
  if (x.d_dagger != y.d_dagger) fail(ErrorKind::InvalidArgument, "L-spaces live in different canonical forms");
  LSpace z;
  z.d_dagger = x.d_dagger;
  z.t_values.resize(x.degrees.size());
  z.degrees.resize(x.degrees.size());
  for (std::size_t i = 0; i < x.degrees.size(); ++i)
    for (std::size_t k = 0; k < x.degrees[i].size(); ++k)
      if (std::find(y.degrees[i].begin(), y.degrees[i].end(), x.degrees[i][k]) != y.degrees[i].end()) {
        z.degrees[i].push_back(x.degrees[i][k]);
        z.t_values[i].push_back(x.t_values[i][k]);
      }
  return z;
}

bool containment(const RankOneBreuil& Mp, const RankOneBreuil& Np, const RankOneBreuil& M, const RankOneBreuil& N) {
  const Params& P = M.params();
  // Scaled by p: max(alpha_{i+1} - p beta_i, p alpha_i - beta_{i+1} - p e).
  auto lhs = [&](const RankOneBreuil& A, const RankOneBreuil& B, int i) {
    const int k = cyc(i + 1, P.f);
    return std::max(A.alpha()[k] - P.p * B.alpha()[i], P.p * A.alpha()[i] - B.alpha()[k] - P.p * P.e());
  };
  for (int i = 0; i < P.f; ++i)
    if (lhs(M, N, i) > lhs(Mp, Np, i)) return false;
  return true;
}

bool containment_by_homs(const RankOneBreuil& Mp, const RankOneBreuil& Np, const RankOneBreuil& M,
                         const RankOneBreuil& N) {
  return hom_exists(M, Mp).exists && hom_exists(Np, N).exists;
}

RankOneBreuil minimal_trivial_model(const Params& P, const TypePair& tau) {
  const Tuple nu = tau.lambda.digits(), nup = tau.lambda_prime.digits();
  Tuple r(P.f), c(P.f);
  const std::int64_t n = P.N();
  for (int i = 0; i < P.f; ++i) {
    if (nup[i] < P.p - 1 - P.eprime) fail(ErrorKind::HypothesisViolation, "nu'_i is below p-1-e'");
    if (nu[i] > nup[i]) fail(ErrorKind::HypothesisViolation, "nu_i exceeds nu'_i");
    r[i] = n * (P.p - 1 - nup[i]);
    c[i] = static_cast<std::int64_t>((static_cast<__int128>(tau.lambda_prime.scalar()) * powmod(P.p, i, n)) % n);
  }
  return RankOneBreuil::make_dlog(P, r, 0, c);
}

}  // namespace serrewt
