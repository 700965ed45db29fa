#include "serrewt/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "serrewt/errors.hpp"
#include "serrewt/linalg.hpp"
#include "serrewt/numeric.hpp"

namespace serrewt::oracle {
namespace {

void check_ep(const Params& P, const Limits& lim) {
  if (P.ep() > lim.max_ep)
    fail(ErrorKind::SizeLimit, "ep = " + std::to_string(P.ep()) + " exceeds the oracle limit " + std::to_string(lim.max_ep));
}

bool next_tuple(Tuple& t, std::int64_t lo, std::int64_t hi) {
  int k = static_cast<int>(t.size()) - 1;
  while (k >= 0 && t[k] == hi) t[k--] = lo;
  if (k < 0) return false;
  ++t[k];
  return true;
}

// sigma_i(zeta)^k for the inertia generator zeta of order p^f - 1.
gf::Elt sigma_pow(const gf::Field& kE, const Params& P, gf::Elt zeta, int i, std::int64_t k) {
  return kE.pow(gf::embed(kE, P.p, P.f, i, zeta), mod(k, P.N()));
}

}  // namespace

HomSpace brute_hom_space(const RankOneBreuil& M, const RankOneBreuil& N, const Limits& lim) {
  const Params& P = M.params();
  if (!(P == N.params())) fail(ErrorKind::InvalidArgument, "modules have different params");
  check_ep(P, lim);
  const auto kEp = P.kE();
  const gf::Field& kE = *kEp;
  const int f = P.f, L = static_cast<int>(P.ep());
  const gf::Elt zeta = kE.element_of_order(P.N());
  auto var = [&](int i, int j) { return i * L + j; };
  std::vector<std::vector<std::pair<int, gf::Elt>>> rows;

  for (int i = 0; i < f; ++i) {
    const std::int64_t r = M.r()[i], s = N.r()[i];
    for (int j = 0; j < L; ++j) {
      // u^r X must lie in Fil^1 N = u^s N.
      if (j < s - r) rows.push_back({{var(i, j), kE.one()}});
      // Descent: the degree-j term of X_i scales by sigma_i(zeta)^{j + d_i}
      // on the N side and by sigma_i(zeta)^{c_i} on the M side.
      const gf::Elt coef = kE.sub(sigma_pow(kE, P, zeta, i, j + N.c()[i]), sigma_pow(kE, P, zeta, i, M.c()[i]));
      if (coef.v != 0) rows.push_back({{var(i, j), coef}});
    }
  }
  // phi_1(u^r X e_N) = phi(Y) b e_N with u^r X = u^s Y, against a X e_N.
  for (int k = 0; k < f; ++k) {
    const int i = cyc(k - 1, f);
    const std::int64_t shift = M.r()[i] - N.r()[i];  // Y_{i,t} = X_{i, t - shift}
    for (int m = 0; m < L; ++m) {
      std::vector<std::pair<int, gf::Elt>> row;
      row.push_back({var(k, m), M.a().comp[k]});
      if (m % P.p == 0) {
        const std::int64_t src = m / P.p - shift;
        if (src >= 0 && src < L) row.push_back({var(i, static_cast<int>(src)), kE.neg(N.a().comp[k])});
      }
      rows.push_back(std::move(row));
    }
  }
  linalg::FieldMatrix A(static_cast<int>(rows.size()), f * L);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [col, v] : rows[r]) A.at(static_cast<int>(r), col) = kE.add(A.at(static_cast<int>(r), col), v);

  HomSpace H;
  const gf::RingShape shape{P.p, f, L};
  for (const auto& v : linalg::nullspace(kE, A)) {
    gf::TruncPoly X(shape);
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < L; ++j) X.set(i, j, v[var(i, j)]);
    H.witnesses.push_back(std::move(X));
  }
  H.dim = static_cast<int>(H.witnesses.size());
  return H;
}

UpsilonData brute_upsilon(const RankOneBreuil& M, const RankOneBreuil& N, const Limits& lim) {
  const Params& P = M.params();
  if (!(P == N.params())) fail(ErrorKind::InvalidArgument, "modules have different params");
  check_ep(P, lim);
  const auto kEp = P.kE();
  const gf::Field& kE = *kEp;
  const int f = P.f, L = static_cast<int>(P.ep());
  const std::int64_t n = P.N(), e = P.e();
  const std::int64_t pinv = powmod(P.p, P.f - 1, n);

  // U: t_i of degree D < e only when p D = c_{i+1} - d_{i+1} mod p^f-1.
  std::vector<std::pair<int, int>> U;
  for (int i = 0; i < f; ++i) {
    const int k = cyc(i + 1, f);
    const std::int64_t target = mod(pinv * mod(M.c()[k] - N.c()[k], n), n);
    for (int D = 0; D < L; ++D)
      if (D >= e || mod(D, n) == target) U.push_back({i, D});
  }
  // V: h_i divisible by u^{max(0, r+s-e)}, low terms in the residue class.
  std::map<std::pair<int, int>, int> V;
  for (int i = 0; i < f; ++i) {
    const std::int64_t r = M.r()[i], s = N.r()[i];
    const std::int64_t low = std::max<std::int64_t>(0, r + s - e);
    const std::int64_t residue = mod(r + M.c()[i] - N.c()[i], n);
    for (int j = static_cast<int>(low); j < L; ++j)
      if (j >= e + s || mod(j, n) == residue) V.emplace(std::make_pair(i, j), static_cast<int>(V.size()));
  }

  linalg::FieldMatrix A(static_cast<int>(V.size()), static_cast<int>(U.size()));
  auto put = [&](int comp, std::int64_t deg, gf::Elt v, int col) {
    if (deg >= L) return;
    auto it = V.find({comp, static_cast<int>(deg)});
    ensure(it != V.end(), "Upsilon leaves the space of admissible h");
    A.at(it->second, col) = kE.add(A.at(it->second, col), v);
  };
  for (int col = 0; col < static_cast<int>(U.size()); ++col) {
    const auto [i, D] = U[col];
    put(i, D + N.r()[i], kE.neg(kE.one()), col);
    const int k = cyc(i + 1, f);
    const std::int64_t pd = static_cast<std::int64_t>(P.p) * D;
    if (pd < L) put(k, pd + M.r()[k], kE.div(N.a().comp[k], M.a().comp[k]), col);
  }
  UpsilonData out;
  out.dim_U = static_cast<int>(U.size());
  out.dim_V = static_cast<int>(V.size());
  out.rank = linalg::rank(kE, A);
  return out;
}

std::vector<RankOneBreuil> all_modules(const Params& P, std::int64_t a_norm_dlog, const Limits& lim) {
  check_ep(P, lim);
  const int f = P.f;
  const std::int64_t n = P.N();
  std::vector<RankOneBreuil> out;
  Tuple r(f, 0);
  do {
    // alpha integral: p^f-1 divides p sum_j p^{f-1-j} r_{i+j} for every i.
    bool integral = true;
    for (int i = 0; i < f && integral; ++i) {
      std::int64_t num = 0;
      for (int j = 0; j < f; ++j) num += ipow(P.p, f - 1 - j) * r[cyc(i + j, f)];
      integral = (num * P.p) % n == 0;
    }
    if (!integral) continue;
    for (std::int64_t c0 = 0; c0 < n; ++c0) {
      Tuple c(f);
      c[0] = c0;
      for (int i = 0; i + 1 < f; ++i) c[i + 1] = mod(P.p * (c[i] + r[i]), n);
      if (mod(P.p * (c[f - 1] + r[f - 1]), n) != c[0]) continue;
      out.push_back(RankOneBreuil::make_dlog(P, r, a_norm_dlog, c));
    }
  } while (next_tuple(r, 0, P.e()));
  return out;
}

std::vector<RankOneBreuil> brute_models_of_type(const Params& P, const TypePair& tau, const GaloisChar& chi,
                                                const Limits& lim) {
  std::vector<RankOneBreuil> out;
  // The unramified part of the generic fibre fixes Nm(a).
  for (auto& M : all_modules(P, mod(-chi.unramified_dlog, P.kE_units()), lim)) {
    bool typed = true;
    for (int i = 0; i < P.f && typed; ++i) {
      const std::int64_t t = embedded_scalar(P.p, P.f, i, M.c()[i]);
      typed = t == tau.lambda.scalar() || t == tau.lambda_prime.scalar();
    }
    if (typed && generic_fibre(M) == chi) out.push_back(std::move(M));
  }
  return out;
}

std::vector<WeightWitnesses> brute_weight_scan(const InertialChar& chi1, const InertialChar& chi2, int eprime,
                                               const Limits& lim) {
  const int p = chi1.p(), f = chi1.f();
  if (ipow(p, f) > lim.max_q)
    fail(ErrorKind::SizeLimit, "q = " + std::to_string(ipow(p, f)) + " exceeds the oracle limit " + std::to_string(lim.max_q));
  std::map<std::pair<std::int64_t, Tuple>, WeightWitnesses> found;
  std::set<std::int64_t> seen;
  Tuple m(f, 0);
  do {
    const InertialChar mchar = InertialChar::from_digits(p, f, m);
    if (!seen.insert(mchar.scalar()).second) continue;
    for (int mask = 0; mask < (1 << f); ++mask) {
      Tuple d(f, 0);
      do {
        bool legal = true;
        for (int i = 0; i < f; ++i) {
          const bool in = mask >> i & 1;
          legal = legal && (in ? d[i] <= eprime - 1 : d[i] >= 1);
        }
        if (!legal) continue;
        Tuple nn(f, 0);
        do {
          Tuple e1(f), e2(f);
          for (int i = 0; i < f; ++i) {
            const bool in = mask >> i & 1;
            e1[i] = in ? d[i] : nn[i] + d[i];
            e2[i] = in ? nn[i] + eprime - d[i] : eprime - d[i];
          }
          if (mchar * InertialChar::from_digits(p, f, e1) != chi1) continue;
          if (mchar * InertialChar::from_digits(p, f, e2) != chi2) continue;
          auto key = std::make_pair(mchar.scalar(), nn);
          auto it = found.find(key);
          if (it == found.end())
            it = found.emplace(key, WeightWitnesses{SerreWeight{p, f, zero_based_digits(p, f, mchar.scalar()), nn}, {}})
                     .first;
          std::vector<int> J;
          for (int i = 0; i < f; ++i)
            if (mask >> i & 1) J.push_back(i);
          it->second.witnesses.push_back(WeightParam{J, d, false});
        } while (next_tuple(nn, 0, p - 1));
      } while (next_tuple(d, 0, eprime));
    }
  } while (next_tuple(m, 0, p - 1));
  std::vector<WeightWitnesses> out;
  for (auto& [key, w] : found) out.push_back(std::move(w));
  return out;
}

}  // namespace serrewt::oracle
