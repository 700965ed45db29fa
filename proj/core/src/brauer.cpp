#include "serrewt/brauer.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "serrewt/errors.hpp"
#include "serrewt/linalg.hpp"
#include "serrewt/numeric.hpp"

namespace serrewt::brauer {
namespace {

bool next_tuple(Tuple& t, std::int64_t lo, std::int64_t hi) {
  int k = static_cast<int>(t.size()) - 1;
  while (k >= 0 && t[k] == hi) t[k--] = lo;
  if (k < 0) return false;
  ++t[k];
  return true;
}

using Poly = std::vector<std::int64_t>;  // constant term first

Poly mul_binomial(const Poly& a, std::int64_t d) {  // a (x^d - 1)
  Poly r(a.size() + d, 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    r[k + d] += a[k];
    r[k] -= a[k];
  }
  return r;
}

Poly div_binomial(const Poly& a, std::int64_t d) {  // exact a / (x^d - 1)
  const std::int64_t deg = static_cast<std::int64_t>(a.size()) - 1;
  Poly r(deg - d + 1, 0);
  Poly rem = a;
  for (std::int64_t k = deg; k >= d; --k) {
    const std::int64_t c = rem[k];
    r[k - d] = c;
    rem[k] -= c;
    rem[k - d] += c;
  }
  for (std::int64_t k = 0; k < d; ++k) ensure(rem[k] == 0, "inexact division by x^d - 1");
  return r;
}

int moebius(std::int64_t n) {
  int sign = 1;
  for (auto r : prime_divisors(n)) {
    if ((n / r) % r == 0) return 0;
    sign = -sign;
  }
  return sign;
}

Poly cyclotomic(std::int64_t M) {
  Poly num{1};
  std::vector<std::int64_t> den;
  for (std::int64_t d = 1; d <= M; ++d) {
    if (M % d != 0) continue;
    const int mu = moebius(M / d);
    if (mu == 1) num = mul_binomial(num, d);
    if (mu == -1) den.push_back(d);
  }
  for (auto d : den) num = div_binomial(num, d);
  // The product over d | M carries the sign (-1)^{sum mu} = 1 for M > 1.
  ensure(num.back() == 1, "cyclotomic polynomial is not monic");
  return num;
}

std::uint64_t find_prime(std::int64_t M) {
  std::int64_t k = (std::int64_t{1} << 30) / M + 1;
  while (!is_prime(k * M + 1)) ++k;
  return static_cast<std::uint64_t>(k * M + 1);
}

std::uint64_t primitive_root_of_unity(std::int64_t M, std::uint64_t ell) {
  const auto primes = prime_divisors(M);
  for (std::uint64_t a = 2;; ++a) {
    const std::uint64_t z = linalg::powmod_u(a, (ell - 1) / M, ell);
    bool ok = z != 1 || M == 1;
    for (auto r : primes) ok = ok && linalg::powmod_u(z, M / r, ell) != 1;
    if (ok) return z;
  }
}

}  // namespace

std::shared_ptr<const BrauerTable> BrauerTable::get(int p, int f) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const BrauerTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, f}];
  if (!slot) slot = std::make_shared<const BrauerTable>(p, f);
  return slot;
}

BrauerTable::BrauerTable(int p, int f) : p_(p), f_(f) {
  if (!is_prime(p) || p == 2) fail(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (f < 1) fail(ErrorKind::InvalidArgument, "f must be positive");
  q_ = ipow(p, f);
  N_ = q_ - 1;
  M_ = q_ * q_ - 1;
  for (int i = 0; i < f; ++i) twist_.push_back(powmod(p, f - i, M_));

  const std::int64_t Q1 = q_ + 1;
  for (std::int64_t j = 0; j < N_; ++j) classes_.push_back({ClassRep::Central, Q1 * j, Q1 * j});
  for (std::int64_t j1 = 0; j1 < N_; ++j1)
    for (std::int64_t j2 = j1 + 1; j2 < N_; ++j2) classes_.push_back({ClassRep::Split, Q1 * j1, Q1 * j2});
  for (std::int64_t k = 0; k < M_; ++k) {
    if (k % Q1 == 0) continue;
    const std::int64_t conj = (k * q_) % M_;
    if (k < conj) classes_.push_back({ClassRep::Nonsplit, k, conj});
  }
  ensure(static_cast<std::int64_t>(classes_.size()) == q_ * (q_ - 1), "p-regular class count is wrong");

  for (std::int64_t R = 0; R < N_; ++R) {
    Tuple n(f, 0);
    do weights_.push_back(SerreWeight{p, f, zero_based_digits(p, f, R), n});
    while (next_tuple(n, 0, p - 1));
  }
  ensure(weights_.size() == classes_.size(), "weight count differs from class count");

  ell_ = find_prime(M_);
  const std::uint64_t zeta = primitive_root_of_unity(M_, ell_);
  zpow_.resize(M_);
  zpow_[0] = 1;
  for (std::int64_t k = 1; k < M_; ++k) zpow_[k] = zpow_[k - 1] * zeta % ell_;

  value_.assign(weights_.size(), std::vector<std::uint32_t>(classes_.size()));
  for (std::size_t w = 0; w < weights_.size(); ++w)
    for (std::size_t g = 0; g < classes_.size(); ++g)
      value_[w][g] = static_cast<std::uint32_t>(weight_value(static_cast<int>(w), classes_[g]));

  groups_.resize(N_);
  for (std::size_t w = 0; w < weights_.size(); ++w) groups_[central_scalar(static_cast<int>(w))].candidates.push_back(static_cast<int>(w));
  for (auto& G : groups_) {
    if (G.candidates.empty()) continue;
    linalg::ModMatrix A(classes_.size(), std::vector<std::uint64_t>(G.candidates.size()));
    for (std::size_t g = 0; g < classes_.size(); ++g)
      for (std::size_t c = 0; c < G.candidates.size(); ++c) A[g][c] = value_[G.candidates[c]][g];
    G.pivots = linalg::independent_rows(A, ell_);
    ensure(G.pivots.size() == G.candidates.size(), "Brauer characters of weights are linearly dependent");
    linalg::ModMatrix B;
    for (int r : G.pivots) B.push_back(A[r]);
    auto inv = linalg::inverse_mod(B, ell_);
    ensure(inv.has_value(), "pivot block is singular");
    G.inv = std::move(*inv);
  }

  const Poly phi = cyclotomic(M_);
  const std::size_t deg = phi.size() - 1;
  reduce_.assign(M_, std::vector<std::int64_t>(deg, 0));
  std::vector<std::int64_t> cur(deg, 0);
  cur[0] = deg > 0 ? 1 : 0;
  for (std::int64_t k = 0; k < M_; ++k) {
    reduce_[k] = cur;
    // cur *= x modulo the monic phi.
    const std::int64_t top = cur[deg - 1];
    for (std::size_t j = deg - 1; j > 0; --j) cur[j] = cur[j - 1] - top * phi[j];
    cur[0] = -top * phi[0];
  }
}

std::int64_t BrauerTable::central_scalar(int w) const {
  const SerreWeight& W = weights_[w];
  std::int64_t s = 0;
  for (int i = 0; i < f_; ++i) s += embedded_scalar(p_, f_, i, 2 * W.m[i] + W.n[i]);
  return mod(s, N_);
}

std::uint64_t BrauerTable::weight_value(int w, const ClassRep& g) const {
  const SerreWeight& W = weights_[w];
  std::uint64_t v = 1;
  for (int i = 0; i < f_; ++i) {
    const std::int64_t x = g.kx * twist_[i] % M_, y = g.ky * twist_[i] % M_;
    std::uint64_t sym = 0;
    for (std::int64_t j = 0; j <= W.n[i]; ++j) sym += zpow_[(j * x + (W.n[i] - j) * y) % M_];
    sym %= ell_;
    v = v * (sym * zpow_[W.m[i] * ((x + y) % M_) % M_] % ell_) % ell_;
  }
  return v;
}

std::uint64_t BrauerTable::ind_value(std::int64_t t1, std::int64_t t2, const ClassRep& g) const {
  switch (g.kind) {
    case ClassRep::Central:
      return static_cast<std::uint64_t>(q_ + 1) % ell_ * zpow_[(t1 + t2) % N_ * g.kx % M_] % ell_;
    case ClassRep::Split:
      return (zpow_[(t1 * g.kx + t2 * g.ky) % M_] + zpow_[(t1 * g.ky + t2 * g.kx) % M_]) % ell_;
    case ClassRep::Nonsplit:
      return 0;
  }
  return 0;
}

Multiset BrauerTable::decompose_ind(std::int64_t t1, std::int64_t t2) const {
  t1 = mod(t1, N_);
  t2 = mod(t2, N_);
  const Group& G = groups_[mod(t1 + t2, N_)];
  std::vector<std::uint64_t> v(classes_.size());
  for (std::size_t g = 0; g < classes_.size(); ++g) v[g] = ind_value(t1, t2, classes_[g]);
  const std::size_t n = G.candidates.size();
  std::vector<std::uint64_t> x(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < n; ++k) s = (s + G.inv[r][k] * v[G.pivots[k]]) % ell_;
    x[r] = s;
  }
  for (std::size_t g = 0; g < classes_.size(); ++g) {
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < n; ++c) s = (s + x[c] * value_[G.candidates[c]][g]) % ell_;
    if (s != v[g]) fail(ErrorKind::NonIntegralMultiplicity, "induced character is not a combination of weight characters");
  }
  Multiset out;
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (x[c] == 0) continue;
    if (x[c] > static_cast<std::uint64_t>(q_ + 1))
      fail(ErrorKind::NonIntegralMultiplicity, "multiplicity does not lift to a small non-negative integer");
    const SerreWeight& W = weights_[G.candidates[c]];
    out.push_back({W, static_cast<std::int64_t>(x[c])});
    total += static_cast<std::int64_t>(x[c]) * W.dimension();
  }
  ensure(total == q_ + 1, "constituent dimensions do not add up to q + 1");
  std::sort(out.begin(), out.end(), [](const Constituent& a, const Constituent& b) { return a.weight < b.weight; });
  return out;
}

bool BrauerTable::certify_ind(std::int64_t t1, std::int64_t t2, const Multiset& ms) const {
  t1 = mod(t1, N_);
  t2 = mod(t2, N_);
  const std::size_t deg = reduce_.empty() ? 0 : reduce_[0].size();
  std::vector<std::int64_t> coef(M_, 0);
  std::vector<std::int64_t> touched;
  auto bump = [&](std::int64_t k, std::int64_t c) {
    k %= M_;
    if (coef[k] == 0) touched.push_back(k);
    coef[k] += c;
  };
  for (const ClassRep& g : classes_) {
    touched.clear();
    for (const auto& [W, mult] : ms) {
      // Expand prod_i det^{m_i} Sym^{n_i} into roots of unity.
      std::vector<std::int64_t> terms{0};
      for (int i = 0; i < f_; ++i) {
        const std::int64_t x = g.kx * twist_[i] % M_, y = g.ky * twist_[i] % M_;
        std::vector<std::int64_t> next;
        for (auto t : terms)
          for (std::int64_t j = 0; j <= W.n[i]; ++j)
            next.push_back((t + W.m[i] * ((x + y) % M_) + j * x + (W.n[i] - j) * y) % M_);
        terms = std::move(next);
      }
      for (auto t : terms) bump(t, mult);
    }
    switch (g.kind) {
      case ClassRep::Central: bump((t1 + t2) % N_ * g.kx, -(q_ + 1)); break;
      case ClassRep::Split:
        bump(t1 * g.kx + t2 * g.ky, -1);
        bump(t1 * g.ky + t2 * g.kx, -1);
        break;
      case ClassRep::Nonsplit: break;
    }
    std::vector<std::int64_t> acc(deg, 0);
    for (auto k : touched) {
      if (coef[k] == 0) continue;
      const auto& row = reduce_[k];
      for (std::size_t j = 0; j < deg; ++j) acc[j] += coef[k] * row[j];
      coef[k] = 0;
    }
    for (auto k : touched) coef[k] = 0;
    if (std::any_of(acc.begin(), acc.end(), [](auto c) { return c != 0; })) return false;
  }
  return true;
}

Multiset brute_jh(const InertialChar& eta1, const InertialChar& eta2, const oracle::Limits& lim, bool certify) {
  if (eta1.p() != eta2.p() || eta1.f() != eta2.f()) fail(ErrorKind::InvalidArgument, "characters of different fields");
  const std::int64_t q = ipow(eta1.p(), eta1.f());
  if (q > lim.max_q) fail(ErrorKind::SizeLimit, "q = " + std::to_string(q) + " exceeds the oracle limit " + std::to_string(lim.max_q));
  const auto T = BrauerTable::get(eta1.p(), eta1.f());
  Multiset ms = T->decompose_ind(eta1.scalar(), eta2.scalar());
  if (certify && !T->certify_ind(eta1.scalar(), eta2.scalar(), ms))
    fail(ErrorKind::InternalInconsistency, "modular decomposition failed exact certification");
  return ms;
}

SerreWeight det_weight(const InertialChar& eta) {
  return SerreWeight{eta.p(), eta.f(), zero_based_digits(eta.p(), eta.f(), eta.scalar()), Tuple(eta.f(), 0)};
}

std::vector<TypeHit> types_containing(const SerreWeight& mu, const oracle::Limits& lim) {
  const int p = mu.p, f = mu.f;
  const std::int64_t q = ipow(p, f), N = q - 1;
  if (q > lim.max_q) fail(ErrorKind::SizeLimit, "q = " + std::to_string(q) + " exceeds the oracle limit " + std::to_string(lim.max_q));
  const auto T = BrauerTable::get(p, f);
  std::vector<TypeHit> hits;
  for (std::int64_t t1 = 0; t1 < N; ++t1) {
    const InertialChar e1(p, f, t1);
    if (det_weight(e1) == mu) hits.push_back({e1, e1, {{det_weight(e1), 1}}});
    for (std::int64_t t2 = t1 + 1; t2 < N; ++t2) {
      Multiset ms = T->decompose_ind(t1, t2);
      if (std::none_of(ms.begin(), ms.end(), [&](const Constituent& c) { return c.weight == mu; })) continue;
      if (!T->certify_ind(t1, t2, ms)) fail(ErrorKind::InternalInconsistency, "modular decomposition failed exact certification");
      hits.push_back({e1, InertialChar(p, f, t2), std::move(ms)});
    }
  }
  return hits;
}

}  // namespace serrewt::brauer
