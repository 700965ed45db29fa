#include "serrewt/weights.hpp"

#include <algorithm>
#include <map>

#include "serrewt/errors.hpp"
#include "serrewt/numeric.hpp"

namespace serrewt {
namespace {

bool contains(const std::vector<int>& J, int i) { return std::find(J.begin(), J.end(), i) != J.end(); }

std::vector<int> subset_of(int mask, int f) {
  std::vector<int> J;
  for (int i = 0; i < f; ++i)
    if (mask >> i & 1) J.push_back(i);
  return J;
}

std::vector<int> full_set(int f) { return subset_of((1 << f) - 1, f); }

// Advance t lexicographically within [lo, hi]^f (last index fastest).
bool next_tuple(Tuple& t, std::int64_t lo, std::int64_t hi) {
  int k = static_cast<int>(t.size()) - 1;
  while (k >= 0 && t[k] == hi) t[k--] = lo;
  if (k < 0) return false;
  ++t[k];
  return true;
}

std::int64_t weighted(int p, int f, const Tuple& x) {
  std::int64_t t = 0;
  const std::int64_t n = ipow(p, f) - 1;
  for (int i = 0; i < f; ++i) t = mod(t + embedded_scalar(p, f, i, x[i]), n);
  return t;
}

}  // namespace

std::int64_t SerreWeight::m_residue() const { return weighted(p, f, m); }

SerreWeight SerreWeight::canonical() const { return SerreWeight{p, f, zero_based_digits(p, f, m_residue()), n}; }

std::int64_t SerreWeight::dimension() const {
  std::int64_t d = 1;
  for (auto x : n) d *= x + 1;
  return d;
}

bool operator<(const SerreWeight& x, const SerreWeight& y) {
  const auto rx = x.m_residue(), ry = y.m_residue();
  if (rx != ry) return rx < ry;
  return x.n < y.n;
}

SerreWeight make_weight(int p, int f, Tuple m, Tuple n) {
  if (static_cast<int>(m.size()) != f || static_cast<int>(n.size()) != f)
    fail(ErrorKind::InvalidArgument, "weight tuples must have length f");
  for (auto x : n)
    if (x < 0 || x > p - 1) fail(ErrorKind::RangeViolation, "n_i must lie in [0, p-1]");
  return SerreWeight{p, f, std::move(m), std::move(n)};
}

bool legal_param(int eprime, int f, const std::vector<int>& J, const Tuple& d) {
  if (static_cast<int>(d.size()) != f) return false;
  for (int i : J)
    if (i < 0 || i >= f) return false;
  for (int i = 0; i < f; ++i) {
    const bool in = contains(J, i);
    if (in && (d[i] < 0 || d[i] > eprime - 1)) return false;
    if (!in && (d[i] < 1 || d[i] > eprime)) return false;
  }
  return true;
}

std::vector<WeightParam> legal_params(int eprime, int f) {
  std::vector<WeightParam> out;
  for (int mask = 0; mask < (1 << f); ++mask) {
    const auto J = subset_of(mask, f);
    Tuple d(f, 0);
    do {
      if (legal_param(eprime, f, J, d)) out.push_back({J, d, false});
    } while (next_tuple(d, 0, eprime));
  }
  return out;
}

std::vector<WeightWitnesses> enumerate_Wss(const InertialChar& chi1, const InertialChar& chi2, int eprime) {
  const int p = chi1.p(), f = chi1.f();
  const std::int64_t N = chi1.modulus();
  const auto params = legal_params(eprime, f);
  Tuple w(f);
  for (int i = 0; i < f; ++i) w[i] = digit_weight(p, f, i);
  std::vector<WeightWitnesses> out;
  for (std::int64_t R = 0; R < N; ++R) {
    Tuple n(f, 0);
    do {
      std::vector<WeightParam> wit;
      for (const auto& prm : params) {
        std::int64_t s2 = R, s1 = R;
        for (int i = 0; i < f; ++i) {
          if (contains(prm.J, i)) {
            s2 += (n[i] + eprime - prm.d[i]) * w[i];
            s1 += prm.d[i] * w[i];
          } else {
            s2 += (eprime - prm.d[i]) * w[i];
            s1 += (n[i] + prm.d[i]) * w[i];
          }
        }
        if (mod(s2, N) == chi2.scalar() && mod(s1, N) == chi1.scalar()) wit.push_back(prm);
      }
      if (!wit.empty()) out.push_back({SerreWeight{p, f, zero_based_digits(p, f, R), n}, std::move(wit)});
    } while (next_tuple(n, 0, p - 1));
  }
  return out;
}

GenericityData genericity(const InertialChar& chi1, const InertialChar& chi2, int eprime) {
  const int p = chi1.p(), f = chi1.f();
  if (eprime < 1) fail(ErrorKind::InvalidArgument, "eprime must be >= 1");
  if (2 * eprime > p - 1)
    fail(ErrorKind::NotGeneric, "no generic pair exists: 2e' = " + std::to_string(2 * eprime) + " > p-1");
  const Tuple digits = (chi2 / chi1).digits();
  GenericityData g{p, f, eprime, Tuple(f), zero_based_digits(p, f, chi1.scalar())};
  for (int i = 0; i < f; ++i) {
    if (digits[i] < eprime || digits[i] > p - 1 - eprime)
      fail(ErrorKind::NotGeneric, "(chi1, chi2) is not generic: digit " + std::to_string(i) + " of chi1^-1 chi2 is " + std::to_string(digits[i]) +
                                      ", outside [e', p-1-e']");
    g.b[i] = digits[i] - eprime;
  }
  return g;
}

SerreWeight mu_of_Jd(const GenericityData& gen, const std::vector<int>& J, const Tuple& d) {
  const int f = gen.f, p = gen.p;
  if (!legal_param(gen.eprime, f, J, d)) fail(ErrorKind::RangeViolation, "(J, d) outside the legal range");
  Tuple m(f), n(f);
  for (int i = 0; i < f; ++i) {
    const bool in = contains(J, i), next = contains(J, cyc(i + 1, f));
    const std::int64_t c = gen.c[i], b = gen.b[i];
    if (in && next) {
      m[i] = c + p - 1 - d[i], n[i] = b + 2 * d[i];
    } else if (in) {
      m[i] = c + p - 1 - d[i], n[i] = b + 2 * d[i] + 1;
    } else if (next) {
      m[i] = c + b + d[i] - 1, n[i] = p - b - 2 * d[i];
    } else {
      m[i] = c + b + d[i], n[i] = p - 1 - b - 2 * d[i];
    }
  }
  return make_weight(p, f, m, n);
}

std::vector<ExceptionalWeight> exceptional_weights(const GenericityData& gen) {
  const int f = gen.f, p = gen.p, e = gen.eprime;
  std::vector<ExceptionalWeight> out;
  const bool b_zero = std::all_of(gen.b.begin(), gen.b.end(), [](auto x) { return x == 0; });
  const bool b_top = std::all_of(gen.b.begin(), gen.b.end(), [&](auto x) { return x == p - 1 - 2 * e; });
  if (b_zero) {
    out.push_back({WeightParam{full_set(f), Tuple(f, 0), true}, make_weight(p, f, gen.c, Tuple(f, p - 1)), Tuple(f, 0)});
  }
  if (b_top) {
    Tuple m(f);
    for (int i = 0; i < f; ++i) m[i] = gen.c[i] - e;
    out.push_back({WeightParam{{}, Tuple(f, e), true}, make_weight(p, f, m, Tuple(f, p - 1)), Tuple(f, e)});
  }
  return out;
}

TypeOfA tau_of_a(const GenericityData& gen, const Tuple& a) {
  const int f = gen.f, p = gen.p;
  if (static_cast<int>(a.size()) != f) fail(ErrorKind::InvalidArgument, "a must have length f");
  for (auto x : a)
    if (x < 0 || x > gen.eprime) fail(ErrorKind::RangeViolation, "a_i must lie in [0, e']");
  Tuple e1(f), e2(f);
  for (int i = 0; i < f; ++i) {
    e1[i] = gen.c[i] + gen.b[i] + a[i];
    e2[i] = gen.c[i] - a[i];
  }
  TypeOfA t{InertialChar::from_digits(p, f, e1), InertialChar::from_digits(p, f, e2), false};
  t.scalar = t.first == t.second;
  return t;
}

TypePair twisted_type(const GenericityData& gen, const Tuple& a) {
  const int f = gen.f, p = gen.p;
  Tuple e1(f), e2(f);
  for (int i = 0; i < f; ++i) {
    e1[i] = a[i] + gen.b[i];
    e2[i] = -a[i];
  }
  return TypePair{InertialChar::from_digits(p, f, e1), InertialChar::from_digits(p, f, e2)};
}

namespace {

SerreWeight nu_of(const GenericityData& gen, const Tuple& a, const std::vector<int>& Jp, bool& nonneg) {
  const int f = gen.f, p = gen.p;
  Tuple m(f), n(f);
  nonneg = true;
  for (int i = 0; i < f; ++i) {
    const bool in = contains(Jp, i), next = contains(Jp, cyc(i + 1, f));
    const std::int64_t b = gen.b[i];
    if (in && next) {
      m[i] = p - 1 - a[i], n[i] = b + 2 * a[i];
    } else if (in) {
      m[i] = p - a[i], n[i] = b + 2 * a[i] - 1;
    } else if (next) {
      m[i] = b + a[i], n[i] = p - 2 - b - 2 * a[i];
    } else {
      m[i] = b + a[i], n[i] = p - 1 - b - 2 * a[i];
    }
    m[i] += gen.c[i];
    if (n[i] < 0 || n[i] > p - 1) nonneg = false;
  }
  return SerreWeight{p, f, m, n};
}

}  // namespace

std::vector<SerreWeight> jh_constituents(const GenericityData& gen, const Tuple& a) {
  const int f = gen.f;
  const TypeOfA t = tau_of_a(gen, a);
  std::vector<SerreWeight> out;
  bool ok = false;
  if (t.scalar) {
    const bool bottom = std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; });
    SerreWeight w = nu_of(gen, a, bottom ? full_set(f) : std::vector<int>{}, ok);
    ensure(ok, "scalar constituent has n outside [0, p-1]");
    out.push_back(w);
    return out;
  }
  for (int mask = 0; mask < (1 << f); ++mask) {
    SerreWeight w = nu_of(gen, a, subset_of(mask, f), ok);
    if (ok && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

std::vector<SerreWeight> jh_constituents_prime(const GenericityData& gen, const Tuple& a) {
  const TypeOfA t = tau_of_a(gen, a);
  if (!t.scalar) return jh_constituents(gen, a);
  const int f = gen.f, p = gen.p;
  const Tuple m = zero_based_digits(p, f, t.first.scalar());
  return {make_weight(p, f, m, Tuple(f, 0)), make_weight(p, f, m, Tuple(f, p - 1))};
}

Tuple host_of(int eprime, int f, const std::vector<int>& J, const Tuple& d) {
  (void)eprime;
  Tuple a(f);
  for (int i = 0; i < f; ++i) {
    const bool in = contains(J, i), next = contains(J, cyc(i + 1, f));
    a[i] = d[i] + (in && !next ? 1 : 0) - (!in && next ? 1 : 0);
  }
  return a;
}

std::vector<Tuple> index_set(int eprime, int f) {
  std::vector<Tuple> out;
  Tuple a(f, 0);
  do out.push_back(a);
  while (next_tuple(a, 0, eprime));
  return out;
}

bool leq(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Partition partition(const GenericityData& gen) {
  const int f = gen.f, e = gen.eprime;
  Partition P;
  std::map<Tuple, std::size_t> where;
  for (const auto& a : index_set(e, f)) {
    where[a] = P.cells.size();
    int da = 0;
    for (auto x : a) da += (x == 0 || x == e) ? 1 : 0;
    P.cells.push_back(PartitionCell{a, {}, {}, da});
  }
  std::vector<SerreWeight> all;
  for (const auto& prm : legal_params(e, f)) {
    const SerreWeight w = mu_of_Jd(gen, prm.J, prm.d);
    const Tuple a = host_of(e, f, prm.J, prm.d);
    auto it = where.find(a);
    ensure(it != where.end(), "a-vs-d rule produced an index outside A");
    std::int64_t sa = 0, sd = 0;
    for (int i = 0; i < f; ++i) sa += a[i], sd += prm.d[i];
    ensure(sa == sd, "sum of a differs from sum of d");
    ensure(std::find(all.begin(), all.end(), w) == all.end(), "weights mu(J,d) are not distinct");
    all.push_back(w);
    P.cells[it->second].W.push_back({prm, w});
  }
  for (const auto& x : exceptional_weights(gen)) {
    ensure(std::find(all.begin(), all.end(), x.weight) == all.end(), "exceptional weight collides with W");
    all.push_back(x.weight);
    P.cells[where.at(x.host)].extra.push_back({x.param, x.weight});
  }
  for (auto& cell : P.cells) {
    ensure(static_cast<std::int64_t>(cell.W.size()) == (std::int64_t{1} << (f - cell.delta_a)),
           "|W_a| differs from 2^{f - delta_a}");
    const auto jh = jh_constituents(gen, cell.a);
    const auto jhp = jh_constituents_prime(gen, cell.a);
    for (const auto& [prm, w] : cell.W)
      ensure(std::find(jh.begin(), jh.end(), w) != jh.end(), "W_a is not contained in the constituents of theta_a");
    for (const auto& [prm, w] : cell.extra)
      ensure(std::find(jhp.begin(), jhp.end(), w) != jhp.end(), "exceptional weight is not a constituent of theta'_a");
    // W_a consists of exactly the constituents of theta_a lying in W.
    std::int64_t in_W = 0;
    for (const auto& w : jh)
      for (const auto& other : P.cells)
        for (const auto& [prm, x] : other.W)
          if (x == w) {
            ensure(&other == &cell, "a weight of W is a constituent of two different theta_a");
            ++in_W;
          }
    ensure(in_W == static_cast<std::int64_t>(cell.W.size()), "constituents of theta_a in W differ from W_a");
  }
  return P;
}

std::vector<SerreWeight> wexpl_shape(const GenericityData& gen, const ShapeSpec& spec) {
  const int f = gen.f, p = gen.p;
  if (spec.tres_ramifiee) {
    if (spec.a_max) fail(ErrorKind::IllegalFlag, "tres_ramifiee excludes a_max");
    const bool cyclotomic = std::all_of(gen.b.begin(), gen.b.end(), [](auto x) { return x == 0; });
    if (!cyclotomic)
      fail(ErrorKind::IllegalFlag, "tres_ramifiee requires chi1^-1 chi2 to be cyclotomic on inertia");
    return {make_weight(p, f, gen.c, Tuple(f, p - 1))};
  }
  if (!spec.a_max) fail(ErrorKind::InvalidArgument, "either a_max or tres_ramifiee is required");
  const Tuple& amax = *spec.a_max;
  if (static_cast<int>(amax.size()) != f) fail(ErrorKind::InvalidArgument, "a_max must have length f");
  for (auto x : amax)
    if (x < 0 || x > gen.eprime) fail(ErrorKind::RangeViolation, "a_max_i must lie in [0, e']");
  std::vector<SerreWeight> out;
  for (const auto& cell : partition(gen).cells) {
    if (!leq(cell.a, amax)) continue;
    for (const auto& [prm, w] : cell.W) out.push_back(w);
    for (const auto& [prm, w] : cell.extra) out.push_back(w);
  }
  return out;
}

std::int64_t lcris_dim(int eprime, const WeightParam& param) {
  const int f = static_cast<int>(param.d.size());
  if (param.exceptional) {
    if (param.J.empty()) return 0;
    return static_cast<std::int64_t>(eprime) * f;
  }
  std::int64_t s = 0;
  for (auto d : param.d) s += eprime - d;
  return s;
}

std::int64_t lcris_dim(const GenericityData& gen, const WeightParam& param) {
  if (!legal_param(gen.eprime, gen.f, param.J, param.d)) fail(ErrorKind::RangeViolation, "(J, d) outside the legal range");
  return lcris_dim(gen.eprime, param);
}

}  // namespace serrewt
