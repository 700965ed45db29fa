#include "serrewt/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "serrewt/brauer.hpp"
#include "serrewt/breuil.hpp"
#include "serrewt/errors.hpp"
#include "serrewt/numeric.hpp"
#include "serrewt/oracle.hpp"
#include "serrewt/weights.hpp"

namespace serrewt::acceptance {
namespace {

// Thrown to stop a suite at its first failing instance.
struct Failure {
  std::string what;
};

void check(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::string str(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string str(const SerreWeight& w) {
  const SerreWeight c = w.canonical();
  return "mu[m=" + str(c.m) + ",n=" + str(c.n) + "]";
}

bool next_tuple(Tuple& t, std::int64_t lo, std::int64_t hi) {
  int k = static_cast<int>(t.size()) - 1;
  while (k >= 0 && t[k] == hi) t[k--] = lo;
  if (k < 0) return false;
  ++t[k];
  return true;
}

bool has(const std::vector<SerreWeight>& ws, const SerreWeight& w) { return std::find(ws.begin(), ws.end(), w) != ws.end(); }

// Visits every generic pair (chi1, chi2): chi1 arbitrary, chi1^-1 chi2 with
// digits in [e', p-1-e'].
template <class F>
void for_each_generic(int p, int f, int e, F&& fn) {
  const std::int64_t N = ipow(p, f) - 1;
  for (std::int64_t c = 0; c < N; ++c) {
    const InertialChar chi1(p, f, c);
    Tuple b(f, 0);
    do {
      Tuple digits(f);
      for (int i = 0; i < f; ++i) digits[i] = b[i] + e;
      fn(chi1, chi1 * InertialChar::from_digits(p, f, digits));
    } while (next_tuple(b, 0, p - 1 - 2 * e));
  }
}

struct Grid {
  int p, f, e;
};
std::vector<Grid> partition_grid() {
  std::vector<Grid> g;
  for (int p : {5, 7})
    for (int f : {1, 2})
      for (int e : {1, 2})
        if (2 * e <= p - 1) g.push_back({p, f, e});
  return g;
}

std::vector<SerreWeight> weights_of(const Partition& part) {
  std::vector<SerreWeight> all;
  for (const auto& cell : part.cells) {
    for (const auto& [prm, w] : cell.W) all.push_back(w);
    for (const auto& [prm, w] : cell.extra) all.push_back(w);
  }
  return all;
}

std::string criterion1() {
  int cases = 0;
  for (int p : {5, 7}) {
    const oracle::Limits lim{50, 49};
    for (int b = 1; b <= p - 2; ++b) {
      const std::string tag = "(p=" + std::to_string(p) + ",b=" + std::to_string(b) + ") ";
      const InertialChar chi1 = InertialChar::trivial(p, 2);
      const InertialChar chi2 = InertialChar::from_digits(p, 2, {p - 1, b});
      const auto W = enumerate_Wss(chi1, chi2, 1);
      const SerreWeight mu{p, 2, {p - 1, b - 1}, {p - 1, p - b - 1}};
      const SerreWeight mup{p, 2, {0, 0}, {p - 2, b - 1}};
      auto dims_of = [&](const SerreWeight& w) {
        std::set<std::int64_t> dims;
        for (const auto& ww : W)
          if (ww.weight == w)
            for (const auto& prm : ww.witnesses) dims.insert(lcris_dim(1, prm));
        return dims;
      };
      check(dims_of(mu) == std::set<std::int64_t>{1}, tag + "dim L_cris for mu is not 1");
      check(dims_of(mup) == std::set<std::int64_t>{2}, tag + "dim L_cris for mu' is not 2");
      const auto hits = brauer::types_containing(mu, lim);
      check(hits.size() == 1, tag + std::to_string(hits.size()) + " principal series types contain mu");
      const auto x = InertialChar::from_digits(p, 2, {p - 2, p - 1});
      const auto y = InertialChar::from_digits(p, 2, {p - 1, b - 1});
      const bool match = (hits[0].first == x && hits[0].second == y) || (hits[0].first == y && hits[0].second == x);
      check(match, tag + "the unique type has exponent scalars " + std::to_string(hits[0].first.scalar()) + ", " +
                       std::to_string(hits[0].second.scalar()));
      const bool mup_in = std::any_of(hits[0].constituents.begin(), hits[0].constituents.end(),
                                      [&](const brauer::Constituent& c) { return c.weight == mup; });
      check(mup_in, tag + "mu' is not a constituent of the type");
      ++cases;
    }
  }
  return std::to_string(cases) + " (p,b) cases: dims (1,2), one matching type each";
}

std::string criterion2() {
  struct G {
    int f, e;
  };
  std::int64_t pairs = 0;
  for (const G g : {G{1, 1}, G{1, 2}, G{1, 3}, G{2, 1}}) {
    const Params P = make_params(3, g.f, g.e);
    const auto A = oracle::all_modules(P, 0);
    auto B = oracle::all_modules(P, 0);
    const auto other = oracle::all_modules(P, 1);
    B.insert(B.end(), other.begin(), other.end());
    for (const auto& M : A)
      for (const auto& N : B) {
        const std::string tag = "(f=" + std::to_string(g.f) + ",e'=" + std::to_string(g.e) + ") M(r=" + str(M.r()) +
                                ",c=" + str(M.c()) + ") N(s=" + str(N.r()) + ",d=" + str(N.c()) +
                                ",dlog=" + std::to_string(N.a_norm_dlog()) + ") ";
        const auto brute_ext = oracle::brute_ext_dim(M, N);
        check(ext_dim(M, N) == brute_ext, tag + "ext_dim " + std::to_string(ext_dim(M, N)) + " vs oracle " +
                                              std::to_string(brute_ext));
        check(hom_exists(M, N).exists == oracle::brute_hom_space(M, N).nonzero(), tag + "hom_exists disagrees");
        ++pairs;
      }
  }
  return std::to_string(pairs) + " pairs agree";
}

std::string criterion3() {
  std::int64_t scenarios = 0;
  for (const Grid g : partition_grid())
    for_each_generic(g.p, g.f, g.e, [&](const InertialChar& chi1, const InertialChar& chi2) {
      const std::string tag = "(p=" + std::to_string(g.p) + ",f=" + std::to_string(g.f) + ",e'=" + std::to_string(g.e) +
                              ",chi1=" + std::to_string(chi1.scalar()) + ",chi2=" + std::to_string(chi2.scalar()) + ") ";
      const GenericityData gen = genericity(chi1, chi2, g.e);
      const Partition part = partition(gen);
      const auto W = enumerate_Wss(chi1, chi2, g.e);
      std::vector<SerreWeight> seen;
      for (const auto& cell : part.cells) {
        check(static_cast<std::int64_t>(cell.W.size()) == (std::int64_t{1} << (g.f - cell.delta_a)),
              tag + "|W_a| != 2^(f - delta_a) at a=" + str(cell.a));
        auto visit = [&](const WeightParam& prm, const SerreWeight& w) {
          std::int64_t sa = 0, sd = 0;
          for (int i = 0; i < g.f; ++i) sa += cell.a[i], sd += prm.d[i];
          check(sa == sd, tag + "sum a != sum d at a=" + str(cell.a));
          check(!has(seen, w), tag + str(w) + " lies in two cells");
          seen.push_back(w);
          const auto it = std::find_if(W.begin(), W.end(), [&](const WeightWitnesses& x) { return x.weight == w; });
          check(it != W.end(), tag + str(w) + " is not in W");
          if (!prm.exceptional)
            check(std::find(it->witnesses.begin(), it->witnesses.end(), prm) != it->witnesses.end(),
                  tag + str(w) + " does not have (J,d) as a witness");
        };
        for (const auto& [prm, w] : cell.W) visit(prm, w);
        for (const auto& [prm, w] : cell.extra) visit(prm, w);
      }
      check(seen.size() == W.size(), tag + "cells cover " + std::to_string(seen.size()) + " of " +
                                         std::to_string(W.size()) + " weights");
      std::vector<SerreWeight> images;
      for (const auto& prm : legal_params(g.e, g.f)) {
        const SerreWeight w = mu_of_Jd(gen, prm.J, prm.d);
        check(!has(images, w), tag + "mu(J,d) is not injective at " + str(w));
        images.push_back(w);
      }
      ++scenarios;
    });
  return std::to_string(scenarios) + " generic pairs partitioned";
}

std::string criterion4() {
  std::int64_t scenarios = 0;
  for (int e : {1, 2}) {
    const Params P = make_params(5, 2, e);
    for_each_generic(5, 2, e, [&](const InertialChar& chi1, const InertialChar& chi2) {
      const std::string tag = "(e'=" + std::to_string(e) + ",chi1=" + std::to_string(chi1.scalar()) +
                              ",chi2=" + std::to_string(chi2.scalar()) + ") ";
      const GenericityData gen = genericity(chi1, chi2, e);
      const GaloisChar chi = make_galois_char(P, (chi2 / chi1).scalar(), scenarios % P.kE_units());
      const auto A = index_set(e, 2);
      std::vector<LSpace> L;
      for (const auto& a : A) {
        L.push_back(l_space(P, twisted_type(gen, a), chi));
        std::int64_t expect = 0;
        for (auto x : a) expect += e - x;
        check(L.back().dim() == expect, tag + "dim L at a=" + str(a) + " is " + std::to_string(L.back().dim()));
      }
      for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j) {
          Tuple mx(2);
          for (int k = 0; k < 2; ++k) mx[k] = std::max(A[i][k], A[j][k]);
          const std::size_t m = std::find(A.begin(), A.end(), mx) - A.begin();
          check(intersect(L[i], L[j]).degrees == L[m].degrees,
                tag + "L(a) meet L(a') differs from L(max) at a=" + str(A[i]) + ", a'=" + str(A[j]));
        }
      ++scenarios;
    });
  }
  return std::to_string(scenarios) + " generic pairs, all (a,a') pairs";
}

std::string criterion5() {
  const int p = 5, f = 2, e = 1;
  const std::vector<Tuple> bs{{1, 1}, {0, 0}, {2, 2}, {0, 1}, {2, 0}};
  const std::vector<std::int64_t> cs{7, 0, 13, 5, 19};
  int compared = 0, scalar_cases = 0;
  for (std::size_t k = 0; k < bs.size(); ++k) {
    const InertialChar chi1(p, f, cs[k]);
    Tuple digits{bs[k][0] + e, bs[k][1] + e};
    const InertialChar chi2 = chi1 * InertialChar::from_digits(p, f, digits);
    const GenericityData gen = genericity(chi1, chi2, e);
    const auto Wp = weights_of(partition(gen));
    const std::string tag = "(b=" + str(bs[k]) + ",c=" + std::to_string(cs[k]) + ") ";
    auto compare = [&](const std::vector<SerreWeight>& formula, const brauer::Multiset& brute, const std::string& what) {
      std::vector<SerreWeight> lhs, rhs;
      for (const auto& w : formula)
        if (has(Wp, w)) lhs.push_back(w);
      for (const auto& c : brute)
        if (has(Wp, c.weight)) {
          check(c.multiplicity == 1, tag + what + ": " + str(c.weight) + " has multiplicity " + std::to_string(c.multiplicity));
          rhs.push_back(c.weight);
        }
      std::sort(lhs.begin(), lhs.end());
      std::sort(rhs.begin(), rhs.end());
      check(lhs == rhs, tag + what + ": formula and Brauer constituents differ inside W'");
      ++compared;
    };
    for (const auto& a : index_set(e, f)) {
      const TypeOfA t = tau_of_a(gen, a);
      if (!t.scalar) {
        compare(jh_constituents(gen, a), brauer::brute_jh(t.first, t.second), "theta at a=" + str(a));
        continue;
      }
      ++scalar_cases;
      const auto jh = jh_constituents(gen, a);
      check(jh.size() == 1 && jh[0] == brauer::det_weight(t.first), tag + "scalar theta at a=" + str(a));
      compare(jh, {{brauer::det_weight(t.first), 1}}, "theta at a=" + str(a));
      compare(jh_constituents_prime(gen, a), brauer::brute_jh(t.first, t.first), "theta' at a=" + str(a));
    }
  }
  check(scalar_cases == 2, "expected both scalar-type cases, saw " + std::to_string(scalar_cases));
  return std::to_string(compared) + " constituent sets agree (" + std::to_string(scalar_cases) + " scalar types)";
}

std::string criterion6(std::uint64_t seed) {
  const Params P = make_params(3, 2, 1);
  const std::int64_t n = P.N();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, n - 1), unit(0, P.kE_units() - 1);
  int done = 0, attempts = 0, upper_pairs = 0;
  while (done < 100) {
    check(++attempts < 100000, "could not draw 100 (tau, chi) with nonempty model sets");
    const TypePair tau{InertialChar(P.p, P.f, pick(rng)), InertialChar(P.p, P.f, pick(rng))};
    const GaloisChar chi = make_galois_char(P, pick(rng), unit(rng));
    const auto S = models_of_type(P, tau, chi);
    if (S.empty()) continue;
    const std::string tag = "(lambda=" + std::to_string(tau.lambda.scalar()) + ",lambda'=" +
                            std::to_string(tau.lambda_prime.scalar()) + ",chi=" + std::to_string(chi.inertial.scalar()) +
                            "/" + std::to_string(chi.unramified_dlog) + ") ";
    const auto brute = oracle::brute_models_of_type(P, tau, chi);
    check(brute.size() == S.size(), tag + "model count " + std::to_string(S.size()) + " vs definition " +
                                        std::to_string(brute.size()));
    const auto ext = extremal_models(P, tau, chi);
    for (const auto& m : S) {
      const RankOneBreuil again = RankOneBreuil::make_dlog(P, m.module.r(), m.module.a_norm_dlog(), m.module.c());
      check(again == m.module, tag + "model does not revalidate");
      check(generic_fibre(m.module) == chi, tag + "model has the wrong generic fibre");
      check(std::find(brute.begin(), brute.end(), m.module) != brute.end(), tag + "model violates the definition");
      check(oracle::brute_hom_space(m.module, ext.maximal).nonzero(), tag + "no map to the maximal model");
      check(oracle::brute_hom_space(ext.minimal, m.module).nonzero(), tag + "no map from the minimal model");
    }
    for (const auto& x : S)
      for (const auto& y : S) {
        const RankOneBreuil U = upper_bound_model(x.module, y.module);
        for (int i = 0; i < P.f; ++i)
          check(U.alpha()[i] == std::max(x.module.alpha()[i], y.module.alpha()[i]), tag + "gamma != max(alpha, beta)");
        ++upper_pairs;
      }
    ++done;
  }
  int minimal_checked = 0;
  const GaloisChar one = GaloisChar::trivial(P);
  for (std::int64_t l = 0; l < n; ++l)
    for (std::int64_t lp = 0; lp < n; ++lp) {
      const TypePair tau{InertialChar(P.p, P.f, l), InertialChar(P.p, P.f, lp)};
      const Tuple nu = tau.lambda.digits(), nup = tau.lambda_prime.digits();
      bool hyp = true;
      for (int i = 0; i < P.f; ++i) hyp = hyp && nup[i] >= P.p - 1 - P.eprime && nu[i] <= nup[i];
      if (!hyp) continue;
      const auto ext = extremal_models(P, tau, one);
      check(ext.minimal == minimal_trivial_model(P, tau),
            "minimal model differs from the closed form at lambda=" + std::to_string(l) + ", lambda'=" + std::to_string(lp));
      ++minimal_checked;
    }
  return std::to_string(done) + " (tau,chi), " + std::to_string(upper_pairs) + " upper bounds, " +
         std::to_string(minimal_checked) + " minimal models";
}

std::string criterion7() {
  std::int64_t weights = 0;
  for (const Grid g : partition_grid())
    for_each_generic(g.p, g.f, g.e, [&](const InertialChar& chi1, const InertialChar& chi2) {
      const GenericityData gen = genericity(chi1, chi2, g.e);
      for (const auto& cell : partition(gen).cells) {
        std::int64_t expect = 0;
        for (auto x : cell.a) expect += g.e - x;
        auto visit = [&](const WeightParam& prm, const SerreWeight& w) {
          check(lcris_dim(gen, prm) == expect, "(p=" + std::to_string(g.p) + ",f=" + std::to_string(g.f) + ",e'=" +
                                                   std::to_string(g.e) + ") lcris_dim of " + str(w) +
                                                   " differs from its host a=" + str(cell.a));
          ++weights;
        };
        for (const auto& [prm, w] : cell.W) visit(prm, w);
        for (const auto& [prm, w] : cell.extra) visit(prm, w);
      }
    });
  return std::to_string(weights) + " weights";
}

std::string criterion8() {
  int checks = 0;
  for (const Grid g : partition_grid()) {
    const std::int64_t N = ipow(g.p, g.f) - 1;
    // A spread of chi1; every generic quotient.
    for (std::int64_t c : {std::int64_t{0}, N / 3, N - 1}) {
      const InertialChar chi1(g.p, g.f, c);
      Tuple b(g.f, 0);
      do {
        Tuple digits(g.f);
        for (int i = 0; i < g.f; ++i) digits[i] = b[i] + g.e;
        const InertialChar chi2 = chi1 * InertialChar::from_digits(g.p, g.f, digits);
        const GenericityData gen = genericity(chi1, chi2, g.e);
        const auto A = index_set(g.e, g.f);
        std::vector<std::vector<SerreWeight>> shapes;
        for (const auto& a : A) shapes.push_back(wexpl_shape(gen, ShapeSpec{a, false}));
        for (std::size_t i = 0; i < A.size(); ++i)
          for (std::size_t j = 0; j < A.size(); ++j) {
            if (!leq(A[i], A[j])) continue;
            for (const auto& w : shapes[i])
              check(has(shapes[j], w), "shape is not monotone between a=" + str(A[i]) + " and a=" + str(A[j]));
            ++checks;
          }
        const bool cyclotomic = std::all_of(b.begin(), b.end(), [](auto x) { return x == 0; });
        if (cyclotomic) {
          const auto tr = wexpl_shape(gen, ShapeSpec{std::nullopt, true});
          check(tr.size() == 1, "tres ramifiee output is not a single weight");
          check(std::all_of(tr[0].n.begin(), tr[0].n.end(), [&](auto x) { return x == g.p - 1; }),
                "tres ramifiee weight does not have n = (p-1,...,p-1)");
          ++checks;
        }
      } while (next_tuple(b, 0, g.p - 1 - 2 * g.e));
    }
  }
  return std::to_string(checks) + " shape comparisons";
}

const char* name_of(int id) {
  switch (id) {
    case 1: return "counterexample";
    case 2: return "ext-oracle";
    case 3: return "partition";
    case 4: return "lattice";
    case 5: return "jh-brauer";
    case 6: return "models";
    case 7: return "lcris-counts";
    case 8: return "shape";
  }
  return "unknown";
}

}  // namespace

Result run(int id, const Options& opt) {
  Result r;
  r.id = id;
  r.name = name_of(id);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: r.detail = criterion1(); break;
      case 2: r.detail = criterion2(); break;
      case 3: r.detail = criterion3(); break;
      case 4: r.detail = criterion4(); break;
      case 5: r.detail = criterion5(); break;
      case 6: r.detail = criterion6(opt.seed); break;
      case 7: r.detail = criterion7(); break;
      case 8: r.detail = criterion8(); break;
      default: fail(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
    }
    r.pass = true;
  } catch (const Failure& f) {
    r.detail = f.what;
  } catch (const Error& e) {
    r.detail = std::string(to_string(e.kind())) + ": " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Result> run_all(const Options& opt, const std::function<void(const Result&)>& on_result) {
  std::vector<Result> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run(id, opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_line(const Result& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << " (" << r.seconds << " s)";
  return os.str();
}

}  // namespace serrewt::acceptance
