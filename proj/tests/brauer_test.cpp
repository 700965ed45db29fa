#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "serrewt/brauer.hpp"
#include "serrewt/errors.hpp"
#include "serrewt/numeric.hpp"
#include "serrewt/weights.hpp"

using namespace serrewt;
using brauer::Multiset;

namespace {

bool contains(const Multiset& ms, const SerreWeight& w) {
  return std::any_of(ms.begin(), ms.end(), [&](const brauer::Constituent& c) { return c.weight == w; });
}

std::int64_t total_dim(const Multiset& ms) {
  std::int64_t d = 0;
  for (const auto& c : ms) d += c.multiplicity * c.weight.dimension();
  return d;
}

SerreWeight twist(const SerreWeight& w, std::int64_t t) {
  const std::int64_t N = ipow(w.p, w.f) - 1;
  return make_weight(w.p, w.f, zero_based_digits(w.p, w.f, serrewt::mod(w.m_residue() + t, N)), w.n);
}

}  // namespace

TEST_CASE("Ind of the trivial pair contains the trivial and Steinberg weights", "[brauer]") {
  for (auto [p, f] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}, std::pair{5, 2}}) {
    const InertialChar one = InertialChar::trivial(p, f);
    const Multiset ms = brauer::brute_jh(one, one);
    const Tuple zero(f, 0), top(f, p - 1);
    CHECK(contains(ms, make_weight(p, f, zero, zero)));
    CHECK(contains(ms, make_weight(p, f, zero, top)));
    CHECK(total_dim(ms) == ipow(p, f) + 1);
  }
}

TEST_CASE("Brauer table class and weight counts", "[brauer]") {
  const auto T = brauer::BrauerTable::get(3, 2);
  const std::int64_t q = 9;
  // q-1 central, (q-1)(q-2)/2 split, q(q-1)/2 nonsplit p-regular classes.
  CHECK(static_cast<std::int64_t>(T->classes().size()) == (q - 1) + (q - 1) * (q - 2) / 2 + q * (q - 1) / 2);
  CHECK(static_cast<std::int64_t>(T->weights().size()) == (q - 1) * q);
  CHECK(T == brauer::BrauerTable::get(3, 2));
}

TEST_CASE("decompositions account for the full degree and certify exactly", "[brauer]") {
  const auto T = brauer::BrauerTable::get(5, 2);
  for (std::int64_t t1 = 0; t1 < 24; t1 += 5)
    for (std::int64_t t2 = 0; t2 < 24; t2 += 7) {
      const Multiset ms = T->decompose_ind(t1, t2);
      CHECK(total_dim(ms) == 26);
      CHECK(T->certify_ind(t1, t2, ms));
      Multiset wrong = ms;
      wrong.front().multiplicity += 1;
      CHECK_FALSE(T->certify_ind(t1, t2, wrong));
    }
}

TEST_CASE("Ind of a scalar pair is the det twist of Ind of the trivial pair", "[brauer]") {
  for (std::int64_t t = 0; t < 24; ++t) {
    const InertialChar eta(5, 2, t), one = InertialChar::trivial(5, 2);
    const Multiset a = brauer::brute_jh(eta, eta), b = brauer::brute_jh(one, one);
    REQUIRE(a.size() == b.size());
    for (const auto& c : b) CHECK(contains(a, twist(c.weight, t)));
    CHECK(contains(a, brauer::det_weight(eta)));
  }
}

TEST_CASE("jh_constituents equals the Brauer oracle for non-scalar types", "[brauer][weights]") {
  const InertialChar chi1 = InertialChar::trivial(5, 2);
  const InertialChar chi2 = InertialChar::from_digits(5, 2, {2, 2});  // b = (1, 1)
  const GenericityData g = genericity(chi1, chi2, 1);
  for (const auto& a : index_set(1, 2)) {
    const TypeOfA t = tau_of_a(g, a);
    REQUIRE_FALSE(t.scalar);
    const Multiset ms = brauer::brute_jh(t.first, t.second);
    const auto jh = jh_constituents(g, a);
    INFO("a=(" << a[0] << "," << a[1] << ")");
    CHECK(ms.size() == jh.size());
    for (const auto& c : ms) {
      CHECK(c.multiplicity == 1);
      CHECK(std::find(jh.begin(), jh.end(), c.weight) != jh.end());
    }
  }
}

TEST_CASE("the counterexample weight lies in exactly one type", "[brauer]") {
  const int p = 5, b = 2;
  const SerreWeight mu = make_weight(p, 2, {p - 1, b - 1}, {p - 1, p - b - 1});
  const auto hits = brauer::types_containing(mu);
  REQUIRE(hits.size() == 1);
  const std::set<std::int64_t> got{hits[0].first.scalar(), hits[0].second.scalar()};
  const std::set<std::int64_t> want{InertialChar::from_digits(p, 2, {p - 2, p - 1}).scalar(),
                                    InertialChar::from_digits(p, 2, {p - 1, b - 1}).scalar()};
  CHECK(got == want);
}

TEST_CASE("Brauer oracle enforces its size limit", "[brauer][limits]") {
  const InertialChar one = InertialChar::trivial(7, 2);
  CHECK_THROWS_AS(brauer::brute_jh(one, one), Error);
}
