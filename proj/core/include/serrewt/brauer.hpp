#pragma once

// Brauer characters of GL_2(F_q) on p-regular classes and the decomposition
// of reduced principal series Ind_B(eta1 (x) eta2) into Serre weights.
//
// Eigenvalues are recorded as discrete logs in F_{q^2}^x, so a Brauer value is
// a sum of powers of zeta_M, M = q^2 - 1. Multiplicities are solved modulo a
// prime l = 1 mod M (zeta_M maps to a primitive M-th root of unity, a ring map
// from Z[zeta_M]); full column rank of the candidate block and agreement on
// every class make the solution unique. The result can then be certified
// exactly in Z[x]/Phi_M.

#include <cstdint>
#include <memory>
#include <vector>

#include "serrewt/chars.hpp"
#include "serrewt/oracle.hpp"
#include "serrewt/weights.hpp"

namespace serrewt::brauer {

struct Constituent {
  SerreWeight weight;  // canonical m
  std::int64_t multiplicity = 0;
  friend bool operator==(const Constituent&, const Constituent&) = default;
};
using Multiset = std::vector<Constituent>;  // sorted by weight

struct ClassRep {
  enum Kind { Central, Split, Nonsplit } kind;
  std::int64_t kx;  // discrete logs of the two eigenvalues in F_{q^2}^x
  std::int64_t ky;
};

class BrauerTable {
 public:
  // Cached per (p, f).
  static std::shared_ptr<const BrauerTable> get(int p, int f);
  BrauerTable(int p, int f);

  int p() const { return p_; }
  int f() const { return f_; }
  std::int64_t q() const { return q_; }
  const std::vector<ClassRep>& classes() const { return classes_; }
  const std::vector<SerreWeight>& weights() const { return weights_; }
  std::uint64_t prime() const { return ell_; }

  // Constituents of Ind_B(x^{t1} (x) x^{t2}) with multiplicity.
  Multiset decompose_ind(std::int64_t t1, std::int64_t t2) const;
  // Exact check in Z[zeta_M] that the multiset has the Brauer character of
  // Ind_B(x^{t1} (x) x^{t2}) on every p-regular class.
  bool certify_ind(std::int64_t t1, std::int64_t t2, const Multiset& ms) const;

 private:
  struct Group {
    std::vector<int> candidates;                   // weight indices
    std::vector<int> pivots;                       // class indices
    std::vector<std::vector<std::uint64_t>> inv;   // inverse of the pivot block
  };

  std::uint64_t weight_value(int w, const ClassRep& g) const;
  std::uint64_t ind_value(std::int64_t t1, std::int64_t t2, const ClassRep& g) const;
  std::int64_t central_scalar(int w) const;

  int p_, f_;
  std::int64_t q_, N_, M_;
  std::vector<std::int64_t> twist_;  // p^{f-i} mod M
  std::vector<ClassRep> classes_;
  std::vector<SerreWeight> weights_;
  std::uint64_t ell_ = 0;
  std::vector<std::uint64_t> zpow_;  // zeta^k mod l
  std::vector<std::vector<std::uint32_t>> value_;  // value_[w][class] mod l
  std::vector<Group> groups_;                      // by central scalar
  std::vector<std::vector<std::int64_t>> reduce_;  // x^k mod Phi_M, k < M
};

// Constituents of Ind_B(eta1 (x) eta2); for eta1 = eta2 this is theta' =
// (det o eta) (x) Ind_B 1. Certified exactly when `certify` is set.
Multiset brute_jh(const InertialChar& eta1, const InertialChar& eta2, const oracle::Limits& lim = {},
                  bool certify = true);

// The one-dimensional theta of a scalar type: det o eta.
SerreWeight det_weight(const InertialChar& eta);

struct TypeHit {
  InertialChar first;
  InertialChar second;  // scalar of first <= scalar of second
  Multiset constituents;
};
// Every unordered pair {eta1, eta2} whose Ind_B contains mu, plus scalar
// types det o eta equal to mu; hits are certified exactly.
std::vector<TypeHit> types_containing(const SerreWeight& mu, const oracle::Limits& lim = {});

}  // namespace serrewt::brauer
