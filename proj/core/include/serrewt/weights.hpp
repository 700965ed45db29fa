#pragma once

// Serre weights mu_{m,n} of GL_2(k), the explicit weight set of a reducible
// representation, genericity, the weights mu(J,d) and their exceptional
// companions, the types tau_a with the constituents of their reductions, the
// partition of the weight set by types, predicted-weight shapes and L_cris
// dimension counts.
//
// In this module c_i, b_i, d_i are weight-side quantities (digits of chi_1,
// genericity digits, Hodge-Tate shifts), unrelated to Breuil-module data.

#include <cstdint>
#include <optional>
#include <vector>

#include "serrewt/breuil.hpp"
#include "serrewt/chars.hpp"

namespace serrewt {

struct SerreWeight {
  int p = 3;
  int f = 1;
  Tuple m;  // as produced; only sum m_i p^{f-i} mod p^f-1 is meaningful
  Tuple n;  // in [0, p-1]

  std::int64_t m_residue() const;
  // m replaced by the digits of its residue's representative in [0, p^f-2].
  SerreWeight canonical() const;
  // dim = prod (n_i + 1)
  std::int64_t dimension() const;

  friend bool operator==(const SerreWeight& x, const SerreWeight& y) {
    return x.p == y.p && x.f == y.f && x.n == y.n && x.m_residue() == y.m_residue();
  }
  // Ascending m-residue, then n lexicographic.
  friend bool operator<(const SerreWeight& x, const SerreWeight& y);
};

SerreWeight make_weight(int p, int f, Tuple m, Tuple n);

struct WeightParam {
  std::vector<int> J;
  Tuple d;
  bool exceptional = false;
  friend bool operator==(const WeightParam&, const WeightParam&) = default;
};

struct WeightWitnesses {
  SerreWeight weight;
  std::vector<WeightParam> witnesses;
};

// Every mu_{m,n} satisfying the two inertial congruences for some legal
// (J, d), each with all its witnesses. Full scan over m-residue, n, J, d;
// m is reported in canonical form.
std::vector<WeightWitnesses> enumerate_Wss(const InertialChar& chi1, const InertialChar& chi2, int eprime);

struct GenericityData {
  int p = 3;
  int f = 1;
  int eprime = 1;
  Tuple b;  // digits of chi1^{-1} chi2 minus e'
  Tuple c;  // digits of chi1 (representative in [0, p^f-2])
};

GenericityData genericity(const InertialChar& chi1, const InertialChar& chi2, int eprime);

// True iff (J, d) satisfies the range constraints.
bool legal_param(int eprime, int f, const std::vector<int>& J, const Tuple& d);
// All legal (J, d), J by ascending bitmask, d lexicographic.
std::vector<WeightParam> legal_params(int eprime, int f);

SerreWeight mu_of_Jd(const GenericityData& gen, const std::vector<int>& J, const Tuple& d);

struct ExceptionalWeight {
  WeightParam param;
  SerreWeight weight;
  Tuple host;  // the a in A whose W'_a contains it
};
std::vector<ExceptionalWeight> exceptional_weights(const GenericityData& gen);

struct TypeOfA {
  InertialChar first;   // prod omega_i^{c_i + b_i + a_i}
  InertialChar second;  // prod omega_i^{c_i - a_i}
  bool scalar = false;
};
TypeOfA tau_of_a(const GenericityData& gen, const Tuple& a);
// tau_a twisted by chi_1^{-1}: lambda = prod omega^{a+b}, lambda' = prod omega^{-a}.
TypePair twisted_type(const GenericityData& gen, const Tuple& a);

// Constituents of the reduction of theta_a (a single weight in the scalar case).
std::vector<SerreWeight> jh_constituents(const GenericityData& gen, const Tuple& a);
// Constituents of theta'_a = theta_a (x) Ind_B 1 for scalar tau_a.
std::vector<SerreWeight> jh_constituents_prime(const GenericityData& gen, const Tuple& a);

// The a-vs-d rule.
Tuple host_of(int eprime, int f, const std::vector<int>& J, const Tuple& d);

struct PartitionCell {
  Tuple a;
  std::vector<std::pair<WeightParam, SerreWeight>> W;      // W_a
  std::vector<std::pair<WeightParam, SerreWeight>> extra;  // W'_a minus W_a
  int delta_a = 0;
};
struct Partition {
  std::vector<PartitionCell> cells;  // a in lexicographic order
};

// All a in A = [0, e']^f in lexicographic order.
std::vector<Tuple> index_set(int eprime, int f);
bool leq(const Tuple& a, const Tuple& b);

Partition partition(const GenericityData& gen);

struct ShapeSpec {
  std::optional<Tuple> a_max;
  bool tres_ramifiee = false;
};
std::vector<SerreWeight> wexpl_shape(const GenericityData& gen, const ShapeSpec& spec);

// sum (e' - d_i) for ordinary parameters; 0 and e'f for the two exceptional
// parameters.
std::int64_t lcris_dim(int eprime, const WeightParam& param);
std::int64_t lcris_dim(const GenericityData& gen, const WeightParam& param);

}  // namespace serrewt
