#pragma once

// Brute-force verifiers: a materialised morphism solver and the cokernel of
// Upsilon over (k (x) k_E)[u]/u^{ep}, exhaustive module and weight scans.
// None of these use the closed-form results they are meant to check.

#include <cstdint>
#include <vector>

#include "serrewt/breuil.hpp"
#include "serrewt/gf.hpp"
#include "serrewt/weights.hpp"

namespace serrewt::oracle {

struct Limits {
  std::int64_t max_ep = 50;  // truncation degree of the ring
  std::int64_t max_q = 25;   // residue field size for weight and Brauer scans
};

struct HomSpace {
  int dim = 0;
  std::vector<gf::TruncPoly> witnesses;  // basis: e_M -> X e_N
  bool nonzero() const { return dim > 0; }
};

// Solves filtration preservation, phi_1-equivariance and descent-data
// equivariance for the full coefficient tuple X of e_M -> X e_N.
HomSpace brute_hom_space(const RankOneBreuil& M, const RankOneBreuil& N, const Limits& lim = {});

struct UpsilonData {
  int dim_U = 0;
  int dim_V = 0;
  int rank = 0;
  int kernel() const { return dim_U - rank; }
  int coker() const { return dim_V - rank; }
};

// Ext^1(M, N) as coker(Upsilon: U -> V), Upsilon(t) = u^r (b/a) phi(t) - u^s t.
UpsilonData brute_upsilon(const RankOneBreuil& M, const RankOneBreuil& N, const Limits& lim = {});
inline std::int64_t brute_ext_dim(const RankOneBreuil& M, const RankOneBreuil& N, const Limits& lim = {}) {
  return brute_upsilon(M, N, lim).coker();
}

// Every M(r, a, c) with the given Nm(a): r over [0,e]^f with alpha integral,
// c_0 over [0, p^f-1) and c closed under the recurrence. Order: r
// lexicographic, then c_0.
std::vector<RankOneBreuil> all_modules(const Params& P, std::int64_t a_norm_dlog, const Limits& lim = {});

// Every module satisfying the definition of a model of type tau directly:
// sigma_i o eta^{c_i} in {lambda, lambda'} for all i and generic fibre chi.
std::vector<RankOneBreuil> brute_models_of_type(const Params& P, const TypePair& tau, const GaloisChar& chi,
                                                const Limits& lim = {});

// Same output set as enumerate_Wss, found by looping over m digit tuples,
// legal (J, d) chosen from all of [0, e']^f, and n.
std::vector<WeightWitnesses> brute_weight_scan(const InertialChar& chi1, const InertialChar& chi2, int eprime,
                                               const Limits& lim = {});

}  // namespace serrewt::oracle
