#pragma once

// Rank-one Breuil modules M(r,a,c) with tame descent data, maps between
// them, chi-duals, maximal/minimal models of a principal series type,
// extension spaces in canonical form, and the L(chi1, chi2, tau) spaces.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "serrewt/chars.hpp"
#include "serrewt/gf.hpp"
#include "serrewt/params.hpp"

namespace serrewt {

class RankOneBreuil {
 public:
  // Validates r_i in [0,e], c_{i+1} = p(c_i + r_i) mod p^f-1 and integrality
  // of alpha. The unit a is normalised to (Nm(a), 1, ..., 1).
  static RankOneBreuil make(const Params& P, Tuple r, const gf::TensorElt& a, Tuple c);
  // Same, with a given by the discrete log of its norm.
  static RankOneBreuil make_dlog(const Params& P, Tuple r, std::int64_t a_norm_dlog, Tuple c);

  const Params& params() const { return P_; }
  const Tuple& r() const { return r_; }
  const gf::TensorElt& a() const { return a_; }
  const Tuple& c() const { return c_; }
  const Tuple& alpha() const { return alpha_; }
  std::int64_t a_norm_dlog() const { return a_norm_dlog_; }

  // Isomorphism classes: equal r, c and Nm(a).
  friend bool operator==(const RankOneBreuil& x, const RankOneBreuil& y) {
    return x.P_ == y.P_ && x.r_ == y.r_ && x.c_ == y.c_ && x.a_norm_dlog_ == y.a_norm_dlog_;
  }

 private:
  Params P_;
  Tuple r_;
  gf::TensorElt a_;
  Tuple c_;
  Tuple alpha_;
  std::int64_t a_norm_dlog_ = 0;
};

// alpha_i = p (p^{f-1} r_i + ... + r_{i+f-1}) / (p^f - 1).
Tuple alpha_of(const Params& P, const Tuple& r);

GaloisChar generic_fibre(const RankOneBreuil& M);

struct HomResult {
  bool exists = false;
  Tuple z;  // beta - alpha when a map exists
};
HomResult hom_exists(const RankOneBreuil& M, const RankOneBreuil& N);

// The module with s = e - r and generic fibre chi2.
RankOneBreuil chi_dual(const RankOneBreuil& M, const GaloisChar& chi2);

// Upper bound M(t, a, v) with gamma = max(alpha, beta); requires equal
// generic fibres.
RankOneBreuil upper_bound_model(const RankOneBreuil& M, const RankOneBreuil& N);
// Lower bound with gamma = min(alpha, beta), obtained through duality.
RankOneBreuil lower_bound_model(const RankOneBreuil& M, const RankOneBreuil& N);

// A principal series type lambda (+) lambda'.
struct TypePair {
  InertialChar lambda;
  InertialChar lambda_prime;
};

struct TypedModel {
  RankOneBreuil module;
  std::vector<int> J;
  Tuple x;
};

// All models of type tau with generic fibre chi, in lexicographic order of
// (J as a bitmask, x).
std::vector<TypedModel> models_of_type(const Params& P, const TypePair& tau, const GaloisChar& chi);

// True iff x is allowable for J (and the carry set of tau).
bool allowable(const Params& P, const TypePair& tau, const std::vector<int>& J, const Tuple& x);

struct ExtremalModels {
  RankOneBreuil minimal;
  RankOneBreuil maximal;
};
ExtremalModels extremal_models(const Params& P, const TypePair& tau, const GaloisChar& chi);

struct ExtBasis {
  std::vector<Tuple> slots;             // permitted degrees per component
  std::optional<std::int64_t> delta_slot;  // extra degree in component 0
  std::int64_t dim() const;
};

std::int64_t ext_dim(const RankOneBreuil& M, const RankOneBreuil& N);
ExtBasis ext_basis(const RankOneBreuil& M, const RankOneBreuil& N);

// An extension P(r,a,c; s,b,d; h). Construction checks that the data define
// a Breuil module (divisibility and the residue condition on low degrees).
class ExtClass {
 public:
  static ExtClass make(const RankOneBreuil& M, const RankOneBreuil& N, gf::TruncPoly h);
  const RankOneBreuil& M() const { return M_; }
  const RankOneBreuil& N() const { return N_; }
  const gf::TruncPoly& h() const { return h_; }
  // True iff h is supported on the slots of ext_basis(M, N).
  bool is_canonical() const;

 private:
  ExtClass(RankOneBreuil M, RankOneBreuil N, gf::TruncPoly h)
      : M_(std::move(M)), N_(std::move(N)), h_(std::move(h)) {}
  RankOneBreuil M_;
  RankOneBreuil N_;
  gf::TruncPoly h_;
};

// Checks the well-definedness conditions for P(M, N; h); returns a message
// describing the first failure, or nothing.
std::optional<std::string> ext_data_problem(const RankOneBreuil& M, const RankOneBreuil& N,
                                            const gf::TruncPoly& h);

struct MinimaxShift {
  Tuple c_dagger;
  Tuple d_dagger;
  Tuple delta;
};
MinimaxShift minimax_shift(const RankOneBreuil& M, const RankOneBreuil& N);
ExtClass minimax_transfer(const ExtClass& P);

// L(1, chi, tau) in the canonical P(0,1,0; e,b,d_dagger; h) form.
struct LSpace {
  std::vector<Tuple> t_values;  // per component, t in (p-1-nu'_i, e']
  std::vector<Tuple> degrees;   // per component, t N - [sum_j (nu+nu'-(p-1))_{i-j} p^j]
  Tuple d_dagger;
  std::int64_t dim() const;
};
// chi is chi1^{-1} chi2 (twisted so that chi1 = 1).
LSpace l_space(const Params& P, const TypePair& tau, const GaloisChar& chi);
LSpace intersect(const LSpace& x, const LSpace& y);

// The generalised inequality under which L(Mp, Np) is contained in L(M, N).
bool containment(const RankOneBreuil& Mp, const RankOneBreuil& Np, const RankOneBreuil& M,
                 const RankOneBreuil& N);
// The hom-based sufficient condition: maps M -> Mp and Np -> N.
bool containment_by_homs(const RankOneBreuil& Mp, const RankOneBreuil& Np, const RankOneBreuil& M,
                         const RankOneBreuil& N);

// Minimal model of type tau with trivial generic fibre, when nu'_i in
// [p-1-e', p-1] and nu_i <= nu'_i: r_i = (p^f-1)(p-1-nu'_i), c_i = sum_j
// nu'_{i-j} p^j, a = 1.
RankOneBreuil minimal_trivial_model(const Params& P, const TypePair& tau);

}  // namespace serrewt
