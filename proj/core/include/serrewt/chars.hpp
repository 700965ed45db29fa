#pragma once

// Characters of inertia as residues mod p^f - 1 (niveau-f digit expansions),
// Galois characters with an unramified part, and the digit/carry
// decomposition of a pair of tame characters.

#include <cstdint>
#include <vector>

#include "serrewt/params.hpp"

namespace serrewt {

using Tuple = std::vector<std::int64_t>;

// prod_i omega_i^{nu_i} is stored as its scalar sum_i nu_i p^{f-i} mod p^f-1.
class InertialChar {
 public:
  InertialChar() = default;
  InertialChar(int p, int f, std::int64_t scalar);

  static InertialChar trivial(int p, int f) { return {p, f, 0}; }
  static InertialChar omega(int p, int f, int i);
  // prod_i omega_i^{exps_i}; exponents may be any integers.
  static InertialChar from_digits(int p, int f, const Tuple& exps);
  // The mod p cyclotomic character on inertia: prod_i omega_i^{e'}.
  static InertialChar cyclotomic(int p, int f, int eprime);

  int p() const { return p_; }
  int f() const { return f_; }
  std::int64_t modulus() const { return n_; }
  std::int64_t scalar() const { return t_; }
  bool is_trivial() const { return t_ == 0; }

  // Canonical digits in [0, p-1] from the representative in [1, p^f-1]:
  // the trivial character has all digits p-1.
  Tuple digits() const;

  InertialChar operator*(const InertialChar& o) const;
  InertialChar inv() const;
  InertialChar pow(std::int64_t k) const;
  InertialChar operator/(const InertialChar& o) const { return *this * o.inv(); }

  friend bool operator==(const InertialChar&, const InertialChar&) = default;

 private:
  int p_ = 3;
  int f_ = 1;
  std::int64_t n_ = 2;
  std::int64_t t_ = 0;
};

// Weight of digit i in the scalar: p^{f-i} mod p^f - 1.
std::int64_t digit_weight(int p, int f, int i);
// Scalar of omega_i^{c} for a single embedding index: c p^{f-i} mod p^f - 1.
std::int64_t embedded_scalar(int p, int f, int i, std::int64_t c);

// A character of G_L: inertial part and the value on arithmetic Frobenius,
// the latter as a discrete log to the stored generator of k_E^x.
struct GaloisChar {
  InertialChar inertial;
  std::int64_t unramified_dlog = 0;
  std::int64_t unit_order = 1;  // |k_E^x|

  static GaloisChar trivial(const Params& P);
  GaloisChar operator*(const GaloisChar& o) const;
  GaloisChar inv() const;
  GaloisChar operator/(const GaloisChar& o) const { return *this * o.inv(); }
  bool is_trivial() const { return inertial.is_trivial() && unramified_dlog == 0; }

  friend bool operator==(const GaloisChar&, const GaloisChar&) = default;
};

GaloisChar make_galois_char(const Params& P, std::int64_t scalar, std::int64_t unramified_dlog);

struct DigitDecomp {
  std::int64_t delta = 0;  // scalar of lambda'/lambda
  Tuple delta_digits;      // in [0, p-1], not all p-1
  Tuple gamma;             // carries in {0, 1}
  std::vector<int> C;      // {i : gamma_i = 1}

  bool in_C(int i) const;
};

// Representative of t in [0, p^f-2] expanded into digits (digit i weighted by
// p^{f-i}); the trivial character yields all zeros.
Tuple zero_based_digits(int p, int f, std::int64_t t);

DigitDecomp decompose(const InertialChar& lambda, const InertialChar& lambda_prime);

// [p^i delta] in [0, p^f - 2].
std::int64_t bracket(int p, int f, std::int64_t delta, std::int64_t i);

}  // namespace serrewt
