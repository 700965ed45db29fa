#pragma once

// Finite fields F_{p^m}, the tensor ring k (x) k_E split by idempotents, and
// the truncated ring (k (x) k_E)[u]/u^{ep} with its Frobenius and the tame
// inertia action.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace serrewt::gf {

// An element of F_{p^m}: the coefficient vector of its polynomial
// representative, packed in base p (constant term least significant).
struct Elt {
  std::uint32_t v = 0;
  friend auto operator<=>(const Elt&, const Elt&) = default;
};

class Field {
 public:
  // Use make_field(); the constructor is public only for make_shared.
  Field(int p, int m);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  std::int64_t order() const { return q_; }
  std::int64_t unit_order() const { return q_ - 1; }

  // Monic defining polynomial, coefficients listed from the constant term.
  const std::vector<int>& modulus() const { return modulus_; }
  // Stored multiplicative generator (first in packed order).
  Elt generator() const { return generator_; }

  Elt zero() const { return Elt{0}; }
  Elt one() const { return Elt{1}; }
  Elt from_int(std::int64_t n) const;
  std::vector<int> coefficients(Elt a) const;
  Elt from_coefficients(std::span<const int> coeffs) const;

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::int64_t e) const;
  Elt frobenius(Elt a) const { return pow(a, p_); }

  // Discrete logarithm to the stored generator, in [0, q-1).
  std::int64_t log(Elt a) const;
  Elt exp(std::int64_t k) const;
  std::int64_t multiplicative_order(Elt a) const;
  // The element g^{(q-1)/n}; n must divide q-1.
  Elt element_of_order(std::int64_t n) const;

  std::string to_string(Elt a) const;

 private:
  int p_;
  int m_;
  std::int64_t q_;
  std::vector<int> modulus_;
  Elt generator_;
  std::vector<std::uint32_t> exp_;  // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::int64_t> log_;   // log_[v] for v != 0
};

// Deterministic: the defining polynomial is the first irreducible monic
// polynomial when monic polynomials of degree m are ordered by their packed
// coefficient value. Results are cached; the same pointer is returned for
// repeated (p, m).
std::shared_ptr<const Field> make_field(int p, int m);

// True iff the monic polynomial (constant term first) is irreducible over F_p.
bool is_irreducible(int p, std::span<const int> monic);

// An element of k (x) k_E written in the idempotent basis: component i is
// the coefficient of e_i.
struct TensorElt {
  std::vector<Elt> comp;
  friend bool operator==(const TensorElt&, const TensorElt&) = default;
};

TensorElt tensor_one(int f);
TensorElt tensor_mul(const Field& kE, const TensorElt& a, const TensorElt& b);
// Product of the components.
Elt norm(const Field& kE, const TensorElt& a);

struct RingShape {
  int p = 3;
  int f = 1;
  int length = 1;  // truncation degree ep: arithmetic is modulo u^length
  friend bool operator==(const RingShape&, const RingShape&) = default;
};

// Element of (k (x) k_E)[u]/u^{length}: f component polynomials over k_E.
class TruncPoly {
 public:
  TruncPoly() = default;
  explicit TruncPoly(RingShape shape);

  const RingShape& shape() const { return shape_; }
  int components() const { return shape_.f; }
  int length() const { return shape_.length; }

  Elt coeff(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, Elt value) { data_[index(i, j)] = value; }
  std::span<const Elt> component(int i) const;

  bool is_zero() const;
  // Degree of component i, or -1 when it vanishes.
  int degree(int i) const;
  // Lowest degree with a nonzero coefficient in component i, or -1.
  int valuation(int i) const;

  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

 private:
  std::size_t index(int i, int j) const;

  RingShape shape_;
  std::vector<Elt> data_;
};

TruncPoly constant(RingShape shape, const TensorElt& a);
TruncPoly monomial(RingShape shape, int i, int degree, Elt coeff);

TruncPoly add(const Field& kE, const TruncPoly& x, const TruncPoly& y);
TruncPoly sub(const Field& kE, const TruncPoly& x, const TruncPoly& y);
// Componentwise multiplication by a constant of k (x) k_E.
TruncPoly scale(const Field& kE, const TensorElt& a, const TruncPoly& x);
// Multiplication by u^{shift_i} in component i (truncating).
TruncPoly shift_up(const TruncPoly& x, std::span<const std::int64_t> shift);

// k_E-linear extension of the p-th power map on k[u]: u -> u^p and the
// component in slot i moves to slot i+1.
TruncPoly phi(const TruncPoly& x);

// g.x = (eta(g)^w (x) 1) g(x) for the inertia generator g with eta(g) = zeta:
// the degree-j term of component i is multiplied by sigma_i(zeta)^{w_i + j}.
// zeta must have multiplicative order exactly p^f - 1.
TruncPoly galois_act(const Field& kE, Elt zeta, std::span<const std::int64_t> w,
                     const TruncPoly& x);

// sigma_i restricted to the copy of k inside k_E: x -> x^{p^{f-i}}.
Elt embed(const Field& kE, int p, int f, int i, Elt x);

}  // namespace serrewt::gf
