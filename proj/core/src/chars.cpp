#include "serrewt/chars.hpp"

#include <algorithm>
#include <string>

#include "serrewt/errors.hpp"
#include "serrewt/numeric.hpp"

namespace serrewt {

std::int64_t Params::q() const { return ipow(p, f); }

std::int64_t Params::kE_units() const { return ipow(p, f * s) - 1; }

Params make_params(int p, int f, int eprime, int s) {
  if (p == 2) fail(ErrorKind::CharacteristicTwo, "p must be an odd prime");
  if (!is_prime(p)) fail(ErrorKind::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (f < 1) fail(ErrorKind::InvalidArgument, "f must be >= 1");
  if (eprime < 1) fail(ErrorKind::InvalidArgument, "eprime must be >= 1");
  if (s < 1) fail(ErrorKind::InvalidArgument, "kE_extra_degree must be >= 1");
  if (ipow(p, f * s) > (1 << 22)) fail(ErrorKind::SizeLimit, "coefficient field exceeds 2^22 elements");
  return Params{p, f, eprime, s};
}

std::int64_t digit_weight(int p, int f, int i) {
  const std::int64_t n = ipow(p, f) - 1;
  return powmod(p, f - cyc(i, f), n);
}

std::int64_t embedded_scalar(int p, int f, int i, std::int64_t c) {
  const std::int64_t n = ipow(p, f) - 1;
  return static_cast<std::int64_t>(mod(static_cast<std::int64_t>((static_cast<__int128>(mod(c, n)) * digit_weight(p, f, i)) % n), n));
}

InertialChar::InertialChar(int p, int f, std::int64_t scalar) : p_(p), f_(f), n_(ipow(p, f) - 1) {
  if (p == 2) fail(ErrorKind::CharacteristicTwo, "p must be an odd prime");
  if (!is_prime(p)) fail(ErrorKind::NotPrime, "p is not prime");
  if (f < 1) fail(ErrorKind::InvalidArgument, "f must be >= 1");
  t_ = mod(scalar, n_);
}

InertialChar InertialChar::omega(int p, int f, int i) { return {p, f, digit_weight(p, f, i)}; }

InertialChar InertialChar::from_digits(int p, int f, const Tuple& exps) {
  if (static_cast<int>(exps.size()) != f) fail(ErrorKind::InvalidArgument, "digit tuple must have length f");
  std::int64_t t = 0;
  const std::int64_t n = ipow(p, f) - 1;
  for (int i = 0; i < f; ++i) t = mod(t + embedded_scalar(p, f, i, exps[i]), n);
  return {p, f, t};
}

InertialChar InertialChar::cyclotomic(int p, int f, int eprime) {
  const std::int64_t n = ipow(p, f) - 1;
  return {p, f, mod(static_cast<std::int64_t>(eprime) * (n / (p - 1)), n)};
}

Tuple InertialChar::digits() const {
  std::int64_t x = t_ == 0 ? n_ : t_;
  Tuple base(f_);
  for (int k = 0; k < f_; ++k) {
    base[k] = x % p_;
    x /= p_;
  }
  // base-p digit k carries weight p^k = p^{f-i} with i = f - k (mod f).
  Tuple d(f_);
  for (int i = 0; i < f_; ++i) d[i] = base[cyc(f_ - i, f_)];
  return d;
}

InertialChar InertialChar::operator*(const InertialChar& o) const {
  if (o.p_ != p_ || o.f_ != f_) fail(ErrorKind::InvalidArgument, "character settings differ");
  return {p_, f_, t_ + o.t_};
}

InertialChar InertialChar::inv() const { return {p_, f_, -t_}; }

InertialChar InertialChar::pow(std::int64_t k) const {
  return {p_, f_, static_cast<std::int64_t>((static_cast<__int128>(t_) * mod(k, n_)) % n_)};
}

Tuple zero_based_digits(int p, int f, std::int64_t t) {
  const std::int64_t n = ipow(p, f) - 1;
  std::int64_t x = mod(t, n);
  Tuple base(f);
  for (int k = 0; k < f; ++k) {
    base[k] = x % p;
    x /= p;
  }
  Tuple d(f);
  for (int i = 0; i < f; ++i) d[i] = base[cyc(f - i, f)];
  return d;
}

GaloisChar GaloisChar::trivial(const Params& P) {
  return GaloisChar{InertialChar::trivial(P.p, P.f), 0, P.kE_units()};
}

GaloisChar GaloisChar::operator*(const GaloisChar& o) const {
  if (o.unit_order != unit_order) fail(ErrorKind::InvalidArgument, "coefficient fields differ");
  return GaloisChar{inertial * o.inertial, mod(unramified_dlog + o.unramified_dlog, unit_order), unit_order};
}

GaloisChar GaloisChar::inv() const {
  return GaloisChar{inertial.inv(), mod(-unramified_dlog, unit_order), unit_order};
}

GaloisChar make_galois_char(const Params& P, std::int64_t scalar, std::int64_t unramified_dlog) {
  return GaloisChar{InertialChar(P.p, P.f, scalar), mod(unramified_dlog, P.kE_units()), P.kE_units()};
}

bool DigitDecomp::in_C(int i) const { return std::find(C.begin(), C.end(), i) != C.end(); }

DigitDecomp decompose(const InertialChar& lambda, const InertialChar& lambda_prime) {
  const int p = lambda.p(), f = lambda.f();
  DigitDecomp out;
  const InertialChar quot = lambda_prime / lambda;
  out.delta = quot.scalar();
  out.delta_digits = zero_based_digits(p, f, out.delta);
  const Tuple nu = lambda.digits();
  const Tuple nup = lambda_prime.digits();
  // nu'_i - delta_i - nu_i = gamma_i - p gamma_{i-1}
  out.gamma.assign(f, -1);
  auto assign = [&](int i, std::int64_t g) {
    int k = cyc(i, f);
    if (out.gamma[k] != -1 && out.gamma[k] != g)
      fail(ErrorKind::InternalInconsistency, "carry decomposition is inconsistent");
    out.gamma[k] = g;
  };
  for (int i = 0; i < f; ++i) {
    const std::int64_t D = nup[i] - out.delta_digits[i] - nu[i];
    if (D == 0) {
      assign(i, 0), assign(i - 1, 0);
    } else if (D == 1) {
      assign(i, 1), assign(i - 1, 0);
    } else if (D == -p) {
      assign(i, 0), assign(i - 1, 1);
    } else if (D == 1 - p) {
      assign(i, 1), assign(i - 1, 1);
    } else {
      fail(ErrorKind::InternalInconsistency, "digit difference outside the carry range");
    }
  }
  for (int i = 0; i < f; ++i)
    if (out.gamma[i] == 1) out.C.push_back(i);
  return out;
}

std::int64_t bracket(int p, int f, std::int64_t delta, std::int64_t i) {
  const std::int64_t n = ipow(p, f) - 1;
  return static_cast<std::int64_t>((static_cast<__int128>(mod(delta, n)) * powmod(p, mod(i, f), n)) % n);
}

}  // namespace serrewt
