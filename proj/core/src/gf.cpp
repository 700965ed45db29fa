#include "serrewt/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "serrewt/errors.hpp"
#include "serrewt/numeric.hpp"

namespace serrewt {

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace gf {
namespace {

// Dense polynomials over F_p, constant term first, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod_p(int a, int p) { return static_cast<int>(powmod(a, p - 2, p)); }

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod_p(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int da = static_cast<int>(a.size()) - 1;
    const int factor = a.back() * lead_inv % p;
    for (int k = 0; k <= dm; ++k) {
      int& c = a[da - dm + k];
      c = static_cast<int>(mod(c - factor * m[k], p));
    }
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

Poly poly_pow_mod(Poly base, std::int64_t e, const Poly& m, int p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mul_mod(r, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly sub_x(Poly a, int p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = static_cast<int>(mod(a[1] - 1, p));
  trim(a);
  return a;
}

Poly unpack(std::uint32_t v, int p, int m) {
  Poly a(m, 0);
  for (int k = 0; k < m; ++k) {
    a[k] = static_cast<int>(v % p);
    v /= p;
  }
  trim(a);
  return a;
}

std::uint32_t pack(const Poly& a, int p) {
  std::uint32_t v = 0;
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) v = v * p + a[k];
  return v;
}

}  // namespace

bool is_irreducible(int p, std::span<const int> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1 || f.back() != 1) fail(ErrorKind::InvalidArgument, "polynomial must be monic of degree >= 1");
  if (m == 1) return true;
  // A reducible f has a factor of degree d <= m/2, which divides X^{p^d} - X.
  Poly xpow{0, 1};
  for (int d = 1; 2 * d <= m; ++d) {
    xpow = poly_pow_mod(xpow, p, f, p);
    Poly g = poly_gcd(f, sub_x(xpow, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

Field::Field(int p, int m) : p_(p), m_(m), q_(ipow(p, m)) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "field degree must be >= 1");
  if (p == 2) fail(ErrorKind::CharacteristicTwo, "p must be an odd prime");
  if (!is_prime(p)) fail(ErrorKind::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (q_ > (1 << 22)) fail(ErrorKind::SizeLimit, "field order exceeds 2^22");

  for (std::int64_t low = 0; low < q_; ++low) {
    Poly cand = unpack(static_cast<std::uint32_t>(low), p, m);
    cand.resize(m + 1, 0);
    cand[m] = 1;
    if (is_irreducible(p, cand)) {
      modulus_ = cand;
      break;
    }
  }
  ensure(!modulus_.empty(), "no irreducible polynomial found");

  const std::int64_t n = q_ - 1;
  const auto primes = prime_divisors(n);
  for (std::int64_t v = 1; v < q_; ++v) {
    Poly g = unpack(static_cast<std::uint32_t>(v), p, m);
    bool ok = true;
    for (auto ell : primes) {
      Poly t = poly_pow_mod(g, n / ell, modulus_, p);
      if (t.size() == 1 && t[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = Elt{static_cast<std::uint32_t>(v)};
      break;
    }
  }
  ensure(generator_.v != 0, "no generator found");

  exp_.assign(n, 0);
  log_.assign(q_, -1);
  Poly cur{1};
  const Poly g = unpack(generator_.v, p, m);
  for (std::int64_t k = 0; k < n; ++k) {
    const std::uint32_t v = pack(cur, p);
    exp_[k] = v;
    ensure(log_[v] == -1, "generator has order below q-1");
    log_[v] = k;
    cur = poly_mul_mod(cur, g, modulus_, p);
  }
  ensure(cur.size() == 1 && cur[0] == 1, "generator order is not q-1");
}

Elt Field::from_int(std::int64_t n) const { return Elt{static_cast<std::uint32_t>(mod(n, p_))}; }

std::vector<int> Field::coefficients(Elt a) const {
  std::vector<int> c(m_, 0);
  std::uint32_t v = a.v;
  for (int k = 0; k < m_; ++k) {
    c[k] = static_cast<int>(v % p_);
    v /= p_;
  }
  return c;
}

Elt Field::from_coefficients(std::span<const int> coeffs) const {
  Poly a(coeffs.begin(), coeffs.end());
  for (auto& c : a) c = static_cast<int>(mod(c, p_));
  a = poly_mod(a, modulus_, p_);
  return Elt{pack(a, p_)};
}

Elt Field::add(Elt a, Elt b) const {
  std::uint32_t r = 0, scale = 1, x = a.v, y = b.v;
  for (int k = 0; k < m_; ++k) {
    r += scale * ((x % p_ + y % p_) % p_);
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Elt{r};
}

Elt Field::neg(Elt a) const {
  std::uint32_t r = 0, scale = 1, x = a.v;
  for (int k = 0; k < m_; ++k) {
    r += scale * ((p_ - x % p_) % p_);
    x /= p_;
    scale *= p_;
  }
  return Elt{r};
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::mul(Elt a, Elt b) const {
  if (a.v == 0 || b.v == 0) return zero();
  return Elt{exp_[(log_[a.v] + log_[b.v]) % (q_ - 1)]};
}

Elt Field::inv(Elt a) const {
  if (a.v == 0) fail(ErrorKind::InvalidArgument, "inverse of zero");
  return Elt{exp_[mod(-log_[a.v], q_ - 1)]};
}

Elt Field::pow(Elt a, std::int64_t e) const {
  if (a.v == 0) {
    if (e == 0) return one();
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative power of zero");
    return zero();
  }
  return Elt{exp_[static_cast<std::size_t>(
      mod(static_cast<std::int64_t>((static_cast<__int128>(log_[a.v]) * e) % (q_ - 1)), q_ - 1))]};
}

std::int64_t Field::log(Elt a) const {
  if (a.v == 0) fail(ErrorKind::InvalidArgument, "logarithm of zero");
  return log_[a.v];
}

Elt Field::exp(std::int64_t k) const { return Elt{exp_[mod(k, q_ - 1)]}; }

std::int64_t Field::multiplicative_order(Elt a) const {
  const std::int64_t n = q_ - 1;
  const std::int64_t k = log(a);
  std::int64_t g = n, x = k;
  while (x != 0) {
    std::int64_t t = g % x;
    g = x;
    x = t;
  }
  return n / g;
}

Elt Field::element_of_order(std::int64_t n) const {
  if (n <= 0 || (q_ - 1) % n != 0)
    fail(ErrorKind::InvalidArgument, "element order must divide q-1");
  return exp((q_ - 1) / n);
}

std::string Field::to_string(Elt a) const {
  if (m_ == 1) return std::to_string(a.v);
  std::ostringstream os;
  bool first = true;
  const auto c = coefficients(a);
  for (int k = m_ - 1; k >= 0; --k) {
    if (c[k] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (k == 0 || c[k] != 1) os << c[k];
    if (k >= 1) os << 'X';
    if (k >= 2) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

std::shared_ptr<const Field> make_field(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({p, m});
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const Field>(p, m);
  cache.emplace(std::pair{p, m}, field);
  return field;
}

TensorElt tensor_one(int f) { return TensorElt{std::vector<Elt>(f, Elt{1})}; }

TensorElt tensor_mul(const Field& kE, const TensorElt& a, const TensorElt& b) {
  if (a.comp.size() != b.comp.size()) fail(ErrorKind::InvalidArgument, "component count mismatch");
  TensorElt r;
  r.comp.reserve(a.comp.size());
  for (std::size_t i = 0; i < a.comp.size(); ++i) r.comp.push_back(kE.mul(a.comp[i], b.comp[i]));
  return r;
}

Elt norm(const Field& kE, const TensorElt& a) {
  Elt r = kE.one();
  for (auto x : a.comp) r = kE.mul(r, x);
  return r;
}

TruncPoly::TruncPoly(RingShape shape) : shape_(shape), data_(static_cast<std::size_t>(shape.f) * shape.length) {
  if (shape.f < 1 || shape.length < 1) fail(ErrorKind::InvalidArgument, "empty ring shape");
}

std::size_t TruncPoly::index(int i, int j) const {
  if (i < 0 || i >= shape_.f || j < 0 || j >= shape_.length)
    fail(ErrorKind::RangeViolation, "TruncPoly index out of range");
  return static_cast<std::size_t>(i) * shape_.length + j;
}

std::span<const Elt> TruncPoly::component(int i) const {
  return std::span<const Elt>(data_).subspan(index(i, 0), shape_.length);
}

bool TruncPoly::is_zero() const {
  for (auto x : data_)
    if (x.v != 0) return false;
  return true;
}

int TruncPoly::degree(int i) const {
  for (int j = shape_.length - 1; j >= 0; --j)
    if (coeff(i, j).v != 0) return j;
  return -1;
}

int TruncPoly::valuation(int i) const {
  for (int j = 0; j < shape_.length; ++j)
    if (coeff(i, j).v != 0) return j;
  return -1;
}

TruncPoly constant(RingShape shape, const TensorElt& a) {
  TruncPoly x(shape);
  if (static_cast<int>(a.comp.size()) != shape.f) fail(ErrorKind::InvalidArgument, "component count mismatch");
  for (int i = 0; i < shape.f; ++i) x.set(i, 0, a.comp[i]);
  return x;
}

TruncPoly monomial(RingShape shape, int i, int degree, Elt coeff) {
  TruncPoly x(shape);
  if (degree < shape.length) x.set(i, degree, coeff);
  return x;
}

TruncPoly add(const Field& kE, const TruncPoly& x, const TruncPoly& y) {
  if (!(x.shape() == y.shape())) fail(ErrorKind::InvalidArgument, "ring shape mismatch");
  TruncPoly r(x.shape());
  for (int i = 0; i < x.components(); ++i)
    for (int j = 0; j < x.length(); ++j) r.set(i, j, kE.add(x.coeff(i, j), y.coeff(i, j)));
  return r;
}

TruncPoly sub(const Field& kE, const TruncPoly& x, const TruncPoly& y) {
  if (!(x.shape() == y.shape())) fail(ErrorKind::InvalidArgument, "ring shape mismatch");
  TruncPoly r(x.shape());
  for (int i = 0; i < x.components(); ++i)
    for (int j = 0; j < x.length(); ++j) r.set(i, j, kE.sub(x.coeff(i, j), y.coeff(i, j)));
  return r;
}

TruncPoly scale(const Field& kE, const TensorElt& a, const TruncPoly& x) {
  if (static_cast<int>(a.comp.size()) != x.components()) fail(ErrorKind::InvalidArgument, "component count mismatch");
  TruncPoly r(x.shape());
  for (int i = 0; i < x.components(); ++i)
    for (int j = 0; j < x.length(); ++j) r.set(i, j, kE.mul(a.comp[i], x.coeff(i, j)));
  return r;
}

TruncPoly shift_up(const TruncPoly& x, std::span<const std::int64_t> shift) {
  if (static_cast<int>(shift.size()) != x.components()) fail(ErrorKind::InvalidArgument, "shift length mismatch");
  TruncPoly r(x.shape());
  for (int i = 0; i < x.components(); ++i) {
    if (shift[i] < 0) fail(ErrorKind::InvalidArgument, "negative shift");
    for (int j = 0; j + shift[i] < x.length(); ++j) r.set(i, static_cast<int>(j + shift[i]), x.coeff(i, j));
  }
  return r;
}

TruncPoly phi(const TruncPoly& x) {
  const auto& s = x.shape();
  TruncPoly r(s);
  for (int i = 0; i < s.f; ++i) {
    const int target = cyc(i + 1, s.f);
    for (std::int64_t j = 0; j * s.p < s.length; ++j) r.set(target, static_cast<int>(j * s.p), x.coeff(i, static_cast<int>(j)));
  }
  return r;
}

Elt embed(const Field& kE, int p, int f, int i, Elt x) {
  return kE.pow(x, ipow(p, cyc(-i, f) == 0 ? f : cyc(-i, f)));
}

TruncPoly galois_act(const Field& kE, Elt zeta, std::span<const std::int64_t> w, const TruncPoly& x) {
  const auto& s = x.shape();
  const std::int64_t n = ipow(s.p, s.f) - 1;
  if (zeta.v == 0 || kE.multiplicative_order(zeta) != n)
    fail(ErrorKind::WrongOrder, "zeta must have multiplicative order p^f - 1");
  if (static_cast<int>(w.size()) != s.f) fail(ErrorKind::InvalidArgument, "weight tuple length must be f");
  TruncPoly r(s);
  for (int i = 0; i < s.f; ++i) {
    const Elt z = embed(kE, s.p, s.f, i, zeta);
    for (int j = 0; j < s.length; ++j) r.set(i, j, kE.mul(kE.pow(z, mod(w[i] + j, n)), x.coeff(i, j)));
  }
  return r;
}

}  // namespace gf
}  // namespace serrewt
