#pragma once

#include <cstdint>
#include <memory>

#include "serrewt/gf.hpp"

namespace serrewt {

// The arithmetic setting: residue degree f = f', e(K/L) = p^f - 1 and
// absolute ramification e = e' (p^f - 1). The coefficient field is
// k_E = F_{p^{f s}}.
struct Params {
  int p = 3;
  int f = 1;
  int eprime = 1;
  int s = 1;

  std::int64_t q() const;
  std::int64_t N() const { return q() - 1; }  // e(K/L)
  std::int64_t e() const { return eprime * N(); }
  std::int64_t ep() const { return e() * p; }
  // ep/(p-1), an integer since p-1 divides N.
  std::int64_t E() const { return ep() / (p - 1); }
  std::shared_ptr<const gf::Field> kE() const { return gf::make_field(p, f * s); }
  std::int64_t kE_units() const;

  friend bool operator==(const Params&, const Params&) = default;
};

// Validates and returns the params. Rejects p = 2, non-prime p, f < 1,
// e' < 1, s < 1.
Params make_params(int p, int f, int eprime, int s = 1);

}  // namespace serrewt
