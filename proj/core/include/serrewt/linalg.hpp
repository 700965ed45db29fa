#pragma once

// Dense Gaussian elimination over F_{p^m} and over a prime field Z/l.

#include <cstdint>
#include <optional>
#include <vector>

#include "serrewt/gf.hpp"

namespace serrewt::linalg {

struct FieldMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<gf::Elt> data;  // row-major

  FieldMatrix() = default;
  FieldMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
  gf::Elt& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  gf::Elt at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

int rank(const gf::Field& F, FieldMatrix A);
inline int nullity(const gf::Field& F, const FieldMatrix& A) { return A.cols - rank(F, A); }
// A basis of {x : A x = 0}, one vector per free column in increasing order.
std::vector<std::vector<gf::Elt>> nullspace(const gf::Field& F, FieldMatrix A);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t l);
std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t l);
std::uint64_t invmod(std::uint64_t a, std::uint64_t l);

int rank_mod(ModMatrix A, std::uint64_t l);

// Indices of a maximal set of linearly independent rows, chosen greedily in
// order; stops once `cols` rows have been found.
std::vector<int> independent_rows(const ModMatrix& A, std::uint64_t l);

// Inverse of a square matrix mod l, or nothing if singular.
std::optional<ModMatrix> inverse_mod(ModMatrix A, std::uint64_t l);

}  // namespace serrewt::linalg
