#include "serrewt/linalg.hpp"

#include <utility>

namespace serrewt::linalg {

int rank(const gf::Field& F, FieldMatrix A) {
  int r = 0;
  for (int col = 0; col < A.cols && r < A.rows; ++col) {
    int piv = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, col).v != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
    const gf::Elt inv = F.inv(A.at(r, col));
    for (int j = col; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
    for (int i = r + 1; i < A.rows; ++i) {
      const gf::Elt factor = A.at(i, col);
      if (factor.v == 0) continue;
      for (int j = col; j < A.cols; ++j) A.at(i, j) = F.sub(A.at(i, j), F.mul(factor, A.at(r, j)));
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<gf::Elt>> nullspace(const gf::Field& F, FieldMatrix A) {
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < A.cols && r < A.rows; ++col) {
    int piv = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, col).v != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
    const gf::Elt inv = F.inv(A.at(r, col));
    for (int j = 0; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
    for (int i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      const gf::Elt factor = A.at(i, col);
      if (factor.v == 0) continue;
      for (int j = 0; j < A.cols; ++j) A.at(i, j) = F.sub(A.at(i, j), F.mul(factor, A.at(r, j)));
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<gf::Elt>> basis;
  for (int free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<gf::Elt> v(A.cols, F.zero());
    v[free] = F.one();
    for (int k = 0; k < r; ++k) v[pivot_col[k]] = F.neg(A.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t l) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % l);
}

std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t l) {
  std::uint64_t r = 1 % l;
  a %= l;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, l);
    a = mulmod(a, a, l);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t l) { return powmod_u(a, l - 2, l); }

int rank_mod(ModMatrix A, std::uint64_t l) {
  const int rows = static_cast<int>(A.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(A[0].size());
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][col] % l != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[r]);
    const std::uint64_t inv = invmod(A[r][col], l);
    for (int j = col; j < cols; ++j) A[r][j] = mulmod(A[r][j], inv, l);
    for (int i = r + 1; i < rows; ++i) {
      const std::uint64_t factor = A[i][col] % l;
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j) A[i][j] = (A[i][j] + l - mulmod(factor, A[r][j], l)) % l;
    }
    ++r;
  }
  return r;
}

std::vector<int> independent_rows(const ModMatrix& A, std::uint64_t l) {
  std::vector<int> chosen;
  if (A.empty()) return chosen;
  const int cols = static_cast<int>(A[0].size());
  // Echelon basis: basis[k] has a leading 1 in column lead[k].
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<int> lead;
  for (int i = 0; i < static_cast<int>(A.size()) && static_cast<int>(chosen.size()) < cols; ++i) {
    std::vector<std::uint64_t> v = A[i];
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::uint64_t factor = v[lead[k]] % l;
      if (factor == 0) continue;
      for (int j = 0; j < cols; ++j) v[j] = (v[j] + l - mulmod(factor, basis[k][j], l)) % l;
    }
    int pivot = -1;
    for (int j = 0; j < cols; ++j)
      if (v[j] % l != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0) continue;
    const std::uint64_t inv = invmod(v[pivot], l);
    for (int j = 0; j < cols; ++j) v[j] = mulmod(v[j], inv, l);
    basis.push_back(std::move(v));
    lead.push_back(pivot);
    chosen.push_back(i);
  }
  return chosen;
}

std::optional<ModMatrix> inverse_mod(ModMatrix A, std::uint64_t l) {
  const int n = static_cast<int>(A.size());
  ModMatrix inv(n, std::vector<std::uint64_t>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (A[i][col] % l != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(A[piv], A[col]);
    std::swap(inv[piv], inv[col]);
    const std::uint64_t s = invmod(A[col][col], l);
    for (int j = 0; j < n; ++j) {
      A[col][j] = mulmod(A[col][j], s, l);
      inv[col][j] = mulmod(inv[col][j], s, l);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const std::uint64_t factor = A[i][col] % l;
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        A[i][j] = (A[i][j] + l - mulmod(factor, A[col][j], l)) % l;
        inv[i][j] = (inv[i][j] + l - mulmod(factor, inv[col][j], l)) % l;
      }
    }
  }
  return inv;
}

}  // namespace serrewt::linalg
