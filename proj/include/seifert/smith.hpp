#pragma once

#include "seifert/arith.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace seifert {

/// Dense row-major integer matrix with exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init)
      for (long long v : row) data_.emplace_back(v);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// Diagonal of the Smith normal form: the nonzero invariant factors
/// d_1 | d_2 | ... (ones included), plus the matrix shape.
struct SmithNormalForm {
  std::vector<BigInt> invariant_factors;
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with d_i >= 2
/// and d_1 | d_2 | ...
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  auto operator<=>(const AbelianGroup&) const = default;
  bool operator==(const AbelianGroup&) const = default;
};

inline std::string to_string(const AbelianGroup& g) {
  std::string out;
  if (g.free_rank == 1) out = "Z";
  if (g.free_rank > 1) out = "Z^" + std::to_string(g.free_rank);
  for (const auto& d : g.torsion) out += (out.empty() ? "" : " + ") + ("Z/" + d.str());
  return out.empty() ? "0" : out;
}

/// Smallest-|pivot| elimination with full row and column reduction, then a
/// divisibility fix-up so that consecutive factors divide each other.
inline SmithNormalForm smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t diag = std::min(rows, cols);
  SmithNormalForm out{{}, rows, cols};

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool any = false;
      std::size_t pi = t, pj = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const BigInt& v = m(i, j);
          if (v == 0) continue;
          BigInt a = abs(v);
          if (!any || a < best) {
            any = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!any) return out;
      m.swap_rows(t, pi);
      m.swap_cols(t, pj);

      const BigInt pivot = m(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        m.add_row(i, t, -(m(i, t) / pivot));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        m.add_col(j, t, -(m(t, j) / pivot));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      m.add_row(t, bad_row, BigInt(1));
    }
    out.invariant_factors.push_back(abs(m(t, t)));
  }
  return out;
}

/// Z^cols modulo the row lattice of the matrix that produced `snf`.
inline AbelianGroup cokernel(const SmithNormalForm& snf) {
  AbelianGroup g;
  g.free_rank = snf.cols - snf.rank();
  for (const auto& d : snf.invariant_factors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace seifert
