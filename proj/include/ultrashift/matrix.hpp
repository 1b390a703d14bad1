#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultrashift/errors.hpp"

namespace ultrashift {

using BigInt = boost::multiprecision::cpp_int;

// Dense labeled matrix over Z with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols), row_labels_(rows), col_labels_(cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<std::string>& row_labels() { return row_labels_; }
  std::vector<std::string>& col_labels() { return col_labels_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool same_entries(const IntMatrix& rhs) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t i);

  // Aligned plain-text grid with labels.
  std::string to_grid() const;

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> a_;
  std::vector<std::string> row_labels_, col_labels_;
};

// U * M * V = S with S diagonal, nonnegative, divisibility chain, and U, V
// unimodular. Unimodularity is checked on every invocation.
struct SmithDecomposition {
  IntMatrix s, u, v;
  std::vector<BigInt> diagonal() const;
  // Invariant factors > 1.
  std::vector<BigInt> nontrivial_factors() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination).
BigInt determinant(const IntMatrix& m);

// Integer row vector y with y*M = target, or nullopt when no integral
// solution exists.
std::optional<std::vector<BigInt>> solve_left(const IntMatrix& m, std::span<const BigInt> target);

}  // namespace ultrashift
