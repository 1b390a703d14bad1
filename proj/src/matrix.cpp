#include "ultrashift/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace ultrashift {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw UsageError("matrix dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

bool IntMatrix::same_entries(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

std::string IntMatrix::to_grid() const {
  std::vector<std::vector<std::string>> cells(rows_ + 1, std::vector<std::string>(cols_ + 1));
  for (std::size_t j = 0; j < cols_; ++j) cells[0][j + 1] = col_labels_[j];
  for (std::size_t i = 0; i < rows_; ++i) {
    cells[i + 1][0] = row_labels_[i];
    for (std::size_t j = 0; j < cols_; ++j) cells[i + 1][j + 1] = at(i, j).str();
  }
  std::vector<std::size_t> width(cols_ + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j <= cols_; ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (j > 0) out << ' ';
      out << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct Xgcd {
  BigInt g, x, y;  // x*a + y*b = g, g > 0
};

Xgcd xgcd(BigInt a, BigInt b) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    BigInt q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
    y0 -= q * y1;
    std::swap(y0, y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

// (row_t, row_i) <- (x*row_t + y*row_i, -beta*row_t + alpha*row_i); the
// transform has determinant 1 when x*alpha + y*beta = 1.
void combine_rows(IntMatrix& m, std::size_t t, std::size_t i, const BigInt& x, const BigInt& y,
                  const BigInt& alpha, const BigInt& beta) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BigInt rt = m.at(t, c), ri = m.at(i, c);
    m.at(t, c) = x * rt + y * ri;
    m.at(i, c) = alpha * ri - beta * rt;
  }
}

void combine_cols(IntMatrix& m, std::size_t t, std::size_t j, const BigInt& x, const BigInt& y,
                  const BigInt& alpha, const BigInt& beta) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt ct = m.at(r, t), cj = m.at(r, j);
    m.at(r, t) = x * ct + y * cj;
    m.at(r, j) = alpha * cj - beta * ct;
  }
}

void check_unimodular(const IntMatrix& m, const char* name) {
  BigInt d = determinant(m);
  if (d != 1 && d != -1) {
    throw Error(std::string("internal error: transform ") + name + " is not unimodular");
  }
}

}  // namespace

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s.at(i, i));
  return d;
}

std::vector<BigInt> SmithDecomposition::nontrivial_factors() const {
  std::vector<BigInt> out;
  for (const BigInt& d : diagonal()) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const BigInt& d : diagonal()) {
    if (d != 0) ++r;
  }
  return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  SmithDecomposition out{input, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (s.at(i, j) == 0) continue;
        if (!found || abs_val(s.at(i, j)) < abs_val(s.at(pr, pc))) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    if (!found) break;
    s.swap_rows(t, pr);
    u.swap_rows(t, pr);
    s.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      // Clear column t; each mixed step replaces the pivot by a gcd.
      for (std::size_t i = t + 1; i < m; ++i) {
        const BigInt& b = s.at(i, t);
        if (b == 0) continue;
        const BigInt& a = s.at(t, t);
        if (a != 0 && b % a == 0) {
          BigInt q = b / a;
          s.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        } else {
          Xgcd e = xgcd(a, b);
          BigInt alpha = a / e.g, beta = b / e.g;
          combine_rows(s, t, i, e.x, e.y, alpha, beta);
          combine_rows(u, t, i, e.x, e.y, alpha, beta);
        }
      }
      // Clear row t; only divisible entries keep column t untouched.
      bool column_dirtied = false;
      for (std::size_t j = t + 1; j < n; ++j) {
        const BigInt& b = s.at(t, j);
        if (b == 0) continue;
        const BigInt& a = s.at(t, t);
        if (a != 0 && b % a == 0) {
          BigInt q = b / a;
          s.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        } else {
          Xgcd e = xgcd(a, b);
          BigInt alpha = a / e.g, beta = b / e.g;
          combine_cols(s, t, j, e.x, e.y, alpha, beta);
          combine_cols(v, t, j, e.x, e.y, alpha, beta);
          column_dirtied = true;
        }
      }
      if (column_dirtied) continue;  // pivot strictly divided; re-clear the column
      // Pivot must divide the whole trailing block for the divisibility chain.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n && divides; ++j) {
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }

  check_unimodular(u, "U");
  check_unimodular(v, "V");
  if (!(u * input * v).same_entries(s)) {
    throw Error("internal error: U*M*V does not reproduce the Smith form");
  }
  for (std::size_t i = 0; i + 1 < std::min(m, n); ++i) {
    const BigInt& a = s.at(i, i);
    const BigInt& b = s.at(i + 1, i + 1);
    if (b != 0 && (a == 0 || b % a != 0)) {
      throw Error("internal error: Smith diagonal is not a divisibility chain");
    }
  }
  return out;
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::optional<std::vector<BigInt>> solve_left(const IntMatrix& m, std::span<const BigInt> target) {
  if (target.size() != m.cols()) throw UsageError("solve_left target has the wrong length");
  SmithDecomposition snf = smith_normal_form(m);
  // y*M = t  <=>  (y U^-1) S = t V; solve for z = y U^-1 coordinate-wise.
  std::vector<BigInt> tv(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t k = 0; k < m.cols(); ++k) tv[j] += target[k] * snf.v.at(k, j);
  }
  std::vector<BigInt> z(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    BigInt d = j < std::min(m.rows(), m.cols()) ? snf.s.at(j, j) : BigInt(0);
    if (d == 0) {
      if (tv[j] != 0) return std::nullopt;
    } else {
      if (tv[j] % d != 0) return std::nullopt;
      z[j] = tv[j] / d;
    }
  }
  std::vector<BigInt> y(m.rows());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    for (std::size_t k = 0; k < m.rows(); ++k) y[j] += z[k] * snf.u.at(k, j);
  }
  // Safety: confirm the product.
  for (std::size_t j = 0; j < m.cols(); ++j) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < m.rows(); ++k) acc += y[k] * m.at(k, j);
    if (acc != target[j]) throw Error("internal error: solve_left verification failed");
  }
  return y;
}

}  // namespace ultrashift
