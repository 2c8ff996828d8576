#include "steincalc/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "steincalc/error.hpp"

namespace steincalc {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVector> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw StructuralError("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) = checked_add((*this)(dst, c), checked_mul(factor, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) = checked_add((*this)(r, dst), checked_mul(factor, (*this)(r, src)));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix product dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p(i, j) = checked_add(p(i, j), checked_mul(aik, b(k, j)));
    }
  return p;
}

IntVector operator*(const IntMatrix& a, std::span<const Int> v) {
  if (a.cols() != v.size()) throw StructuralError("matrix-vector dimension mismatch");
  IntVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      out[i] = checked_add(out[i], checked_mul(a(i, k), v[k]));
  return out;
}

IntVector SmithForm::diagonal() const {
  IntVector d(rank);
  for (std::size_t i = 0; i < rank; ++i) d[i] = D(i, i);
  return d;
}

namespace {

// Diagonalizes D in place; U and V (when given) accumulate the row and column
// operations.
std::size_t smith_in_place(IntMatrix& D, IntMatrix* U, IntMatrix* V) {
  const std::size_t m = D.rows();
  const std::size_t n = D.cols();
  auto row_op = [&](std::size_t dst, std::size_t src, Int f) {
    D.add_row_multiple(dst, src, f);
    if (U) U->add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, Int f) {
    D.add_col_multiple(dst, src, f);
    if (V) V->add_col_multiple(dst, src, f);
  };
  auto swap_r = [&](std::size_t x, std::size_t y) {
    D.swap_rows(x, y);
    if (U) U->swap_rows(x, y);
  };
  auto swap_c = [&](std::size_t x, std::size_t y) {
    D.swap_cols(x, y);
    if (V) V->swap_cols(x, y);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block as pivot.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (pr == m || std::abs(D(i, j)) < std::abs(D(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    swap_r(t, pr);
    swap_c(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i)
        while (D(i, t) != 0) {
          row_op(i, t, -(D(i, t) / D(t, t)));
          if (D(i, t) != 0) swap_r(i, t);
        }
      for (std::size_t j = t + 1; j < n; ++j)
        while (D(t, j) != 0) {
          col_op(j, t, -(D(t, j) / D(t, t)));
          if (D(t, j) != 0) swap_c(j, t);
        }
      bool column_clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (D(i, t) != 0) column_clean = false;
      if (!column_clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_op(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      if (U) U->negate_row(t);
    }
  }
  return t;
}

__extension__ typedef __int128 Wide;

Wide dot(const IntVector& x, const IntVector& y) {
  Wide s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<Wide>(x[i]) * y[i];
  return s;
}

// Pairwise size reduction: v_i -= round(<v_i,v_j>/<v_j,v_j>) v_j while some
// norm strictly drops.
void size_reduce(std::vector<IntVector>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const Wide nj = dot(basis[j], basis[j]);
        if (nj == 0) continue;
        const Wide p = dot(basis[i], basis[j]);
        // Nearest integer to p / nj.
        Wide q = (2 * p + nj) / (2 * nj);
        if (2 * p + nj < 0 && (2 * p + nj) % (2 * nj) != 0) --q;
        if (q == 0) continue;
        const Wide before = dot(basis[i], basis[i]);
        IntVector cand = basis[i];
        for (std::size_t k = 0; k < cand.size(); ++k)
          cand[k] = checked_add(cand[k], checked_mul(-static_cast<Int>(q), basis[j][k]));
        if (dot(cand, cand) < before) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), a, 0};
  s.rank = smith_in_place(s.D, &s.U, &s.V);
  return s;
}

IntVector invariant_factors(const IntMatrix& a) {
  IntMatrix D = a;
  const std::size_t r = smith_in_place(D, nullptr, nullptr);
  IntVector d(r);
  for (std::size_t i = 0; i < r; ++i) d[i] = D(i, i);
  return d;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  // Column echelon form of a, tracking the column operations in V; the
  // columns past the last pivot span the kernel.
  IntMatrix A = a;
  IntMatrix V = IntMatrix::identity(a.cols());
  std::size_t k = 0;
  for (std::size_t r = 0; r < A.rows() && k < A.cols(); ++r) {
    for (;;) {
      std::size_t best = A.cols();
      for (std::size_t c = k; c < A.cols(); ++c)
        if (A(r, c) != 0 && (best == A.cols() || std::abs(A(r, c)) < std::abs(A(r, best)))) best = c;
      if (best == A.cols()) break;
      A.swap_cols(k, best);
      V.swap_cols(k, best);
      bool clean = true;
      for (std::size_t c = k + 1; c < A.cols(); ++c) {
        const Int q = A(r, c) / A(r, k);
        if (q != 0) {
          A.add_col_multiple(c, k, -q);
          V.add_col_multiple(c, k, -q);
        }
        if (A(r, c) != 0) clean = false;
      }
      if (clean) {
        ++k;
        break;
      }
    }
  }
  std::vector<IntVector> basis;
  for (std::size_t j = k; j < a.cols(); ++j) basis.push_back(V.column(j));
  size_reduce(basis);
  return basis;
}

FinitelyGeneratedQuotient::FinitelyGeneratedQuotient(const IntMatrix& relations) {
  const SmithForm s = smith_normal_form(relations);
  U_ = s.U;
  const std::size_t n = relations.rows();
  factors_.assign(n, 0);
  for (std::size_t i = 0; i < s.rank; ++i) factors_[i] = s.D(i, i);
  for (std::size_t i = 0; i < n; ++i) {
    if (factors_[i] == 0)
      ++group_.free_rank;
    else if (factors_[i] > 1)
      group_.torsion.push_back(factors_[i]);
  }
}

IntVector FinitelyGeneratedQuotient::reduce(std::span<const Int> x) const {
  const IntVector y = U_ * x;
  IntVector out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Int d = factors_[i];
    if (d == 1) continue;
    if (d == 0) continue;
    out.push_back(((y[i] % d) + d) % d);
  }
  for (std::size_t i = 0; i < y.size(); ++i)
    if (factors_[i] == 0) out.push_back(y[i]);
  return out;
}

bool FinitelyGeneratedQuotient::is_zero(std::span<const Int> x) const {
  const IntVector r = reduce(x);
  return std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
}

Int FinitelyGeneratedQuotient::order(std::span<const Int> x) const {
  const IntVector y = U_ * x;
  Int ord = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Int d = factors_[i];
    if (d == 1) continue;
    if (d == 0) {
      if (y[i] != 0) return 0;
      continue;
    }
    const Int r = ((y[i] % d) + d) % d;
    if (r == 0) continue;
    ord = std::lcm(ord, d / std::gcd(r, d));
  }
  return ord;
}

int signature(const IntMatrix& symmetric) {
  using boost::multiprecision::cpp_rational;
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n) throw StructuralError("signature requires a square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (symmetric(i, j) != symmetric(j, i)) throw StructuralError("signature requires a symmetric matrix");

  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = symmetric(i, j);

  // Congruence: apply each row operation together with the matching column operation.
  auto add_sym = [&](std::size_t dst, std::size_t src, const cpp_rational& f) {
    for (std::size_t c = 0; c < n; ++c) m[dst][c] += f * m[src][c];
    for (std::size_t r = 0; r < n; ++r) m[r][dst] += f * m[r][src];
  };
  auto swap_sym = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    for (std::size_t r = 0; r < n; ++r) std::swap(m[r][a], m[r][b]);
  };

  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (m[i][i] != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // Zero diagonal: an off-diagonal entry a_ij != 0 makes (e_i + e_j) anisotropic.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m[i][j] != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;  // remaining block is zero
      add_sym(oi, oj, cpp_rational(1));
      p = oi;
    }
    swap_sym(k, p);
    const cpp_rational pivot = m[k][k];
    sig += pivot > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i)
      if (m[i][k] != 0) add_sym(i, k, -m[i][k] / pivot);
  }
  return sig;
}

std::size_t rational_rank(const IntMatrix& a) { return invariant_factors(a).size(); }

}  // namespace steincalc
