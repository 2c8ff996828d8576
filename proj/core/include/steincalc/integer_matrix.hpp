#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace steincalc {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, std::span<const Int> v);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r, d_i > 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  std::size_t rank = 0;

  IntVector diagonal() const;  // the first `rank` entries of D
};

SmithForm smith_normal_form(const IntMatrix& a);

/// The diagonal of the Smith form without the transforms.
IntVector invariant_factors(const IntMatrix& a);

/// Size-reduced basis of the integer kernel {x : A x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Abelian group Z^n / (column span of a relation matrix).
struct AbelianGroup {
  IntVector torsion;  // invariant factors > 1, divisibility ordered
  std::size_t free_rank = 0;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Quotient of Z^n by the span of the columns of `relations` (n rows).
class FinitelyGeneratedQuotient {
 public:
  explicit FinitelyGeneratedQuotient(const IntMatrix& relations);

  const AbelianGroup& group() const noexcept { return group_; }

  /// Canonical coordinates of the image of x: one entry per non-unit invariant
  /// factor (reduced into [0, d)) followed by the free coordinates.
  IntVector reduce(std::span<const Int> x) const;
  bool is_zero(std::span<const Int> x) const;
  /// Order of the image of x; 0 means infinite order.
  Int order(std::span<const Int> x) const;

 private:
  IntMatrix U_;
  IntVector factors_;  // d_i for every generator row, 0 for free rows
  AbelianGroup group_;
};

/// Signature (positive minus negative inertia) of a symmetric integer matrix,
/// computed exactly by rational congruence diagonalization.
int signature(const IntMatrix& symmetric);

/// Rank over Q.
std::size_t rational_rank(const IntMatrix& a);

}  // namespace steincalc
