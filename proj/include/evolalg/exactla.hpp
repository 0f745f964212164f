#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace evolalg {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, and zero is stored as 0/1.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "7", "-3", "2/4" (normalized to 1/2). Throws std::invalid_argument
/// on anything else, including a zero denominator.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& value);

/// Dense row-major matrix over the rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  bool is_zero() const;
  bool column_is_zero(std::size_t c) const;

  Mat transpose() const;
  /// Rows and columns listed in `keep` (in the given order).
  Mat principal_submatrix(std::span<const std::size_t> keep) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& x);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

bool is_zero(const Vec& v);

/// Reduced row-echelon form, same shape as the input with zero rows last.
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Pivot columns of a matrix already in reduced row-echelon form.
std::vector<std::size_t> pivot_columns(const Mat& reduced);

Rat det(const Mat& m);

/// A solution of m*x = b with every free variable set to zero, or nothing
/// when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Linear subspace of K^n stored by its canonical (reduced row-echelon)
/// basis, so equal subspaces compare equal structurally.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t n, const std::vector<Vec>& vectors);
  /// span{e_i : i in axes}
  static Subspace axes(std::size_t n, std::span<const std::size_t> axes);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Mat& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Rows of a matrix whose kernel is exactly this subspace.
  Mat equations() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  Mat basis_;
};

Subspace kernel_basis(const Mat& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace evolalg
