#include "evolalg/exactla.hpp"

#include <algorithm>

namespace evolalg {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("bad rational '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
    return !part.empty() && std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw bad();
    return Rat(mpz_class(s.front() == '+' ? s.substr(1) : s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rat q(mpz_class(num.front() == '+' ? num.substr(1) : num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& value) { return value.get_str(); }

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rat& q) { return q == 0; });
}

bool Mat::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, c) != 0) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::principal_submatrix(std::span<const std::size_t> keep) const {
  Mat s(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) s(a, b) = (*this)(keep[a], keep[b]);
  return s;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  Mat p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) p(i, j) += aik * b(k, j);
    }
  return p;
}

Vec operator*(const Mat& a, const Vec& x) {
  if (a.cols_ != x.size()) throw DimensionError("matrix-vector dimension mismatch");
  Vec y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k) != 0 && x[k] != 0) y[i] += a(i, k) * x[k];
  return y;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

namespace {

// Gauss-Jordan in place; returns pivot columns.
std::vector<std::size_t> reduce_in_place(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && m(found, col) == 0) ++found;
    if (found == m.rows()) continue;
    if (found != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(found, c), m(row, c));
    const Rat inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (m(row, c) != 0) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rat factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Mat rref(const Mat& m) {
  Mat r = m;
  reduce_in_place(r);
  return r;
}

std::size_t rank(const Mat& m) {
  Mat r = m;
  return reduce_in_place(r).size();
}

std::vector<std::size_t> pivot_columns(const Mat& reduced) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    for (std::size_t c = 0; c < reduced.cols(); ++c)
      if (reduced(r, c) != 0) {
        pivots.push_back(c);
        break;
      }
  }
  return pivots;
}

Rat det(const Mat& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(p, c), a(col, c));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rat factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return d;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = reduce_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  s.basis_ = Mat::identity(n);
  return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<Vec>& vectors) {
  Mat m = Mat::from_rows(vectors, n);
  const auto pivots = reduce_in_place(m);
  Subspace s(n);
  s.basis_ = Mat(pivots.size(), n);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) s.basis_(r, c) = m(r, c);
  return s;
}

Subspace Subspace::axes(std::size_t n, std::span<const std::size_t> axes) {
  std::vector<std::size_t> sorted(axes.begin(), axes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Subspace s(n);
  s.basis_ = Mat(sorted.size(), n);
  for (std::size_t r = 0; r < sorted.size(); ++r) {
    if (sorted[r] >= n) throw DimensionError("axis index out of range");
    s.basis_(r, sorted[r]) = 1;
  }
  return s;
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.emplace_back(basis_.row(r).begin(), basis_.row(r).end());
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim_) throw DimensionError("vector does not live in the ambient space");
  // Eliminate against the reduced basis; v is inside iff nothing is left.
  Vec rest = v;
  const auto pivots = pivot_columns(basis_);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Rat coeff = rest[pivots[r]];
    if (coeff == 0) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c)
      if (basis_(r, c) != 0) rest[c] -= coeff * basis_(r, c);
  }
  return evolalg::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(Vec(other.basis_.row(r).begin(), other.basis_.row(r).end()))) return false;
  return true;
}

Mat Subspace::equations() const {
  // The kernel of the basis matrix is the orthogonal complement; its basis
  // rows cut this subspace out.
  return kernel_basis(basis_).basis();
}

Subspace kernel_basis(const Mat& m) {
  Mat r = m;
  const auto pivots = reduce_in_place(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  auto vectors = a.basis_vectors();
  auto more = b.basis_vectors();
  vectors.insert(vectors.end(), more.begin(), more.end());
  return Subspace::span(a.ambient_dim(), vectors);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  const Mat ea = a.equations();
  const Mat eb = b.equations();
  Mat stacked(ea.rows() + eb.rows(), a.ambient_dim());
  for (std::size_t r = 0; r < ea.rows(); ++r)
    for (std::size_t c = 0; c < ea.cols(); ++c) stacked(r, c) = ea(r, c);
  for (std::size_t r = 0; r < eb.rows(); ++r)
    for (std::size_t c = 0; c < eb.cols(); ++c) stacked(ea.rows() + r, c) = eb(r, c);
  return kernel_basis(stacked);
}

}  // namespace evolalg
