#ifndef LEIB_MATRIX_HPP
#define LEIB_MATRIX_HPP

#include "leib/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace leib {

using Vec = std::vector<Scalar>;

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

inline Vec unit_vector(std::size_t n, std::size_t k) {
  Vec v(n);
  v.at(k) = Scalar(1);
  return v;
}

inline bool fits_field(std::span<const Scalar> v, Field f) {
  if (f == Field::Qi) return true;
  for (const auto& s : v)
    if (!s.is_real()) return false;
  return true;
}

/// Dense row-major matrix over Q or Q(i).
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Field field = Field::Q)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

  static Mat identity(std::size_t n, Field field = Field::Q) {
    Mat m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  /// Builds from nested rows; the field is Qi as soon as one entry is non-real
  /// unless `field` forces it.
  static Mat from_rows(const std::vector<Vec>& rows, std::optional<Field> field = std::nullopt) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Field f = Field::Q;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged rows");
      if (!fits_field(row, Field::Q)) f = Field::Qi;
    }
    if (field) {
      if (*field == Field::Q && f == Field::Qi) throw field_mismatch();
      f = *field;
    }
    Mat m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
  }

  /// Inverse of `flatten`: reshape a row-major vector into rows x cols.
  static Mat unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols, Field field) {
    if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
    Mat m(rows, cols, field);
    std::copy(v.begin(), v.end(), m.data_.begin());
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vec column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  /// Row-major flattening; the one convention used for spaces of matrices.
  const Vec& flatten() const& { return data_; }
  Vec flatten() && { return std::move(data_); }

  bool is_zero() const { return leib::is_zero(data_); }

  Mat transpose() const {
    Mat t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Scalar trace() const {
    Scalar t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.check_same(b);
    Mat r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    a.check_same(b);
    Mat r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  friend Mat operator*(const Scalar& s, const Mat& a) {
    if (!s.fits(a.field_)) throw field_mismatch();
    Mat r = a;
    for (auto& x : r.data_) x *= s;
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Mat r(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  Vec apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Scalar& a = (*this)(i, j);
        if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
      }
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

private:
  void check_same(const Mat& b) const {
    require_same_field(field_, b.field_);
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Q;
  Vec data_;
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

/// Matrix unit e_{ij} (0-based) of size n.
inline Mat matrix_unit(std::size_t n, std::size_t i, std::size_t j, Field field = Field::Q) {
  Mat m(n, n, field);
  m(i, j) = Scalar(1);
  return m;
}

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The pivot is the first nonzero entry in column
/// order; exact arithmetic makes magnitude pivoting pointless and the
/// first-nonzero rule keeps the output canonical.
inline RrefResult rref(Mat m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (m(r, j).is_zero()) continue;
      if (!inv.is_one()) m(r, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

/// Some x with m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vec> solve(const Mat& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  if (!fits_field(b, m.field())) throw field_mismatch();
  Mat aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto red = rref(std::move(aug));
  if (red.rank > 0 && red.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t k = 0; k < red.rank; ++k) x[red.pivots[k]] = red.reduced(k, m.cols());
  return x;
}

/// Characteristic polynomial det(tI - m), coefficients low to high (monic),
/// by the Faddeev-LeVerrier recurrence (valid in characteristic zero).
inline Vec charpoly(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix not square");
  const std::size_t n = m.rows();
  Vec coeff(n + 1);
  coeff[n] = Scalar(1);
  Mat mk(n, n, m.field());
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
    Mat next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeff[n - k + 1];
    mk = std::move(next);
    coeff[n - k] = -(m * mk).trace() / Scalar(static_cast<std::int64_t>(k));
  }
  return coeff;
}

} // namespace leib

#endif
