#ifndef LEIB_SUBSPACE_HPP
#define LEIB_SUBSPACE_HPP

#include "leib/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace leib {

/// Subspace of F^n stored by its reduced row-echelon basis. Two equal
/// subspaces have identical stored bases, so equality is structural.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient, Field field = Field::Q) : ambient_(ambient), field_(field) {}

  /// Canonical span of arbitrary vectors.
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors, Field field = Field::Q) {
    Subspace s(ambient, field);
    if (vectors.empty()) return s;
    Mat m(vectors.size(), ambient, field);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw std::invalid_argument("span: vector length mismatch");
      if (!fits_field(vectors[i], field)) throw field_mismatch();
      for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    s.assign_rref(rref(std::move(m)));
    return s;
  }

  /// Row space of `m`.
  static Subspace row_space(const Mat& m) {
    Subspace s(m.cols(), m.field());
    s.assign_rref(rref(m));
    return s;
  }

  static Subspace whole(std::size_t ambient, Field field = Field::Q) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < ambient; ++k) vs.push_back(unit_vector(ambient, k));
    return span(ambient, vs, field);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  Field field() const { return field_; }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const& { return basis_; }
  std::vector<Vec> basis() && { return std::move(basis_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Columns that carry no pivot; coordinates of a complement.
  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (k < pivots_.size() && pivots_[k] == j) {
        ++k;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

  /// v minus its projection along the basis; zero iff v lies in the span.
  Vec reduce(Vec v) const {
    check_vec(v);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Scalar f = v[pivots_[k]];
      if (f.is_zero()) continue;
      const Vec& b = basis_[k];
      for (std::size_t j = pivots_[k]; j < ambient_; ++j)
        if (!b[j].is_zero()) v[j] -= f * b[j];
    }
    return v;
  }

  bool contains(const Vec& v) const { return leib::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_same(other);
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
  }

  /// Coordinates of v in the stored basis, or nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  Mat as_matrix() const {
    Mat m(basis_.size(), ambient_, field_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_[i][j];
    return m;
  }

  void check_same(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("subspace ambient dimension mismatch");
    require_same_field(field_, other.field_);
  }

private:
  void check_vec(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
    if (!fits_field(v, field_)) throw field_mismatch();
  }

  void assign_rref(const RrefResult& r) {
    basis_.clear();
    pivots_ = r.pivots;
    for (std::size_t i = 0; i < r.rank; ++i) {
      auto row = r.reduced.row(i);
      basis_.emplace_back(row.begin(), row.end());
    }
  }

  std::size_t ambient_ = 0;
  Field field_ = Field::Q;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
inline Subspace nullspace(const Mat& m) {
  auto red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> vs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < red.rank; ++k) v[red.pivots[k]] = -red.reduced(k, f);
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs, m.field());
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  u.check_same(v);
  std::vector<Vec> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ambient_dim(), all, u.field());
}

inline Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  u.check_same(v);
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace(n, u.field());
  // columns: u_1..u_k, -v_1..-v_l ; a null vector (a, b) gives sum a_i u_i in both
  const std::size_t k = u.dim();
  const std::size_t l = v.dim();
  Mat m(n, k + l, u.field());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = u.basis()[j][i];
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, k + j) = -v.basis()[j][i];
  const Subspace ker = nullspace(m);
  std::vector<Vec> out;
  for (const auto& c : ker.basis()) {
    Vec x(n);
    for (std::size_t j = 0; j < k; ++j) {
      if (c[j].is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!u.basis()[j][i].is_zero()) x[i] += c[j] * u.basis()[j][i];
    }
    out.push_back(std::move(x));
  }
  return Subspace::span(n, out, u.field());
}

} // namespace leib

#endif
