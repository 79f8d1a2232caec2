#ifndef LEIB_ALGEBRA_HPP
#define LEIB_ALGEBRA_HPP

#include "leib/subspace.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace leib {

struct AlgebraKind {
  bool left_leibniz = false;
  bool right_leibniz = false;
  bool symmetric = false;
  bool lie = false;

  friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

/// Finite-dimensional algebra given by structure constants:
/// c(i, j, k) is the coefficient of basis k in [b_i, b_j].
///
/// Immutable once built. Copies share a write-once classification cache.
class Algebra {
public:
  Algebra() : Algebra(Field::Q, {}, {}) {}

  Algebra(Field field, std::vector<std::string> labels, Vec tensor)
      : field_(field), labels_(std::move(labels)), c_(std::move(tensor)), cache_(std::make_shared<Cache>()) {
    const std::size_t d = labels_.size();
    if (c_.empty()) c_.resize(d * d * d);
    if (c_.size() != d * d * d) throw std::invalid_argument("structure tensor must have dim^3 entries");
    if (!fits_field(c_, field_)) throw field_mismatch();
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != d) throw std::invalid_argument("basis labels must be unique");
  }

  std::size_t dim() const { return labels_.size(); }
  Field field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& tensor() const { return c_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }

  /// [b_i, b_j] as a coordinate vector.
  Vec bracket_basis(std::size_t i, std::size_t j) const {
    const std::size_t d = dim();
    return Vec(c_.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d),
               c_.begin() + static_cast<std::ptrdiff_t>((i * d + j + 1) * d));
  }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
      if (labels_[k] == label) return k;
    return std::nullopt;
  }

  Subspace whole() const { return Subspace::whole(dim(), field_); }
  Subspace zero() const { return Subspace(dim(), field_); }

  /// Write-once classification cache; see classify().
  template <typename F>
  const AlgebraKind& cached_kind(F&& compute) const {
    std::call_once(cache_->once, [&] { cache_->kind = compute(); });
    return *cache_->kind;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.labels_ == b.labels_ && a.c_ == b.c_;
  }

private:
  struct Cache {
    std::once_flag once;
    std::optional<AlgebraKind> kind;
  };

  Field field_;
  std::vector<std::string> labels_;
  Vec c_;
  std::shared_ptr<Cache> cache_;
};

/// Mutable helper for assembling structure constants.
class AlgebraBuilder {
public:
  AlgebraBuilder(Field field, std::vector<std::string> labels)
      : field_(field), labels_(std::move(labels)), c_(labels_.size() * labels_.size() * labels_.size()) {}

  std::size_t dim() const { return labels_.size(); }

  /// Adds `coeff * b_k` to [b_i, b_j].
  AlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, const Scalar& coeff) {
    const std::size_t d = dim();
    if (i >= d || j >= d || k >= d) throw std::out_of_range("structure constant index out of range");
    c_[(i * d + j) * d + k] += coeff;
    return *this;
  }

  Algebra build() const { return {field_, labels_, c_}; }

private:
  Field field_;
  std::vector<std::string> labels_;
  Vec c_;
};

inline void check_len(const Algebra& L, std::span<const Scalar> v) {
  if (v.size() != L.dim()) throw std::invalid_argument("vector length does not match algebra dimension");
  if (!fits_field(v, L.field())) throw field_mismatch();
}

inline Vec bracket(const Algebra& L, std::span<const Scalar> x, std::span<const Scalar> y) {
  check_len(L, x);
  check_len(L, y);
  const std::size_t d = L.dim();
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k)
        if (!L.c(i, j, k).is_zero()) out[k] += xy * L.c(i, j, k);
    }
  }
  return out;
}

namespace detail {

// [b_i, v] and [v, b_j] for a coordinate vector v
inline Vec left_mul(const Algebra& L, std::size_t i, const Vec& v) {
  const std::size_t d = L.dim();
  Vec out(d);
  for (std::size_t m = 0; m < d; ++m) {
    if (v[m].is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k)
      if (!L.c(i, m, k).is_zero()) out[k] += v[m] * L.c(i, m, k);
  }
  return out;
}

inline Vec right_mul(const Algebra& L, const Vec& v, std::size_t j) {
  const std::size_t d = L.dim();
  Vec out(d);
  for (std::size_t m = 0; m < d; ++m) {
    if (v[m].is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k)
      if (!L.c(m, j, k).is_zero()) out[k] += v[m] * L.c(m, j, k);
  }
  return out;
}

inline bool check_left_leibniz(const Algebra& L) {
  // [x,[y,z]] = [[x,y],z] + [y,[x,z]]
  const std::size_t d = L.dim();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const Vec xy = L.bracket_basis(x, y);
      for (std::size_t z = 0; z < d; ++z) {
        Vec lhs = left_mul(L, x, L.bracket_basis(y, z));
        const Vec r1 = right_mul(L, xy, z);
        const Vec r2 = left_mul(L, y, L.bracket_basis(x, z));
        for (std::size_t k = 0; k < d; ++k)
          if (lhs[k] != r1[k] + r2[k]) return false;
      }
    }
  return true;
}

inline bool check_right_leibniz(const Algebra& L) {
  // [[x,y],z] = [[x,z],y] + [x,[y,z]]
  const std::size_t d = L.dim();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const Vec xy = L.bracket_basis(x, y);
      for (std::size_t z = 0; z < d; ++z) {
        const Vec lhs = right_mul(L, xy, z);
        const Vec r1 = right_mul(L, L.bracket_basis(x, z), y);
        const Vec r2 = left_mul(L, x, L.bracket_basis(y, z));
        for (std::size_t k = 0; k < d; ++k)
          if (lhs[k] != r1[k] + r2[k]) return false;
      }
    }
  return true;
}

inline bool check_antisymmetric(const Algebra& L) {
  const std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (L.c(i, j, k) != -L.c(j, i, k)) return false;
  return true;
}

} // namespace detail

/// Exhaustive check over basis triples; the identities are trilinear so this
/// decides them exactly. Computed once per algebra value.
inline const AlgebraKind& classify(const Algebra& L) {
  return L.cached_kind([&] {
    AlgebraKind k;
    k.left_leibniz = detail::check_left_leibniz(L);
    k.right_leibniz = detail::check_right_leibniz(L);
    k.symmetric = k.left_leibniz && k.right_leibniz;
    // antisymmetric + left Leibniz is exactly the Jacobi identity
    k.lie = k.left_leibniz && detail::check_antisymmetric(L);
    return k;
  });
}

/// span{[u, v] : u in U, v in V}.
inline Subspace product_space(const Algebra& L, const Subspace& U, const Subspace& V) {
  if (U.ambient_dim() != L.dim() || V.ambient_dim() != L.dim())
    throw std::invalid_argument("product_space: ambient mismatch");
  std::vector<Vec> out;
  for (const auto& u : U.basis())
    for (const auto& v : V.basis()) {
      Vec b = bracket(L, u, v);
      if (!is_zero(b)) out.push_back(std::move(b));
    }
  return Subspace::span(L.dim(), out, L.field());
}

enum class SeriesKind { lower_central, derived };

/// Terms of the series, starting with L and stopping at the first term equal
/// to its predecessor (which is not repeated) or at 0.
inline std::vector<Subspace> series(const Algebra& L, SeriesKind kind) {
  std::vector<Subspace> out{L.whole()};
  const Subspace whole = L.whole();
  while (!out.back().is_zero()) {
    const Subspace& cur = out.back();
    Subspace next = kind == SeriesKind::lower_central ? product_space(L, whole, cur) : product_space(L, cur, cur);
    if (next.dim() == cur.dim()) break;
    out.push_back(std::move(next));
  }
  return out;
}

inline std::vector<std::size_t> series_dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> dims;
  for (const auto& t : s) dims.push_back(t.dim());
  return dims;
}

struct SeriesVerdict {
  bool holds = false;
  std::size_t step_class = 0; ///< number of nonzero terms
};

inline SeriesVerdict series_verdict(const std::vector<Subspace>& s) {
  SeriesVerdict v;
  v.holds = s.back().is_zero();
  for (const auto& t : s) v.step_class += t.is_zero() ? 0 : 1;
  return v;
}

inline SeriesVerdict is_nilpotent(const Algebra& L) { return series_verdict(series(L, SeriesKind::lower_central)); }
inline SeriesVerdict is_solvable(const Algebra& L) { return series_verdict(series(L, SeriesKind::derived)); }

struct Centers {
  Subspace left;   ///< {x : [x, L] = 0}
  Subspace right;  ///< {x : [L, x] = 0}
  Subspace center;
};

inline Centers centers(const Algebra& L) {
  const std::size_t d = L.dim();
  Mat lm(d * d, d, L.field());
  Mat rm(d * d, d, L.field());
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) {
        lm(j * d + k, i) = L.c(i, j, k);
        rm(j * d + k, i) = L.c(j, i, k);
      }
  Centers out{nullspace(lm), nullspace(rm), {}};
  out.center = subspace_intersect(out.left, out.right);
  return out;
}

/// Leib(L) = span{[x,x]}, generated by [b_i,b_j] + [b_j,b_i] (polarization).
inline Subspace leib_ideal(const Algebra& L) {
  const std::size_t d = L.dim();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec v = L.bracket_basis(i, j);
      const Vec w = L.bracket_basis(j, i);
      for (std::size_t k = 0; k < d; ++k) v[k] += w[k];
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  return Subspace::span(d, out, L.field());
}

inline bool is_ideal(const Algebra& L, const Subspace& I) {
  const Subspace whole = L.whole();
  return I.contains(product_space(L, whole, I)) && I.contains(product_space(L, I, whole));
}

inline bool is_subalgebra(const Algebra& L, const Subspace& S) { return S.contains(product_space(L, S, S)); }

class not_an_ideal : public std::invalid_argument {
public:
  not_an_ideal() : std::invalid_argument("subspace is not a two-sided ideal") {}
};

/// L / I on the complement spanned by the non-pivot coordinates of I.
inline Algebra quotient(const Algebra& L, const Subspace& I) {
  if (I.ambient_dim() != L.dim()) throw std::invalid_argument("quotient: ambient mismatch");
  if (!is_ideal(L, I)) throw not_an_ideal();
  const auto keep = I.non_pivots();
  std::vector<std::string> labels;
  for (auto k : keep) labels.push_back(L.labels()[k]);
  AlgebraBuilder b(L.field(), labels);
  for (std::size_t p = 0; p < keep.size(); ++p)
    for (std::size_t q = 0; q < keep.size(); ++q) {
      const Vec r = I.reduce(L.bracket_basis(keep[p], keep[q]));
      for (std::size_t m = 0; m < keep.size(); ++m)
        if (!r[keep[m]].is_zero()) b.add(p, q, m, r[keep[m]]);
    }
  return b.build();
}

/// Structure constants of a subalgebra in the coordinates of S's canonical basis.
inline Algebra restrict_to(const Algebra& L, const Subspace& S, std::vector<std::string> labels = {}) {
  if (!is_subalgebra(L, S)) throw std::invalid_argument("restrict_to: not a subalgebra");
  if (labels.empty())
    for (std::size_t k = 0; k < S.dim(); ++k) labels.push_back("s" + std::to_string(k + 1));
  AlgebraBuilder b(L.field(), labels);
  for (std::size_t p = 0; p < S.dim(); ++p)
    for (std::size_t q = 0; q < S.dim(); ++q) {
      const auto coords = S.coordinates(bracket(L, S.basis()[p], S.basis()[q]));
      for (std::size_t m = 0; m < S.dim(); ++m)
        if (!(*coords)[m].is_zero()) b.add(p, q, m, (*coords)[m]);
    }
  return b.build();
}

enum class Side { left, right };

/// Matrix of y -> [x, y] (left) or y -> [y, x] (right); column j is the image of b_j.
inline Mat adjoint(const Algebra& L, std::span<const Scalar> x, Side side = Side::left) {
  check_len(L, x);
  const std::size_t d = L.dim();
  Mat m(d, d, L.field());
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = side == Side::left ? L.c(i, j, k) : L.c(j, i, k);
        if (!c.is_zero()) m(k, j) += x[i] * c;
      }
  }
  return m;
}

inline Mat adjoint_basis(const Algebra& L, std::size_t i, Side side = Side::left) {
  return adjoint(L, unit_vector(L.dim(), i), side);
}

/// dim [L, L]; genus 1 means a one-dimensional commutator ideal.
inline std::size_t genus(const Algebra& L) { return product_space(L, L.whole(), L.whole()).dim(); }

} // namespace leib

#endif
