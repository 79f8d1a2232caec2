#ifndef LEIB_DERIVATIONS_HPP
#define LEIB_DERIVATIONS_HPP

#include "leib/algebra.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace leib {

/// Raised when an internal consistency check fails; never a user error.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Lie algebra of d x d matrices with an explicit basis.
///
/// The basis is either the canonical (row-major flattened echelon) basis of
/// a subspace or a caller-supplied named basis, e.g. the generators x, y,
/// E_i, A_i, B_i. Closure under the commutator is verified at construction
/// and the induced structure constants are kept.
class MatrixLieAlgebra {
public:
  MatrixLieAlgebra() = default;

  static MatrixLieAlgebra from_subspace(std::size_t ambient, const Subspace& flat, const std::string& prefix = "D") {
    if (flat.ambient_dim() != ambient * ambient) throw std::invalid_argument("from_subspace: ambient mismatch");
    std::vector<Mat> basis;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < flat.dim(); ++k) {
      basis.push_back(Mat::unflatten(flat.basis()[k], ambient, ambient, flat.field()));
      names.push_back(prefix + std::to_string(k + 1));
    }
    return MatrixLieAlgebra(ambient, flat.field(), std::move(basis), std::move(names));
  }

  /// Named basis; throws if the matrices are dependent or not closed.
  static MatrixLieAlgebra from_named(std::vector<std::string> names, std::vector<Mat> basis, std::size_t ambient,
                                     Field field) {
    if (names.size() != basis.size()) throw std::invalid_argument("from_named: name count mismatch");
    return MatrixLieAlgebra(ambient, field, std::move(basis), std::move(names));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  Field field() const { return field_; }
  const std::vector<Mat>& basis() const& { return basis_; }
  std::vector<Mat> basis() && { return std::move(basis_); }
  const std::vector<std::string>& names() const { return names_; }
  const Subspace& span() const { return span_; }
  bool closure_verified() const { return closure_verified_; }

  const Mat& named(const std::string& name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == name) return basis_[k];
    throw std::out_of_range("no basis element named '" + name + "'");
  }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == name) return k;
    throw std::out_of_range("no basis element named '" + name + "'");
  }

  bool contains(const Mat& m) const { return span_.contains(m.flatten()); }

  /// Coordinates of m in this basis, or nullopt when m lies outside the span.
  std::optional<Vec> coordinates(const Mat& m) const {
    const auto canon = span_.coordinates(m.flatten());
    if (!canon) return std::nullopt;
    Vec out(dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t l = 0; l < dim(); ++l)
        if (!(*canon)[j].is_zero() && !to_named_(j, l).is_zero()) out[l] += (*canon)[j] * to_named_(j, l);
    return out;
  }

  Mat element(const Vec& coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("coordinate length mismatch");
    Mat m(ambient_, ambient_, field_);
    for (std::size_t k = 0; k < dim(); ++k)
      if (!coords[k].is_zero()) m = m + coords[k] * basis_[k];
    return m;
  }

  /// The abstract Lie algebra on this basis.
  const Algebra& structure() const {
    if (!closure_verified_) throw std::logic_error("closure not verified");
    return structure_;
  }

  /// Flattened subspace spanned by a subset of coordinates vectors.
  Subspace coordinate_span(const std::vector<Vec>& coords) const { return Subspace::span(dim(), coords, field_); }

private:
  MatrixLieAlgebra(std::size_t ambient, Field field, std::vector<Mat> basis, std::vector<std::string> names)
      : ambient_(ambient), field_(field), basis_(std::move(basis)), names_(std::move(names)) {
    std::vector<Vec> flat;
    for (const auto& m : basis_) {
      if (m.rows() != ambient_ || m.cols() != ambient_) throw std::invalid_argument("basis matrix has wrong shape");
      require_same_field(m.field(), field_);
      flat.push_back(m.flatten());
    }
    span_ = Subspace::span(ambient_ * ambient_, flat, field_);
    if (span_.dim() != basis_.size()) throw std::invalid_argument("basis matrices are linearly dependent");
    build_change_of_basis(flat);
    verify_closure();
  }

  // rref([B | I]) = [R | T] with R = T B; canonical row j of R is sum_l T(j,l) B_l.
  void build_change_of_basis(const std::vector<Vec>& flat) {
    const std::size_t k = flat.size();
    const std::size_t n = ambient_ * ambient_;
    Mat aug(k, n + k, field_);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = flat[i][j];
      aug(i, n + i) = Scalar(1);
    }
    const auto red = rref(std::move(aug));
    to_named_ = Mat(k, k, field_);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) to_named_(i, l) = red.reduced(i, n + l);
  }

  void verify_closure() {
    std::vector<std::string> labels = names_;
    AlgebraBuilder b(field_, labels);
    for (std::size_t p = 0; p < dim(); ++p)
      for (std::size_t q = p + 1; q < dim(); ++q) {
        const auto coords = coordinates(commutator(basis_[p], basis_[q]));
        if (!coords) throw std::invalid_argument("matrix span is not closed under the commutator");
        for (std::size_t m = 0; m < dim(); ++m) {
          if ((*coords)[m].is_zero()) continue;
          b.add(p, q, m, (*coords)[m]);
          b.add(q, p, m, -(*coords)[m]);
        }
      }
    structure_ = b.build();
    closure_verified_ = true;
  }

  std::size_t ambient_ = 0;
  Field field_ = Field::Q;
  std::vector<Mat> basis_;
  std::vector<std::string> names_;
  Subspace span_;
  Mat to_named_;
  Algebra structure_;
  bool closure_verified_ = false;
};

inline const Algebra& induced_structure(const MatrixLieAlgebra& M) { return M.structure(); }

namespace detail {

inline void check_square(const Mat& D, const Algebra& L) {
  if (D.rows() != L.dim() || D.cols() != L.dim()) throw std::invalid_argument("derivation matrix has wrong shape");
}

/// Rows of the linear system whose solutions are the derivations of L.
/// Unknown D(r, k) sits at column r*d + k; rows are ordered by (i, j, r).
inline Mat derivation_system(const Algebra& L) {
  const std::size_t d = L.dim();
  std::vector<Vec> rows;
  Vec row(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < d; ++r) {
        std::fill(row.begin(), row.end(), Scalar());
        // D([b_i,b_j]) - [D b_i, b_j] - [b_i, D b_j], coefficient of b_r
        for (std::size_t k = 0; k < d; ++k)
          if (!L.c(i, j, k).is_zero()) row[r * d + k] += L.c(i, j, k);
        for (std::size_t s = 0; s < d; ++s) {
          if (!L.c(s, j, r).is_zero()) row[s * d + i] -= L.c(s, j, r);
          if (!L.c(i, s, r).is_zero()) row[s * d + j] -= L.c(i, s, r);
        }
        if (!is_zero(row)) rows.push_back(row);
      }
  Mat m(rows.size(), d * d, L.field());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < d * d; ++b) m(a, b) = rows[a][b];
  return m;
}

inline Mat stack(const Mat& a, const std::vector<Vec>& extra) {
  Mat m(a.rows() + extra.size(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < extra.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(a.rows() + i, j) = extra[i][j];
  return m;
}

} // namespace detail

/// d([x,y]) = [d x, y] + [x, d y] on all basis pairs.
inline bool is_derivation(const Mat& D, const Algebra& L) {
  detail::check_square(D, L);
  require_same_field(D.field(), L.field());
  const std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec lhs = D.apply(L.bracket_basis(i, j));
      const Vec r1 = bracket(L, D.column(i), unit_vector(d, j));
      const Vec r2 = bracket(L, unit_vector(d, i), D.column(j));
      for (std::size_t k = 0; k < d; ++k)
        if (lhs[k] != r1[k] + r2[k]) return false;
    }
  return true;
}

inline MatrixLieAlgebra der_algebra(const Algebra& L) {
  return MatrixLieAlgebra::from_subspace(L.dim(), nullspace(detail::derivation_system(L)));
}

class not_left_leibniz : public std::invalid_argument {
public:
  not_left_leibniz() : std::invalid_argument("inner derivations need a left Leibniz algebra") {}
};

/// Span of the left multiplications ad_x = [x, -].
inline MatrixLieAlgebra inner_derivations(const Algebra& L) {
  if (!classify(L).left_leibniz) throw not_left_leibniz();
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < L.dim(); ++i) flat.push_back(adjoint_basis(L, i, Side::left).flatten());
  return MatrixLieAlgebra::from_subspace(L.dim(), Subspace::span(L.dim() * L.dim(), flat, L.field()), "I");
}

class not_genus_one : public std::invalid_argument {
public:
  not_genus_one() : std::invalid_argument("almost inner derivations are exact only for dim [L,L] = 1") {}
};

/// Which products bound d(x): [L, x] (the definition used throughout) or
/// the two-sided [L, x] + [x, L], kept for comparison.
enum class AiderRule { right_bracket, two_sided };

/// AIDer(L) for dim [L,L] = 1: derivations with image in [L,L] that vanish
/// on K = {x : [L,x] = 0}. For such L, [L,x] is either 0 (x in K) or the whole
/// commutator line, so this is exactly {d : d(x) in [L,x] for all x}.
/// With AiderRule::two_sided, K is the center instead.
inline MatrixLieAlgebra aider_genus1(const Algebra& L, AiderRule rule = AiderRule::right_bracket) {
  const Subspace comm = product_space(L, L.whole(), L.whole());
  if (comm.dim() != 1) throw not_genus_one();
  const std::size_t d = L.dim();
  std::vector<Vec> extra;
  // every column of D lies in the commutator line: annihilators of the line
  Mat line(1, d, L.field());
  for (std::size_t k = 0; k < d; ++k) line(0, k) = comm.basis()[0][k];
  const Subspace ann = nullspace(line);
  for (const auto& a : ann.basis())
    for (std::size_t col = 0; col < d; ++col) {
      Vec row(d * d);
      for (std::size_t r = 0; r < d; ++r) row[r * d + col] = a[r];
      extra.push_back(std::move(row));
    }
  const Centers cs = centers(L);
  const Subspace& kernel = rule == AiderRule::right_bracket ? cs.right : cs.center;
  for (const auto& kv : kernel.basis())
    for (std::size_t r = 0; r < d; ++r) {
      Vec row(d * d);
      for (std::size_t c = 0; c < d; ++c) row[r * d + c] = kv[c];
      extra.push_back(std::move(row));
    }
  const Mat sys = detail::stack(detail::derivation_system(L), extra);
  return MatrixLieAlgebra::from_subspace(d, nullspace(sys), "AI");
}

/// Deterministic pseudorandom small rationals {-3..3}/{1,2}. Uses raw engine
/// output so sequences are identical across standard libraries.
class SmallRationalSampler {
public:
  explicit SmallRationalSampler(std::uint64_t seed) : eng_(seed) {}

  Rational next() {
    const auto num = static_cast<std::int64_t>(eng_() % 7) - 3;
    const auto den = static_cast<std::int64_t>(eng_() % 2) + 1;
    return {num, den};
  }

  Vec vector(std::size_t n) {
    Vec v(n);
    for (auto& s : v) s = Scalar(next());
    return v;
  }

  std::uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

/// Randomized falsifier for almost-innerness in any genus: returns the first
/// sampled x with d(x) not in [L, x], or nullopt if every trial passed.
/// A pass is evidence, not proof.
inline std::optional<Vec> aider_membership_sample(const Mat& D, const Algebra& L, std::size_t trials,
                                                  std::uint64_t seed) {
  detail::check_square(D, L);
  SmallRationalSampler rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Vec x = rng.vector(L.dim());
    const Mat right = adjoint(L, x, Side::right); // y -> [y, x]
    if (!solve(right, D.apply(x))) return x;
  }
  return std::nullopt;
}

} // namespace leib

#endif
