#ifndef LEIB_CATALOG_HPP
#define LEIB_CATALOG_HPP

#include "leib/algebra.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace leib {

enum class BasisOrder {
  grouped,     ///< e1..en, f1..fn, z
  interleaved  ///< e1, f1, ..., en, fn, z
};

inline const char* to_string(BasisOrder o) { return o == BasisOrder::grouped ? "grouped" : "interleaved"; }

enum class Family { heisenberg_lie, heisenberg_leibniz, kronecker, dieudonne };

inline const char* to_string(Family f) {
  switch (f) {
  case Family::heisenberg_lie: return "heisenberg-lie";
  case Family::heisenberg_leibniz: return "heisenberg";
  case Family::kronecker: return "kronecker";
  case Family::dieudonne: return "dieudonne";
  }
  return "?";
}

namespace detail {

inline std::size_t e_index(std::size_t /*n*/, std::size_t i, BasisOrder o) { return o == BasisOrder::grouped ? i : 2 * i; }
inline std::size_t f_index(std::size_t n, std::size_t i, BasisOrder o) {
  return o == BasisOrder::grouped ? n + i : 2 * i + 1;
}

inline std::vector<std::string> ef_labels(std::size_t n, BasisOrder o) {
  std::vector<std::string> labels(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    labels[e_index(n, i, o)] = "e" + std::to_string(i + 1);
    labels[f_index(n, i, o)] = "f" + std::to_string(i + 1);
  }
  labels[2 * n] = "z";
  return labels;
}

inline void require_positive(std::size_t n) {
  if (n < 1) throw std::invalid_argument("family size n must be at least 1");
}

} // namespace detail

/// Heisenberg Leibniz algebra l^A_{2n+1}:
/// [e_i, f_j] = (delta_ij + a_ij) z,  [f_j, e_i] = (-delta_ij + a_ij) z.
inline Algebra heisenberg_leibniz(std::size_t n, const Mat& A, BasisOrder order = BasisOrder::grouped) {
  detail::require_positive(n);
  if (A.rows() != n || A.cols() != n) throw std::invalid_argument("parameter matrix must be n x n");
  AlgebraBuilder b(A.field(), detail::ef_labels(n, order));
  const std::size_t z = 2 * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar delta = i == j ? Scalar(1) : Scalar(0);
      b.add(detail::e_index(n, i, order), detail::f_index(n, j, order), z, delta + A(i, j));
      b.add(detail::f_index(n, j, order), detail::e_index(n, i, order), z, -delta + A(i, j));
    }
  return b.build();
}

inline Algebra heisenberg_lie(std::size_t n, BasisOrder order = BasisOrder::grouped) {
  return heisenberg_leibniz(n, Mat(n, n), order);
}

/// n x n Jordan block: `a` on the diagonal, 1 on the subdiagonal. This is the
/// orientation for which [e_i, f_{i-1}] = [f_{i-1}, e_i] = z.
inline Mat jordan(const Scalar& a, std::size_t n) {
  detail::require_positive(n);
  Mat m(n, n, a.is_real() ? Field::Q : Field::Qi);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = a;
    if (i > 0) m(i, i - 1) = Scalar(1);
  }
  return m;
}

/// Companion matrix of the monic polynomial with coefficients `coeffs`
/// (low to high, last entry 1): ones on the subdiagonal, last column
/// -c_0, ..., -c_{m-1}.
inline Mat companion(const Vec& coeffs) {
  if (coeffs.size() < 2 || !coeffs.back().is_one()) throw std::invalid_argument("companion: polynomial must be monic of degree >= 1");
  const std::size_t m = coeffs.size() - 1;
  Field f = fits_field(coeffs, Field::Q) ? Field::Q : Field::Qi;
  Mat c(m, m, f);
  for (std::size_t i = 1; i < m; ++i) c(i, i - 1) = Scalar(1);
  for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = -coeffs[i];
  return c;
}

/// Coefficients of (x - a)^n, low to high.
inline Vec power_of_linear(const Scalar& a, std::size_t n) {
  Vec p{Scalar(1)};
  for (std::size_t k = 0; k < n; ++k) {
    Vec q(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j + 1] += p[j];
      q[j] -= a * p[j];
    }
    p = std::move(q);
  }
  return p;
}

/// 2n x 2n block matrix with R = (a b; -b a) on the diagonal and I_2 on the
/// block subdiagonal.
inline Mat real_block(const Rational& a, const Rational& b, std::size_t n) {
  detail::require_positive(n);
  if (b.is_zero()) throw std::invalid_argument("real_block: b must be nonzero");
  Mat m(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    m(2 * k, 2 * k) = a;
    m(2 * k, 2 * k + 1) = b;
    m(2 * k + 1, 2 * k) = -b;
    m(2 * k + 1, 2 * k + 1) = a;
    if (k > 0) {
      m(2 * k, 2 * k - 2) = Scalar(1);
      m(2 * k + 1, 2 * k - 1) = Scalar(1);
    }
  }
  return m;
}

/// Entrywise realification of a complex matrix: p + qi -> (p q; -q p).
inline Mat realify_matrix(const Mat& A) {
  Mat r(2 * A.rows(), 2 * A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Scalar& s = A(i, j);
      r(2 * i, 2 * j) = s.re();
      r(2 * i, 2 * j + 1) = s.im();
      r(2 * i + 1, 2 * j) = -s.im();
      r(2 * i + 1, 2 * j + 1) = s.re();
    }
  return r;
}

/// Kronecker algebra k_n: [e_i,f_i] = [f_i,e_i] = z, [e_i,f_{i-1}] = z,
/// [f_{i-1},e_i] = -z.
inline Algebra kronecker(std::size_t n, BasisOrder order = BasisOrder::grouped) {
  detail::require_positive(n);
  AlgebraBuilder b(Field::Q, detail::ef_labels(n, order));
  const std::size_t z = 2 * n;
  for (std::size_t i = 0; i < n; ++i) {
    b.add(detail::e_index(n, i, order), detail::f_index(n, i, order), z, Scalar(1));
    b.add(detail::f_index(n, i, order), detail::e_index(n, i, order), z, Scalar(1));
    if (i > 0) {
      b.add(detail::e_index(n, i, order), detail::f_index(n, i - 1, order), z, Scalar(1));
      b.add(detail::f_index(n, i - 1, order), detail::e_index(n, i, order), z, Scalar(-1));
    }
  }
  return b.build();
}

/// Dieudonne algebra d_n on e_1..e_{2n+1}, z.
inline Algebra dieudonne(std::size_t n) {
  detail::require_positive(n);
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= 2 * n + 1; ++k) labels.push_back("e" + std::to_string(k));
  labels.emplace_back("z");
  AlgebraBuilder b(Field::Q, labels);
  const std::size_t z = 2 * n + 1;
  // 1-based indices as in the defining table
  auto put = [&](std::size_t i, std::size_t j, std::int64_t v) { b.add(i - 1, j - 1, z, Scalar(v)); };
  put(1, n + 2, 1);
  for (std::size_t i = 2; i <= n; ++i) {
    put(i, n + i, 1);
    put(i, n + i + 1, 1);
  }
  put(n + 1, 2 * n + 1, 1);
  for (std::size_t i = n + 2; i <= 2 * n + 1; ++i) {
    put(i, i - n, 1);
    put(i, i - n - 1, -1);
  }
  return b.build();
}

/// Realification of l^A_{2n+1} over Q(i): realify A entrywise and rebuild
/// the 4n+1 dimensional real Heisenberg Leibniz algebra.
inline Algebra realify_heisenberg(std::size_t n, const Mat& A, BasisOrder order = BasisOrder::grouped) {
  if (A.rows() != n || A.cols() != n) throw std::invalid_argument("parameter matrix must be n x n");
  return heisenberg_leibniz(2 * n, realify_matrix(A), order);
}

/// Restriction of scalars Q(i) -> Q: basis u_k = b_k, v_k = i b_k, so the
/// dimension doubles.
inline Algebra realify_algebra(const Algebra& L) {
  if (L.field() != Field::Qi) throw std::invalid_argument("realify_algebra: input must be over Qi");
  const std::size_t d = L.dim();
  std::vector<std::string> labels = L.labels();
  for (std::size_t k = 0; k < d; ++k) labels.push_back("i" + L.labels()[k]);
  AlgebraBuilder b(Field::Q, labels);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t m = 0; m < d; ++m) {
        const Scalar& c = L.c(j, k, m);
        if (c.is_zero()) continue;
        const Scalar al(c.re());
        const Scalar be(c.im());
        // [u,u] = al u + be v ; [u,v] = [v,u] = -be u + al v ; [v,v] = -[u,u]
        b.add(j, k, m, al).add(j, k, d + m, be);
        b.add(j, d + k, m, -be).add(j, d + k, d + m, al);
        b.add(d + j, k, m, -be).add(d + j, k, d + m, al);
        b.add(d + j, d + k, m, -al).add(d + j, d + k, d + m, -be);
      }
  return b.build();
}

inline bool is_permutation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

/// New basis b'_p = b_{perm[p]}.
inline Algebra permute_basis(const Algebra& L, const std::vector<std::size_t>& perm) {
  if (perm.size() != L.dim() || !is_permutation(perm)) throw std::invalid_argument("permute_basis: not a permutation");
  const std::size_t d = L.dim();
  std::vector<std::string> labels(d);
  for (std::size_t p = 0; p < d; ++p) labels[p] = L.labels()[perm[p]];
  AlgebraBuilder b(L.field(), labels);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t r = 0; r < d; ++r) {
        const Scalar& c = L.c(perm[p], perm[q], perm[r]);
        if (!c.is_zero()) b.add(p, q, r, c);
      }
  return b.build();
}

/// Matrix of the same linear map after permute_basis(L, perm).
inline Mat permute_matrix(const Mat& D, const std::vector<std::size_t>& perm) {
  Mat out(D.rows(), D.cols(), D.field());
  for (std::size_t p = 0; p < D.rows(); ++p)
    for (std::size_t q = 0; q < D.cols(); ++q) out(p, q) = D(perm[p], perm[q]);
  return out;
}

/// Permutation taking the grouped e/f/z order to the interleaved one.
inline std::vector<std::size_t> grouped_to_interleaved(std::size_t n) {
  std::vector<std::size_t> perm(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    perm[2 * i] = i;
    perm[2 * i + 1] = n + i;
  }
  perm[2 * n] = 2 * n;
  return perm;
}

inline std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t p = 0; p < perm.size(); ++p) inv[perm[p]] = p;
  return inv;
}

/// A family instance as requested by callers (CLI, claims).
struct FamilySpec {
  Family family = Family::heisenberg_lie;
  std::size_t n = 1;
  std::optional<Mat> parameter; ///< heisenberg_leibniz only
  BasisOrder basis_order = BasisOrder::grouped;
};

inline Algebra build(const FamilySpec& spec) {
  switch (spec.family) {
  case Family::heisenberg_lie:
    if (spec.parameter) throw std::invalid_argument("heisenberg-lie takes no parameter");
    return heisenberg_lie(spec.n, spec.basis_order);
  case Family::heisenberg_leibniz:
    if (!spec.parameter) throw std::invalid_argument("heisenberg requires a parameter matrix");
    return heisenberg_leibniz(spec.n, *spec.parameter, spec.basis_order);
  case Family::kronecker:
    if (spec.parameter) throw std::invalid_argument("kronecker takes no parameter");
    return kronecker(spec.n, spec.basis_order);
  case Family::dieudonne:
    if (spec.parameter) throw std::invalid_argument("dieudonne takes no parameter");
    if (spec.basis_order != BasisOrder::grouped) throw std::invalid_argument("dieudonne has a single basis order");
    return dieudonne(spec.n);
  }
  throw std::invalid_argument("unknown family");
}

/// l^{J_a}_{2n+1}.
inline Algebra heisenberg_jordan(const Scalar& a, std::size_t n, BasisOrder order = BasisOrder::grouped) {
  return heisenberg_leibniz(n, jordan(a, n), order);
}

} // namespace leib

#endif
