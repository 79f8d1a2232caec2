#ifndef LEIB_LIESTRUCT_HPP
#define LEIB_LIESTRUCT_HPP

#include "leib/derivations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leib {

class not_lie : public std::invalid_argument {
public:
  not_lie() : std::invalid_argument("operation requires a Lie algebra") {}
};

inline void require_lie(const Algebra& g) {
  if (!classify(g).lie) throw not_lie();
}

/// tr(a b) without forming the product.
inline Scalar trace_of_product(const Mat& a, const Mat& b) {
  Scalar t;
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t l = 0; l < a.cols(); ++l)
      if (!a(k, l).is_zero() && !b(l, k).is_zero()) t += a(k, l) * b(l, k);
  return t;
}

/// Incremental echelon basis: vectors are reduced against earlier pivots
/// only, which is enough to test independence cheaply.
class EchelonBuilder {
public:
  EchelonBuilder(std::size_t ambient, Field field) : ambient_(ambient), field_(field) {}

  /// Returns true if v was independent of what was already inserted.
  bool insert(Vec v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar f = v[pivots_[k]];
      if (f.is_zero()) continue;
      const Vec& r = rows_[k];
      for (std::size_t j = pivots_[k]; j < ambient_; ++j)
        if (!r[j].is_zero()) v[j] -= f * r[j];
    }
    std::size_t p = 0;
    while (p < ambient_ && v[p].is_zero()) ++p;
    if (p == ambient_) return false;
    const Scalar inv = v[p].inverse();
    for (std::size_t j = p; j < ambient_; ++j)
      if (!v[j].is_zero()) v[j] *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t dim() const { return rows_.size(); }
  Subspace subspace() const { return Subspace::span(ambient_, rows_, field_); }

private:
  std::size_t ambient_;
  Field field_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

struct KillingForm {
  Mat gram; ///< gram(i, j) = tr(ad_i ad_j)

  Scalar operator()(const Vec& x, const Vec& y) const {
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (!y[j].is_zero() && !gram(i, j).is_zero()) s += x[i] * gram(i, j) * y[j];
    }
    return s;
  }

  std::size_t rank() const { return leib::rank(gram); }
  bool nondegenerate() const { return rank() == gram.rows(); }
};

inline KillingForm killing(const Algebra& g) {
  require_lie(g);
  const std::size_t d = g.dim();
  std::vector<Mat> ad;
  for (std::size_t i = 0; i < d; ++i) ad.push_back(adjoint_basis(g, i));
  KillingForm k{Mat(d, d, g.field())};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      k.gram(i, j) = trace_of_product(ad[i], ad[j]);
      k.gram(j, i) = k.gram(i, j);
    }
  return k;
}

/// {x : kappa(x, [g,g]) = 0}, the solvable radical in characteristic zero.
inline Subspace radical(const Algebra& g) {
  require_lie(g);
  const KillingForm k = killing(g);
  const Subspace comm = product_space(g, g.whole(), g.whole());
  Mat sys(comm.dim(), g.dim(), g.field());
  for (std::size_t r = 0; r < comm.dim(); ++r)
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Scalar s;
      for (std::size_t j = 0; j < g.dim(); ++j)
        if (!k.gram(i, j).is_zero() && !comm.basis()[r][j].is_zero()) s += k.gram(i, j) * comm.basis()[r][j];
      sys(r, i) = s;
    }
  return nullspace(sys);
}

/// Basis of the associative algebra (without unit) generated by `gens`.
/// Fails loudly if the span does not stabilize within d^2 dimensions.
inline std::vector<Mat> associative_envelope(const std::vector<Mat>& gens, std::size_t d, Field field) {
  EchelonBuilder echelon(d * d, field);
  std::vector<Mat> basis;
  for (const auto& m : gens)
    if (echelon.insert(m.flatten())) basis.push_back(m);
  std::vector<Mat> frontier = basis;
  std::vector<Mat> independent_gens = basis;
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& w : frontier)
      for (const auto& gen : independent_gens) {
        Mat p = gen * w;
        if (echelon.insert(p.flatten())) next.push_back(std::move(p));
      }
    basis.insert(basis.end(), next.begin(), next.end());
    if (basis.size() > d * d) throw internal_error("associative envelope did not stabilize");
    frontier = std::move(next);
  }
  return basis;
}

/// Largest nilpotent ideal: the x in rad(g) whose adjoint is nilpotent.
/// ad(rad g) generates a triangularizable associative algebra A (Lie's
/// theorem), whose nilpotent elements are exactly those orthogonal to A
/// under the trace form.
inline Subspace nilradical(const Algebra& g) {
  require_lie(g);
  const std::size_t d = g.dim();
  const Subspace rad = radical(g);
  if (rad.is_zero()) return rad;
  std::vector<Mat> ad_r;
  for (const auto& r : rad.basis()) ad_r.push_back(adjoint(g, r));
  const std::vector<Mat> env = associative_envelope(ad_r, d, g.field());
  // unknowns: coordinates t of x = sum t_k r_k
  Mat sys(env.size(), rad.dim(), g.field());
  for (std::size_t b = 0; b < env.size(); ++b)
    for (std::size_t k = 0; k < rad.dim(); ++k) sys(b, k) = trace_of_product(ad_r[k], env[b]);
  std::vector<Vec> out;
  for (const auto& t : nullspace(sys).basis()) {
    Vec x(d);
    for (std::size_t k = 0; k < rad.dim(); ++k)
      if (!t[k].is_zero())
        for (std::size_t j = 0; j < d; ++j) x[j] += t[k] * rad.basis()[k][j];
    out.push_back(std::move(x));
  }
  Subspace nil = Subspace::span(d, out, g.field());
  if (!is_ideal(g, nil)) throw internal_error("nilradical candidate is not an ideal");
  if (!nil.is_zero() && !is_nilpotent(restrict_to(g, nil)).holds)
    throw internal_error("nilradical candidate is not nilpotent");
  return nil;
}

inline bool is_semisimple(const Algebra& g) {
  require_lie(g);
  return killing(g).nondegenerate();
}

enum class LeviStatus { verified, not_subalgebra, not_complement, degenerate };

inline std::string to_string(LeviStatus s) {
  switch (s) {
  case LeviStatus::verified: return "verified";
  case LeviStatus::not_subalgebra: return "not-subalgebra";
  case LeviStatus::not_complement: return "not-complement";
  case LeviStatus::degenerate: return "degenerate";
  }
  return "?";
}

struct LeviResult {
  LeviStatus status = LeviStatus::verified;
  bool verified() const { return status == LeviStatus::verified; }
};

/// Checks a claimed Levi complement. S must be a subalgebra with
/// S + rad = g, S n rad = 0 and a nondegenerate Killing form of its own.
inline LeviResult verify_levi(const Algebra& g, const Subspace& S) {
  require_lie(g);
  if (S.ambient_dim() != g.dim()) throw std::invalid_argument("verify_levi: ambient mismatch");
  if (!is_subalgebra(g, S)) return {LeviStatus::not_subalgebra};
  const Subspace rad = radical(g);
  if (!subspace_intersect(S, rad).is_zero() || subspace_sum(S, rad).dim() != g.dim())
    return {LeviStatus::not_complement};
  if (S.is_zero()) return {LeviStatus::verified};
  const Algebra s = restrict_to(g, S);
  if (!killing(s).nondegenerate()) return {LeviStatus::degenerate};
  if (product_space(s, s.whole(), s.whole()).dim() != s.dim())
    throw internal_error("verified Levi complement is not perfect");
  return {LeviStatus::verified};
}

struct StructureReport {
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  SeriesVerdict solvable;
  SeriesVerdict nilpotent;
  std::size_t center_dim = 0;
  std::size_t killing_rank = 0;
  Subspace radical;
  Subspace nilradical;
  std::optional<LeviResult> levi;
};

inline StructureReport analyze(const Algebra& g, const std::optional<Subspace>& levi = std::nullopt) {
  require_lie(g);
  StructureReport r;
  const auto ds = series(g, SeriesKind::derived);
  const auto ls = series(g, SeriesKind::lower_central);
  r.derived_dims = series_dims(ds);
  r.lower_central_dims = series_dims(ls);
  r.solvable = series_verdict(ds);
  r.nilpotent = series_verdict(ls);
  r.center_dim = centers(g).center.dim();
  r.killing_rank = killing(g).rank();
  r.radical = radical(g);
  r.nilradical = nilradical(g);
  if (levi) r.levi = verify_levi(g, *levi);
  return r;
}

} // namespace leib

#endif
