#ifndef LEIB_TESTS_SUPPORT_HPP
#define LEIB_TESTS_SUPPORT_HPP

#include "leib/claims.hpp"

#include <random>

namespace testing_support {

using namespace leib;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_); }

  Rational rational(std::int64_t bound = 5) {
    return Rational(integer(-bound, bound), integer(1, bound));
  }

  Scalar scalar(Field f, std::int64_t bound = 5) {
    return f == Field::Q ? Scalar(rational(bound)) : Scalar(rational(bound), rational(bound));
  }

  Vec vec(std::size_t n, Field f = Field::Q, std::int64_t bound = 5) {
    Vec v(n);
    for (auto& s : v) s = scalar(f, bound);
    return v;
  }

  Mat mat(std::size_t r, std::size_t c, Field f = Field::Q, std::int64_t bound = 5) {
    Mat m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar(f, bound);
    return m;
  }

  /// Matrix of rank at most `rank`, as a product of thin factors.
  Mat low_rank(std::size_t r, std::size_t c, std::size_t rank) { return mat(r, rank) * mat(rank, c); }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }

  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

// d(x) computed straight from the bracket, independent of the linear system
inline Vec derivation_residual(const Mat& D, const Algebra& L, std::size_t i, std::size_t j) {
  const std::size_t d = L.dim();
  const Vec bi = unit_vector(d, i), bj = unit_vector(d, j);
  const Vec lhs = D.apply(bracket(L, bi, bj));
  const Vec r1 = bracket(L, D.apply(bi), bj);
  const Vec r2 = bracket(L, bi, D.apply(bj));
  Vec out(d);
  for (std::size_t k = 0; k < d; ++k) out[k] = lhs[k] - r1[k] - r2[k];
  return out;
}

inline bool satisfies_derivation_identity(const Mat& D, const Algebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      if (!is_zero(derivation_residual(D, L, i, j))) return false;
  return true;
}

inline bool is_nilpotent_matrix(const Mat& m) {
  Mat p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
  return p.is_zero();
}

/// Genus-1 members of the catalog for n = 1..nmax, with a readable tag.
inline std::vector<std::pair<std::string, Algebra>> catalog_sample(std::size_t nmax) {
  std::vector<std::pair<std::string, Algebra>> out;
  for (std::size_t n = 1; n <= nmax; ++n) {
    const std::string s = std::to_string(n);
    out.emplace_back("heisenberg-lie " + s, heisenberg_lie(n));
    for (std::int64_t a : {2, 1, -1, 0}) out.emplace_back("jordan a=" + std::to_string(a) + " n=" + s, heisenberg_jordan(Scalar(a), n));
    out.emplace_back("kronecker " + s, kronecker(n));
    out.emplace_back("dieudonne " + s, dieudonne(n));
  }
  out.emplace_back("real z=i n=1", heisenberg_leibniz(2, real_block(Rational(0), Rational(1), 1), BasisOrder::interleaved));
  out.emplace_back("complex jordan a=i n=2", heisenberg_jordan(Scalar::i(), 2));
  return out;
}

// [x, y] = z for each listed pair, antisymmetrized
inline Algebra lie_from(const std::vector<std::string>& labels, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>>& t) {
  AlgebraBuilder b(Field::Q, labels);
  for (const auto& [i, j, k, s] : t) b.add(i, j, k, Scalar(s)).add(j, i, k, Scalar(-s));
  return b.build();
}

struct NilpotentSeed {
  Algebra n;
  Mat grading; // a positive grading, hence a non-nilpotent derivation
};

inline std::vector<NilpotentSeed> nilpotent_seeds() {
  std::vector<NilpotentSeed> out;
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back("a" + std::to_string(i));
    out.push_back({AlgebraBuilder(Field::Q, labels).build(), Mat::identity(k)});
  }
  Mat g3 = Mat::identity(3);
  g3(2, 2) = Scalar(2);
  out.push_back({heisenberg_lie(1), g3});
  Mat g4 = Mat::identity(4);
  g4(2, 2) = Scalar(2);
  g4(3, 3) = Scalar(3);
  out.push_back({lie_from({"x1", "x2", "x3", "x4"}, {{0, 1, 2, 1}, {0, 2, 3, 1}}), g4});
  return out;
}

// n semidirect <t> where t acts by D
inline Algebra extend_by(const Algebra& n, const Mat& D) {
  const std::size_t k = n.dim();
  std::vector<std::string> labels = n.labels();
  labels.push_back("t");
  AlgebraBuilder b(Field::Q, labels);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t m = 0; m < k; ++m)
        if (!n.c(i, j, m).is_zero()) b.add(i, j, m, n.c(i, j, m));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t m = 0; m < k; ++m)
      if (!D(m, j).is_zero()) b.add(k, j, m, D(m, j)).add(j, k, m, -D(m, j));
  return b.build();
}

struct OracleRun {
  std::size_t algebras = 0;
  std::vector<std::string> failures;
};

/// Random solvable algebras n x| <t>, with t acting by a non-nilpotent
/// derivation. There the nilradical is exactly the ad-nilpotent set, so
/// membership can be tested vector by vector.
inline OracleRun nilradical_oracle(std::uint64_t seed, std::size_t count, std::size_t probes = 25) {
  Rng rng(seed);
  const auto seeds = nilpotent_seeds();
  OracleRun out;
  for (std::size_t t = 0; t < 4 * count && out.algebras < count; ++t) {
    const auto& s = seeds[rng.index(seeds.size())];
    const auto der = der_algebra(s.n);
    Mat D = Scalar(rng.integer(0, 2)) * s.grading;
    for (const auto& m : der.basis()) D = D + Scalar(rng.integer(-2, 2)) * m;
    if (is_nilpotent_matrix(D)) continue;
    const std::string tag = "algebra " + std::to_string(out.algebras++);
    const Algebra g = extend_by(s.n, D);
    if (!classify(g).lie) {
      out.failures.push_back(tag + ": not Lie");
      continue;
    }
    const Subspace nil = nilradical(g);
    if (!is_ideal(g, nil)) out.failures.push_back(tag + ": not an ideal");
    for (const auto& v : nil.basis())
      if (!is_nilpotent_matrix(adjoint(g, v))) out.failures.push_back(tag + ": basis vector not ad-nilpotent");
    for (std::size_t k = 0; k < probes; ++k) {
      const Vec x = rng.vec(g.dim());
      if (nil.contains(x) != is_nilpotent_matrix(adjoint(g, x))) out.failures.push_back(tag + ": probe disagrees");
    }
  }
  return out;
}

struct FuzzRun {
  std::size_t parsed = 0;
  std::size_t rejected = 0;
  std::vector<std::string> failures;
};

/// Mutated documents and raw noise through parse, build and re-serialize.
/// Every input must end as a doc or a ParseError.
inline FuzzRun fuzz_parser(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  const std::string alphabet = "[],=#+-/ i\n\tabcefxyzQ0123456789";
  const std::vector<std::string> seeds{
      "algebra h3 field Q\nbasis e f z\n[e,f] = z\n[f,e] = -1 z\nend\n",
      serialize(from_algebra(kronecker(2), "k2")),
      serialize(from_algebra(heisenberg_jordan(Scalar::i(), 1), "c"))};
  FuzzRun out;
  for (std::size_t t = 0; t < count; ++t) {
    std::string s;
    if (t % 4 == 0) {
      const std::size_t len = rng.index(80);
      for (std::size_t k = 0; k < len; ++k) s += alphabet[rng.index(alphabet.size())];
    } else {
      s = seeds[rng.index(seeds.size())];
      const std::size_t edits = 1 + rng.index(4);
      for (std::size_t e = 0; e < edits && !s.empty(); ++e) {
        const std::size_t at = rng.index(s.size());
        switch (rng.index(3)) {
        case 0: s.erase(at, 1); break;
        case 1: s.insert(s.begin() + static_cast<std::ptrdiff_t>(at), alphabet[rng.index(alphabet.size())]); break;
        default: s[at] = alphabet[rng.index(alphabet.size())];
        }
      }
    }
    try {
      const AlgebraDoc doc = parse_doc(s);
      const Algebra L = to_algebra(doc);
      if (!(parse_doc(serialize(doc)) == doc)) out.failures.push_back("round trip changed document " + std::to_string(t));
      (void)classify(L);
      ++out.parsed;
    } catch (const ParseError& e) {
      if (e.line() < 1 || e.column() < 1) out.failures.push_back("bad position in document " + std::to_string(t));
      ++out.rejected;
    } catch (const std::exception& e) {
      out.failures.push_back("document " + std::to_string(t) + ": " + e.what());
    }
  }
  return out;
}

} // namespace testing_support

#endif
