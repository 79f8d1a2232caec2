#ifndef LEIB_CLAIMS_HPP
#define LEIB_CLAIMS_HPP

#include "leib/catalog.hpp"
#include "leib/dsl.hpp"
#include "leib/liestruct.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace leib {

// ---- named generators --------------------------------------------------------
//
// Explicit matrices from the published derivation bases. Indices below are
// 1-based as in e_{ij}; `unit` converts.

namespace named {

struct Basis {
  std::vector<std::string> names;
  std::vector<Mat> mats;

  void add(std::string name, Mat m) {
    names.push_back(std::move(name));
    mats.push_back(std::move(m));
  }
  const Mat& operator[](const std::string& name) const {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) return mats[k];
    throw std::out_of_range("no named generator '" + name + "'");
  }
  bool has(const std::string& name) const {
    for (const auto& n : names)
      if (n == name) return true;
    return false;
  }
};

inline void put(Mat& m, std::size_t i, std::size_t j, std::int64_t v) { m(i - 1, j - 1) += Scalar(v); }

inline Mat unit(std::size_t N, std::size_t i, std::size_t j) { return matrix_unit(N, i - 1, j - 1); }

inline std::string idx(const std::string& s, std::size_t i) { return s + std::to_string(i); }

/// Grouped basis {e_1..e_n, f_1..f_n, z}, a != 0: x, y, E_i, A_i, B_i.
inline Basis heisenberg_grouped(std::size_t n) {
  const std::size_t N = 2 * n + 1;
  Basis b;
  Mat x(N, N), y(N, N);
  for (std::size_t k = 1; k <= n; ++k) {
    put(x, k, k, 1);
    put(y, n + k, n + k, 1);
  }
  put(x, N, N, 1);
  put(y, N, N, 1);
  b.add("x", x);
  b.add("y", y);
  for (std::size_t i = 1; i < n; ++i) {
    Mat e(N, N);
    for (std::size_t k = 1; k <= n - i; ++k) {
      put(e, k, k + i, 1);
      put(e, n + i + k, n + k, -1);
    }
    b.add(idx("E", i), e);
  }
  for (std::size_t i = 1; i <= n; ++i) b.add(idx("A", i), unit(N, N, i));
  for (std::size_t i = 1; i <= n; ++i) b.add(idx("B", i), unit(N, N, n + i));
  return b;
}

/// Interleaved basis {e_1, f_1, ..., e_n, f_n, z}: x, y, E_i, A_i, B_i.
/// The E_i sum runs over k = 0..n-i-1 (the only range that stays inside
/// the matrix).
inline Basis interleaved_common(std::size_t n) {
  const std::size_t N = 2 * n + 1;
  Basis b;
  Mat x(N, N), y(N, N);
  for (std::size_t k = 1; k <= n; ++k) {
    put(x, 2 * k - 1, 2 * k - 1, 1);
    put(y, 2 * k, 2 * k, 1);
  }
  put(x, N, N, 1);
  put(y, N, N, 1);
  b.add("x", x);
  b.add("y", y);
  for (std::size_t i = 1; i < n; ++i) {
    Mat e(N, N);
    for (std::size_t k = 0; k + i + 1 <= n; ++k) {
      put(e, 2 * (k + i + 1), 2 * (k + 1), 1);
      put(e, 2 * k + 1, 2 * (k + i) + 1, -1);
    }
    b.add(idx("E", i), e);
  }
  for (std::size_t i = 1; i <= n; ++i) b.add(idx("A", i), unit(N, N, 2 * i - 1));
  for (std::size_t i = 1; i <= n; ++i) b.add(idx("B", i), unit(N, N, 2 * i));
  return b;
}

// c_h = sum_{i=0}^{h-2} s(i) e_{2(h-i-1)-1, 2(1+i)}
inline Mat c_matrix(std::size_t n, std::size_t h, int sign0) {
  const std::size_t N = 2 * n + 1;
  Mat m(N, N);
  for (std::size_t i = 0; i + 2 <= h; ++i) put(m, 2 * (h - i - 1) - 1, 2 * (1 + i), (i % 2 ? -sign0 : sign0));
  return m;
}

// b_h = sum_{i=0}^{2n-h} s(i) e_{2(n-i), 2(h-n+i)-1}
inline Mat b_matrix(std::size_t n, std::size_t h, int sign0) {
  const std::size_t N = 2 * n + 1;
  Mat m(N, N);
  for (std::size_t i = 0; i + h <= 2 * n; ++i) put(m, 2 * (n - i), 2 * (h + i - n) - 1, (i % 2 ? -sign0 : sign0));
  return m;
}

inline std::vector<std::size_t> j0_c_range(std::size_t n) {
  std::vector<std::size_t> r;
  for (std::size_t h = 2; h <= (n % 2 ? n + 1 : n); h += 2) r.push_back(h);
  return r;
}
inline std::vector<std::size_t> j0_b_range(std::size_t n) {
  std::vector<std::size_t> r;
  for (std::size_t h = (n % 2 ? n + 1 : n + 2); h <= 2 * n; h += 2) r.push_back(h);
  return r;
}
inline std::vector<std::size_t> kron_c_range(std::size_t n) {
  std::vector<std::size_t> r;
  for (std::size_t h = 3; h <= (n % 2 ? n : n + 1); h += 2) r.push_back(h);
  return r;
}
inline std::vector<std::size_t> kron_b_range(std::size_t n) {
  std::vector<std::size_t> r;
  for (std::size_t h = (n % 2 ? n + 2 : n + 1); h + 1 <= 2 * n; h += 2) r.push_back(h);
  return r;
}

/// Der(l^{J_0}_{2n+1}), interleaved basis.
inline Basis heisenberg_j0(std::size_t n) {
  Basis b = interleaved_common(n);
  for (auto h : j0_c_range(n)) b.add(idx("c", h), c_matrix(n, h, 1));
  for (auto h : j0_b_range(n)) b.add(idx("b", h), b_matrix(n, h, 1));
  return b;
}

/// Der(k_n), interleaved basis.
inline Basis kronecker(std::size_t n) {
  Basis b = interleaved_common(n);
  for (auto h : kron_c_range(n)) b.add(idx("c", h), c_matrix(n, h, -1));
  for (auto h : kron_b_range(n)) b.add(idx("b", h), b_matrix(n, h, -1));
  return b;
}

/// Der(d_n), basis {e_1..e_{2n+1}, z}. The diagonal generator x carries its
/// last 1 in the z slot (2n+2), as in the n = 1 example.
inline Basis dieudonne(std::size_t n) {
  const std::size_t N = 2 * n + 2;
  Basis b;
  Mat x(N, N), y(N, N);
  for (std::size_t i = 1; i <= n + 1; ++i) put(x, i, i, 1);
  put(x, N, N, 1);
  for (std::size_t i = n + 2; i <= N; ++i) put(y, i, i, 1);
  b.add("x", x);
  b.add("y", y);
  std::vector<Mat> E(n + 1, Mat(N, N));
  for (std::size_t i = 1; i <= (n + 1) / 2; ++i)
    for (std::size_t k = 1; k <= 2 * i - 1; ++k) put(E[i], k, n + 2 * i + 1 - k, k % 2 ? 1 : -1);
  if (n % 2 == 0) {
    for (std::size_t j = 1; j <= n / 2; ++j)
      for (std::size_t k = 1; k + 2 * j <= n + 2; ++k) put(E[n / 2 + j], n + 2 - k, n + 2 * j - 1 + k, k % 2 ? 1 : -1);
  } else {
    for (std::size_t j = 1; j <= (n - 1) / 2; ++j)
      for (std::size_t k = 1; k + 2 * j <= n + 1; ++k) put(E[(n + 1) / 2 + j], n + 2 - k, n + 2 * j + k, k % 2 ? -1 : 1);
  }
  for (std::size_t i = 1; i <= n; ++i) b.add(idx("E", i), E[i]);
  for (std::size_t i = 1; i <= 2 * n + 1; ++i) b.add(idx("A", i), unit(N, N, i));
  return b;
}

/// Der(l_5^R), basis {e_1, f_1, e_2, f_2, z}; F and G only exist for a = 0.
inline Basis real5(bool with_fg) {
  const std::size_t N = 5;
  Basis b;
  Mat x(N, N), y(N, N), E(N, N);
  put(x, 1, 1, 1), put(x, 3, 3, 1), put(x, 5, 5, 1);
  put(y, 2, 2, 1), put(y, 4, 4, 1), put(y, 5, 5, 1);
  put(E, 1, 3, 1), put(E, 2, 4, 1), put(E, 3, 1, -1), put(E, 4, 2, -1);
  b.add("x", x);
  b.add("y", y);
  b.add("E", E);
  if (with_fg) {
    Mat F(N, N), G(N, N);
    put(F, 1, 2, 1), put(F, 3, 4, 1);
    put(G, 2, 1, 1), put(G, 4, 3, 1);
    b.add("F", F);
    b.add("G", G);
  }
  for (std::size_t i = 1; i <= 2; ++i) b.add(idx("A", i), unit(N, 5, 2 * i - 1));
  for (std::size_t i = 1; i <= 2; ++i) b.add(idx("B", i), unit(N, 5, 2 * i));
  return b;
}

} // namespace named

// ---- claim plumbing -----------------------------------------------------------

/// Flattened span of matrices.
inline Subspace flat_span(const std::vector<Mat>& ms, std::size_t N, Field field = Field::Q) {
  std::vector<Vec> v;
  for (const auto& m : ms) v.push_back(m.flatten());
  return Subspace::span(N * N, v, field);
}

/// A coordinate subspace of M, as a flattened matrix space.
inline Subspace matrix_span(const MatrixLieAlgebra& M, const Subspace& coords) {
  std::vector<Mat> ms;
  for (const auto& c : coords.basis()) ms.push_back(M.element(c));
  return flat_span(ms, M.ambient_dim(), M.field());
}

/// Coordinates (in M) of a span of matrices; throws if one lies outside M.
inline Subspace coordinate_span(const MatrixLieAlgebra& M, const std::vector<Mat>& ms) {
  std::vector<Vec> v;
  for (const auto& m : ms) {
    auto c = M.coordinates(m);
    if (!c) throw std::invalid_argument("matrix outside the Lie algebra");
    v.push_back(std::move(*c));
  }
  return Subspace::span(M.dim(), v, M.field());
}

inline std::string str(const Scalar& s) { return s.to_string(); }
inline std::string str(std::size_t v) { return std::to_string(v); }
inline std::string str(bool b) { return b ? "true" : "false"; }
inline std::string str(const std::string& s) { return s; }
inline std::string str(const char* s) { return s; }
inline std::string str(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

/// Accumulates sub-checks of one claim instance into a ClaimResult.
class Checks {
public:
  template <typename T>
  bool eq(const std::string& what, const T& expected, const T& actual, bool typo_flagged = false) {
    return record(what, str(expected), str(actual), expected == actual, typo_flagged);
  }

  bool record(const std::string& what, std::string expected, std::string actual, bool ok, bool typo_flagged = false) {
    items_.push_back({what, std::move(expected), std::move(actual), ok, typo_flagged});
    return ok;
  }

  /// Compare two subspaces; on mismatch both bases go into the detail.
  bool same_space(const std::string& what, const Subspace& expected, const Subspace& actual, bool typo_flagged = false) {
    const bool ok = expected == actual;
    record(what, "dim " + std::to_string(expected.dim()), ok ? "equal" : "dim " + std::to_string(actual.dim()) + ", differs",
           ok, typo_flagged);
    if (!ok) detail_[what] = {{"expected_basis", subspace_json(expected)}, {"actual_basis", subspace_json(actual)}};
    return ok;
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  /// Extra evidence, reported only if the claim ends up refuted.
  void attach(const std::string& key, nlohmann::json j) { detail_[key] = std::move(j); }

  ClaimResult finish(std::string id, nlohmann::json params) const {
    ClaimResult r;
    r.id = std::move(id);
    r.params = std::move(params);
    bool refuted = false;
    bool flagged = false;
    std::string exp;
    std::string act;
    for (const auto& it : items_) {
      exp += (exp.empty() ? "" : "; ") + it.what + "=" + it.expected;
      act += (act.empty() ? "" : "; ") + it.what + "=" + it.actual;
      if (!it.ok) (it.typo_flagged ? flagged : refuted) = true;
    }
    r.status = refuted ? ClaimStatus::refuted : flagged ? ClaimStatus::discrepancy : ClaimStatus::confirmed;
    r.expected = exp;
    r.actual = act;
    std::string n;
    for (const auto& it : items_)
      if (!it.ok) n += (n.empty() ? "failed: " : ", ") + it.what;
    for (const auto& t : notes_) n += (n.empty() ? "" : "; ") + t;
    r.note = n;
    if (refuted && !detail_.empty()) r.detail = detail_;
    return r;
  }

private:
  struct Item {
    std::string what, expected, actual;
    bool ok;
    bool typo_flagged;
  };
  std::vector<Item> items_;
  std::vector<std::string> notes_;
  nlohmann::json detail_ = nlohmann::json::object();
};

/// One point of a claim's parameter domain.
struct Instance {
  std::size_t n = 1;
  std::optional<Scalar> a;

  nlohmann::json params(const std::string& family) const {
    nlohmann::json j{{"family", family}, {"n", n}};
    if (a) j["a"] = a->to_string();
    return j;
  }
};

/// Memoizes the expensive objects shared between claims.
class Engine {
public:
  const Algebra& algebra(const std::string& key, const std::function<Algebra()>& make) {
    auto it = algebras_.find(key);
    if (it == algebras_.end()) it = algebras_.emplace(key, make()).first;
    return it->second;
  }

  const MatrixLieAlgebra& der(const std::string& key, const Algebra& L) {
    auto it = ders_.find(key);
    if (it == ders_.end()) it = ders_.emplace(key, der_algebra(L)).first;
    return it->second;
  }

  const MatrixLieAlgebra& inn(const std::string& key, const Algebra& L) {
    auto it = inns_.find(key);
    if (it == inns_.end()) it = inns_.emplace(key, inner_derivations(L)).first;
    return it->second;
  }

  const Subspace& nilradical_of(const std::string& key, const MatrixLieAlgebra& D) {
    auto it = nils_.find(key);
    if (it == nils_.end()) it = nils_.emplace(key, nilradical(D.structure())).first;
    return it->second;
  }

  const Subspace& radical_of(const std::string& key, const MatrixLieAlgebra& D) {
    auto it = rads_.find(key);
    if (it == rads_.end()) it = rads_.emplace(key, radical(D.structure())).first;
    return it->second;
  }

  // family shorthands; `order` picks the basis the named generators use
  const Algebra& jordan_alg(std::size_t n, const Scalar& a, BasisOrder order) {
    return algebra(key("J", n, a, order), [&] { return heisenberg_jordan(a, n, order); });
  }
  const Algebra& kron_alg(std::size_t n, BasisOrder order) {
    return algebra(key("K", n, std::nullopt, order), [&] { return leib::kronecker(n, order); });
  }
  const Algebra& lie_alg(std::size_t n, BasisOrder order) {
    return algebra(key("H", n, std::nullopt, order), [&] { return heisenberg_lie(n, order); });
  }
  const Algebra& dieu_alg(std::size_t n) {
    return algebra(key("D", n, std::nullopt, BasisOrder::grouped), [&] { return leib::dieudonne(n); });
  }
  /// l^{J_R}_{4n+1} for the root a + b i, basis e_1, f_1, e_2, f_2, ..., z.
  const Algebra& real_alg(std::size_t n, const Rational& a, const Rational& b) {
    return algebra("R" + std::to_string(n) + ":" + a.to_string() + ":" + b.to_string(),
                   [&] { return heisenberg_leibniz(2 * n, real_block(a, b, n), BasisOrder::interleaved); });
  }

  static std::string key(const char* fam, std::size_t n, const std::optional<Scalar>& a, BasisOrder order) {
    return std::string(fam) + std::to_string(n) + ":" + (a ? a->to_string() : "-") + ":" + to_string(order);
  }

  const MatrixLieAlgebra& der_of(const Algebra& L) { return der(address(L), L); }
  const MatrixLieAlgebra& inn_of(const Algebra& L) { return inn(address(L), L); }
  const Subspace& nil_of(const Algebra& L) { return nilradical_of(address(L), der_of(L)); }
  const Subspace& rad_of(const Algebra& L) { return radical_of(address(L), der_of(L)); }

private:
  // algebras live in a node-based map, so their addresses are stable keys
  std::string address(const Algebra& L) const {
    for (const auto& [k, v] : algebras_)
      if (&v == &L) return k;
    throw std::logic_error("algebra not owned by the engine");
  }

  std::map<std::string, Algebra> algebras_;
  std::map<std::string, MatrixLieAlgebra> ders_;
  std::map<std::string, MatrixLieAlgebra> inns_;
  std::map<std::string, Subspace> nils_;
  std::map<std::string, Subspace> rads_;
};

struct RunConfig {
  std::size_t nmax = 4;
  std::vector<Scalar> a_set = default_a_set();
  std::uint64_t seed = 20240601;

  static std::vector<Scalar> default_a_set() {
    return {Scalar(2), Scalar(Rational(1, 2)), Scalar(-3), Scalar(1), Scalar(-1), Scalar(0)};
  }
};

struct Claim {
  std::string id;
  std::string family;
  std::string description;
  std::function<std::vector<Instance>(const RunConfig&)> domain;
  std::function<ClaimResult(const Instance&, Engine&, const RunConfig&)> check;
};

/// Per-instance seed from (claim id, params, master seed).
inline std::uint64_t derive_seed(const std::string& id, const nlohmann::json& params, std::uint64_t master) {
  return std::stoull(digest(id + params.dump() + std::to_string(master)), nullptr, 16);
}

namespace detail {

inline std::vector<Instance> ns(const RunConfig& cfg, int parity = -1) {
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= cfg.nmax; ++n)
    if (parity < 0 || static_cast<int>(n % 2) == parity) out.push_back({n, std::nullopt});
  return out;
}

inline bool has_zero(const RunConfig& cfg) {
  return std::any_of(cfg.a_set.begin(), cfg.a_set.end(), [](const Scalar& a) { return a.is_zero(); });
}

// a = 0 instances exist only when 0 is among the requested parameters
inline std::vector<Instance> at_zero(const RunConfig& cfg, int parity = -1) {
  return has_zero(cfg) ? ns(cfg, parity) : std::vector<Instance>{};
}

inline std::vector<Instance> ns_a(const RunConfig& cfg, const std::function<bool(const Scalar&)>& keep) {
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= cfg.nmax; ++n)
    for (const auto& a : cfg.a_set)
      if (keep(a)) out.push_back({n, a});
  return out;
}

inline bool nonzero(const Scalar& a) { return !a.is_zero(); }
inline bool generic(const Scalar& a) { return !a.is_zero() && a != Scalar(1) && a != Scalar(-1); }
inline bool exceptional(const Scalar& a) { return a == Scalar(1) || a == Scalar(-1); }
inline bool any_a(const Scalar&) { return true; }

/// Each named matrix is a derivation; then the names form a basis of Der.
/// Returns the named presentation when everything holds.
inline std::optional<MatrixLieAlgebra> check_named_basis(Checks& ck, const named::Basis& b, const Algebra& L,
                                                         const MatrixLieAlgebra& D, const std::string& tag = "") {
  std::string bad;
  for (std::size_t k = 0; k < b.mats.size(); ++k)
    if (!is_derivation(b.mats[k], L)) bad += (bad.empty() ? "" : ",") + b.names[k];
  ck.record(tag + "named_are_derivations", "all", bad.empty() ? "all" : "not: " + bad, bad.empty());
  const Subspace s = flat_span(b.mats, L.dim(), L.field());
  const bool independent = s.dim() == b.mats.size();
  ck.record(tag + "named_independent", str(b.mats.size()), str(s.dim()), independent);
  const bool spans = ck.same_space(tag + "named_span_equals_Der", D.span(), s);
  if (!bad.empty() || !independent || !spans) return std::nullopt;
  return MatrixLieAlgebra::from_named(b.names, b.mats, L.dim(), L.field());
}

/// Expected nonzero brackets among named generators (all others must vanish).
using BracketTable = std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, Scalar>>>;

inline void add_bracket(BracketTable& t, const std::string& p, const std::string& q,
                        std::vector<std::pair<std::string, Scalar>> rhs) {
  auto& slot = t[{p, q}];
  for (auto& r : rhs) slot.push_back(std::move(r));
}

/// Compares the induced table of M with `table` on the pairs it mentions,
/// or on every pair when `complete`.
inline bool check_brackets(Checks& ck, const std::string& what, const MatrixLieAlgebra& M, const BracketTable& table,
                           bool complete, bool typo_flagged = false) {
  const Algebra& g = M.structure();
  const std::size_t d = g.dim();
  auto expected_vec = [&](std::size_t p, std::size_t q) -> std::optional<Vec> {
    const std::string& P = M.names()[p];
    const std::string& Q = M.names()[q];
    Vec v(d);
    bool listed = false;
    if (auto it = table.find({P, Q}); it != table.end()) {
      listed = true;
      for (const auto& [name, s] : it->second) v[M.index_of(name)] += s;
    }
    if (auto it = table.find({Q, P}); it != table.end()) {
      listed = true;
      for (const auto& [name, s] : it->second) v[M.index_of(name)] -= s;
    }
    if (!listed && !complete) return std::nullopt;
    return v;
  };
  std::string mism;
  std::size_t count = 0;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q) {
      const auto want = expected_vec(p, q);
      if (!want) continue;
      if (*want != g.bracket_basis(p, q)) {
        ++count;
        if (count <= 6) {
          std::string got;
          const Vec b = g.bracket_basis(p, q);
          for (std::size_t k = 0; k < d; ++k)
            if (!b[k].is_zero()) got += (got.empty() ? "" : "+") + (b[k].is_one() ? "" : b[k].to_string() + "*") + M.names()[k];
          mism += (mism.empty() ? "" : ", ") + std::string("[") + M.names()[p] + "," + M.names()[q] + "]=" +
                  (got.empty() ? "0" : got);
        }
      }
    }
  if (count > 6) mism += ", ... (" + std::to_string(count) + " pairs)";
  return ck.record(what, "as listed", count == 0 ? "as listed" : mism, count == 0, typo_flagged);
}

inline std::vector<Mat> pick(const named::Basis& b, const std::vector<std::string>& names) {
  std::vector<Mat> out;
  for (const auto& n : names) out.push_back(b[n]);
  return out;
}

inline std::vector<std::string> seq(const std::string& p, std::size_t lo, std::size_t hi) {
  std::vector<std::string> out;
  for (std::size_t i = lo; i <= hi; ++i) out.push_back(named::idx(p, i));
  return out;
}

inline std::vector<std::string> cat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline std::vector<std::string> hs(const std::string& p, const std::vector<std::size_t>& r) {
  std::vector<std::string> out;
  for (auto h : r) out.push_back(named::idx(p, h));
  return out;
}

inline Subspace named_span(const named::Basis& b, const std::vector<std::string>& names, std::size_t N) {
  return flat_span(pick(b, names), N);
}

inline Subspace derived_ideal(const MatrixLieAlgebra& D) {
  const Algebra& g = D.structure();
  return matrix_span(D, product_space(g, g.whole(), g.whole()));
}

inline bool is_abelian(const MatrixLieAlgebra& D, const Subspace& flat) {
  std::vector<Mat> ms;
  for (const auto& v : flat.basis()) ms.push_back(Mat::unflatten(v, D.ambient_dim(), D.ambient_dim(), D.field()));
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!commutator(ms[i], ms[j]).is_zero()) return false;
  return true;
}

inline Mat ad_left(const Algebra& L, std::size_t i) { return adjoint_basis(L, i, Side::left); }

/// Combination of named matrices.
inline Mat combo(const named::Basis& b, const std::vector<std::pair<std::string, Scalar>>& terms, std::size_t N) {
  Mat m(N, N);
  for (const auto& [name, s] : terms)
    if (b.has(name)) m = m + s * b[name];
  return m;
}

inline std::size_t e_pos(std::size_t n, std::size_t i, BasisOrder o) { return leib::detail::e_index(n, i - 1, o); }
inline std::size_t f_pos(std::size_t n, std::size_t i, BasisOrder o) { return leib::detail::f_index(n, i - 1, o); }

/// Generators of the Der algebra of l^{J_a} in `order`.
inline named::Basis jordan_named(std::size_t n, BasisOrder order) {
  return order == BasisOrder::grouped ? named::heisenberg_grouped(n) : named::interleaved_common(n);
}

} // namespace detail

// ---- registry -----------------------------------------------------------------

inline std::vector<Claim> registry() {
  using namespace detail;
  using BO = BasisOrder;
  std::vector<Claim> r;
  const BO G = BO::grouped;
  const BO I = BO::interleaved;

  r.push_back({"H1", "heisenberg", "dim Der(l^{J_a}) = 3n+1 for a != 0",
               [](const RunConfig& c) { return ns_a(c, nonzero); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const auto& D = e.der_of(e.jordan_alg(in.n, *in.a, G));
                 ck.eq("dim_Der", 3 * in.n + 1, D.dim());
                 return ck.finish("H1", in.params("heisenberg"));
               }});

  r.push_back({"H2", "heisenberg", "named basis x, y, E_i, A_i, B_i spans Der(l^{J_a}), a != 0, with its bracket table",
               [](const RunConfig& c) { return ns_a(c, nonzero); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.jordan_alg(n, *in.a, G);
                 const auto M = check_named_basis(ck, named::heisenberg_grouped(n), L, e.der_of(L));
                 if (M) {
                   BracketTable t;
                   for (std::size_t i = 1; i <= n; ++i) {
                     add_bracket(t, "x", named::idx("B", i), {{named::idx("B", i), Scalar(1)}});
                     add_bracket(t, "y", named::idx("A", i), {{named::idx("A", i), Scalar(1)}});
                   }
                   for (std::size_t i = 1; i < n; ++i)
                     for (std::size_t k = 1; k <= n; ++k) {
                       if (i < k) add_bracket(t, named::idx("E", i), named::idx("B", k), {{named::idx("B", k - i), Scalar(1)}});
                       if (k <= n - i)
                         add_bracket(t, named::idx("E", i), named::idx("A", k), {{named::idx("A", i + k), Scalar(-1)}});
                     }
                   check_brackets(ck, "bracket_table", *M, t, true);
                 }
                 // same generators after reordering the basis
                 const auto& Li = e.jordan_alg(n, *in.a, I);
                 check_named_basis(ck, named::interleaved_common(n), Li, e.der_of(Li), "interleaved_");
                 return ck.finish("H2", in.params("heisenberg"));
               }});

  r.push_back({"H3", "heisenberg", "commutator ideal of Der(l^{J_a}) is <A, B>, abelian of dim 2n",
               [](const RunConfig& c) { return ns_a(c, nonzero); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& D = e.der_of(e.jordan_alg(n, *in.a, G));
                 const Subspace comm = derived_ideal(D);
                 const auto b = named::heisenberg_grouped(n);
                 ck.eq("dim_commutator", 2 * n, comm.dim());
                 ck.same_space("commutator_equals_AB", named_span(b, cat({seq("A", 1, n), seq("B", 1, n)}), 2 * n + 1), comm);
                 ck.eq("abelian", true, is_abelian(D, comm));
                 ck.eq("solvable_class", std::size_t{2}, is_solvable(D.structure()).step_class);
                 return ck.finish("H3", in.params("heisenberg"));
               }});

  r.push_back({"H4", "heisenberg", "Der(l^{J_a}) not nilpotent; nilradical <E, A, B> of dim 3n-1",
               [](const RunConfig& c) { return ns_a(c, nonzero); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.jordan_alg(n, *in.a, G);
                 const auto& D = e.der_of(L);
                 ck.eq("nilpotent", false, is_nilpotent(D.structure()).holds);
                 const Subspace nil = matrix_span(D, e.nil_of(L));
                 ck.eq("dim_nilradical", 3 * n - 1, nil.dim());
                 const auto b = named::heisenberg_grouped(n);
                 ck.same_space("nilradical_equals_EAB",
                               named_span(b, cat({seq("E", 1, n - 1), seq("A", 1, n), seq("B", 1, n)}), 2 * n + 1), nil);
                 return ck.finish("H4", in.params("heisenberg"));
               }});

  r.push_back({"H5", "heisenberg", "Z(Der(l^{J_a})) = 0", [](const RunConfig& c) { return ns_a(c, nonzero); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const auto& D = e.der_of(e.jordan_alg(in.n, *in.a, G));
                 ck.eq("dim_center", std::size_t{0}, centers(D.structure()).center.dim());
                 return ck.finish("H5", in.params("heisenberg"));
               }});

  r.push_back({"H6", "heisenberg", "Inn(l^{J_a}) = <A_h..A_n, B_1..B_k>: dim 2n, or 2n-1 when a = +-1; ad formulas",
               [](const RunConfig& c) { return ns_a(c, nonzero); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const Scalar a = *in.a;
                 const auto& L = e.jordan_alg(n, a, G);
                 const auto& Inn = e.inn_of(L);
                 const std::size_t h = a == Scalar(1) ? 2 : 1;
                 const std::size_t k = a == Scalar(-1) ? n - 1 : n;
                 ck.eq("dim_Inn", exceptional(a) ? 2 * n - 1 : 2 * n, Inn.dim());
                 const auto b = named::heisenberg_grouped(n);
                 ck.same_space("Inn_equals_pattern", named_span(b, cat({seq("A", h, n), seq("B", 1, k)}), 2 * n + 1),
                               Inn.span());
                 // ad_{e_i} = B_{i-1} + (1+a) B_i ; ad_{f_j} = A_{j+1} + (a-1) A_j
                 bool ok = true;
                 for (std::size_t i = 1; i <= n; ++i) {
                   const Mat want_e = combo(b, {{named::idx("B", i - 1), Scalar(1)}, {named::idx("B", i), Scalar(1) + a}}, 2 * n + 1);
                   const Mat want_f = combo(b, {{named::idx("A", i + 1), Scalar(1)}, {named::idx("A", i), a - Scalar(1)}}, 2 * n + 1);
                   ok = ok && ad_left(L, e_pos(n, i, G)) == want_e && ad_left(L, f_pos(n, i, G)) == want_f;
                 }
                 ck.eq("ad_formulas", true, ok);
                 return ck.finish("H6", in.params("heisenberg"));
               }});

  r.push_back({"H7", "heisenberg", "AIDer(l^{J_a}) = <A, B> of dim 2n for every a",
               [](const RunConfig& c) { return ns_a(c, any_a); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.jordan_alg(n, *in.a, G);
                 const auto AI = aider_genus1(L);
                 const auto b = named::heisenberg_grouped(n);
                 ck.eq("dim_AIDer", 2 * n, AI.dim());
                 ck.same_space("AIDer_equals_AB", named_span(b, cat({seq("A", 1, n), seq("B", 1, n)}), 2 * n + 1), AI.span());
                 const auto two = aider_genus1(L, AiderRule::two_sided);
                 ck.note("two-sided rule d(x) in [L,x]+[x,L] gives dim " + std::to_string(two.dim()));
                 return ck.finish("H7", in.params("heisenberg"));
               }});

  r.push_back({"H8", "heisenberg", "Der(h_{2n+1}) contains Der(l^{J_0}) contains Der(l^{J_a})",
               [](const RunConfig& c) { return ns_a(c, nonzero); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& Dh = e.der_of(e.lie_alg(n, I));
                 const auto& D0 = e.der_of(e.jordan_alg(n, Scalar(0), I));
                 const auto& Da = e.der_of(e.jordan_alg(n, *in.a, I));
                 ck.eq("Der_h_contains_Der_J0", true, Dh.span().contains(D0.span()));
                 ck.eq("Der_J0_contains_Der_Ja", true, D0.span().contains(Da.span()));
                 return ck.finish("H8", in.params("heisenberg"));
               }});

  auto z_basis = [=](const std::string& id, int parity, std::size_t extra) {
    return Claim{id, "heisenberg",
                 std::string("dim Der(l^{J_0}) = 4n+") + std::to_string(extra) + " for n " + (parity ? "odd" : "even") +
                     ", spanned by x, y, E_i, c_h, b_h, A_i, B_i",
                 [=](const RunConfig& c) { return at_zero(c, parity); },
                 [=](const Instance& in, Engine& e, const RunConfig&) {
                   Checks ck;
                   const auto& L = e.jordan_alg(in.n, Scalar(0), I);
                   const auto& D = e.der_of(L);
                   ck.eq("dim_Der", 4 * in.n + extra, D.dim());
                   check_named_basis(ck, named::heisenberg_j0(in.n), L, D);
                   Instance p = in;
                   p.a = Scalar(0);
                   return ck.finish(id, p.params("heisenberg"));
                 }};
  };
  r.push_back(z_basis("Z1", 0, 1));
  r.push_back(z_basis("Z2", 1, 2));

  r.push_back({"Z3", "heisenberg", "Der(l^{J_0}), n even, is solvable of class n/2+1", [](const RunConfig& c) { return at_zero(c, 0); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.jordan_alg(n, Scalar(0), I);
                 const auto& D = e.der_of(L);
                 const auto ds = series(D.structure(), SeriesKind::derived);
                 const auto v = series_verdict(ds);
                 ck.eq("solvable", true, v.holds);
                 ck.eq("solvable_class", n / 2 + 1, v.step_class);
                 ck.note("derived series dims " + str(series_dims(ds)));
                 const auto b = named::heisenberg_j0(n);
                 ck.eq("not_nilpotent", false, is_nilpotent(D.structure()).holds);
                 ck.same_space("nilradical_per_list",
                               named_span(b, cat({seq("E", 1, n - 1), hs("c", named::j0_c_range(n)), hs("b", named::j0_b_range(n)),
                                                  seq("A", 1, n), seq("B", 1, n)}),
                                          2 * n + 1),
                               matrix_span(D, e.nil_of(L)));
                 Instance p = in;
                 p.a = Scalar(0);
                 return ck.finish("Z3", p.params("heisenberg"));
               }});

  r.push_back({"Z4", "heisenberg", "Der(l^{J_0}), n odd: not solvable; Levi <x-y, c_{n+1}, b_{n+1}>; radical and nilradical per lists",
               [](const RunConfig& c) { return at_zero(c, 1); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.jordan_alg(n, Scalar(0), I);
                 const auto& D = e.der_of(L);
                 ck.eq("solvable", false, is_solvable(D.structure()).holds);
                 const auto b = named::heisenberg_j0(n);
                 const std::size_t N = 2 * n + 1;
                 const std::string cn = named::idx("c", n + 1), bn = named::idx("b", n + 1);
                 const Subspace S = coordinate_span(D, {b["x"] - b["y"], b[cn], b[bn]});
                 const auto lv = verify_levi(D.structure(), S);
                 ck.eq("levi", std::string("verified"), to_string(lv.status));
                 std::vector<std::string> c_rest, b_rest;
                 for (auto h : named::j0_c_range(n))
                   if (h != n + 1) c_rest.push_back(named::idx("c", h));
                 for (auto h : named::j0_b_range(n))
                   if (h != n + 1) b_rest.push_back(named::idx("b", h));
                 const auto nil_names = cat({seq("E", 1, n - 1), c_rest, b_rest, seq("A", 1, n), seq("B", 1, n)});
                 std::vector<Mat> rad_m = pick(b, nil_names);
                 rad_m.push_back(b["x"] + b["y"]);
                 ck.same_space("radical_per_list", flat_span(rad_m, N), matrix_span(D, e.rad_of(L)));
                 ck.same_space("nilradical_per_list", named_span(b, nil_names, N), matrix_span(D, e.nil_of(L)));
                 // [c_{n+1}, b_{n+1}] = x - y, and the odd-n sign of [B_i, b_k]
                 ck.eq("c_b_bracket_is_x_minus_y", true, commutator(b[cn], b[bn]) == b["x"] - b["y"]);
                 bool sign_ok = true;
                 for (std::size_t i = 1; i <= n; ++i)
                   for (auto k : named::j0_b_range(n))
                     if (k > i && k - i <= n) {
                       const Scalar s = i % 2 ? Scalar(1) : Scalar(-1); // (-1)^{i+1}
                       sign_ok = sign_ok && commutator(b[named::idx("B", i)], b[named::idx("b", k)]) ==
                                                s * b[named::idx("A", k - i)];
                     }
                 ck.eq("B_b_sign_odd_n", true, sign_ok, true);
                 Instance p = in;
                 p.a = Scalar(0);
                 return ck.finish("Z4", p.params("heisenberg"));
               }});

  r.push_back({"Z5", "heisenberg", "Inn(l^{J_0}) is abelian of dim 2n", [](const RunConfig& c) { return at_zero(c); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.jordan_alg(n, Scalar(0), I);
                 const auto& Inn = e.inn_of(L);
                 ck.eq("dim_Inn", 2 * n, Inn.dim());
                 ck.eq("abelian", true, is_abelian(e.der_of(L), Inn.span()));
                 const auto b = named::interleaved_common(n);
                 ck.same_space("Inn_equals_AB", named_span(b, cat({seq("A", 1, n), seq("B", 1, n)}), 2 * n + 1), Inn.span());
                 ck.eq("center_Der", std::size_t{0}, centers(e.der_of(L).structure()).center.dim());
                 Instance p = in;
                 p.a = Scalar(0);
                 return ck.finish("Z5", p.params("heisenberg"));
               }});

  r.push_back({"R1", "real", "Der(l_5^R), a != 0: dim 7, basis x, y, E, A_1, A_2, B_1, B_2; Inn = nilradical = <A, B>",
               [](const RunConfig& c) {
                 std::vector<Instance> out;
                 for (const auto& a : c.a_set)
                   if (!a.is_zero() && a.is_real()) out.push_back({1, a});
                 return out;
               },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const auto& L = e.real_alg(1, in.a->re(), Rational(1));
                 const auto& D = e.der_of(L);
                 ck.eq("dim_Der", std::size_t{7}, D.dim());
                 const auto b = named::real5(false);
                 check_named_basis(ck, b, L, D);
                 const Subspace AB = named_span(b, {"A1", "A2", "B1", "B2"}, 5);
                 ck.same_space("Inn_equals_AB", AB, e.inn_of(L).span());
                 ck.same_space("nilradical_equals_AB", AB, matrix_span(D, e.nil_of(L)));
                 ck.same_space("commutator_equals_AB", AB, derived_ideal(D));
                 ck.eq("center_Der", std::size_t{0}, centers(D.structure()).center.dim());
                 auto p = in.params("real");
                 p["b"] = "1";
                 return ck.finish("R1", p);
               }});

  r.push_back({"R2", "real", "Der(l_5^R), a = 0: dim 9; radical <x+y, E, A, B>; Levi <x-y, F, G>; nilradical = Inn = R^4",
               [](const RunConfig& c) { return std::vector<Instance>(has_zero(c) ? 1 : 0, Instance{1, Scalar(0)}); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const auto& L = e.real_alg(1, Rational(0), Rational(1));
                 const auto& D = e.der_of(L);
                 ck.eq("dim_Der", std::size_t{9}, D.dim());
                 const auto b = named::real5(true);
                 check_named_basis(ck, b, L, D);
                 std::vector<Mat> rad = pick(b, {"E", "A1", "A2", "B1", "B2"});
                 rad.push_back(b["x"] + b["y"]);
                 ck.same_space("radical_per_list", flat_span(rad, 5), matrix_span(D, e.rad_of(L)));
                 const Subspace S = coordinate_span(D, {b["x"] - b["y"], b["F"], b["G"]});
                 ck.eq("levi", std::string("verified"), to_string(verify_levi(D.structure(), S).status));
                 const Subspace AB = named_span(b, {"A1", "A2", "B1", "B2"}, 5);
                 const Subspace nil = matrix_span(D, e.nil_of(L));
                 ck.same_space("nilradical_equals_AB", AB, nil);
                 ck.eq("nilradical_abelian", true, is_abelian(D, nil));
                 ck.same_space("Inn_equals_nilradical", nil, e.inn_of(L).span());
                 ck.eq("solvable", false, is_solvable(D.structure()).holds);
                 ck.eq("center_Der", std::size_t{0}, centers(D.structure()).center.dim());
                 auto p = in.params("real");
                 p["b"] = "1";
                 return ck.finish("R2", p);
               }});

  r.push_back({"R3", "real", "realified complex derivation of l_3^{J_z} lies in Der(l_5^R) iff alpha = beta is real",
               [](const RunConfig& c) {
                 std::vector<Instance> out{{1, Scalar(0)}};
                 for (const auto& a : c.a_set)
                   if (!a.is_zero() && a.is_real()) out.push_back({1, a});
                 return out;
               },
               [=](const Instance& in, Engine& e, const RunConfig& cfg) {
                 Checks ck;
                 const Rational re = in.a->re();
                 const Scalar z(re, Rational(1));
                 const auto& Lc = e.jordan_alg(1, z, G);
                 const auto& Lr = e.real_alg(1, re, Rational(1));
                 // complex Der(l_3^{J_z}) is spanned by x, y, A_1, B_1 (n = 1)
                 named::Basis bc = named::heisenberg_grouped(1);
                 std::vector<Mat> cm;
                 for (const auto& m : bc.mats) {
                   Mat q(3, 3, Field::Qi);
                   for (std::size_t i = 0; i < 3; ++i)
                     for (std::size_t j = 0; j < 3; ++j) q(i, j) = m(i, j);
                   cm.push_back(q);
                 }
                 ck.same_space("complex_Der_is_x_y_A_B", e.der_of(Lc).span(), flat_span(cm, 3, Field::Qi));
                 auto p = in.params("real");
                 p["b"] = "1";
                 SmallRationalSampler rng(derive_seed("R3", p, cfg.seed));
                 std::size_t agree = 0, yes = 0, no = 0, family_ok = 0;
                 const std::size_t trials = 50;
                 for (std::size_t t = 0; t < trials; ++t) {
                   Scalar alpha, beta;
                   if (t % 2 == 0) {
                     alpha = beta = Scalar(rng.next());
                   } else {
                     alpha = Scalar(rng.next(), rng.next());
                     beta = t % 4 == 1 ? alpha : Scalar(rng.next(), rng.next());
                   }
                   const Scalar mu(rng.next(), rng.next()), nu(rng.next(), rng.next());
                   const Mat dc = alpha * cm[0] + beta * cm[1] + mu * cm[2] + nu * cm[3];
                   // displayed realification in the basis e_1, f_1, e_2, f_2, z
                   Mat R(5, 5);
                   R(0, 0) = R(1, 1) = alpha.re();
                   R(0, 1) = alpha.im();
                   R(1, 0) = -alpha.im();
                   R(2, 2) = R(3, 3) = beta.re();
                   R(2, 3) = beta.im();
                   R(3, 2) = -beta.im();
                   R(4, 0) = mu.re();
                   R(4, 1) = mu.im();
                   R(4, 2) = nu.re();
                   R(4, 3) = nu.im();
                   const Scalar gamma = dc(2, 2);
                   bool in_der = false;
                   if (gamma.is_real()) {
                     R(4, 4) = gamma;
                     in_der = is_derivation(R, Lr);
                   }
                   const bool predicate = alpha == beta && alpha.is_real();
                   agree += in_der == predicate;
                   (predicate ? yes : no) += 1;
                   if (predicate) {
                     Mat fam(5, 5);
                     for (std::size_t k = 0; k < 4; ++k) fam(k, k) = alpha;
                     fam(4, 4) = Scalar(2) * alpha;
                     for (std::size_t k = 0; k < 4; ++k) fam(4, k) = R(4, k);
                     family_ok += fam == R;
                   }
                 }
                 ck.eq("iff_holds_on_all_samples", trials, agree);
                 ck.eq("both_directions_sampled", true, yes > 0 && no > 0);
                 ck.eq("iff_family_matches_closing_matrix", yes, family_ok);
                 ck.note(std::to_string(yes) + " samples with alpha = beta real, " + std::to_string(no) + " without");
                 return ck.finish("R3", p);
               }});

  auto k_basis = [=](const std::string& id, int parity, std::size_t extra) {
    return Claim{id, "kronecker",
                 std::string("dim Der(k_n) = 4n") + (extra ? "+1" : "") + " for n " + (parity ? "odd" : "even") +
                     ", spanned by x, y, E_i, c_h, b_h, A_i, B_i",
                 [=](const RunConfig& c) { return ns(c, parity); },
                 [=](const Instance& in, Engine& e, const RunConfig&) {
                   Checks ck;
                   const auto& L = e.kron_alg(in.n, I);
                   const auto& D = e.der_of(L);
                   ck.eq("dim_Der", 4 * in.n + extra, D.dim());
                   check_named_basis(ck, named::kronecker(in.n), L, D);
                   return ck.finish(id, in.params("kronecker"));
                 }};
  };
  r.push_back(k_basis("K1", 1, 0));
  r.push_back(k_basis("K2", 0, 1));

  r.push_back({"K3", "kronecker", "Der(k_n), n even: Levi complement <x-y, c_{n+1}, b_{n+1}>, semisimple of dim 3",
               [](const RunConfig& c) { return ns(c, 0); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.kron_alg(n, I);
                 const auto& D = e.der_of(L);
                 const auto b = named::kronecker(n);
                 const std::size_t N = 2 * n + 1;
                 const std::string cn = named::idx("c", n + 1), bn = named::idx("b", n + 1);
                 const Subspace S = coordinate_span(D, {b["x"] - b["y"], b[cn], b[bn]});
                 ck.eq("dim_S", std::size_t{3}, S.dim());
                 ck.eq("levi", std::string("verified"), to_string(verify_levi(D.structure(), S).status));
                 ck.eq("S_semisimple", true, is_semisimple(restrict_to(D.structure(), S)));
                 ck.eq("solvable", false, is_solvable(D.structure()).holds);
                 std::vector<std::string> c_rest, b_rest;
                 for (auto h : named::kron_c_range(n))
                   if (h != n + 1) c_rest.push_back(named::idx("c", h));
                 for (auto h : named::kron_b_range(n))
                   if (h != n + 1) b_rest.push_back(named::idx("b", h));
                 const auto nil_names = cat({seq("E", 1, n - 1), c_rest, b_rest, seq("A", 1, n), seq("B", 1, n)});
                 std::vector<Mat> rad_m = pick(b, nil_names);
                 rad_m.push_back(b["x"] + b["y"]);
                 ck.same_space("radical_per_list", flat_span(rad_m, N), matrix_span(D, e.rad_of(L)));
                 ck.same_space("nilradical_per_list", named_span(b, nil_names, N), matrix_span(D, e.nil_of(L)));
                 return ck.finish("K3", in.params("kronecker"));
               }});

  r.push_back({"K4", "kronecker", "Der(k_n), n odd: solvable of class (n+1)/2+1; nilradical per list",
               [](const RunConfig& c) { return ns(c, 1); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.kron_alg(n, I);
                 const auto& D = e.der_of(L);
                 const auto ds = series(D.structure(), SeriesKind::derived);
                 const auto v = series_verdict(ds);
                 ck.eq("solvable", true, v.holds);
                 ck.eq("solvable_class", (n + 1) / 2 + 1, v.step_class);
                 ck.note("derived series dims " + str(series_dims(ds)));
                 const auto b = named::kronecker(n);
                 ck.same_space("nilradical_per_list",
                               named_span(b, cat({seq("E", 1, n - 1), hs("c", named::kron_c_range(n)),
                                                  hs("b", named::kron_b_range(n)), seq("A", 1, n), seq("B", 1, n)}),
                                          2 * n + 1),
                               matrix_span(D, e.nil_of(L)));
                 return ck.finish("K4", in.params("kronecker"));
               }});

  r.push_back({"K5", "kronecker", "Inn(k_n) = <A, B>, abelian of dim 2n; ad_{e_i} = B_{i-1}+B_i, ad_{f_i} = A_i+A_{i+1}",
               [](const RunConfig& c) { return ns(c); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.kron_alg(n, I);
                 const auto& Inn = e.inn_of(L);
                 const auto b = named::kronecker(n);
                 ck.eq("dim_Inn", 2 * n, Inn.dim());
                 ck.same_space("Inn_equals_AB", named_span(b, cat({seq("A", 1, n), seq("B", 1, n)}), 2 * n + 1), Inn.span());
                 ck.eq("abelian", true, is_abelian(e.der_of(L), Inn.span()));
                 bool e_ok = true, f_ok = true;
                 for (std::size_t i = 1; i <= n; ++i) {
                   e_ok = e_ok && ad_left(L, e_pos(n, i, I)) ==
                                      combo(b, {{named::idx("B", i - 1), Scalar(1)}, {named::idx("B", i), Scalar(1)}}, 2 * n + 1);
                   f_ok = f_ok && ad_left(L, f_pos(n, i, I)) ==
                                      combo(b, {{named::idx("A", i), Scalar(1)}, {named::idx("A", i + 1), Scalar(1)}}, 2 * n + 1);
                 }
                 ck.eq("ad_e_formula", true, e_ok);
                 ck.eq("ad_f_formula", true, f_ok);
                 if (!f_ok) {
                   bool minus = true;
                   for (std::size_t i = 1; i <= n; ++i)
                     minus = minus && ad_left(L, f_pos(n, i, I)) ==
                                          combo(b, {{named::idx("A", i), Scalar(1)}, {named::idx("A", i + 1), Scalar(-1)}}, 2 * n + 1);
                   if (minus) ck.note("computed ad_{f_i} = A_i - A_{i+1}");
                 }
                 return ck.finish("K5", in.params("kronecker"));
               }});

  r.push_back({"K6", "kronecker", "Der(l^{J_0}) intersected with Der(k_n) equals Der(l^{J_a})",
               [](const RunConfig& c) { return ns_a(c, nonzero); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& D0 = e.der_of(e.jordan_alg(n, Scalar(0), I));
                 const auto& Dk = e.der_of(e.kron_alg(n, I));
                 const auto& Da = e.der_of(e.jordan_alg(n, *in.a, I));
                 ck.same_space("intersection_equals_Der_Ja", Da.span(), subspace_intersect(D0.span(), Dk.span()));
                 return ck.finish("K6", in.params("kronecker"));
               }});

  r.push_back({"D1", "dieudonne", "dim Der(d_n) = 3n+3 with basis x, y, E_i, A_i and its bracket table",
               [](const RunConfig& c) { return ns(c); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.dieu_alg(n);
                 const auto& D = e.der_of(L);
                 ck.eq("dim_Der", 3 * n + 3, D.dim());
                 const auto b = named::dieudonne(n);
                 const auto M = check_named_basis(ck, b, L, D);
                 if (M) {
                   BracketTable xe, rest;
                   for (std::size_t i = 1; i <= n; ++i) {
                     add_bracket(xe, "x", named::idx("E", i), {{named::idx("E", i), Scalar(1)}});
                     add_bracket(xe, named::idx("E", i), "y", {{named::idx("E", i), Scalar(1)}});
                   }
                   for (std::size_t h = 1; h <= n + 1; ++h) add_bracket(rest, "y", named::idx("A", h), {{named::idx("A", h), Scalar(1)}});
                   for (std::size_t k = n + 2; k <= 2 * n + 1; ++k)
                     add_bracket(rest, "x", named::idx("A", k), {{named::idx("A", k), Scalar(1)}});
                   // [A_i, E_k] = eps_j A_j, j read off row i of E_k
                   for (std::size_t i = 1; i <= n + 1; ++i)
                     for (std::size_t k = 1; k <= n; ++k) {
                       const Mat& Ek = b[named::idx("E", k)];
                       std::vector<std::pair<std::string, Scalar>> rhs;
                       for (std::size_t j = n + 2; j <= 2 * n + 1; ++j)
                         if (!Ek(i - 1, j - 1).is_zero()) rhs.push_back({named::idx("A", j), Ek(i - 1, j - 1)});
                       add_bracket(rest, named::idx("A", i), named::idx("E", k), rhs);
                     }
                   BracketTable all = rest;
                   for (auto& [k, v] : xe) all[k] = v;
                   // the x/E rows name a scalar on the right; E_i is the reading checked
                   check_brackets(ck, "x_E_y_brackets", *M, xe, false, true);
                   check_brackets(ck, "bracket_table", *M, all, true);
                 }
                 return ck.finish("D1", in.params("dieudonne"));
               }});

  r.push_back({"D2", "dieudonne", "Der(d_n) is 3-step solvable with derived series dims (3n+3, 3n+1, n, 0)",
               [](const RunConfig& c) { return ns(c); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& D = e.der_of(e.dieu_alg(n));
                 const auto ds = series(D.structure(), SeriesKind::derived);
                 ck.eq("derived_dims", std::vector<std::size_t>{3 * n + 3, 3 * n + 1, n, 0}, series_dims(ds));
                 ck.eq("solvable_class", std::size_t{3}, series_verdict(ds).step_class);
                 const auto b = named::dieudonne(n);
                 const std::size_t N = 2 * n + 2;
                 if (ds.size() >= 3) {
                   ck.same_space("second_term", named_span(b, cat({seq("E", 1, n), seq("A", 1, 2 * n + 1)}), N),
                                 matrix_span(D, ds[1]));
                   ck.same_space("third_term", named_span(b, seq("A", n + 2, 2 * n + 1), N), matrix_span(D, ds[2]));
                 }
                 return ck.finish("D2", in.params("dieudonne"));
               }});

  r.push_back({"D3", "dieudonne", "nilradical of Der(d_n) equals its commutator ideal, two-step nilpotent",
               [](const RunConfig& c) { return ns(c); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const auto& L = e.dieu_alg(in.n);
                 const auto& D = e.der_of(L);
                 const Algebra& g = D.structure();
                 const Subspace comm = product_space(g, g.whole(), g.whole());
                 ck.same_space("nilradical_equals_commutator", matrix_span(D, comm), matrix_span(D, e.nil_of(L)));
                 ck.eq("commutator_nilpotent_class", std::size_t{2}, is_nilpotent(restrict_to(g, comm)).step_class);
                 ck.eq("center_Der", std::size_t{0}, centers(g).center.dim());
                 return ck.finish("D3", in.params("dieudonne"));
               }});

  r.push_back({"D4", "dieudonne", "Inn(d_n) has dim 2n with mu_{n+1} = -sum mu_k; the single mu_{n+1} matrix is not inner",
               [](const RunConfig& c) { return ns(c); },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const std::size_t N = 2 * n + 2;
                 const auto& L = e.dieu_alg(n);
                 const auto& Inn = e.inn_of(L);
                 const auto b = named::dieudonne(n);
                 ck.eq("dim_Inn", 2 * n, Inn.dim());
                 std::vector<Mat> gens;
                 for (std::size_t k = 1; k <= n; ++k) gens.push_back(b[named::idx("A", k)] - b[named::idx("A", n + 1)]);
                 for (std::size_t k = n + 2; k <= 2 * n + 1; ++k) gens.push_back(b[named::idx("A", k)]);
                 ck.same_space("Inn_equals_constrained_rows", flat_span(gens, N), Inn.span());
                 bool ad_ok = true;
                 auto A = [&](std::size_t i) { return b[named::idx("A", i)]; };
                 ad_ok = ad_ok && ad_left(L, 0) == A(n + 2);
                 for (std::size_t i = 2; i <= n; ++i) ad_ok = ad_ok && ad_left(L, i - 1) == A(n + i) + A(n + i + 1);
                 ad_ok = ad_ok && ad_left(L, n) == A(2 * n + 1);
                 for (std::size_t j = n + 2; j <= 2 * n + 1; ++j) ad_ok = ad_ok && ad_left(L, j - 1) == A(j - n) - A(j - n - 1);
                 ck.eq("ad_formulas", true, ad_ok);
                 ck.eq("A_{n+1}_inner", false, Inn.contains(A(n + 1)));
                 ck.eq("A_{n+1}_derivation", true, is_derivation(A(n + 1), L));
                 return ck.finish("D4", in.params("dieudonne"));
               }});

  r.push_back({"D5", "dieudonne", "cases n = 1, 2, 3: dimensions, bases and bracket tables",
               [](const RunConfig& c) {
                 std::vector<Instance> out;
                 for (std::size_t n = 1; n <= std::min<std::size_t>(3, c.nmax); ++n) out.push_back({n, std::nullopt});
                 return out;
               },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 const std::size_t n = in.n;
                 const auto& L = e.dieu_alg(n);
                 const auto& D = e.der_of(L);
                 named::Basis b;
                 BracketTable t;
                 auto one = [](const std::string& s) { return std::vector<std::pair<std::string, Scalar>>{{s, Scalar(1)}}; };
                 if (n == 1) {
                   ck.eq("dim_Der", std::size_t{6}, D.dim());
                   b.add("x", named::unit(4, 1, 1) + named::unit(4, 2, 2) + named::unit(4, 4, 4));
                   b.add("y", named::unit(4, 3, 3) + named::unit(4, 4, 4));
                   b.add("E", named::unit(4, 1, 3));
                   for (std::size_t i = 1; i <= 3; ++i) b.add(named::idx("A", i), named::unit(4, 4, i));
                   add_bracket(t, "x", "E", one("E"));
                   add_bracket(t, "E", "y", one("E"));
                   add_bracket(t, "x", "A3", one("A3"));
                   add_bracket(t, "y", "A1", one("A1"));
                   add_bracket(t, "y", "A2", one("A2"));
                   add_bracket(t, "A1", "E", one("A3"));
                 } else if (n == 2) {
                   ck.eq("dim_Der", std::size_t{9}, D.dim());
                   const Algebra& g = D.structure();
                   ck.eq("dim_commutator", std::size_t{7}, product_space(g, g.whole(), g.whole()).dim());
                   // displayed general form: alpha, beta, alpha_1, alpha_2, mu_1..3, nu_1..2
                   Mat al(6, 6), be(6, 6), a1(6, 6), a2(6, 6);
                   for (std::size_t i = 1; i <= 3; ++i) named::put(al, i, i, 1);
                   named::put(al, 6, 6, 1);
                   for (std::size_t i = 4; i <= 6; ++i) named::put(be, i, i, 1);
                   named::put(a1, 1, 4, 1);
                   named::put(a2, 2, 5, -1), named::put(a2, 3, 4, 1);
                   std::vector<Mat> form{al, be, a1, a2};
                   for (std::size_t i = 1; i <= 5; ++i) form.push_back(named::unit(6, 6, i));
                   ck.same_space("general_form", D.span(), flat_span(form, 6));
                   return ck.finish("D5", in.params("dieudonne"));
                 } else {
                   // expected listing: dimension 9 with generators x, y, E_1..E_3, A_1..A_8
                   ck.eq("dim_Der", std::size_t{9}, D.dim(), true);
                   ck.eq("listed_generator_count", std::size_t{9}, std::size_t{13}, true);
                   const std::size_t N = 8;
                   b.add("x", named::unit(N, 1, 1) + named::unit(N, 2, 2) + named::unit(N, 3, 3) + named::unit(N, 4, 4) +
                                  named::unit(N, 8, 8));
                   b.add("y", named::unit(N, 5, 5) + named::unit(N, 6, 6) + named::unit(N, 7, 7) + named::unit(N, 8, 8));
                   b.add("E1", named::unit(N, 1, 5));
                   b.add("E2", named::unit(N, 1, 7) - named::unit(N, 2, 6) + named::unit(N, 3, 5));
                   b.add("E3", named::unit(N, 3, 7) - named::unit(N, 2, 8));
                   for (std::size_t i = 1; i <= 7; ++i) b.add(named::idx("A", i), named::unit(N, 8, i));
                   std::string bad;
                   for (std::size_t k = 0; k < b.mats.size(); ++k)
                     if (!is_derivation(b.mats[k], L)) bad += (bad.empty() ? "" : ",") + b.names[k];
                   ck.record("listed_generators_are_derivations", "all", bad.empty() ? "all" : "not: " + bad, bad.empty(),
                             true);
                   const auto general = named::dieudonne(3);
                   ck.record("general_formula_E3", "e_{3,7}-e_{4,6}",
                             general["E3"] == named::unit(N, 3, 7) - named::unit(N, 4, 6) ? "e_{3,7}-e_{4,6}" : "other", true);
                   ck.note("engine dimension " + std::to_string(D.dim()) + " = 3n+3");
                   return ck.finish("D5", in.params("dieudonne"));
                 }
                 const auto M = check_named_basis(ck, b, L, D);
                 if (M) check_brackets(ck, "bracket_table", *M, t, true);
                 return ck.finish("D5", in.params("dieudonne"));
               }});

  // genus-1 catalog instances outside the exceptional ones
  r.push_back({"P1", "genus-one", "AIDer = Inn for every genus-1 catalog member other than l^{J_{+-1}} and d_n",
               [](const RunConfig& c) {
                 std::vector<Instance> out;
                 for (std::size_t n = 1; n <= c.nmax; ++n) {
                   out.push_back({n, std::nullopt}); // heisenberg-lie and kronecker
                   for (const auto& a : c.a_set)
                     if (!exceptional(a)) out.push_back({n, a});
                 }
                 return out;
               },
               [=](const Instance& in, Engine& e, const RunConfig&) {
                 Checks ck;
                 std::vector<std::pair<std::string, const Algebra*>> algs;
                 if (in.a) {
                   algs.push_back({"heisenberg a=" + in.a->to_string(), &e.jordan_alg(in.n, *in.a, G)});
                 } else {
                   algs.push_back({"heisenberg-lie", &e.lie_alg(in.n, G)});
                   algs.push_back({"kronecker", &e.kron_alg(in.n, G)});
                   if (in.n <= 2) algs.push_back({"real z=i", &e.real_alg(in.n, Rational(0), Rational(1))});
                 }
                 for (const auto& [name, L] : algs) {
                   ck.eq("genus_" + name, std::size_t{1}, genus(*L));
                   ck.same_space("AIDer_equals_Inn_" + name, e.inn_of(*L).span(), aider_genus1(*L).span());
                 }
                 nlohmann::json p = in.a ? in.params("heisenberg") : in.params("heisenberg-lie,kronecker,real");
                 return ck.finish("P1", p);
               }});

  r.push_back({"P2", "genus-one", "AIDer strictly contains Inn with codimension 1 for l^{J_{+-1}} and d_n",
               [](const RunConfig& c) {
                 std::vector<Instance> out;
                 for (std::size_t n = 1; n <= c.nmax; ++n) {
                   for (const auto& a : c.a_set)
                     if (exceptional(a)) out.push_back({n, a});
                   out.push_back({n, std::nullopt}); // dieudonne
                 }
                 return out;
               },
               [=](const Instance& in, Engine& e, const RunConfig& cfg) {
                 Checks ck;
                 const Algebra& L = in.a ? e.jordan_alg(in.n, *in.a, I) : e.dieu_alg(in.n);
                 const auto& Inn = e.inn_of(L);
                 const auto AI = aider_genus1(L);
                 ck.eq("codim_Inn_in_AIDer", std::size_t{1}, AI.dim() - Inn.dim());
                 ck.eq("dim_AIDer", in.a ? 2 * in.n : 2 * in.n + 1, AI.dim());
                 // the candidate non-inner example: d(e_1) = z for a = 1, d(f_n) = z for a = -1, d(e_{n+1}) = z for d_n
                 const std::size_t N = L.dim();
                 std::size_t col = 0;
                 if (!in.a) col = in.n;
                 else if (*in.a == Scalar(1)) col = 0;
                 else col = 2 * in.n - 1;
                 const Mat ex = matrix_unit(N, N - 1, col);
                 ck.eq("example_is_derivation", true, is_derivation(ex, L));
                 ck.eq("example_inner", false, Inn.contains(ex));
                 auto p = in.a ? in.params("heisenberg") : in.params("dieudonne");
                 const auto witness = aider_membership_sample(ex, L, 64, derive_seed("P2", p, cfg.seed));
                 std::string w = "none";
                 if (witness) {
                   w = "(";
                   for (std::size_t k = 0; k < witness->size(); ++k) w += (k ? "," : "") + (*witness)[k].to_string();
                   w += ")";
                 }
                 ck.record("example_almost_inner", "no witness", witness ? "witness x=" + w : "no witness", !witness);
                 // d(x) in [L,x] forces d(x) = 0 wherever [L,x] = 0
                 std::string ker_w;
                 for (const auto& x : centers(L).right.basis())
                   if (!is_zero(ex.apply(x)) && ker_w.empty()) ker_w = vec_json(x).dump();
                 ck.record("example_vanishes_where_L_x_is_zero", "true", ker_w.empty() ? "true" : "false at x=" + ker_w,
                           ker_w.empty());
                 nlohmann::json ai_basis = nlohmann::json::array();
                 for (const auto& m : AI.basis()) ai_basis.push_back(mat_json(m));
                 ck.attach("AIDer_basis", std::move(ai_basis));
                 ck.attach("example", mat_json(ex));
                 const auto two = aider_genus1(L, AiderRule::two_sided);
                 ck.note("two-sided rule d(x) in [L,x]+[x,L] gives dim " + std::to_string(two.dim()));
                 return ck.finish("P2", p);
               }});

  return r;
}

/// Runs every claim (or those in `only`) over its domain clipped to nmax.
inline Report run_all(const RunConfig& cfg, const std::vector<std::string>& only = {}, bool timings = false) {
  if (cfg.nmax < 1) throw std::invalid_argument("nmax must be at least 1");
  Report rep;
  nlohmann::json input{{"nmax", cfg.nmax}, {"seed", cfg.seed}};
  input["a_set"] = nlohmann::json::array();
  for (const auto& a : cfg.a_set) input["a_set"].push_back(a.to_string());
  if (!only.empty()) input["claims"] = only;
  rep.input = digest(input.dump());
  rep.analyses.push_back({{"kind", "verify-paper"}, {"config", input}});
  Engine engine;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto dom = c.domain(cfg);
    if (dom.empty()) {
      ClaimResult s;
      s.id = c.id;
      s.params = {{"family", c.family}, {"nmax", cfg.nmax}};
      s.status = ClaimStatus::skipped;
      s.note = "no instance in the requested domain";
      rep.claims.push_back(std::move(s));
      continue;
    }
    for (const auto& in : dom) {
      const auto t0 = std::chrono::steady_clock::now();
      ClaimResult res = c.check(in, engine, cfg);
      if (timings) res.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rep.claims.push_back(std::move(res));
    }
  }
  if (timings) rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

struct Tally {
  std::size_t confirmed = 0, refuted = 0, discrepancy = 0, skipped = 0;
};

inline Tally tally(const Report& r) {
  Tally t;
  for (const auto& c : r.claims) {
    switch (c.status) {
    case ClaimStatus::confirmed: ++t.confirmed; break;
    case ClaimStatus::refuted: ++t.refuted; break;
    case ClaimStatus::discrepancy: ++t.discrepancy; break;
    case ClaimStatus::skipped: ++t.skipped; break;
    }
  }
  return t;
}

} // namespace leib

#endif
