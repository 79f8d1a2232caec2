// leibder: derivations and structure of finite-dimensional Leibniz algebras.

#include "leib/claims.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace leib;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input is either a DSL file or a catalog family with its parameters
struct Source {
  std::string file;
  std::string family;
  std::size_t n = 0;
  std::string a;
  std::string b;
  std::string order = "grouped";

  void attach(CLI::App* cmd, bool file_allowed) {
    if (file_allowed) cmd->add_option("file", file, "algebra document");
    cmd->add_option("--family", family, "heisenberg-lie | heisenberg | kronecker | dieudonne | realify-heisenberg");
    cmd->add_option("--n", n, "family size parameter")->check(CLI::PositiveNumber);
    cmd->add_option("--a", a, "parameter a (scalar)");
    cmd->add_option("--b", b, "parameter b (realify-heisenberg)");
    cmd->add_option("--order", order, "grouped | interleaved")->check(CLI::IsMember({"grouped", "interleaved"}));
  }

  void validate() const {
    if (file.empty() == family.empty()) throw usage_error("give either a file or --family");
    if (family.empty()) return;
    static const std::vector<std::string> known{"heisenberg-lie", "heisenberg", "kronecker", "dieudonne",
                                                "realify-heisenberg"};
    if (std::find(known.begin(), known.end(), family) == known.end()) throw usage_error("unknown family '" + family + "'");
    if (n == 0) throw usage_error("--family needs --n");
    const bool wants_a = family == "heisenberg" || family == "realify-heisenberg";
    if (wants_a && a.empty()) throw usage_error(family + " needs --a");
    if (!wants_a && !a.empty()) throw usage_error(family + " takes no --a");
    if ((family == "realify-heisenberg") != !b.empty())
      throw usage_error(family == "realify-heisenberg" ? "realify-heisenberg needs --b" : "--b is only for realify-heisenberg");
    if (family == "dieudonne" && order != "grouped") throw usage_error("dieudonne has a single basis order");
    try {
      if (!a.empty()) (void)Scalar::parse(a);
      if (!b.empty()) (void)Scalar::parse(b);
    } catch (const std::exception& e) {
      throw usage_error(std::string("bad scalar: ") + e.what());
    }
    if (family == "realify-heisenberg") {
      if (!Scalar::parse(a).is_real() || !Scalar::parse(b).is_real()) throw usage_error("realify-heisenberg needs real a, b");
      if (Scalar::parse(b).is_zero()) throw usage_error("realify-heisenberg needs b != 0");
    }
  }

  std::string name() const {
    if (!file.empty()) return file;
    std::string s = family + " n=" + std::to_string(n);
    if (!a.empty()) s += " a=" + a;
    if (!b.empty()) s += " b=" + b;
    return s;
  }

  AlgebraDoc doc() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot read " + file);
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_doc(ss.str());
    }
    const BasisOrder o = order == "grouped" ? BasisOrder::grouped : BasisOrder::interleaved;
    const std::string sz = std::to_string(n);
    if (family == "heisenberg-lie") return from_algebra(heisenberg_lie(n, o), "heisenberg_lie_" + sz);
    if (family == "heisenberg") return from_algebra(heisenberg_jordan(Scalar::parse(a), n, o), "heisenberg_jordan_" + sz);
    if (family == "kronecker") return from_algebra(kronecker(n, o), "kronecker_" + sz);
    if (family == "dieudonne") return from_algebra(dieudonne(n), "dieudonne_" + sz);
    const Mat block = real_block(Scalar::parse(a).re(), Scalar::parse(b).re(), n);
    return from_algebra(heisenberg_leibniz(2 * n, block, o), "realified_heisenberg_" + sz);
  }
};

std::string kind_text(const AlgebraKind& k) {
  if (k.lie) return "Lie";
  if (k.left_leibniz && k.right_leibniz) return "left and right Leibniz";
  if (k.left_leibniz) return "left Leibniz";
  if (k.right_leibniz) return "right Leibniz";
  return "not Leibniz";
}

json kind_json(const AlgebraKind& k) {
  return {{"left_leibniz", k.left_leibniz}, {"right_leibniz", k.right_leibniz}, {"symmetric", k.symmetric}, {"lie", k.lie}};
}

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

void print_basis(std::ostream& os, const MatrixLieAlgebra& M) {
  for (std::size_t k = 0; k < M.dim(); ++k) {
    os << "  " << M.names()[k] << " =\n";
    std::istringstream rows(M.basis()[k].to_string());
    for (std::string line; std::getline(rows, line);) os << "    " << line << '\n';
  }
}

json lie_json(const MatrixLieAlgebra& M) {
  json j{{"dim", M.dim()}, {"names", M.names()}};
  j["basis"] = json::array();
  for (const auto& m : M.basis()) j["basis"].push_back(mat_json(m));
  return j;
}

void print_table(std::ostream& os, const MatrixLieAlgebra& M) {
  const Algebra& g = M.structure();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vec v = g.bracket_basis(i, j);
      if (is_zero(v)) continue;
      os << "  [" << M.names()[i] << "," << M.names()[j] << "] =";
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        os << (first ? " " : " + ");
        if (!v[k].is_one()) os << v[k].to_string() << ' ';
        os << M.names()[k];
        first = false;
      }
      os << '\n';
    }
}

int cmd_check(const Source& src) {
  const Algebra L = to_algebra(src.doc());
  const AlgebraKind& k = classify(L);
  std::cout << "algebra " << src.name() << " dim " << L.dim() << " field " << to_string(L.field()) << '\n';
  std::cout << "kind: " << kind_text(k) << '\n';
  std::cout << "genus: " << genus(L) << '\n';
  return k.left_leibniz || k.right_leibniz ? exit_ok : exit_failed;
}

int cmd_derive(const Source& src, bool table, bool as_json) {
  const AlgebraDoc doc = src.doc();
  const Algebra L = to_algebra(doc);
  const MatrixLieAlgebra der = der_algebra(L);
  const bool left = classify(L).left_leibniz;
  std::optional<MatrixLieAlgebra> inn;
  if (left) inn = inner_derivations(L);
  std::optional<MatrixLieAlgebra> aider;
  const std::size_t g = genus(L);
  if (left && g == 1) aider = aider_genus1(L);

  if (as_json) {
    Report rep;
    rep.input = digest(serialize(doc));
    json a{{"kind", "derive"}, {"algebra", src.name()}, {"genus", g}, {"der", lie_json(der)}};
    a["inn"] = inn ? lie_json(*inn) : json(nullptr);
    a["aider"] = aider ? lie_json(*aider) : json(nullptr);
    if (table) {
      json t = json::object();
      const Algebra& s = der.structure();
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
          if (!is_zero(s.bracket_basis(i, j)))
            t["[" + der.names()[i] + "," + der.names()[j] + "]"] = vec_json(s.bracket_basis(i, j));
      a["brackets"] = t;
    }
    rep.analyses.push_back(a);
    std::cout << report_json(rep);
    return exit_ok;
  }
  std::cout << "dim Der = " << der.dim() << '\n';
  if (inn) std::cout << "dim Inn = " << inn->dim() << '\n';
  else std::cout << "Inn: not defined (algebra is not left Leibniz)\n";
  if (aider) std::cout << "dim AIDer = " << aider->dim() << '\n';
  else std::cout << "AIDer: exact computation needs genus 1 (genus " << g << ")\n";
  std::cout << "Der basis:\n";
  print_basis(std::cout, der);
  if (inn) {
    std::cout << "Inn basis:\n";
    print_basis(std::cout, *inn);
  }
  if (aider) {
    std::cout << "AIDer basis:\n";
    print_basis(std::cout, *aider);
  }
  if (table) {
    std::cout << "Der brackets:\n";
    print_table(std::cout, der);
  }
  return exit_ok;
}

Subspace parse_vectors(const std::string& text, std::size_t dim, Field field) {
  std::vector<Vec> vs;
  std::stringstream all(text);
  for (std::string item; std::getline(all, item, ';');) {
    Vec v;
    std::stringstream parts(item);
    for (std::string s; std::getline(parts, s, ',');) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      v.push_back(Scalar::parse(s));
    }
    if (v.size() != dim)
      throw usage_error("--levi vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
    vs.push_back(std::move(v));
  }
  return Subspace::span(dim, vs, field);
}

int cmd_analyze(const Source& src, bool of_der, const std::string& levi, bool as_json) {
  const AlgebraDoc doc = src.doc();
  const Algebra L = to_algebra(doc);
  std::optional<MatrixLieAlgebra> der;
  if (of_der) der = der_algebra(L);
  const Algebra& g = der ? der->structure() : L;
  std::optional<Subspace> S;
  if (!levi.empty()) S = parse_vectors(levi, g.dim(), g.field());

  const AlgebraKind& k = classify(g);
  json a{{"kind", "analyze"}, {"algebra", src.name()}, {"target", of_der ? "Der" : "algebra"}, {"dim", g.dim()}};
  a["classification"] = kind_json(k);
  if (der) a["names"] = der->names();
  const auto ds = series_dims(series(g, SeriesKind::derived));
  const auto ls = series_dims(series(g, SeriesKind::lower_central));
  a["derived_series"] = ds;
  a["lower_central_series"] = ls;
  const Centers c = centers(g);
  a["center"] = {{"left", c.left.dim()}, {"right", c.right.dim()}, {"two_sided", c.center.dim()}};
  a["leib_ideal"] = leib_ideal(g).dim();
  std::optional<StructureReport> rep;
  if (k.lie) {
    rep = analyze(g, S);
    a["solvable"] = rep->solvable.holds;
    a["nilpotent"] = rep->nilpotent.holds;
    a["killing_rank"] = rep->killing_rank;
    a["radical"] = subspace_json(rep->radical);
    a["nilradical"] = subspace_json(rep->nilradical);
    if (rep->levi) a["levi"] = to_string(rep->levi->status);
  } else if (S) {
    throw usage_error("--levi needs a Lie algebra (try --der)");
  }

  if (as_json) {
    Report r;
    r.input = digest(serialize(doc) + (of_der ? "|der" : "") + "|" + levi);
    r.analyses.push_back(a);
    std::cout << report_json(r);
    return exit_ok;
  }
  std::cout << (of_der ? "Der(" + src.name() + ")" : src.name()) << ": dim " << g.dim() << ", " << kind_text(k) << '\n';
  std::cout << "derived series dims: " << dims_text(ds) << '\n';
  std::cout << "lower central series dims: " << dims_text(ls) << '\n';
  std::cout << "center dims: left " << c.left.dim() << ", right " << c.right.dim() << ", two-sided " << c.center.dim() << '\n';
  if (!rep) {
    std::cout << "Leib ideal dim: " << leib_ideal(g).dim() << '\n';
    std::cout << "Killing form, radical and nilradical need a Lie algebra\n";
    return exit_ok;
  }
  std::cout << "solvable: " << (rep->solvable.holds ? "yes, class " + std::to_string(rep->solvable.step_class) : "no") << '\n';
  std::cout << "nilpotent: " << (rep->nilpotent.holds ? "yes, class " + std::to_string(rep->nilpotent.step_class) : "no")
            << '\n';
  std::cout << "Killing form rank: " << rep->killing_rank << '\n';
  std::cout << "radical dim: " << rep->radical.dim() << '\n';
  std::cout << "nilradical dim: " << rep->nilradical.dim() << '\n';
  if (rep->levi) std::cout << "Levi complement: " << to_string(rep->levi->status) << '\n';
  return rep->levi && !rep->levi->verified() ? exit_failed : exit_ok;
}

int cmd_catalog(const Source& src) {
  std::cout << serialize(src.doc());
  return exit_ok;
}

struct VerifyOptions {
  std::size_t nmax = 4;
  std::string a_list;
  std::uint64_t seed = RunConfig{}.seed;
  std::vector<std::string> claims;
  bool json = false;
  bool strict = false;
  bool timings = false;
};

int cmd_verify(const VerifyOptions& o) {
  RunConfig cfg;
  cfg.nmax = o.nmax;
  cfg.seed = o.seed;
  if (!o.a_list.empty()) {
    cfg.a_set.clear();
    std::stringstream ss(o.a_list);
    try {
      for (std::string s; std::getline(ss, s, ',');) cfg.a_set.push_back(Scalar::parse(s));
    } catch (const std::exception& e) {
      throw usage_error(std::string("bad --a list: ") + e.what());
    }
  }
  const auto reg = registry();
  for (const auto& id : o.claims)
    if (std::none_of(reg.begin(), reg.end(), [&](const Claim& c) { return c.id == id; }))
      throw usage_error("unknown claim '" + id + "'");

  const Report rep = run_all(cfg, o.claims, o.timings);
  const Tally t = tally(rep);
  if (o.json) {
    std::cout << report_json(rep);
  } else {
    for (const auto& c : rep.claims) {
      std::cout << c.id << ' ' << c.params.dump() << ": " << to_string(c.status);
      if (c.status != ClaimStatus::confirmed && c.status != ClaimStatus::skipped) {
        std::cout << "\n    expected: " << c.expected << "\n    actual:   " << c.actual;
      }
      if (!c.note.empty() && c.status != ClaimStatus::confirmed) std::cout << "\n    note: " << c.note;
      if (c.elapsed) std::cout << " (" << *c.elapsed << " s)";
      std::cout << '\n';
    }
    std::cout << "confirmed " << t.confirmed << ", refuted " << t.refuted << ", discrepancy " << t.discrepancy
              << ", skipped " << t.skipped << '\n';
  }
  if (t.refuted > 0) return exit_failed;
  if (o.strict && t.discrepancy > 0) return exit_failed;
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivations and structure of finite-dimensional Leibniz algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  Source check_src, derive_src, analyze_src, catalog_src;
  auto* check = app.add_subcommand("check", "parse an algebra and report its kind and genus");
  check->add_option("file", check_src.file, "algebra document")->required();

  auto* derive = app.add_subcommand("derive", "Der, Inn and AIDer of an algebra");
  derive_src.attach(derive, true);
  bool derive_table = false, derive_json = false;
  derive->add_flag("--table", derive_table, "print the induced bracket table of Der");
  derive->add_flag("--json", derive_json, "JSON report");

  auto* analyze = app.add_subcommand("analyze", "series, centers, radical, nilradical, Levi check");
  analyze_src.attach(analyze, true);
  bool of_der = false, analyze_json = false;
  std::string levi;
  analyze->add_flag("--der", of_der, "analyze Der(L) instead of L");
  analyze->add_option("--levi", levi, "claimed Levi complement, vectors separated by ';', entries by ','");
  analyze->add_flag("--json", analyze_json, "JSON report");

  auto* catalog = app.add_subcommand("catalog", "print a catalog algebra as a document");
  catalog_src.attach(catalog, false);
  catalog->get_option("--family")->required();

  auto* verify = app.add_subcommand("verify-paper", "run the claims registry");
  VerifyOptions vo;
  verify->add_option("--nmax", vo.nmax, "largest n")->check(CLI::PositiveNumber);
  verify->add_option("--a", vo.a_list, "comma-separated parameter values");
  verify->add_option("--seed", vo.seed, "master seed");
  verify->add_option("--claim", vo.claims, "restrict to these claim ids");
  verify->add_flag("--json", vo.json, "JSON report");
  verify->add_flag("--strict", vo.strict, "discrepancies also fail the run");
  verify->add_flag("--timings", vo.timings, "record elapsed times (output no longer reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*check) return cmd_check(check_src);
    if (*derive) {
      derive_src.validate();
      return cmd_derive(derive_src, derive_table, derive_json);
    }
    if (*analyze) {
      analyze_src.validate();
      return cmd_analyze(analyze_src, of_der, levi, analyze_json);
    }
    if (*catalog) {
      catalog_src.validate();
      return cmd_catalog(catalog_src);
    }
    if (*verify) return cmd_verify(vo);
  } catch (const usage_error& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return exit_failed;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return exit_failed;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_usage;
}
