#include "posetpoly/suites.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "posetpoly/errors.hpp"
#include "posetpoly/fcalc.hpp"
#include "posetpoly/subdirect.hpp"

namespace posetpoly {

using Json = nlohmann::ordered_json;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t k) {
  return splitmix64(splitmix64(seed) + k);
}

std::vector<CorpusItem> curated_posets() {
  std::vector<CorpusItem> out;
  for (int n = 1; n <= 6; ++n) out.push_back({"chain(" + std::to_string(n) + ")", Poset::chain(n)});
  for (int n = 1; n <= 5; ++n) {
    out.push_back({"antichain(" + std::to_string(n) + ")", Poset::antichain(n)});
  }
  for (int n = 3; n <= 8; ++n) out.push_back({"fence(" + std::to_string(n) + ")", fence(n)});
  out.push_back({"x_poset", x_poset()});
  out.push_back({"zigzag(2,2)", zigzag(2, 2)});
  out.push_back({"zigzag(3,2)", zigzag(3, 2)});
  out.push_back({"zigzag(4,2)", zigzag(4, 2)});
  out.push_back({"zigzag(2,3)", zigzag(2, 3)});
  out.push_back({"zigzag(2,4)", zigzag(2, 4)});
  out.push_back({"antichain(2)<antichain(2)",
                 ordinal_sum(Poset::antichain(2), Poset::antichain(2))});
  return out;
}

namespace {

constexpr double kEdgeProbs[] = {0.25, 0.4, 0.55, 0.7};

std::string fmt_prob(double p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

std::vector<CorpusItem> random_corpus(int size, std::uint64_t seed) {
  std::vector<CorpusItem> out;
  for (int k = 0; k < size; ++k) {
    const int n = 2 + k % 7;
    const double p = kEdgeProbs[(k / 7) % 4];
    const std::uint64_t s = item_seed(seed, static_cast<std::uint64_t>(k));
    out.push_back({"random(n=" + std::to_string(n) + ",p=" + fmt_prob(p) + ",seed=" + hex64(s) +
                       ")",
                   random_poset(n, s, p)});
  }
  return out;
}

std::vector<CorpusItem> corpus(int size, std::uint64_t seed) {
  std::vector<CorpusItem> out = curated_posets();
  for (auto& item : random_corpus(size, seed)) out.push_back(std::move(item));
  return out;
}

std::vector<PosetPair> pair_corpus(int count, std::uint64_t seed, int max_total) {
  std::vector<PosetPair> out;
  const std::uint64_t base = splitmix64(seed ^ 0x7061697273ULL);
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = item_seed(base, static_cast<std::uint64_t>(k));
    std::mt19937_64 rng(s);
    const int total = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_total - 1));
    const int na = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(total - 1));
    const double pa = kEdgeProbs[rng() % 4];
    const double pb = kEdgeProbs[rng() % 4];
    Poset a = random_poset(na, rng(), pa);
    Poset b = random_poset(total - na, rng(), pb);
    out.push_back({"pair(" + std::to_string(na) + "," + std::to_string(total - na) +
                       ",seed=" + hex64(s) + ")",
                   std::move(a), std::move(b)});
  }
  return out;
}

namespace {

ExprPtr literal_of(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [i, j] : p.covers()) covers.emplace_back(p.label(i), p.label(j));
  return Expr::literal(p.labels(), std::move(covers));
}

ExprPtr random_leaf(std::mt19937_64& rng, int size) {
  const auto pick = rng() % 8;
  if (pick == 0) return Expr::chain(size);
  if (pick == 1) return Expr::antichain(size);
  if (pick == 2 && size == 5) return literal_of(x_poset());
  for (int attempt = 0; attempt < 20; ++attempt) {
    Poset p = random_poset(size, rng(), kEdgeProbs[rng() % 4]);
    if (is_x_free(p)) return literal_of(p);
  }
  return literal_of(fence(size));
}

}  // namespace

ExprPtr random_family_expr(std::mt19937_64& rng, int size, int max_leaf) {
  const bool leaf = size <= max_leaf && (size <= 2 || rng() % 3 == 0);
  ExprPtr e;
  if (leaf) {
    e = random_leaf(rng, size);
  } else {
    const int a = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(size - 1));
    ExprPtr lhs = random_family_expr(rng, a, max_leaf);
    ExprPtr rhs = random_family_expr(rng, size - a, max_leaf);
    e = rng() % 2 ? Expr::ordinal(lhs, rhs) : Expr::disjoint(lhs, rhs);
  }
  if (rng() % 6 == 0) e = Expr::op(e);
  return e;
}

std::vector<FamilyItem> family_corpus(int count, std::uint64_t seed, int min_size,
                                      int max_size) {
  std::vector<FamilyItem> out;
  const std::uint64_t base = splitmix64(seed ^ 0x66616d696c79ULL);
  for (int k = 0; k < count; ++k) {
    std::mt19937_64 rng(item_seed(base, static_cast<std::uint64_t>(k)));
    const int size = min_size + k % (max_size - min_size + 1);
    Program prog;
    prog.body = random_family_expr(rng, size);
    auto tree = expression_tree(prog);
    if (!tree) throw Error("generated expression left the family");
    out.push_back({print(prog), evaluate(prog), std::move(*tree)});
  }
  return out;
}

const CheckResult* SuiteResult::first_failure() const {
  for (const auto& r : results) {
    if (!r.passed && !r.skipped) return &r;
  }
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "edges",      "hibi-li-facets",      "origin-estimate", "simplex-figure",
      "pyr-join",   "lemma-abcd",          "ordinal-identities", "main-theorem"};
  return names;
}

namespace {

struct Task {
  std::string name;
  Poset poset;
  std::function<CheckResult()> run;
};

CheckResult make_result(const std::string& name, const Poset& p, bool passed,
                        std::string detail = {}) {
  return {name, poset_to_json(p), poset_hash(p), passed, false, std::move(detail)};
}

std::string vs(const FPoly& a, const FPoly& b) { return a.to_string() + " vs " + b.to_string(); }

// Every hrep row is tight on an (n-1)-dimensional face and its count matches
// the formula.
std::string facet_problem(const PosetPolytope& poly, int expected) {
  const int n = poly.poset.size();
  if (static_cast<int>(poly.hrep.rows.size()) != expected) {
    return std::string(kind_name(poly.kind)) + ": " + std::to_string(poly.hrep.rows.size()) +
           " rows, formula " + std::to_string(expected);
  }
  const IncidenceMatrix inc = incidence(poly.vrep, poly.hrep);
  for (std::size_t r = 0; r < inc.rows.size(); ++r) {
    if (affine_rank(poly.vrep, inc.rows[r]) != n - 1) {
      return std::string(kind_name(poly.kind)) + ": row " + std::to_string(r) + " is not a facet";
    }
  }
  const FPoly f = f_polynomial(polytope_faces(poly));
  if (n > 0 && f[static_cast<std::size_t>(n)] != static_cast<FPoly::Coeff>(expected)) {
    return std::string(kind_name(poly.kind)) + ": lattice has " +
           std::to_string(f[static_cast<std::size_t>(n)]) + " facets";
  }
  return {};
}

CheckResult check_edges(const CorpusItem& it) {
  const FPoly fo = f_vector(it.poset, PolytopeKind::Order, Method::Brute);
  const FPoly fc = f_vector(it.poset, PolytopeKind::Chain, Method::Brute);
  const bool ok = fo[1] == fc[1] && fo[2] == fc[2];
  return make_result(it.name, it.poset, ok,
                     "f0 " + std::to_string(fo[1]) + "/" + std::to_string(fc[1]) + ", f1 " +
                         std::to_string(fo[2]) + "/" + std::to_string(fc[2]));
}

CheckResult check_facet_dichotomy(const CorpusItem& it) {
  const int fo = facet_count_order(it.poset);
  const int fc = facet_count_chain(it.poset);
  const bool x_free = is_x_free(it.poset);
  std::string detail = "facets order " + std::to_string(fo) + ", chain " + std::to_string(fc) +
                       (x_free ? ", x-free" : ", has X");
  bool ok = fc >= fo && ((fc == fo) == x_free);
  for (const auto& poly : {order_polytope(it.poset), chain_polytope(it.poset)}) {
    const std::string problem =
        facet_problem(poly, poly.kind == PolytopeKind::Order ? fo : fc);
    if (!problem.empty()) {
      ok = false;
      detail += "; " + problem;
    }
  }
  return make_result(it.name, it.poset, ok, detail);
}

CheckResult check_origin_estimate_item(const CorpusItem& it) {
  std::string detail;
  bool ok = true;
  for (PolytopeKind kind : {PolytopeKind::Order, PolytopeKind::Chain}) {
    const FaceSet fs = polytope_faces(make_polytope(it.poset, kind));
    for (std::size_t v = 0; v < fs.vertex_count; ++v) {
      if (!check_origin_estimate(fs, v)) {
        ok = false;
        const OriginSplit s = f_split_at(fs, v);
        detail = std::string(kind_name(kind)) + " vertex " + std::to_string(v) + ": " +
                 vs(s.through, mulx(s.avoiding));
        break;
      }
    }
    if (!ok) break;
  }
  return make_result(it.name, it.poset, ok, detail);
}

CheckResult check_simplex_item(const CorpusItem& it) {
  const PosetPolytope c = chain_polytope(it.poset);
  const PosetPolytope o = order_polytope(it.poset);
  const FPoly f0c = f_split_at(polytope_faces(c), c.origin_index).through;
  const FPoly f0o = f_split_at(polytope_faces(o), o.origin_index).through;
  const FPoly simplex = mulx(FPoly::one_plus_x_pow(it.poset.size()));
  if (f0c != simplex) return make_result(it.name, it.poset, false, "f0_C " + vs(f0c, simplex));
  if (!leq(f0c, f0o)) return make_result(it.name, it.poset, false, "f0_C > f0_O: " + vs(f0c, f0o));
  return make_result(it.name, it.poset, true);
}

CheckResult check_pyr_join_item(const CorpusItem& it, const CorpusItem& other) {
  const std::string name = it.name + " with " + other.name;
  for (PolytopeKind kind : {PolytopeKind::Order, PolytopeKind::Chain}) {
    const PosetPolytope p = make_polytope(it.poset, kind);
    const PosetPolytope q = make_polytope(other.poset, kind);
    const OriginSplit sp = f_split_at(polytope_faces(p), p.origin_index);
    const OriginSplit sq = f_split_at(polytope_faces(q), q.origin_index);
    const PyrJoinCheck r = check_pyr_vs_join(sp, sq);
    if (!r.holds) {
      return make_result(name, it.poset, false,
                         std::string(kind_name(kind)) + ": join " + vs(r.join, r.pyramid));
    }
  }
  return make_result(name, it.poset, true);
}

CheckResult check_lemma_item(const CorpusItem& it) {
  const PolytopeSplits s = brute_splits(it.poset);
  if (!leq(s.order.total(), s.chain.total())) {
    CheckResult r = make_result(it.name, it.poset, true, "f_O <= f_C fails; lemma not applicable");
    r.skipped = true;
    return r;
  }
  const Quad q = quad_from_splits(s);
  const LemmaCheck c = check_lemma_abcd(q);
  std::string detail;
  if (!c.part1) detail += "part 1 fails; ";
  if (!c.part2) {
    detail += "part 2 fails: alpha " + q.alpha.to_string() + ", beta " + q.beta.to_string() +
              ", gamma " + q.gamma.to_string() + ", delta " + q.delta.to_string();
  }
  return make_result(it.name, it.poset, c.holds(), detail);
}

CheckResult check_pair(const PosetPair& pr) {
  const Poset sum = ordinal_sum(pr.a, pr.b);
  const Poset uni = disjoint_union(pr.a, pr.b);
  auto fail = [&](const std::string& what) { return make_result(pr.name, sum, false, what); };
  if (!ordinal_chain_identity(pr.a, pr.b)) return fail("C(A<B) != C(A) v C(B)");
  if (!ordinal_order_identity(pr.a, pr.b)) return fail("O(A<B) !~ O(A) v O(B^op)");

  auto split_at_origin = [](const PosetPolytope& poly) {
    return f_split_at(polytope_faces(poly), poly.origin_index);
  };
  const OriginSplit ca = split_at_origin(chain_polytope(pr.a));
  const OriginSplit cb = split_at_origin(chain_polytope(pr.b));
  const OriginSplit oa = split_at_origin(order_polytope(pr.a));
  const OriginSplit obop = split_at_origin(order_polytope(opposite(pr.b)));
  const OriginSplit csum = split_at_origin(chain_polytope(sum));

  const FPoly fc = csum.through + csum.avoiding;
  const FPoly fo = f_vector(sum, PolytopeKind::Order, Method::Brute);
  const FPoly fc_formula = subdirect(ca.through, ca.avoiding, cb.through, cb.avoiding);
  const FPoly fo_formula = subdirect(oa.through, oa.avoiding, obop.through, obop.avoiding);
  if (fc_formula != fc) return fail("C(A<B): " + vs(fc_formula, fc));
  if (fo_formula != fo) return fail("O(A<B): " + vs(fo_formula, fo));

  const OriginSplit counts = subdirect_face_counts(ca, cb);
  if (counts.through != csum.through || counts.avoiding != csum.avoiding) {
    return fail("face counts of C(A) v C(B) by origin: " + vs(counts.through, csum.through));
  }

  const FPoly fo_prod = product(oa.through + oa.avoiding,
                                f_vector(pr.b, PolytopeKind::Order, Method::Brute));
  const FPoly fo_uni = f_vector(uni, PolytopeKind::Order, Method::Brute);
  if (fo_prod != fo_uni) return fail("O(A+B): " + vs(fo_prod, fo_uni));
  const FPoly fc_prod = product(ca.through + ca.avoiding, cb.through + cb.avoiding);
  const FPoly fc_uni = f_vector(uni, PolytopeKind::Chain, Method::Brute);
  if (fc_prod != fc_uni) return fail("C(A+B): " + vs(fc_prod, fc_uni));
  return make_result(pr.name, sum, true);
}

CheckResult check_main_theorem_item(const FamilyItem& it, int max_brute) {
  const TheoremReport r = verify_main_theorem(it.tree, max_brute);
  std::string detail = "fO " + r.f_order.to_string() + ", fC " + r.f_chain.to_string();
  bool ok = r.leq;
  if (!r.leq) detail += "; f_O <= f_C fails";
  for (const OrdinalStep& s : r.steps) {
    if (!s.ineq2 || !s.ineq3) {
      ok = false;
      detail += "; step " + std::to_string(s.size_a) + "<" + std::to_string(s.size_b) +
                (s.ineq2 ? "" : " ineq2 fails") + (s.ineq3 ? "" : " ineq3 fails");
    }
  }
  if (r.x_free && r.f_order != r.f_chain) {
    ok = false;
    detail += "; x-free but f_O != f_C";
  }
  if (it.poset.size() <= max_brute) {
    const TheoremReport b = verify_main_theorem_brute(it.poset);
    if (b.f_order != r.f_order || b.f_chain != r.f_chain) {
      ok = false;
      detail += "; brute force gives " + b.f_order.to_string() + ", " + b.f_chain.to_string();
    }
  }
  return make_result(it.text, it.poset, ok, detail);
}

std::vector<Task> build_tasks(const std::string& suite, const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  if (suite == "ordinal-identities") {
    for (auto& pr : pair_corpus(cfg.corpus_size, cfg.seed)) {
      tasks.push_back({pr.name, ordinal_sum(pr.a, pr.b), [pr] { return check_pair(pr); }});
    }
    return tasks;
  }
  if (suite == "main-theorem") {
    for (auto& item : curated_posets()) {
      auto tree = in_family(item.poset);
      if (!tree) continue;
      FamilyItem fi{item.name, item.poset, std::move(*tree)};
      const int mb = cfg.max_brute;
      tasks.push_back({fi.text, fi.poset, [fi, mb] { return check_main_theorem_item(fi, mb); }});
    }
    for (auto& fi : family_corpus(cfg.corpus_size, cfg.seed, 1, 16)) {
      const int mb = cfg.max_brute;
      tasks.push_back({fi.text, fi.poset, [fi, mb] { return check_main_theorem_item(fi, mb); }});
    }
    return tasks;
  }
  const std::vector<CorpusItem> items = corpus(cfg.corpus_size, cfg.seed);
  for (std::size_t k = 0; k < items.size(); ++k) {
    const CorpusItem& it = items[k];
    std::function<CheckResult()> fn;
    if (suite == "edges") {
      fn = [it] { return check_edges(it); };
    } else if (suite == "hibi-li-facets") {
      fn = [it] { return check_facet_dichotomy(it); };
    } else if (suite == "origin-estimate") {
      fn = [it] { return check_origin_estimate_item(it); };
    } else if (suite == "simplex-figure") {
      fn = [it] { return check_simplex_item(it); };
    } else if (suite == "pyr-join") {
      const CorpusItem other = items[(k + 1) % items.size()];
      fn = [it, other] { return check_pyr_join_item(it, other); };
    } else if (suite == "lemma-abcd") {
      fn = [it] { return check_lemma_item(it); };
    } else {
      throw ConfigError("unknown suite '" + suite + "'");
    }
    tasks.push_back({it.name, it.poset, std::move(fn)});
  }
  return tasks;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw ConfigError("unknown suite '" + name + "'");
  }
  const std::vector<Task> tasks = build_tasks(name, config);
  SuiteResult out;
  out.suite = name;
  out.results = parallel_map<CheckResult>(tasks.size(), config.workers, [&](std::size_t k) {
    try {
      return tasks[k].run();
    } catch (const std::exception& e) {
      return make_result(tasks[k].name, tasks[k].poset, false, std::string("error: ") + e.what());
    }
  });
  std::stable_sort(out.results.begin(), out.results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.hash != b.hash) return a.hash < b.hash;
                     return a.name < b.name;
                   });
  for (const auto& r : out.results) {
    if (r.skipped) {
      ++out.skipped;
    } else if (!r.passed) {
      ++out.failed;
    }
  }
  return out;
}

std::string suite_report(const SuiteResult& r, Format format) {
  if (format == Format::Csv) {
    std::ostringstream os;
    os << "hash,status,name\n";
    for (const auto& c : r.results) {
      os << hex64(c.hash) << "," << (c.skipped ? "skip" : c.passed ? "pass" : "fail") << ",\""
         << c.name << "\"\n";
    }
    return os.str();
  }
  Json out;
  out["suite"] = r.suite;
  out["passed"] = r.passed();
  out["checked"] = r.results.size();
  out["failed"] = r.failed;
  out["skipped"] = r.skipped;
  if (const CheckResult* f = r.first_failure()) {
    out["counterexample"] = {{"name", f->name},
                             {"poset", Json::parse(f->poset_json)},
                             {"detail", f->detail}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out.dump() + "\n";
}

std::string corpus_report(const SuiteConfig& config, Format format) {
  const std::vector<CorpusItem> items = corpus(config.corpus_size, config.seed);
  if (format == Format::Csv) {
    std::ostringstream os;
    os << "index,hash,elements,covers,x_free,name\n";
    for (std::size_t k = 0; k < items.size(); ++k) {
      const Poset& p = items[k].poset;
      os << k << "," << hex64(poset_hash(p)) << "," << p.size() << "," << p.covers().size()
         << "," << (is_x_free(p) ? "true" : "false") << ",\"" << items[k].name << "\"\n";
    }
    return os.str();
  }
  Json list = Json::array();
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Poset& p = items[k].poset;
    list.push_back({{"index", k},
                    {"name", items[k].name},
                    {"hash", hex64(poset_hash(p))},
                    {"x_free", is_x_free(p)},
                    {"poset", Json::parse(poset_to_json(p))}});
  }
  Json out;
  out["seed"] = config.seed;
  out["corpus_size"] = config.corpus_size;
  out["posets"] = std::move(list);
  return out.dump() + "\n";
}

}  // namespace posetpoly
