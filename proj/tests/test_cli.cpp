#include <doctest.h>

#include <filesystem>
#include <random>

#include "oracle/oracles.hpp"
#include "posetpoly/cache.hpp"
#include "posetpoly/errors.hpp"
#include "posetpoly/expr.hpp"
#include "posetpoly/family.hpp"
#include "posetpoly/io.hpp"
#include "posetpoly/suites.hpp"

using namespace posetpoly;

namespace {

const char* kX = "{a, b, c, d, e; a < c, b < c, c < d, c < e}";
const char* kXJson =
    R"({"labels":["a","b","c","d","e"],"covers":[["a","c"],["b","c"],["c","d"],["c","e"]]})";

std::filesystem::path fresh_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("expressions evaluate to the expected posets") {
  CHECK(poset_to_json(evaluate(kX)) == kXJson);
  CHECK(evaluate("chain(3)").covers().size() == 2);
  CHECK(evaluate("antichain(4)").covers().empty());
  CHECK(oracle::isomorphic(evaluate("antichain(2) < chain(1) < antichain(2)"), x_poset()));
  CHECK(oracle::isomorphic(evaluate("op(chain(1) < antichain(2))"), evaluate("antichain(2) < chain(1)")));
  CHECK(evaluate("{;}").size() == 0);
  CHECK_THROWS_AS(evaluate("{}"), ParseError);
  CHECK(evaluate("{a, b, c; a < b < c}").covers().size() == 2);
  CHECK(evaluate("{1, 2; 1 < 2}").size() == 2);
  CHECK(evaluate("# comment\nchain(2)").size() == 2);
}

TEST_CASE("'+' binds tighter than '<'") {
  const Program p = parse_program("chain(1) + chain(1) < chain(1)");
  REQUIRE(p.body->kind == Expr::Kind::OrdinalSum);
  CHECK(p.body->lhs->kind == Expr::Kind::DisjointUnion);
  const Program q = parse_program("chain(1) < chain(2) < chain(3)");
  CHECK(q.body->lhs->kind == Expr::Kind::OrdinalSum);
  CHECK(q.body->rhs->count == 3);
}

TEST_CASE("let bindings") {
  const Program p = parse_program("let v = chain(1) < antichain(2);\nlet w = op(v);\nw + v");
  CHECK(p.bindings.size() == 2);
  CHECK(evaluate(p).size() == 6);
  CHECK_THROWS_AS(parse_program("y < chain(1)"), UnboundRefError);
  CHECK_THROWS_AS(parse_program("let v = v; v"), UnboundRefError);
}

TEST_CASE("parse errors carry line and column") {
  auto position = [](const char* src) -> std::pair<int, int> {
    try {
      parse_program(src);
    } catch (const UnboundRefError&) {
      return {-1, -1};
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(position("chain(2) < ") == std::pair{1, 12});
  CHECK(position("chain(x)") == std::pair{1, 7});
  CHECK(position("chain(2)\n  + @") == std::pair{2, 5});
  CHECK(position("chain(65)") == std::pair{1, 7});
  CHECK(position("let = chain(1); chain(1)") == std::pair{1, 5});
  CHECK(position("chain(1) chain(1)") == std::pair{1, 10});
  CHECK_THROWS_AS(evaluate("{a, a; }"), DuplicateLabelError);
  CHECK_THROWS_AS(evaluate("{a, b; a < c}"), UnknownLabelError);
  CHECK_THROWS_AS(evaluate("{a, b; a < b, b < a}"), CycleError);
}

TEST_CASE("printing round-trips") {
  const char* srcs[] = {"chain(1) + chain(1) < chain(1)",
                        "chain(1) + (chain(1) < chain(1))",
                        "chain(1) < (chain(2) < chain(3))",
                        "op(antichain(2) < {x, y; x < y})",
                        "let v = chain(2);\nv + op(v)"};
  for (const char* src : srcs) {
    const Program p = parse_program(src);
    const std::string text = print(p);
    CHECK(parse_program(text) == p);
    CHECK(print(parse_program(text)) == text);
  }
  CHECK(print(*parse_program("chain(1) + (chain(1) < chain(1))").body) ==
        "chain(1) + (chain(1) < chain(1))");
  CHECK(print(*parse_program("(chain(1) < chain(2)) < chain(3)").body) ==
        "chain(1) < chain(2) < chain(3)");
  CHECK(print(*parse_program("{a,b;a<b}").body) == "{a, b; a < b}");

  std::mt19937_64 rng(21);
  for (int k = 0; k < 50; ++k) {
    const ExprPtr e = random_family_expr(rng, 1 + k % 12);
    const Program p = parse_program(print(*e));
    CHECK(*p.body == *e);
  }
}

TEST_CASE("expression trees follow the expression") {
  const auto t = expression_tree(parse_program("(chain(1) + chain(1)) < chain(2)"));
  REQUIRE(t.has_value());
  CHECK(t->kind == DecompositionTree::Kind::OrdinalSum);
  CHECK(t->children.size() == 2);
  CHECK(leaves_x_free(*t));
  const auto x = expression_tree(parse_program(kX));
  REQUIRE(x.has_value());
  CHECK(describe(*x) == "OrdinalSum[Leaf(2), Leaf(1), Leaf(2)]");
  CHECK_FALSE(expression_tree(parse_program("{a,b,c,d,e,f; a<c, b<c, c<d, c<e, f<d}")).has_value());
}

TEST_CASE("poset JSON") {
  const Poset x = poset_from_json(kXJson);
  CHECK(poset_to_json(x) == kXJson);
  // Extra relations are reduced away.
  CHECK(poset_to_json(poset_from_json(R"({"labels":["p","q","r"],"covers":[["p","q"],["q","r"],["p","r"]]})")) ==
        R"({"labels":["p","q","r"],"covers":[["p","q"],["q","r"]]})");
  CHECK(looks_like_poset_json(kXJson));
  CHECK_FALSE(looks_like_poset_json("chain(2)"));
  CHECK_FALSE(looks_like_poset_json("[1,2]"));
  CHECK_THROWS_AS(poset_from_json("{\"labels\": [1]}"), ParseError);
  CHECK_THROWS_AS(poset_from_json("{"), ParseError);
  for (int k = 0; k < 30; ++k) {
    const Poset p = random_poset(1 + k % 9, 1000 + k, 0.4);
    const std::string j = poset_to_json(p);
    CHECK(poset_to_json(poset_from_json(j)) == j);
  }
}

TEST_CASE("poset hash") {
  // FNV-1a 64 of {"labels":["a"],"covers":[]}
  CHECK(hex64(poset_hash(Poset::chain(1))) == "70b4c8e44def2cc9");
  CHECK(poset_hash(x_poset()) == poset_hash(poset_from_json(kXJson)));
  CHECK(poset_hash(Poset::chain(2)) != poset_hash(Poset::antichain(2)));
}

TEST_CASE("reports") {
  const Poset x = x_poset();
  const std::string d = describe_report(x, Format::Json);
  CHECK(d ==
        std::string(R"({"poset":)") + kXJson +
            R"(,"elements":5,"covers":4,"filters":8,"antichains":8,"maximal_chains":4,"minimal":2,"maximal":2,"x_free":false,"x_witness":["a","b","c","d","e"],"facets":{"order":8,"chain":9},"in_family":true})"
            "\n");
  CHECK(describe_report(x, Format::Csv).starts_with("key,value\n"));

  const FPoly fo{1, 8, 24, 34, 24, 8, 1};
  CHECK(fvector_report(x, PolytopeKind::Order, Method::Brute, fo, Format::Csv) ==
        "degree,dim,count\n0,-1,1\n1,0,8\n2,1,24\n3,2,34\n4,3,24\n5,4,8\n6,5,1\n");
  CHECK(fvector_report(x, PolytopeKind::Order, Method::Brute, fo, Format::Json) ==
        std::string(R"({"poset":)") + kXJson +
            R"(,"kind":"order","method":"brute","f":[1,8,24,34,24,8,1],"dim":5,"vertices":8,"facets":8})"
            "\n");

  const std::string c = compare_report(verify_main_theorem_brute(x), Format::Json);
  CHECK(c.find(R"("leq":true,"slack":[0,0,0,1,2,1,0])") != std::string::npos);

  CHECK(decompose_report(x).find(R"("text":"OrdinalSum[Leaf(2), Leaf(1), Leaf(2)]")") != std::string::npos);
  CHECK(decompose_report(evaluate("{a,b,c,d,e,f; a<c, b<c, c<d, c<e, f<d}")).find(R"("text":"NotInFamily")") !=
        std::string::npos);

  CHECK(export_polytope(Poset::chain(2), PolytopeKind::Order, ExportWhat::VRep) ==
        "{\"kind\":\"order\",\"ambient_dim\":2,\"vertices\":[[0,0],[0,1],[1,1]]}\n");
  CHECK(export_polytope(Poset::chain(2), PolytopeKind::Order, ExportWhat::HRep) ==
        "{\"kind\":\"order\",\"ambient_dim\":2,\"rows\":[[-1,0,0],[0,1,1],[1,-1,0]]}\n");
}

TEST_CASE("reports are byte-stable") {
  for (int k = 0; k < 10; ++k) {
    const Poset p = random_poset(2 + k % 6, 2000 + k, 0.5);
    CHECK(describe_report(p, Format::Json) == describe_report(poset_from_json(poset_to_json(p)), Format::Json));
  }
}

TEST_CASE("result cache") {
  const auto dir = fresh_dir("posetpoly-test-cache");
  const ResultCache cache(dir);
  const std::string key = cache_key(kXJson, "fvector", "brute", "order", 8, "json");
  CHECK(key.starts_with("posetpoly 0.1.0"));
  CHECK(ResultCache::address(key).size() == 32);
  CHECK(ResultCache::address(key) != ResultCache::address(cache_key(kXJson, "fvector", "brute", "chain", 8, "json")));
  CHECK_FALSE(cache.get(key).has_value());
  const std::string value = "{\"f\":[1,2]}\n";
  cache.put(key, value);
  REQUIRE(cache.get(key).has_value());
  CHECK(*cache.get(key) == value);
  CHECK(std::filesystem::exists(dir / (ResultCache::address(key) + ".json")));
  std::filesystem::remove_all(dir);

  const ResultCache blocked("/proc/posetpoly-no-such-dir");
  CHECK_THROWS_AS(blocked.put(key, value), IoError);
}

TEST_CASE("corpora are deterministic") {
  const auto a = corpus(20, 4);
  const auto b = corpus(20, 4);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == curated_posets().size() + 20);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(poset_to_json(a[i].poset) == poset_to_json(b[i].poset));
  const auto c = corpus(20, 5);
  bool differs = false;
  for (std::size_t i = curated_posets().size(); i < c.size(); ++i) {
    differs = differs || poset_to_json(a[i].poset) != poset_to_json(c[i].poset);
  }
  CHECK(differs);
  CHECK(item_seed(1, 0) != item_seed(1, 1));
  CHECK(item_seed(1, 0) == item_seed(1, 0));
  CHECK(corpus_report(SuiteConfig{.seed = 4, .corpus_size = 3}, Format::Json) ==
        corpus_report(SuiteConfig{.seed = 4, .corpus_size = 3}, Format::Json));
}

TEST_CASE("suites pass on small corpora") {
  const SuiteConfig config{.seed = 3, .corpus_size = 15, .max_brute = 8, .workers = 2};
  for (const std::string& name : suite_names()) {
    const SuiteResult r = run_suite(name, config);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(!r.results.empty());
    const std::string j = suite_report(r, Format::Json);
    CHECK(j.find("\"passed\":true") != std::string::npos);
  }
  CHECK(suite_names().size() == 8);
  CHECK_THROWS_AS(run_suite("no-such-suite", config), ConfigError);
}

TEST_CASE("suite results do not depend on worker count") {
  const SuiteResult one = run_suite("edges", SuiteConfig{.seed = 8, .corpus_size = 25, .workers = 1});
  const SuiteResult many = run_suite("edges", SuiteConfig{.seed = 8, .corpus_size = 25, .workers = 6});
  CHECK(suite_report(one, Format::Json) == suite_report(many, Format::Json));
  CHECK(suite_report(one, Format::Csv) == suite_report(many, Format::Csv));
}

TEST_CASE("parallel_map keeps order and rethrows") {
  const auto squares = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < squares.size(); ++i) CHECK(squares[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(parallel_map<int>(10, 3,
                                    [](std::size_t i) -> int {
                                      if (i == 7) throw ConfigError("boom");
                                      return 0;
                                    }),
                  ConfigError);
}
