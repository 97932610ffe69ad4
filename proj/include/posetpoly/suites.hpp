#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "posetpoly/expr.hpp"
#include "posetpoly/family.hpp"
#include "posetpoly/io.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

std::uint64_t splitmix64(std::uint64_t x);
// Seed of item k in a corpus seeded with `seed`.
std::uint64_t item_seed(std::uint64_t seed, std::uint64_t k);

struct CorpusItem {
  std::string name;
  Poset poset;
};

// Chains, antichains, fences, zigzags and the X-poset.
std::vector<CorpusItem> curated_posets();
// Item k has 2 + k % 7 elements and edge probability cycling through
// 0.25, 0.4, 0.55, 0.7.
std::vector<CorpusItem> random_corpus(int size, std::uint64_t seed);
// curated_posets() followed by random_corpus(size, seed).
std::vector<CorpusItem> corpus(int size, std::uint64_t seed);

struct PosetPair {
  std::string name;
  Poset a;
  Poset b;
};
// Random nonempty pairs with #A + #B <= max_total.
std::vector<PosetPair> pair_corpus(int count, std::uint64_t seed, int max_total = 8);

// Random expression in the family with exactly `size` elements. Leaves have
// at most max_leaf elements and are chains, antichains, X-free literals or
// the X-poset.
ExprPtr random_family_expr(std::mt19937_64& rng, int size, int max_leaf = 8);

struct FamilyItem {
  std::string text;
  Poset poset;
  DecompositionTree tree;
};
// Item k has min_size + k % (max_size - min_size + 1) elements.
std::vector<FamilyItem> family_corpus(int count, std::uint64_t seed, int min_size,
                                      int max_size);

struct SuiteConfig {
  std::uint64_t seed = 1;
  int corpus_size = 200;
  int max_brute = 8;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct CheckResult {
  std::string name;
  std::string poset_json;
  std::uint64_t hash = 0;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> results;  // by (hash, name)
  int failed = 0;
  int skipped = 0;
  bool passed() const { return failed == 0; }
  const CheckResult* first_failure() const;
};

const std::vector<std::string>& suite_names();

// Throws ConfigError for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

std::string suite_report(const SuiteResult& r, Format format);
std::string corpus_report(const SuiteConfig& config, Format format);

// Runs fn(0..count-1) on a pool; results keep index order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned workers, Fn fn);

}  // namespace posetpoly

#include "posetpoly/detail/parallel_map.hpp"
