#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace posetpoly {

// Subset of poset elements, bit i = element i. Posets are capped at 64
// elements so one word is always enough.
using ElementSet = std::uint64_t;

constexpr int kMaxElements = 64;

inline ElementSet singleton(int i) { return ElementSet{1} << i; }
inline bool contains(ElementSet s, int i) { return (s >> i) & 1U; }
inline int popcount(ElementSet s) { return __builtin_popcountll(s); }
inline ElementSet full_set(int n) {
  return n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}

std::vector<int> elements_of(ElementSet s);

// Default element name for index i: "a".."z", then "e26", "e27", ...
std::string default_label(int i);

// Finite poset stored as its reflexive order relation (one up-set mask per
// element) plus the cover relation. Immutable once built.
class Poset {
 public:
  Poset() = default;

  // relations may be any acyclic set of pairs (i below j); the result keeps
  // its transitive closure as the order and its transitive reduction as the
  // cover relation. Throws CycleError, DuplicateLabelError,
  // UnknownLabelError, TooLargeError.
  static Poset from_covers(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& relations);
  static Poset from_index_relations(
      std::vector<std::string> labels,
      const std::vector<std::pair<int, int>>& relations);

  // Builds from a relation that is already reflexive and transitive.
  static Poset from_order(std::vector<std::string> labels,
                          std::vector<ElementSet> up_sets);

  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  ElementSet all() const { return full_set(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(const std::string& label) const;

  // Pairs (i, j) with i covered by j, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool leq(int i, int j) const { return contains(up_[i], j); }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  ElementSet up_set(int i) const { return up_[i]; }
  ElementSet down_set(int i) const { return down_[i]; }
  ElementSet strict_up(int i) const { return up_[i] & ~singleton(i); }
  ElementSet strict_down(int i) const { return down_[i] & ~singleton(i); }
  ElementSet upper_covers(int i) const { return upper_covers_[i]; }
  ElementSet lower_covers(int i) const { return lower_covers_[i]; }
  ElementSet comparable_set(int i) const { return up_[i] | down_[i]; }

  ElementSet minimal_elements() const;
  ElementSet maximal_elements() const;

  // Same elements, relabelled.
  Poset with_labels(std::vector<std::string> labels) const;

  bool operator==(const Poset& other) const = default;

 private:
  Poset(std::vector<std::string> labels, std::vector<ElementSet> up);

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> upper_covers_;
  std::vector<ElementSet> lower_covers_;
  std::vector<std::pair<int, int>> covers_;
};

// A < B: every element of A below every element of B. Elements of A keep
// indices 0..|A|-1, elements of B follow. If the label sets collide the
// result is relabelled with default labels.
Poset ordinal_sum(const Poset& a, const Poset& b);
Poset disjoint_union(const Poset& a, const Poset& b);
Poset opposite(const Poset& p);

// Restriction of the order to s; elements keep their relative index order.
Poset induced_subposet(const Poset& p, ElementSet s);

struct SubsetFamily {
  enum class Kind { Filters, Antichains, MaximalChains };
  Kind kind;
  std::vector<ElementSet> members;  // ascending as integers
};

SubsetFamily filters(const Poset& p);
SubsetFamily antichains(const Poset& p);
SubsetFamily maximal_chains(const Poset& p);

// Counts without listing the members; OverflowError past 2^64 - 1.
// #filters = #antichains, so count_antichains serves for both.
std::uint64_t count_antichains(const Poset& p);
std::uint64_t count_maximal_chains(const Poset& p);

bool is_filter(const Poset& p, ElementSet s);
bool is_antichain(const Poset& p, ElementSet s);
bool is_chain(const Poset& p, ElementSet s);

// Returns an induced X-poset as {min, min, middle, max, max}, if any.
std::optional<std::array<int, 5>> find_x_subposet(const Poset& p);
bool is_x_free(const Poset& p);

// Connected components of the comparability graph, ordered by lowest index.
std::vector<ElementSet> comparability_components(const Poset& p);

// Every lower part A of an ordinal cut (A, P \ A), A and its complement
// nonempty and A entirely below the complement. The cuts form a chain under
// inclusion and are returned in increasing order.
std::vector<ElementSet> ordinal_cuts(const Poset& p);

// Blocks P1 < P2 < ... < Pk of the finest ordinal decomposition.
std::vector<ElementSet> ordinal_blocks(const Poset& p);

// Random DAG on a random linear order of n elements, each pair of the order
// kept as a relation with probability edge_prob, then closed and reduced.
// The generator is std::mt19937_64 seeded with `seed`; the permutation is a
// Fisher-Yates shuffle with index rng() % (i + 1) for i = n-1..1, and each
// pair (k < l) of the order (row-major) is kept iff (rng() >> 11) * 2^-53 <
// edge_prob. Both steps avoid std distributions so output is identical on
// every platform.
Poset random_poset(int n, std::uint64_t seed, double edge_prob);

// Zigzag of `chains` chains of length `length`: consecutive chains are glued
// alternately bottom-to-top and top-to-bottom.
Poset zigzag(int chains, int length);
// Fence a1 < a2 > a3 < a4 ... on n elements.
Poset fence(int n);
// antichain(2) < chain(1) < antichain(2).
Poset x_poset();

}  // namespace posetpoly
