#include "posetpoly/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "posetpoly/errors.hpp"

namespace posetpoly {

std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  while (s != 0) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

std::string default_label(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(default_label(i));
  return out;
}

void check_size(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxElements)) {
    throw TooLargeError("poset has " + std::to_string(n) +
                        " elements; at most 64 are supported");
  }
}

void check_unique(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw DuplicateLabelError("duplicate label '" + l + "'");
    }
  }
}

}  // namespace

Poset::Poset(std::vector<std::string> labels, std::vector<ElementSet> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
  const int n = size();
  down_.assign(n, 0);
  upper_covers_.assign(n, 0);
  lower_covers_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j : elements_of(up_[i])) down_[j] |= singleton(i);
  }
  for (int i = 0; i < n; ++i) {
    for (int j : elements_of(strict_up(i))) {
      if ((strict_up(i) & strict_down(j)) == 0) {
        upper_covers_[i] |= singleton(j);
        lower_covers_[j] |= singleton(i);
        covers_.emplace_back(i, j);
      }
    }
  }
}

Poset Poset::from_order(std::vector<std::string> labels,
                        std::vector<ElementSet> up_sets) {
  check_size(labels.size());
  return Poset(std::move(labels), std::move(up_sets));
}

Poset Poset::from_index_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<int, int>>& relations) {
  check_size(labels.size());
  check_unique(labels);
  const int n = static_cast<int>(labels.size());
  std::vector<ElementSet> up(n);
  for (int i = 0; i < n; ++i) up[i] = singleton(i);
  for (auto [i, j] : relations) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw UnknownLabelError("relation index out of range");
    }
    if (i == j) {
      throw CycleError("relation forces " + labels[i] + " < " + labels[i]);
    }
    up[i] |= singleton(j);
  }
  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (contains(up[i], k)) up[i] |= up[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j : elements_of(up[i] & ~singleton(i))) {
      if (contains(up[j], i)) {
        throw CycleError("relations force a cycle through " + labels[i] +
                         " and " + labels[j]);
      }
    }
  }
  return Poset(std::move(labels), std::move(up));
}

Poset Poset::from_covers(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  check_size(labels.size());
  check_unique(labels);
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) index[labels[i]] = i;
  std::vector<std::pair<int, int>> rel;
  rel.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw UnknownLabelError("unknown label '" + a + "'");
    if (ib == index.end()) throw UnknownLabelError("unknown label '" + b + "'");
    rel.emplace_back(ia->second, ib->second);
  }
  return from_index_relations(std::move(labels), rel);
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return from_index_relations(default_labels(n), rel);
}

Poset Poset::antichain(int n) { return from_index_relations(default_labels(n), {}); }

std::optional<int> Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

ElementSet Poset::minimal_elements() const {
  ElementSet out = 0;
  for (int i = 0; i < size(); ++i) {
    if (lower_covers_[i] == 0) out |= singleton(i);
  }
  return out;
}

ElementSet Poset::maximal_elements() const {
  ElementSet out = 0;
  for (int i = 0; i < size(); ++i) {
    if (upper_covers_[i] == 0) out |= singleton(i);
  }
  return out;
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size()) {
    throw Error("relabel: label count does not match element count");
  }
  check_unique(labels);
  return Poset(std::move(labels), up_);
}

namespace {

// Concatenates element lists; b's indices are shifted by |a|.
Poset combine(const Poset& a, const Poset& b, bool a_below_b) {
  const int na = a.size();
  const int nb = b.size();
  check_size(static_cast<std::size_t>(na + nb));
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) labels = default_labels(na + nb);

  std::vector<ElementSet> up(na + nb);
  const ElementSet b_mask = full_set(na + nb) & ~full_set(na);
  for (int i = 0; i < na; ++i) {
    up[i] = a.up_set(i);
    if (a_below_b) up[i] |= b_mask;
  }
  for (int j = 0; j < nb; ++j) up[na + j] = b.up_set(j) << na;
  return Poset::from_order(std::move(labels), std::move(up));
}

}  // namespace

Poset ordinal_sum(const Poset& a, const Poset& b) { return combine(a, b, true); }

Poset disjoint_union(const Poset& a, const Poset& b) { return combine(a, b, false); }

Poset opposite(const Poset& p) {
  std::vector<ElementSet> up(p.size());
  for (int i = 0; i < p.size(); ++i) up[i] = p.down_set(i);
  return Poset::from_order(p.labels(), std::move(up));
}

Poset induced_subposet(const Poset& p, ElementSet s) {
  s &= p.all();
  const std::vector<int> keep = elements_of(s);
  std::vector<int> position(p.size(), -1);
  for (int k = 0; k < static_cast<int>(keep.size()); ++k) position[keep[k]] = k;
  std::vector<std::string> labels;
  std::vector<ElementSet> up(keep.size(), 0);
  for (int k = 0; k < static_cast<int>(keep.size()); ++k) {
    labels.push_back(p.label(keep[k]));
    for (int j : elements_of(p.up_set(keep[k]) & s)) up[k] |= singleton(position[j]);
  }
  return Poset::from_order(std::move(labels), std::move(up));
}

bool is_filter(const Poset& p, ElementSet s) {
  for (int i : elements_of(s)) {
    if ((p.up_set(i) & ~s) != 0) return false;
  }
  return true;
}

bool is_antichain(const Poset& p, ElementSet s) {
  for (int i : elements_of(s)) {
    if ((p.comparable_set(i) & s) != singleton(i)) return false;
  }
  return true;
}

bool is_chain(const Poset& p, ElementSet s) {
  for (int i : elements_of(s)) {
    if ((s & ~p.comparable_set(i)) != 0) return false;
  }
  return true;
}

namespace {

// Elements sorted so that every element precedes everything above it.
std::vector<int> linear_extension(const Poset& p) {
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(p.down_set(a)) < popcount(p.down_set(b));
  });
  return order;
}

void sort_members(std::vector<ElementSet>& v) { std::sort(v.begin(), v.end()); }

}  // namespace

SubsetFamily filters(const Poset& p) {
  // Walk elements top-down; an element may join only when all of its upper
  // covers already did, so every leaf of the search is a distinct filter.
  std::vector<int> order = linear_extension(p);
  std::reverse(order.begin(), order.end());
  std::vector<ElementSet> out;
  std::vector<std::pair<std::size_t, ElementSet>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [k, chosen] = stack.back();
    stack.pop_back();
    if (k == order.size()) {
      out.push_back(chosen);
      continue;
    }
    const int x = order[k];
    stack.emplace_back(k + 1, chosen);
    if ((p.upper_covers(x) & ~chosen) == 0) {
      stack.emplace_back(k + 1, chosen | singleton(x));
    }
  }
  sort_members(out);
  return {SubsetFamily::Kind::Filters, std::move(out)};
}

SubsetFamily antichains(const Poset& p) {
  std::vector<ElementSet> out;
  const std::size_t n = p.size();
  std::vector<std::pair<std::size_t, ElementSet>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [k, chosen] = stack.back();
    stack.pop_back();
    if (k == n) {
      out.push_back(chosen);
      continue;
    }
    const int x = static_cast<int>(k);
    stack.emplace_back(k + 1, chosen);
    if ((p.comparable_set(x) & chosen) == 0) {
      stack.emplace_back(k + 1, chosen | singleton(x));
    }
  }
  sort_members(out);
  return {SubsetFamily::Kind::Antichains, std::move(out)};
}

SubsetFamily maximal_chains(const Poset& p) {
  // Maximal chains are exactly the source-to-sink paths of the Hasse diagram.
  std::vector<ElementSet> out;
  const ElementSet maximal = p.maximal_elements();
  std::vector<std::pair<int, ElementSet>> stack;
  for (int m : elements_of(p.minimal_elements())) stack.emplace_back(m, singleton(m));
  while (!stack.empty()) {
    auto [x, path] = stack.back();
    stack.pop_back();
    if (contains(maximal, x)) {
      out.push_back(path);
      continue;
    }
    for (int y : elements_of(p.upper_covers(x))) {
      stack.emplace_back(y, path | singleton(y));
    }
  }
  sort_members(out);
  return {SubsetFamily::Kind::MaximalChains, std::move(out)};
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count exceeds 64 bits");
  return r;
}

std::uint64_t count_antichains_in(const Poset& p, ElementSet s,
                                  std::unordered_map<ElementSet, std::uint64_t>& memo) {
  if (s == 0) return 1;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  const int v = __builtin_ctzll(s);
  const std::uint64_t without = count_antichains_in(p, s & ~singleton(v), memo);
  const std::uint64_t with = count_antichains_in(p, s & ~p.comparable_set(v), memo);
  const std::uint64_t total = checked_add(without, with);
  memo.emplace(s, total);
  return total;
}

}  // namespace

std::uint64_t count_antichains(const Poset& p) {
  std::unordered_map<ElementSet, std::uint64_t> memo;
  // Components are independent, so their counts multiply.
  std::uint64_t total = 1;
  for (ElementSet c : comparability_components(p)) {
    const std::uint64_t part = count_antichains_in(p, c, memo);
    if (__builtin_mul_overflow(total, part, &total)) throw OverflowError("count exceeds 64 bits");
  }
  return total;
}

std::uint64_t count_maximal_chains(const Poset& p) {
  if (p.empty()) return 0;
  // Paths from each element up to a maximal element, highest elements first.
  std::vector<int> order = linear_extension(p);
  std::vector<std::uint64_t> paths(p.size(), 0);
  const ElementSet maximal = p.maximal_elements();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    if (contains(maximal, x)) {
      paths[x] = 1;
      continue;
    }
    for (int y : elements_of(p.upper_covers(x))) paths[x] = checked_add(paths[x], paths[y]);
  }
  std::uint64_t total = 0;
  for (int m : elements_of(p.minimal_elements())) total = checked_add(total, paths[m]);
  return total;
}

namespace {

// Some pair of incomparable elements inside s, if any.
std::optional<std::pair<int, int>> incomparable_pair(const Poset& p, ElementSet s) {
  for (int i : elements_of(s)) {
    const ElementSet others = s & ~p.comparable_set(i);
    if (others != 0) return std::make_pair(i, __builtin_ctzll(others));
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::array<int, 5>> find_x_subposet(const Poset& p) {
  // An induced X is a middle element with an incomparable pair strictly
  // below and an incomparable pair strictly above; transitivity then fixes
  // every other relation among the five.
  for (int c = 0; c < p.size(); ++c) {
    const ElementSet below = p.strict_down(c);
    const ElementSet above = p.strict_up(c);
    if (popcount(below) < 2 || popcount(above) < 2) continue;
    auto low = incomparable_pair(p, below);
    if (!low) continue;
    auto high = incomparable_pair(p, above);
    if (!high) continue;
    return std::array<int, 5>{low->first, low->second, c, high->first, high->second};
  }
  return std::nullopt;
}

bool is_x_free(const Poset& p) { return !find_x_subposet(p).has_value(); }

std::vector<ElementSet> comparability_components(const Poset& p) {
  std::vector<ElementSet> out;
  ElementSet unseen = p.all();
  while (unseen != 0) {
    ElementSet comp = unseen & (~unseen + 1);
    ElementSet frontier = comp;
    while (frontier != 0) {
      ElementSet next = 0;
      for (int i : elements_of(frontier)) next |= p.comparable_set(i);
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

std::vector<ElementSet> ordinal_cuts(const Poset& p) {
  // If a < b across a cut then |down(a)| < |down(b)|, so every lower part is
  // a prefix of the elements sorted by down-set size.
  const std::vector<int> order = linear_extension(p);
  std::vector<ElementSet> cuts;
  ElementSet prefix = 0;
  for (int k = 0; k + 1 < p.size(); ++k) {
    prefix |= singleton(order[k]);
    bool ok = true;
    for (int j = k + 1; j < p.size() && ok; ++j) {
      ok = (prefix & ~p.strict_down(order[j])) == 0;
    }
    if (ok) cuts.push_back(prefix);
  }
  return cuts;
}

std::vector<ElementSet> ordinal_blocks(const Poset& p) {
  std::vector<ElementSet> blocks;
  if (p.empty()) return blocks;
  ElementSet prev = 0;
  for (ElementSet cut : ordinal_cuts(p)) {
    blocks.push_back(cut & ~prev);
    prev = cut;
  }
  blocks.push_back(p.all() & ~prev);
  return blocks;
}

Poset random_poset(int n, std::uint64_t seed, double edge_prob) {
  check_size(static_cast<std::size_t>(std::max(n, 0)));
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto k = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[k]);
  }
  std::vector<std::pair<int, int>> rel;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < edge_prob) rel.emplace_back(order[k], order[l]);
    }
  }
  return Poset::from_index_relations(default_labels(n), rel);
}

Poset zigzag(int chains, int length) {
  std::vector<std::pair<int, int>> rel;
  auto id = [length](int c, int k) { return c * length + k; };
  for (int c = 0; c < chains; ++c) {
    for (int k = 0; k + 1 < length; ++k) rel.emplace_back(id(c, k), id(c, k + 1));
  }
  for (int c = 0; c + 1 < chains; ++c) {
    if (c % 2 == 0) {
      rel.emplace_back(id(c + 1, 0), id(c, length - 1));
    } else {
      rel.emplace_back(id(c, 0), id(c + 1, length - 1));
    }
  }
  return Poset::from_index_relations(default_labels(chains * length), rel);
}

Poset fence(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0) {
      rel.emplace_back(i, i + 1);
    } else {
      rel.emplace_back(i + 1, i);
    }
  }
  return Poset::from_index_relations(default_labels(n), rel);
}

Poset x_poset() {
  return ordinal_sum(ordinal_sum(Poset::antichain(2), Poset::chain(1)),
                     Poset::antichain(2));
}

}  // namespace posetpoly
