#include "cpt/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>

namespace cpt {

namespace {

// Associativity is certified at construction up to this order.
constexpr int kAssociativityCheckLimit = 64;

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels, std::vector<int> table, int identity) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw StructureError("a group needs at least one element");
  if (table.size() != static_cast<std::size_t>(n) * n) throw StructureError("Cayley table size does not match");
  if (identity < 0 || identity >= n) throw StructureError("identity index out of range");
  if (!kernels::is_latin_square(n, table)) throw StructureError("Cayley table is not a Latin square");

  FiniteGroup g;
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);
  g.identity_ = identity;
  for (int a = 0; a < n; ++a) {
    if (g.mul(identity, a) != a || g.mul(a, identity) != a)
      throw StructureError("element " + g.labels_[a] + " is not fixed by the identity");
  }
  if (n <= kAssociativityCheckLimit) {
    if (auto bad = kernels::associativity_violation(n, g.table_)) {
      throw StructureError("table is not associative at (" + g.labels_[(*bad)[0]] + ", " + g.labels_[(*bad)[1]] +
                           ", " + g.labels_[(*bad)[2]] + ")");
    }
  }
  // Latin rows guarantee a unique right inverse; check it is two-sided.
  g.inverses_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == identity) {
        if (g.mul(b, a) != identity) throw StructureError("element " + g.labels_[a] + " has no two-sided inverse");
        g.inverses_[a] = b;
        break;
      }
    }
  }
  return g;
}

int FiniteGroup::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

void FiniteGroup::mark_involution(int a) {
  if (a < 0 || a >= order()) throw UsageError("element index out of range");
  if (a == identity_ || mul(a, a) != identity_) throw UsageError("marked element must have order 2");
  for (int x = 0; x < order(); ++x)
    if (mul(a, x) != mul(x, a)) throw UsageError("marked element must be central");
  marked_ = a;
}

int element_order(const FiniteGroup& g, int a) {
  int k = 1;
  for (int x = a; x != g.identity(); x = g.mul(x, a)) ++k;
  return k;
}

std::vector<int> element_orders(const FiniteGroup& g) {
  std::vector<int> orders(g.order());
  for (int a = 0; a < g.order(); ++a) orders[a] = element_order(g, a);
  return orders;
}

OrderStructure order_structure(const FiniteGroup& g) {
  OrderStructure os;
  for (int a = 0; a < g.order(); ++a)
    if (a != g.identity()) ++os[element_order(g, a)];
  return os;
}

std::pair<int, int> order_pair(const OrderStructure& os) {
  auto count = [&](int k) {
    auto it = os.find(k);
    return it == os.end() ? 0 : it->second;
  };
  return {count(2), count(4)};
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x) central = g.mul(a, x) == g.mul(x, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::optional<std::pair<int, int>> noncommuting_pair(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return std::pair{a, b};
  return std::nullopt;
}

bool is_abelian(const FiniteGroup& g) { return !noncommuting_pair(g).has_value(); }

int exponent(const FiniteGroup& g) {
  int e = 1;
  for (int a = 0; a < g.order(); ++a) e = std::lcm(e, element_order(g, a));
  return e;
}

GroupInvariants invariants(const FiniteGroup& g) {
  return {g.order(), order_structure(g), static_cast<int>(center(g).size()), is_abelian(g), exponent(g)};
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> queue{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int s : gens) {
      const int y = g.mul(queue[head], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<char> in(g.order(), 0);
  for (int a : elements) {
    if (a < 0 || a >= g.order()) return false;
    in[a] = 1;
  }
  if (!in[g.identity()]) return false;
  for (int a : elements)
    for (int b : elements)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

QuotientGroup quotient_by_central_subgroup(const FiniteGroup& g, const std::vector<int>& z) {
  if (!is_subgroup(g, z)) throw UsageError("quotient: the given elements do not form a subgroup");
  for (int a : z)
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(a, x) != g.mul(x, a)) throw UsageError("quotient: subgroup is not central");

  const int n = g.order();
  std::vector<int> projection(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (projection[x] != -1) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int a : z) projection[g.mul(x, a)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> table = kernels::fill_table(m, [&](int r, int c) { return projection[g.mul(reps[r], reps[c])]; });
  std::vector<std::string> labels;
  for (int r : reps) labels.push_back(g.label(r));
  return {FiniteGroup::from_table(std::move(labels), std::move(table), projection[g.identity()]),
          std::move(projection)};
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order();
  const int nb = b.order();
  const int n = na * nb;
  std::vector<int> table = kernels::fill_table(n, [&](int r, int c) {
    return a.mul(r / nb, c / nb) * nb + b.mul(r % nb, c % nb);
  });
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  return FiniteGroup::from_table(std::move(labels), std::move(table), a.identity() * nb + b.identity());
}

FiniteGroup central_product(const FiniteGroup& a, int a0, const FiniteGroup& b, int b0) {
  auto check = [](const FiniteGroup& g, int x, const char* side) {
    if (x < 0 || x >= g.order()) throw UsageError(std::string("central_product: ") + side + " element out of range");
    if (element_order(g, x) != 2)
      throw UsageError(std::string("central_product: ") + side + " element must have order 2");
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) throw UsageError(std::string("central_product: ") + side + " element must be central");
  };
  check(a, a0, "left");
  check(b, b0, "right");

  const FiniteGroup prod = direct_product(a, b);
  const int nb = b.order();
  const std::vector<int> z{prod.identity(), a0 * nb + b0};
  QuotientGroup q = quotient_by_central_subgroup(prod, std::vector<int>{std::min(z[0], z[1]), std::max(z[0], z[1])});
  q.group.mark_involution(q.projection[a0 * nb + b.identity()]);
  return std::move(q.group);
}

namespace {

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw UsageError("cyclic group order must be positive");
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : k == 1 ? "a" : "a" + std::to_string(k));
  std::vector<int> table = kernels::fill_table(n, [n](int r, int c) { return (r + c) % n; });
  FiniteGroup g = FiniteGroup::from_table(std::move(labels), std::move(table), 0);
  if (n % 2 == 0) g.mark_involution(n / 2);
  return g;
}

// r^k s^f at index k + 4 f; s r s = r^{-1}.
FiniteGroup dihedral8() {
  std::vector<std::string> labels{"1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  std::vector<int> table = kernels::fill_table(8, [](int x, int y) {
    const int k1 = x % 4, f1 = x / 4, k2 = y % 4, f2 = y / 4;
    const int k = ((k1 + (f1 ? -k2 : k2)) % 4 + 4) % 4;
    return k + 4 * (f1 ^ f2);
  });
  FiniteGroup g = FiniteGroup::from_table(std::move(labels), std::move(table), 0);
  g.mark_involution(2);
  return g;
}

// +-u for u in {1, i, j, k}; index 2 u + (sign is minus).
FiniteGroup quaternion8() {
  // unit products: (sign, unit) for u * v
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kNeg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<int> table = kernels::fill_table(8, [](int x, int y) {
    const int u = x / 2, v = y / 2;
    const int neg = (x % 2) ^ (y % 2) ^ kNeg[u][v];
    return 2 * kUnit[u][v] + neg;
  });
  FiniteGroup g = FiniteGroup::from_table(std::move(labels), std::move(table), 0);
  g.mark_involution(1);
  return g;
}

FiniteGroup viergroup() {
  std::vector<std::string> labels{"1", "a", "b", "ab"};
  std::vector<int> table = kernels::fill_table(4, [](int x, int y) { return x ^ y; });
  FiniteGroup g = FiniteGroup::from_table(std::move(labels), std::move(table), 0);
  g.mark_involution(1);
  return g;
}

}  // namespace

FiniteGroup make_standard_group(StandardGroup kind, int n) {
  switch (kind) {
    case StandardGroup::cyclic:
      return cyclic_group(n);
    case StandardGroup::dihedral8:
      if (n != 0 && n != 8) throw UsageError("only the dihedral group of order 8 is supported");
      return dihedral8();
    case StandardGroup::quaternion8:
      if (n != 0 && n != 8) throw UsageError("only the quaternion group of order 8 is supported");
      return quaternion8();
    case StandardGroup::viergroup:
      if (n != 0 && n != 4) throw UsageError("the viergroup has order 4");
      return viergroup();
  }
  throw UsageError("unsupported standard group");
}

bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& mapping) {
  if (mapping.size() != static_cast<std::size_t>(a.order())) return false;
  for (int m : mapping)
    if (m < 0 || m >= b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (mapping[a.mul(x, y)] != b.mul(mapping[x], mapping[y])) return false;
  return true;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::size_t covered = 1;
  while (covered < static_cast<std::size_t>(g.order())) {
    int best = -1;
    std::size_t best_size = covered;
    for (int x = 0; x < g.order(); ++x) {
      std::vector<int> trial = gens;
      trial.push_back(x);
      const std::size_t size = generated_subgroup(g, trial).size();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    covered = best_size;
  }
  return gens;
}

namespace {

// Backtracking over generator images. A node is consistent when the map
// defined on words in the assigned generators is well defined and injective.
class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& a, const FiniteGroup& b) : a_(a), b_(b) {
    gens_ = greedy_generators(a);
    const std::vector<int> orders_a = element_orders(a);
    const std::vector<int> orders_b = element_orders(b);
    for (int g : gens_) {
      std::vector<int> cand;
      for (int y = 0; y < b.order(); ++y)
        if (orders_b[y] == orders_a[g]) cand.push_back(y);
      candidates_.push_back(std::move(cand));
    }
  }

  std::size_t generator_count() const { return gens_.size(); }
  const std::vector<int>& first_candidates() const {
    static const std::vector<int> none;
    return gens_.empty() ? none : candidates_[0];
  }

  /// Search with the first generator image fixed (or the trivial group case).
  std::optional<std::vector<int>> search_from(std::optional<int> first_image) const {
    std::vector<int> images;
    if (gens_.empty()) return extend(images);
    images.push_back(*first_image);
    return dfs(images);
  }

 private:
  std::optional<std::vector<int>> dfs(std::vector<int>& images) const {
    auto mapping = extend(images);
    if (!mapping) return std::nullopt;
    if (images.size() == gens_.size()) return mapping;
    for (int y : candidates_[images.size()]) {
      images.push_back(y);
      if (auto found = dfs(images)) return found;
      images.pop_back();
    }
    return std::nullopt;
  }

  std::optional<std::vector<int>> extend(const std::vector<int>& images) const {
    std::vector<int> map(a_.order(), -1);
    std::vector<char> used(b_.order(), 0);
    map[a_.identity()] = b_.identity();
    used[b_.identity()] = 1;
    std::vector<int> queue{a_.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (std::size_t t = 0; t < images.size(); ++t) {
        const int y = a_.mul(x, gens_[t]);
        const int fy = b_.mul(map[x], images[t]);
        if (map[y] == -1) {
          if (used[fy]) return std::nullopt;
          map[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return std::nullopt;
        }
      }
    }
    return map;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<int> gens_;
  std::vector<std::vector<int>> candidates_;
};

bool quick_reject(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order() != b.order() || order_structure(a) != order_structure(b);
}

std::optional<GroupHom> certify(const FiniteGroup& a, const FiniteGroup& b, std::vector<int> mapping) {
  if (!is_homomorphism(a, b, mapping)) throw StructureError("isomorphism search produced a non-homomorphism");
  std::vector<int> sorted = mapping;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < b.order(); ++k)
    if (sorted[k] != k) throw StructureError("isomorphism search produced a non-bijection");
  return GroupHom{std::move(mapping), true};
}

}  // namespace

std::optional<GroupHom> find_isomorphism_serial(const FiniteGroup& a, const FiniteGroup& b) {
  if (quick_reject(a, b)) return std::nullopt;
  IsoSearch search(a, b);
  if (search.generator_count() == 0) return certify(a, b, *search.search_from(std::nullopt));
  for (int y : search.first_candidates()) {
    if (auto found = search.search_from(y)) return certify(a, b, std::move(*found));
  }
  return std::nullopt;
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (quick_reject(a, b)) return std::nullopt;
  IsoSearch search(a, b);
  if (search.generator_count() == 0) return certify(a, b, *search.search_from(std::nullopt));

  const std::vector<int>& first = search.first_candidates();
  const int m = static_cast<int>(first.size());
  std::vector<std::optional<std::vector<int>>> results(m);
  std::atomic<int> best{m};
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < m; ++c) {
    // a lower candidate already succeeded
    if (c > best.load(std::memory_order_relaxed)) continue;
    results[c] = search.search_from(first[c]);
    if (results[c]) {
      int cur = best.load();
      while (c < cur && !best.compare_exchange_weak(cur, c)) {
      }
    }
  }
  const int winner = best.load();
  if (winner == m) return std::nullopt;
  return certify(a, b, std::move(*results[winner]));
}

}  // namespace cpt
