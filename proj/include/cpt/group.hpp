#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cpt/errors.hpp"
#include "cpt/kernels.hpp"

namespace cpt {

/// Finite group given by its Cayley table.
///
/// table[r * n + c] is the index of (element r) * (element c). Construct through
/// from_table(), which rejects anything that is not a group table.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::string> labels, std::vector<int> table, int identity);

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * labels_.size() + b]; }
  int inverse(int a) const { return inverses_[a]; }

  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }
  /// Index of the element with this label, or -1.
  int index_of(const std::string& label) const;

  /// Distinguished central involution used by central products.
  std::optional<int> marked_involution() const { return marked_; }
  void mark_involution(int a);

 private:
  FiniteGroup() = default;

  std::vector<std::string> labels_;
  std::vector<int> table_;
  std::vector<int> inverses_;
  int identity_ = 0;
  std::optional<int> marked_;
};

/// Element order -> count, identity excluded.
using OrderStructure = std::map<int, int>;

OrderStructure order_structure(const FiniteGroup& g);
/// (number of elements of order 2, number of order 4).
std::pair<int, int> order_pair(const OrderStructure& os);
int element_order(const FiniteGroup& g, int a);
std::vector<int> element_orders(const FiniteGroup& g);
std::vector<int> center(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
int exponent(const FiniteGroup& g);
/// Witness pair (x, y) with xy != yx, if any.
std::optional<std::pair<int, int>> noncommuting_pair(const FiniteGroup& g);

struct GroupInvariants {
  int order = 0;
  OrderStructure orders;
  int center_size = 0;
  bool abelian = false;
  int exponent = 1;

  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};
GroupInvariants invariants(const FiniteGroup& g);

/// Subgroup generated by gens, as a sorted index list.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;  // element of g -> coset index
};

/// Cosets of a central subgroup z; each coset is labelled by its lowest-index member.
QuotientGroup quotient_by_central_subgroup(const FiniteGroup& g, const std::vector<int>& z);

/// (x, y) is stored at index x * |b| + y and labelled "(x,y)".
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// (a x b) / <(a0, b0)>. The result marks the image of (a0, 1) as its involution.
FiniteGroup central_product(const FiniteGroup& a, int a0, const FiniteGroup& b, int b0);

enum class StandardGroup { cyclic, dihedral8, quaternion8, viergroup };

/// Deterministically ordered small groups. Q8 and D8 mark their central
/// involution, the viergroup marks its first generator, even cyclic groups
/// mark their involution.
FiniteGroup make_standard_group(StandardGroup kind, int n = 0);

struct GroupHom {
  std::vector<int> mapping;  // domain index -> codomain index
  bool isomorphism = false;
};

bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& mapping);

/// Greedy generating set: repeatedly add the element that most enlarges the
/// generated subgroup (lowest index on ties).
std::vector<int> greedy_generators(const FiniteGroup& g);

/// Lexicographically least isomorphism (by the tuple of generator images) if
/// one exists. Parallel over the image of the first generator.
std::optional<GroupHom> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
/// Reference single-threaded search; same result as find_isomorphism.
std::optional<GroupHom> find_isomorphism_serial(const FiniteGroup& a, const FiniteGroup& b);

/// Closure of seed under mul, with elements sorted by less.
template <class T>
struct Closure {
  FiniteGroup group;
  std::vector<T> elements;
};

template <class T, class Mul, class Less, class Label>
Closure<T> generate_closure(const std::vector<T>& seed, const T& identity, Mul mul, std::size_t limit,
                            Less less, Label label) {
  std::set<T, Less> found(less);
  found.insert(identity);
  std::vector<T> frontier{identity};
  for (const T& s : seed) {
    if (found.insert(s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const T& x : frontier) {
      for (const T& s : seed) {
        T y = mul(x, s);
        if (found.insert(y).second) {
          if (found.size() > limit)
            throw GrowthError("closure exceeded limit of " + std::to_string(limit) + " elements");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  if (found.size() > limit) throw GrowthError("closure exceeded limit of " + std::to_string(limit) + " elements");

  std::vector<T> elements(found.begin(), found.end());
  const int n = static_cast<int>(elements.size());
  auto index_of = [&](const T& x) -> int {
    auto it = std::lower_bound(elements.begin(), elements.end(), x, less);
    if (it == elements.end() || less(x, *it)) return -1;
    return static_cast<int>(it - elements.begin());
  };
  std::vector<int> table =
      kernels::fill_table(n, [&](int r, int c) { return index_of(mul(elements[r], elements[c])); });

  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const T& x : elements) labels.push_back(label(x));
  int id = index_of(identity);
  return {FiniteGroup::from_table(std::move(labels), std::move(table), id), std::move(elements)};
}

}  // namespace cpt
