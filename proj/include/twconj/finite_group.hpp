#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twconj/errors.hpp"

namespace twconj {

using Elem = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

constexpr int kDefaultOrderCap = 5040;

/// A finite group as a validated Cayley table over element indices
/// 0..order-1, with the identity canonicalized to index 0. Immutable
/// after construction and safe to share across threads.
class FiniteGroup {
 public:
  static constexpr Elem kIdentity = 0;

  /// Validates and canonicalizes a raw multiplication table. Checks run
  /// in the order: closure (entry range), identity, exhaustive
  /// associativity, inverses. Throws Error naming the first witness.
  static GroupPtr from_cayley_table(const std::vector<std::vector<Elem>>& table,
                                    std::vector<std::string> names = {});

  /// Internal factory for tables already known to have identity at 0.
  /// Generators are taken as given (validated to generate); empty means
  /// "find greedily".
  static GroupPtr from_table_with_generators(std::vector<Elem> flat_table,
                                             int order,
                                             std::vector<std::string> names,
                                             std::vector<Elem> generators);

  int order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  int element_order(Elem a) const { return element_order_[a]; }
  bool is_abelian() const { return abelian_; }

  const std::vector<Elem>& generators() const { return generators_; }
  /// words()[x] is a sequence of generator positions whose left-to-right
  /// product equals x; words()[identity] is empty.
  const std::vector<std::vector<int>>& words() const { return words_; }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(Elem a) const;

  bool same_table(const FiniteGroup& other) const;

 private:
  FiniteGroup() = default;

  int order_ = 0;
  std::vector<Elem> table_;  // row-major order x order
  std::vector<Elem> inv_;
  std::vector<int> element_order_;
  std::vector<std::string> names_;
  std::vector<Elem> generators_;
  std::vector<std::vector<int>> words_;
  bool abelian_ = false;
};

/// Sorted element subset of a parent group, closed under mul and inv.
class Subgroup {
 public:
  /// Validates closure, identity membership and inverses.
  Subgroup(GroupPtr parent, std::vector<Elem> elements);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  /// Subgroup generated by the seed elements.
  static Subgroup generated(GroupPtr parent, const std::vector<Elem>& seed);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(Elem x) const;
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return order() == parent_->order(); }
  bool is_normal() const;

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && elements_ == other.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<Elem> elements_;
};

struct GroupHom;

/// Direct product with lexicographic element encoding (first factor most
/// significant) plus the canonical inclusions and projections.
struct ProductGroup {
  std::vector<GroupPtr> factors;
  GroupPtr group;
  std::vector<GroupHom> embed;    // e_i : factors[i] -> group
  std::vector<GroupHom> project;  // pi_i : group -> factors[i]

  int arity() const { return static_cast<int>(factors.size()); }
  Elem encode(const std::vector<Elem>& tuple) const;
  std::vector<Elem> decode(Elem x) const;
};

GroupPtr preset(const std::string& name, const std::vector<int>& params = {},
                int order_cap = kDefaultOrderCap);
/// Parses "cyclic:4", "dihedral:6", "quaternion8", ... into a preset call.
GroupPtr preset_from_spec(const std::string& spec, int order_cap = kDefaultOrderCap);

ProductGroup direct_product(const std::vector<GroupPtr>& factors,
                            int order_cap = kDefaultOrderCap);

Subgroup center(const GroupPtr& g);
std::vector<std::vector<Elem>> conjugacy_classes(const GroupPtr& g);
bool internal_direct_product_check(const GroupPtr& g, const std::vector<Subgroup>& parts);

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// The named groups sweeps and verification suites run over.
struct CatalogEntry {
  std::string name;
  GroupPtr group;
};
std::vector<CatalogEntry> catalog_groups(int max_order);

}  // namespace twconj
