#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "quasik/perm.hpp"

namespace quasik {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure cap for element enumeration. Reads QUASIK_MAX_ORDER, default 10000.
int max_group_order();

/// Conjugacy class partition by element index. Classes are sorted by
/// (size, representative) and each representative is the class minimum,
/// so class 0 is always the identity.
struct ClassPartition {
  std::vector<int> representative;
  std::vector<std::vector<int>> members;
  std::vector<int> class_of;

  int count() const { return static_cast<int>(representative.size()); }
  int size(int c) const { return static_cast<int>(members[static_cast<std::size_t>(c)].size()); }
};

/// A finite permutation group with its elements enumerated in lexicographic
/// order of image arrays. Index 0 is the identity.
class FiniteGroup {
 public:
  /// Closure of `gens` on `degree` points. Throws CapExceeded past `cap`.
  static GroupPtr from_generators(int degree, std::vector<Perm> gens, int cap = max_group_order());
  /// Subgroup from an element list that is already closed. A small
  /// generating set is picked greedily in element order.
  static GroupPtr from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

  /// -1 when `p` is not an element.
  int index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const { return orders_[static_cast<std::size_t>(a)]; }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  int exponent() const { return exponent_; }
  bool is_abelian() const;

  /// Indices of the generators.
  const std::vector<int>& generator_indices() const { return generator_index_; }

  const ClassPartition& classes() const;

  /// Canonical text key of the element set; equal keys mean equal groups.
  const std::string& key() const { return key_; }

 private:
  FiniteGroup() = default;
  void finish();

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<int> generator_index_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> cayley_;  // row-major, empty when the group is large
  std::vector<int> inverse_;
  std::vector<int> orders_;
  int exponent_ = 1;
  std::string key_;

  mutable std::once_flag classes_once_;
  mutable ClassPartition classes_;
};

/// Conjugacy classes as (representative, members) pairs.
struct ConjugacyClass {
  Perm representative;
  std::vector<Perm> elements;
};
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// Subgroup of all elements satisfying `keep` (which must define a subgroup).
template <class Pred>
GroupPtr subgroup_where(const FiniteGroup& g, Pred keep) {
  std::vector<Perm> els;
  for (int i = 0; i < g.order(); ++i)
    if (keep(i)) els.push_back(g.element(i));
  return FiniteGroup::from_elements(g.degree(), std::move(els));
}

/// Every subgroup of `g`, sorted by (order, element list).
std::vector<GroupPtr> all_subgroups(const FiniteGroup& g);

/// Homomorphism fixed by the images of the source generators.
class GroupHom {
 public:
  /// Throws InputError when the images do not respect the relations.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Perm> generator_images);

  static GroupHom identity(GroupPtr g);
  /// Inclusion of `sub` into `super` (same degree, element-wise).
  static GroupHom inclusion(GroupPtr sub, GroupPtr super);
  /// The hom sending everything to the identity.
  static GroupHom trivial(GroupPtr source, GroupPtr target);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Perm>& generator_images() const { return generator_images_; }

  Perm operator()(const Perm& g) const;
  int apply_index(int source_index) const { return map_[static_cast<std::size_t>(source_index)]; }
  bool is_injective() const;
  /// `next` after `this`.
  GroupHom then(const GroupHom& next) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Perm> generator_images_;
  std::vector<int> map_;
};

/// G x H acting on the disjoint union of the point sets. Generators are
/// those of G followed by those of H.
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Splits an element of direct_product(G, H) into its two factors.
std::pair<Perm, Perm> split_product(const Perm& gh, int left_degree);

}  // namespace quasik
