#pragma once

#include <vector>

#include "quasik/group.hpp"

namespace quasik {

/// A finite left G-set given by the action of each group generator.
class GSet {
 public:
  /// Throws InputError unless the generator actions extend to an action.
  GSet(GroupPtr group, int points, std::vector<Perm> generator_action);

  static GSet point(GroupPtr g);
  /// G acting on its own `degree` points.
  static GSet natural(GroupPtr g);
  /// Left multiplication on G itself; point i is element i.
  static GSet regular(GroupPtr g);
  /// Left cosets G/H, cosets ordered by their least element.
  static GSet cosets(GroupPtr g, const FiniteGroup& h);
  /// phi^*X: the G-set where g acts as phi(g).
  static GSet pullback(const GroupHom& phi, const GSet& x);
  /// X x Y over direct_product(G, H); point (x, y) has index x * |Y| + y.
  static GSet product(GroupPtr product_group, const GSet& x, const GSet& y);

  const GroupPtr& group() const { return group_; }
  int points() const { return points_; }
  const std::vector<Perm>& generator_action() const { return generator_action_; }
  /// Action of the element with the given index.
  const Perm& action(int element_index) const {
    return element_action_[static_cast<std::size_t>(element_index)];
  }
  int act(int element_index, int point) const { return action(element_index)[point]; }
  int act(const Perm& g, int point) const;

  bool is_free() const;
  bool is_transitive() const;
  /// Orbit representatives (least point of each orbit), ascending.
  std::vector<int> orbit_representatives() const;

 private:
  GroupPtr group_;
  int points_;
  std::vector<Perm> generator_action_;
  std::vector<Perm> element_action_;
};

/// G x_H X with the embedding x -> [e, x].
struct InducedGSet {
  GSet gset;
  /// embedding[x] is the point [e, x].
  std::vector<int> embedding;
  /// Least element of each left coset of the image of H.
  std::vector<Perm> coset_representatives;
};

/// Balanced product G x_H X for an injective `incl : H -> G`. Point
/// [t_c, x] has index c * |X| + x where t_c is the c-th coset representative.
InducedGSet induced_gset(const GroupPtr& g, const GroupHom& incl, const GSet& x);

}  // namespace quasik
