#pragma once

#include <map>
#include <vector>

#include "quasik/gset.hpp"
#include "quasik/tuples.hpp"

namespace quasik {

/// X^sigma: points fixed by every entry of sigma, ascending.
struct FixedPointSet {
  CommutingTuple sigma;
  std::vector<int> points;
};

FixedPointSet fixed_points(const GSet& x, const CommutingTuple& sigma);

/// One isomorphism class of objects of the constant-loop groupoid: a tuple
/// representative, a centralizer orbit on its fixed points, and the
/// automorphism group of the orbit representative inside the centralizer.
struct SkeletonComponent {
  CommutingTuple sigma;
  int tuple_index = 0;
  int orbit_rep = 0;
  int orbit_size = 0;
  GroupPtr centralizer;
  GroupPtr stabilizer;
};

/// Skeleton of the groupoid with objects the fixed-point sets X^sigma over
/// commuting n-tuples and morphisms given by simultaneous conjugation. The
/// rotation factor acts trivially on constant loops and is not stored.
///
/// Components are ordered by (tuple index, least orbit point).
class LoopGroupoidSkeleton {
 public:
  LoopGroupoidSkeleton(GroupPtr g, GSet x, int n);

  const GroupPtr& group() const { return group_; }
  const GSet& gset() const { return gset_; }
  int n() const { return n_; }
  const std::vector<CommutingTuple>& tuples() const { return tuples_; }
  const std::vector<SkeletonComponent>& components() const { return components_; }

  /// Where an arbitrary object (rho, x) with x in X^rho lands: the component
  /// and an element k of G with k rho k^-1 = component tuple and
  /// k x = component orbit_rep. k is the least such element obtained by
  /// first conjugating rho to its representative, then moving inside the
  /// centralizer.
  struct Location {
    int component;
    Perm witness;
  };
  Location locate(const CommutingTuple& rho, int point) const;

 private:
  GroupPtr group_;
  GSet gset_;
  int n_;
  std::vector<CommutingTuple> tuples_;
  std::map<std::vector<Perm>, int> tuple_index_;
  std::vector<SkeletonComponent> components_;
  // per tuple, per point: component index (-1 off X^sigma) and the least
  // centralizer element moving the point to its orbit representative
  std::vector<std::vector<int>> point_component_;
  std::vector<std::vector<Perm>> point_witness_;
};

LoopGroupoidSkeleton lambda_skeleton(const GroupPtr& g, const GSet& x, int n);

/// Component count of the n-fold iterated loop construction computed by
/// recursion through centralizers: for each class representative s of G,
/// count the (n-1)-fold construction for C_G(s) acting on X^s; at depth 0
/// count orbits.
long long iterated_component_count(const GroupPtr& g, const GSet& x, int n);

}  // namespace quasik
