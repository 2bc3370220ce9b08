#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quasik/lambda_module.hpp"
#include "quasik/loop_groupoid.hpp"

namespace quasik {

/// QK_{n,G}(X): the product over skeleton components of the representation
/// rings of the stabilizer extensions, each a free Z[q^{+-1}]-module.
/// Basis elements are numbered globally: component c owns indices
/// [offset, offset + rank).
class QTheoryRing {
 public:
  struct Component {
    SkeletonComponent skeleton;
    ModulePtr module;
    int offset = 0;
  };

  QTheoryRing(GroupPtr g, GSet x, int n);

  const GroupPtr& group() const { return skeleton_.group(); }
  const GSet& gset() const { return skeleton_.gset(); }
  int n() const { return skeleton_.n(); }
  const LoopGroupoidSkeleton& skeleton() const { return skeleton_; }
  const std::vector<Component>& components() const { return components_; }
  const Component& component(int c) const { return components_[static_cast<std::size_t>(c)]; }
  int total_rank() const { return total_rank_; }

  /// (component, label) of a global basis index.
  std::pair<int, int> locate_basis(int global) const;

 private:
  LoopGroupoidSkeleton skeleton_;
  std::vector<Component> components_;
  int total_rank_ = 0;
};

using RingPtr = std::shared_ptr<const QTheoryRing>;

RingPtr qk_compute(const GroupPtr& g, const GSet& x, int n);

/// Element of QK_{n,G}(X), one module element per component.
class QTheoryClass {
 public:
  explicit QTheoryClass(RingPtr ring);

  static QTheoryClass unit(RingPtr ring);
  /// The class of the line bundle q_i (0-based) in every component.
  static QTheoryClass q(RingPtr ring, int i);
  /// p * V_label at one component.
  static QTheoryClass basis(RingPtr ring, int component, int label, const LaurentPoly& p);

  const RingPtr& ring() const { return ring_; }
  const std::vector<ModuleElement>& parts() const { return parts_; }
  const ModuleElement& part(int c) const { return parts_[static_cast<std::size_t>(c)]; }
  bool is_zero() const;
  /// Coordinate at a global basis index.
  LaurentPoly coordinate(int global) const;
  void add(int global, const LaurentPoly& p);

  QTheoryClass& operator+=(const QTheoryClass& o);
  QTheoryClass scaled(const LaurentPoly& p) const;
  friend QTheoryClass operator+(QTheoryClass a, const QTheoryClass& b) { return a += b; }
  friend bool operator==(const QTheoryClass& a, const QTheoryClass& b);

 private:
  void check(const QTheoryClass& o) const;

  RingPtr ring_;
  std::vector<ModuleElement> parts_;
};

QTheoryClass qk_mul(const QTheoryClass& x, const QTheoryClass& y);

/// Z[q^{+-1}]-linear map between two quasi-theory rings, as a matrix with
/// rows indexed by codomain basis and columns by domain basis.
struct QTheoryMap {
  std::string name;
  RingPtr domain;
  RingPtr codomain;
  LaurentMatrix matrix;

  QTheoryClass apply(const QTheoryClass& x) const;
  /// `next` after `this`.
  QTheoryMap then(const QTheoryMap& next) const;
};

/// Pullback along a group hom phi : G -> H and an equivariant map
/// f : X -> Y (X over G, Y over H, f(g x) = phi(g) f(x)), as a map
/// QK_{n,H}(Y) -> QK_{n,G}(X). Each target component locates its image
/// component by conjugation and restricts characters along the induced
/// stabilizer hom.
QTheoryMap pullback_map(const GroupHom& phi, const std::vector<int>& point_map, RingPtr domain,
                        RingPtr codomain, std::string name = "pullback");

/// phi^* : QK_{n,H}(X) -> QK_{n,G}(phi^* X).
QTheoryMap qk_restriction(const GroupHom& phi, const GSet& x, int n);

/// rho^G_H : QK_{n,G}(G x_H X) -> QK_{n,H}(X), the restriction followed by
/// pullback along x -> [e, x].
struct ChangeOfGroup {
  InducedGSet induced;
  QTheoryMap restriction;
  QTheoryMap embedding;
  QTheoryMap rho;
  /// Exact invertibility of rho over Z[q^{+-1}].
  bool bijective = false;
};

ChangeOfGroup change_of_group(const GroupPtr& g, const GroupHom& incl, const GSet& x, int n);

/// Kunneth map QK_{n,G}(X) (x) QK_{n,H}(Y) -> QK_{n,GxH}(X x Y). Column
/// i * rank(right) + j of the matrix is the image of V_i (x) V_j.
struct KunnethMap {
  RingPtr left;
  RingPtr right;
  RingPtr target;
  LaurentMatrix matrix;

  QTheoryClass apply(const QTheoryClass& x, const QTheoryClass& y) const;
  bool bijective() const;
};

KunnethMap kunneth(RingPtr left, RingPtr right);
QTheoryClass kunneth_map(const KunnethMap& k, const QTheoryClass& x, const QTheoryClass& y);

struct SplitCheck {
  int source_rank = 0;
  int target_rank = 0;
  bool holds = false;
};

/// For X over direct_product(G, H) with H acting trivially: Kunneth
/// QK_{n,G}(X) (x) QK_{n,H}(pt) -> QK_{n,GxH}(X) is an isomorphism.
/// Throws InputError when H acts nontrivially.
SplitCheck verify_trivial_action_split(const GroupPtr& g, const GroupPtr& h, const GSet& x, int n);

/// For free X: QK_{n,G}(X) lives only at the identity tuple and has rank
/// |X/G| = rank QK_{n,e}(X/G). Throws InputError when the action is not free.
SplitCheck verify_free_action(const GroupPtr& g, const GSet& x, int n);

/// Formal symbol q1^{k1/l1}...[chi_j] of a basis element.
std::string tate_symbol(const LambdaBasisElement& b);

}  // namespace quasik
