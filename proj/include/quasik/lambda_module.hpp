#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "quasik/character_table.hpp"
#include "quasik/laurent.hpp"

namespace quasik {

/// Basis element V_lambda of the representation ring of the extension of
/// C by R^n, labelled by an irreducible of C and its normalized q-degree.
struct LambdaBasisElement {
  int character_index = 0;
  int char_degree = 1;
  QDegree qdeg;
};

/// One basis element per irreducible of `c`, in character-table order.
/// Every entry of `sigma` must be a central element of `c`.
std::vector<LambdaBasisElement> lambda_basis(const GroupPtr& c, const CommutingTuple& sigma);

/// The representation ring of C x R^n / <(s_i, -e_i)> as a free
/// Z[q^{+-1}]-module of rank |Irr(C)|, with multiplication
///   V_a V_b = sum_nu c^nu_ab q^{d} V_nu,   d_i = k_i(a) + k_i(b) - k_i(nu),
/// where the k are the normalized degrees. Immutable; product data is
/// memoized behind a mutex.
class LambdaModule {
 public:
  struct Product {
    int nu;
    std::int64_t mult;
    LaurentPoly::Exponent shift;
  };

  LambdaModule(GroupPtr c, CommutingTuple sigma);

  const GroupPtr& group() const { return group_; }
  const CommutingTuple& sigma() const { return sigma_; }
  const TablePtr& table() const { return table_; }
  int nvars() const { return sigma_.size(); }
  const std::vector<LambdaBasisElement>& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }

  /// Expansion of V_a * V_b. Throws InvariantViolation if a shift is not integral.
  std::vector<Product> product(int a, int b) const;

 private:
  GroupPtr group_;
  CommutingTuple sigma_;
  TablePtr table_;
  std::vector<LambdaBasisElement> basis_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::vector<Product>> products_;
};

using ModulePtr = std::shared_ptr<const LambdaModule>;

/// Element of a LambdaModule: Laurent coordinates on the basis.
class ModuleElement {
 public:
  explicit ModuleElement(ModulePtr module) : module_(std::move(module)) {}

  /// p * V_i.
  static ModuleElement basis(ModulePtr module, int i);
  static ModuleElement basis(ModulePtr module, int i, const LaurentPoly& p);

  const ModulePtr& module() const { return module_; }
  const std::map<int, LaurentPoly>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  LaurentPoly coordinate(int i) const;
  void add(int i, const LaurentPoly& p);

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  /// Scalar multiplication by p in Z[q^{+-1}].
  ModuleElement scaled(const LaurentPoly& p) const;
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

 private:
  void check(const ModuleElement& o) const;

  ModulePtr module_;
  std::map<int, LaurentPoly> coords_;
};

ModuleElement module_mul(const ModuleElement& x, const ModuleElement& y);

/// p * V_triv.
ModuleElement pi_star(const LaurentPoly& p, const ModulePtr& module);

inline int rank(const LambdaModule& m) { return m.rank(); }

}  // namespace quasik
