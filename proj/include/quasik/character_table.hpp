#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "quasik/cyclotomic.hpp"
#include "quasik/group.hpp"
#include "quasik/tuples.hpp"

namespace quasik {

using Fraction = boost::rational<std::int64_t>;

/// One irreducible character: its degree and one value per conjugacy class.
struct Character {
  int degree = 0;
  std::vector<Cyclotomic> values;
};

/// Exact character table of a finite group.
///
/// Row 0 is the trivial character; the remaining rows are sorted by
/// (degree, coefficient vectors of the values in class order). Columns follow
/// the group's class partition. Values live in Z[zeta_m] where m is the
/// group exponent.
class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<Character> rows);

  const GroupPtr& group() const { return group_; }
  const ClassPartition& classes() const { return group_->classes(); }
  int conductor() const { return group_->exponent(); }
  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<Character>& rows() const { return rows_; }
  const Character& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  /// Class of the inverse of each class.
  const std::vector<int>& inverse_class() const { return inverse_class_; }

  const Cyclotomic& value(int row, int element_index) const;

  /// (1/|G|) sum_g f(g) conj(h(g)) for class functions given per class.
  /// Throws InvariantViolation unless the result is an integer.
  std::int64_t inner_product(const std::vector<Cyclotomic>& f,
                             const std::vector<Cyclotomic>& h) const;

  /// Multiplicities of the irreducibles in a class function, as
  /// (row, multiplicity) pairs with nonzero multiplicity.
  std::vector<std::pair<int, std::int64_t>> decompose(const std::vector<Cyclotomic>& f) const;

 private:
  GroupPtr group_;
  std::vector<Character> rows_;
  std::vector<int> inverse_class_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Fresh computation, bypassing every cache.
TablePtr compute_character_table(const GroupPtr& g);

/// Cached lookup. Tables are memoized per element set; when QUASIK_CACHE
/// names a directory they are also persisted there as JSON.
TablePtr character_table(const GroupPtr& g);

/// Drops the in-memory cache (the disk cache is left alone).
void clear_character_table_cache();

/// Reference to one row of a table.
struct IrreducibleCharacter {
  TablePtr table;
  int index = 0;

  const GroupPtr& group() const { return table->group(); }
  int degree() const { return table->row(index).degree; }
  const Cyclotomic& value_at(const Perm& g) const;
};

/// k/l with chi(z) = chi(e) * zeta_l^k, 0 <= k < l, l = order(z).
/// Throws InputError if z is not central, InvariantViolation if no k fits.
Fraction central_scalar(const IrreducibleCharacter& lambda, const Perm& z);

/// Normalized rotation degrees (k_1/l_1, ..., k_n/l_n), each in [0, 1).
struct QDegree {
  std::vector<Fraction> fractions;

  int size() const { return static_cast<int>(fractions.size()); }
  bool is_zero() const;
  std::vector<std::string> to_strings() const;
  friend bool operator==(const QDegree&, const QDegree&) = default;
};

std::string to_string(const Fraction& f);

/// Component-wise central_scalar at the entries of `sigma`.
QDegree q_degree(const IrreducibleCharacter& lambda, const CommutingTuple& sigma);

/// lambda (x) mu decomposed over the irreducibles of the common group.
std::vector<std::pair<int, std::int64_t>> tensor_decompose(const IrreducibleCharacter& lambda,
                                                           const IrreducibleCharacter& mu);

/// mu o phi decomposed over the irreducibles of phi's source (rows of
/// character_table(phi.source())).
std::vector<std::pair<int, std::int64_t>> restrict_decompose(const IrreducibleCharacter& mu,
                                                             const GroupHom& phi);

}  // namespace quasik
