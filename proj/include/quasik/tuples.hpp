#pragma once

#include <vector>

#include "quasik/group.hpp"

namespace quasik {

/// Pairwise commuting elements (s_1, ..., s_n) of an ambient group, with
/// their multiplicative orders. In a finite group every element is
/// torsion, so no torsion condition is checked.
class CommutingTuple {
 public:
  /// Throws InputError if an entry lies outside `ambient` or two entries
  /// fail to commute.
  CommutingTuple(GroupPtr ambient, std::vector<Perm> entries);

  /// All-identity tuple of length n.
  static CommutingTuple identity(GroupPtr ambient, int n);

  const GroupPtr& ambient() const { return ambient_; }
  const std::vector<Perm>& entries() const { return entries_; }
  const Perm& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& orders() const { return orders_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool is_identity() const;

  /// Simultaneous conjugate g * s_i * g^-1.
  CommutingTuple conjugated_by(const Perm& g) const;

  friend bool operator==(const CommutingTuple& a, const CommutingTuple& b) {
    return a.entries_ == b.entries_;
  }
  friend auto operator<=>(const CommutingTuple& a, const CommutingTuple& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  GroupPtr ambient_;
  std::vector<Perm> entries_;
  std::vector<int> orders_;
};

/// One lexicographically minimal representative per simultaneous-conjugacy
/// orbit of commuting n-tuples, sorted.
std::vector<CommutingTuple> commuting_tuples(const GroupPtr& g, int n);

/// {g : g s_i = s_i g for all i}.
GroupPtr centralizer(const GroupPtr& g, const CommutingTuple& sigma);

/// {g : s_i g = g s'_i for all i}, sorted. Empty unless the tuples are
/// simultaneously conjugate; otherwise a coset of centralizer(s).
std::vector<Perm> transporter(const GroupPtr& g, const CommutingTuple& sigma,
                              const CommutingTuple& sigma_prime);

/// Representative of a tuple's orbit together with the least witness w
/// such that w * tuple * w^-1 equals the representative.
struct CanonicalForm {
  CommutingTuple representative;
  Perm witness;
};
CanonicalForm canonical_form(const GroupPtr& g, const CommutingTuple& tuple);

/// Tuple over direct_product(G, H) with entries (s_i, t_i).
CommutingTuple pair_tuple(const GroupPtr& product, const CommutingTuple& sigma,
                          const CommutingTuple& tau);

}  // namespace quasik
