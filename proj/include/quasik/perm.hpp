#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace quasik {

/// Permutation of {0, ..., degree-1} stored as its image array.
///
/// Products compose right-to-left: (a * b)(x) = a(b(x)). Ordering is
/// lexicographic on the image arrays, which makes the identity the minimum
/// of any set of permutations of equal degree.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  Perm(std::initializer_list<int> images) : Perm(std::vector<int>(images)) {}

  static Perm identity(int degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Multiplicative order.
  int order() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

  /// Cycle notation, fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Conjugate g * p * g^-1.
Perm conjugate(const Perm& p, const Perm& g);

/// Permutation acting on the disjoint union of the two point sets.
Perm direct_sum(const Perm& a, const Perm& b);

}  // namespace quasik
