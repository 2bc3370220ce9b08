#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

namespace quasik {

/// Element of Z[q_1^{+-1}, ..., q_n^{+-1}], stored sparsely. Zero
/// coefficients are never stored, so equality is term-set equality.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, std::int64_t>;

  explicit LaurentPoly(int nvars = 0) : n_(nvars) {}

  static LaurentPoly constant(int nvars, std::int64_t c);
  static LaurentPoly monomial(Exponent e, std::int64_t c = 1);
  /// q_i, 0-based.
  static LaurentPoly variable(int nvars, int i);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// +-q^e: the units of the ring.
  bool is_unit() const;
  /// Single term.
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of q^e (0 if absent).
  std::int64_t coefficient(const Exponent& e) const;

  /// Multiplication by q^e.
  LaurentPoly shifted(const Exponent& e) const;
  void add_term(const Exponent& e, std::int64_t c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(std::int64_t k);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, std::int64_t k) { return a *= k; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void check(const LaurentPoly& o) const;

  int n_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// a / b when b divides a exactly; throws InvariantViolation otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Sparse matrix with Laurent polynomial entries.
struct LaurentMatrix {
  int rows = 0;
  int cols = 0;
  int nvars = 0;
  std::vector<std::map<int, LaurentPoly>> entries;  // per row: column -> nonzero entry

  LaurentMatrix() = default;
  LaurentMatrix(int r, int c, int n) : rows(r), cols(c), nvars(n), entries(static_cast<std::size_t>(r)) {}

  void add(int r, int c, const LaurentPoly& v);
  const LaurentPoly* at(int r, int c) const;
  /// this * other
  LaurentMatrix multiply(const LaurentMatrix& other) const;
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&);
};

/// Determinant of a dense square matrix by fraction-free elimination.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m, int nvars);

/// True iff the matrix is square and its determinant is a unit. The
/// determinant is taken block by block over the connected components of
/// the nonzero pattern.
bool is_invertible(const LaurentMatrix& m);

/// Square, with exactly one nonzero entry per row and column, each a unit.
bool is_monomial_permutation(const LaurentMatrix& m);

}  // namespace quasik
