#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace quasik {

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

/// Euler phi.
int euler_phi(int m);

/// Element of Z[zeta_m], zeta_m = exp(2 pi i / m), in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1). Always stored reduced modulo Phi_m, so
/// equality is coefficient-wise.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor, std::int64_t value = 0);

  /// zeta_m^e for any integer e.
  static Cyclotomic root_power(int conductor, long long e);
  /// Reduces an arbitrary coefficient vector in powers of zeta_m.
  static Cyclotomic from_powers(int conductor, const std::vector<std::int64_t>& powers);
  /// Already-reduced coefficients; length must be phi(conductor).
  static Cyclotomic from_coefficients(int conductor, std::vector<std::int64_t> coeffs);

  int conductor() const { return m_; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  bool is_zero() const;
  /// The integer value, if this is a rational integer.
  bool is_integer(std::int64_t* value = nullptr) const;

  /// Complex conjugate: zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// Same number viewed in Z[zeta_M] for a multiple M of the conductor.
  Cyclotomic lift(int multiple) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(std::int64_t k);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, std::int64_t k) { return a *= k; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  int m_;
  std::vector<std::int64_t> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

}  // namespace quasik
