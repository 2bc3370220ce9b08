#include "quasik/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "quasik/error.hpp"

namespace quasik {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division by a monic polynomial.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {0};
  Poly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    std::int64_t c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

// Remainder modulo Phi_m, in place; result has length phi(m).
void reduce(Poly& p, int m) {
  const Poly& phi = cyclotomic_polynomial(m);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    std::int64_t c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * phi[j];
  }
  p.resize(d, 0);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  static std::recursive_mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  if (m < 1) throw InvariantViolation("cyclotomic conductor must be positive");
  // x^m - 1 divided by Phi_d for every proper divisor d of m
  Poly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return cache.emplace(m, std::move(p)).first->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

Cyclotomic::Cyclotomic(int conductor, std::int64_t value) : m_(conductor) {
  c_.assign(static_cast<std::size_t>(euler_phi(conductor)), 0);
  c_[0] = value;
}

Cyclotomic Cyclotomic::root_power(int conductor, long long e) {
  long long r = ((e % conductor) + conductor) % conductor;
  Poly p(static_cast<std::size_t>(r) + 1, 0);
  p[static_cast<std::size_t>(r)] = 1;
  return from_powers(conductor, p);
}

Cyclotomic Cyclotomic::from_powers(int conductor, const std::vector<std::int64_t>& powers) {
  Cyclotomic z(conductor);
  Poly p = powers;
  reduce(p, conductor);
  z.c_ = std::move(p);
  return z;
}

Cyclotomic Cyclotomic::from_coefficients(int conductor, std::vector<std::int64_t> coeffs) {
  if (static_cast<int>(coeffs.size()) != euler_phi(conductor))
    throw InputError("cyclotomic coefficient vector has the wrong length for conductor " +
                     std::to_string(conductor));
  Cyclotomic z(conductor);
  z.c_ = std::move(coeffs);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (auto v : c_)
    if (v) return false;
  return true;
}

bool Cyclotomic::is_integer(std::int64_t* value) const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  if (value) *value = c_[0];
  return true;
}

Cyclotomic Cyclotomic::conj() const {
  Poly p(static_cast<std::size_t>(m_), 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    p[(static_cast<std::size_t>(m_) - i) % static_cast<std::size_t>(m_)] += c_[i];
  return from_powers(m_, p);
}

Cyclotomic Cyclotomic::lift(int multiple) const {
  if (multiple % m_) throw InvariantViolation("lift target is not a multiple of the conductor");
  const std::size_t step = static_cast<std::size_t>(multiple / m_);
  Poly p((c_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return from_powers(multiple, p);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ != m_) throw InvariantViolation("cyclotomic conductor mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.m_ != m_) throw InvariantViolation("cyclotomic conductor mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(std::int64_t k) {
  for (auto& v : c_) v *= k;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ != b.m_) throw InvariantViolation("cyclotomic conductor mismatch");
  Poly p(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  }
  Cyclotomic r(a.m_);
  reduce(p, a.m_);
  r.c_ = std::move(p);
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  int l = std::lcm(a.m_, b.m_);
  return a.lift(l).c_ == b.lift(l).c_;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) {
  bool first = true;
  for (std::size_t i = 0; i < z.coefficients().size(); ++i) {
    auto c = z.coefficients()[i];
    if (!c) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << '-';
    auto a = c < 0 ? -c : c;
    if (i == 0 || a != 1) os << a;
    if (i > 0) os << "z" << z.conductor() << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << '0';
  return os;
}

}  // namespace quasik
