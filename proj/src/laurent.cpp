#include "quasik/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "quasik/error.hpp"

namespace quasik {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("Laurent coefficient overflow");
  return r;
}

LaurentPoly::Exponent add_exp(const LaurentPoly::Exponent& a, const LaurentPoly::Exponent& b) {
  LaurentPoly::Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, std::int64_t c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponent e, std::int64_t c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(std::move(e));
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

std::int64_t LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  if (static_cast<int>(e.size()) != n_) throw InvariantViolation("Laurent shift has the wrong variable count");
  LaurentPoly r(n_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(add_exp(k, e), c);
  return r;
}

void LaurentPoly::add_term(const Exponent& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != n_) throw InvariantViolation("Laurent term has the wrong variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check(const LaurentPoly& o) const {
  if (o.n_ != n_)
    throw InvariantViolation("Laurent variable count mismatch (" + std::to_string(n_) + " vs " +
                             std::to_string(o.n_) + ")");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c = checked_mul(c, k);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(*this) *= -1; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check(b);
  LaurentPoly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), checked_mul(ca, cb));
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << '-';
    std::int64_t a = c < 0 ? -c : c;
    bool wrote = false;
    if (a != 1 || constant) {
      os << a;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << 'q' << (i + 1);
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
    first = false;
  }
  return os;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InvariantViolation("division by the zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly(a.nvars());
  // Leading terms (largest exponent in lex order, a group order on Z^n)
  // determine the quotient term by term, from the top down. The lowest
  // quotient exponent is trail(a) - trail(b); stop below it.
  const auto& bl = *b.terms().rbegin();
  const auto& bt = *b.terms().begin();
  LaurentPoly::Exponent floor_exp(a.terms().begin()->first.size());
  for (std::size_t i = 0; i < floor_exp.size(); ++i)
    floor_exp[i] = a.terms().begin()->first[i] - bt.first[i];

  LaurentPoly rem = a;
  LaurentPoly q(a.nvars());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    if (rc % bl.second != 0) throw InvariantViolation("Laurent division is not exact");
    LaurentPoly::Exponent e(re.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = re[i] - bl.first[i];
    if (e < floor_exp) throw InvariantViolation("Laurent division is not exact");
    LaurentPoly t = LaurentPoly::monomial(e, rc / bl.second);
    q += t;
    rem -= t * b;
  }
  return q;
}

void LaurentMatrix::add(int r, int c, const LaurentPoly& v) {
  if (v.is_zero()) return;
  auto& row = entries[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) row.erase(it);
}

const LaurentPoly* LaurentMatrix::at(int r, int c) const {
  const auto& row = entries[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? nullptr : &it->second;
}

LaurentMatrix LaurentMatrix::multiply(const LaurentMatrix& other) const {
  if (cols != other.rows) throw InvariantViolation("matrix shapes do not compose");
  LaurentMatrix out(rows, other.cols, nvars);
  for (int r = 0; r < rows; ++r)
    for (const auto& [k, a] : entries[static_cast<std::size_t>(r)])
      for (const auto& [c, b] : other.entries[static_cast<std::size_t>(k)]) out.add(r, c, a * b);
  return out;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m, int nvars) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(nvars, 1);
  LaurentPoly prev = LaurentPoly::constant(nvars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k].is_zero()) ++sel;
      if (sel == n) return LaurentPoly(nvars);
      std::swap(m[k], m[sel]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly(nvars);
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

bool is_invertible(const LaurentMatrix& m) {
  if (m.rows != m.cols) return false;
  const int n = m.rows;
  // union-find over rows (0..n-1) and columns (n..2n-1)
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& px = parent[static_cast<std::size_t>(x)];
      px = parent[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  };
  for (int r = 0; r < n; ++r)
    for (const auto& [c, v] : m.entries[static_cast<std::size_t>(r)])
      parent[static_cast<std::size_t>(find(r))] = find(n + c);

  std::map<int, std::pair<std::vector<int>, std::vector<int>>> blocks;
  for (int r = 0; r < n; ++r) blocks[find(r)].first.push_back(r);
  for (int c = 0; c < n; ++c) blocks[find(n + c)].second.push_back(c);
  for (const auto& [root, rc] : blocks) {
    const auto& [rs, cs] = rc;
    if (rs.size() != cs.size()) return false;
    std::vector<std::vector<LaurentPoly>> dense(rs.size(), std::vector<LaurentPoly>(cs.size(), LaurentPoly(m.nvars)));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (const auto* v = m.at(rs[i], cs[j])) dense[i][j] = *v;
    if (!determinant(std::move(dense), m.nvars).is_unit()) return false;
  }
  return true;
}

bool is_monomial_permutation(const LaurentMatrix& m) {
  if (m.rows != m.cols) return false;
  std::vector<int> col_hits(static_cast<std::size_t>(m.cols), 0);
  for (const auto& row : m.entries) {
    if (row.size() != 1 || !row.begin()->second.is_unit()) return false;
    ++col_hits[static_cast<std::size_t>(row.begin()->first)];
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

}  // namespace quasik
