#include "quasik/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "quasik/error.hpp"
#include "quasik/io.hpp"

namespace quasik {

namespace {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major

i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 pow_mod(i64 b, i64 e, i64 p) {
  i64 r = 1 % p;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = static_cast<i64>((__int128)r * b % p);
    b = static_cast<i64>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

i64 inv_mod(i64 a, i64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 n = p - 1;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) factors.push_back(n);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 f : factors)
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // p == 2
}

// Basis (as rows) of the null space of a square matrix over F_p.
Mat null_space(Mat a, i64 p) {
  const std::size_t n = a.size();
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[row]);
    i64 iv = inv_mod(a[row][col], p);
    for (auto& v : a[row]) v = v * iv % p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      i64 f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = mod(a[r][c] - f * a[row][c], p);
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<std::size_t>(pivot_col[r])] = mod(-a[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (leading coefficient last) via Faddeev-LeVerrier;
// needs p > n.
Vec char_poly(const Mat& a, i64 p) {
  const std::size_t n = a.size();
  Vec c(n + 1, 0);
  c[n] = 1;
  Mat m(n, Vec(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        __int128 s = 0;
        for (std::size_t t = 0; t < n; ++t) s += (__int128)a[i][t] * m[t][j];
        next[i][j] = static_cast<i64>(s % p);
      }
      next[i][i] = (next[i][i] + c[n - k + 1]) % p;
    }
    m = std::move(next);
    __int128 tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) tr += (__int128)a[i][t] * m[t][i];
    i64 trace = static_cast<i64>(tr % p);
    c[n - k] = mod(-trace * inv_mod(static_cast<i64>(k), p), p);
  }
  return c;
}

// A subspace of F_p^r kept in reduced row echelon form so that coordinates
// of a member vector are its entries at the pivot positions.
struct Subspace {
  Mat rows;
  std::vector<std::size_t> pivots;
};

Subspace echelon(Mat rows, i64 p) {
  Subspace s;
  const std::size_t r = rows.empty() ? 0 : rows[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < r && row < rows.size(); ++col) {
    std::size_t sel = row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[row]);
    i64 iv = inv_mod(rows[row][col], p);
    for (auto& v : rows[row]) v = v * iv % p;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == row || rows[k][col] == 0) continue;
      i64 f = rows[k][col];
      for (std::size_t c = 0; c < r; ++c) rows[k][c] = mod(rows[k][c] - f * rows[row][c], p);
    }
    s.pivots.push_back(col);
    ++row;
  }
  rows.resize(row);
  s.rows = std::move(rows);
  return s;
}

struct ModularTable {
  bool ok = false;
  std::vector<Character> rows;
};

ModularTable try_prime(const FiniteGroup& g, i64 p) {
  ModularTable out;
  const ClassPartition& cp = g.classes();
  const std::size_t r = static_cast<std::size_t>(cp.count());
  const i64 order = g.order();
  const int m = g.exponent();

  // class_mats[i][j][k] = #{(x, y) in C_i x C_j : x y = rep_k}
  std::vector<Mat> class_mats(r, Mat(r, Vec(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    int z = cp.representative[k];
    for (int x = 0; x < g.order(); ++x) {
      int y = g.mul(g.inv(x), z);
      ++class_mats[static_cast<std::size_t>(cp.class_of[static_cast<std::size_t>(x)])]
                  [static_cast<std::size_t>(cp.class_of[static_cast<std::size_t>(y)])][k];
    }
  }

  // Split F_p^r into common eigenspaces of all class matrices.
  Mat ident(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) ident[i][i] = 1;
  std::vector<Subspace> spaces{echelon(ident, p)};
  for (std::size_t ci = 1; ci < r; ++ci) {
    bool all_lines = std::all_of(spaces.begin(), spaces.end(),
                                 [](const Subspace& s) { return s.rows.size() == 1; });
    if (all_lines) break;
    std::vector<Subspace> next;
    for (auto& sp : spaces) {
      const std::size_t dim = sp.rows.size();
      if (dim == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      const Mat& mat = class_mats[ci];
      // restricted[u][v]: coordinate u of M * basis_v
      Mat restricted(dim, Vec(dim, 0));
      for (std::size_t v = 0; v < dim; ++v) {
        for (std::size_t u = 0; u < dim; ++u) {
          std::size_t row = sp.pivots[u];
          __int128 s = 0;
          for (std::size_t t = 0; t < r; ++t) s += (__int128)mat[row][t] * sp.rows[v][t];
          restricted[u][v] = static_cast<i64>(s % p);
        }
      }
      Vec cp_poly = char_poly(restricted, p);
      std::size_t found = 0;
      for (i64 lam = 0; lam < p && found < dim; ++lam) {
        __int128 val = 0;
        for (std::size_t d = cp_poly.size(); d-- > 0;) val = (val * lam + cp_poly[d]) % p;
        if (val != 0) continue;
        Mat shifted = restricted;
        for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = mod(shifted[i][i] - lam, p);
        Mat ns = null_space(shifted, p);
        if (ns.empty()) continue;
        Mat vecs;
        for (const auto& coord : ns) {
          Vec v(r, 0);
          for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t t = 0; t < r; ++t) v[t] = (v[t] + coord[b] * sp.rows[b][t]) % p;
          vecs.push_back(std::move(v));
        }
        found += vecs.size();
        next.push_back(echelon(std::move(vecs), p));
      }
      if (found != dim) return out;
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) return out;

  const i64 z = pow_mod(primitive_root(p), (p - 1) / m, p);
  const i64 root_order = static_cast<i64>(std::sqrt(static_cast<double>(order))) + 1;
  i64 degree_square_sum = 0;

  for (const auto& sp : spaces) {
    Vec omega = sp.rows[0];
    if (omega[0] == 0) return out;
    i64 norm = inv_mod(omega[0], p);
    for (auto& w : omega) w = w * norm % p;

    // chi(1)^2 * sum_k omega_k omega_{k^-1} / |C_k| = |G|
    i64 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t kinv = static_cast<std::size_t>(
          cp.class_of[static_cast<std::size_t>(g.inv(cp.representative[k]))]);
      s = (s + omega[k] * omega[kinv] % p * inv_mod(cp.size(static_cast<int>(k)), p)) % p;
    }
    if (s == 0) return out;
    i64 target = order % p * inv_mod(s, p) % p;
    i64 deg = 0;
    for (i64 d = 1; d <= root_order; ++d)
      if (d * d % p == target) {
        deg = d;
        break;
      }
    if (deg == 0) return out;
    degree_square_sum += deg * deg;

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = omega[k] * deg % p * inv_mod(cp.size(static_cast<int>(k)), p) % p;

    Character ch;
    ch.degree = static_cast<int>(deg);
    for (std::size_t k = 0; k < r; ++k) {
      // eigenvalue multiplicities of rep_k recovered from chi on its powers
      const int x = cp.representative[k];
      const int o = g.element_order(x);
      const int step = m / o;
      std::vector<i64> chi_pow(static_cast<std::size_t>(o));
      int xt = 0;
      for (int t = 0; t < o; ++t) {
        chi_pow[static_cast<std::size_t>(t)] = chi[static_cast<std::size_t>(cp.class_of[static_cast<std::size_t>(xt)])];
        xt = g.mul(xt, x);
      }
      const i64 w = pow_mod(z, step, p);
      const i64 inv_o = inv_mod(o, p);
      std::vector<i64> powers(static_cast<std::size_t>(m), 0);
      i64 total = 0;
      for (int j = 0; j < o; ++j) {
        i64 acc = 0;
        const i64 wj = pow_mod(inv_mod(w, p), j, p);
        i64 wjt = 1;
        for (int t = 0; t < o; ++t) {
          acc = (acc + chi_pow[static_cast<std::size_t>(t)] * wjt) % p;
          wjt = wjt * wj % p;
        }
        i64 mult = acc * inv_o % p;
        if (mult > deg) return out;
        total += mult;
        powers[static_cast<std::size_t>(j * step)] = mult;
      }
      if (total != deg) return out;
      ch.values.push_back(Cyclotomic::from_powers(m, powers));
    }
    out.rows.push_back(std::move(ch));
  }
  if (degree_square_sum != order) return out;
  out.ok = true;
  return out;
}

bool is_trivial_row(const Character& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](const Cyclotomic& v) {
    std::int64_t x = 0;
    return v.is_integer(&x) && x == 1;
  });
}

struct TableCache {
  std::shared_mutex mu;
  std::map<std::string, TablePtr> tables;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

std::filesystem::path disk_cache_path(const FiniteGroup& g) {
  const char* dir = std::getenv("QUASIK_CACHE");
  if (!dir || !*dir) return {};
  std::ostringstream name;
  name << std::hex << std::hash<std::string>{}(g.key()) << ".json";
  return std::filesystem::path(dir) / name.str();
}

}  // namespace

CharacterTable::CharacterTable(GroupPtr group, std::vector<Character> rows)
    : group_(std::move(group)), rows_(std::move(rows)) {
  const auto& cp = group_->classes();
  for (int c = 0; c < cp.count(); ++c)
    inverse_class_.push_back(
        cp.class_of[static_cast<std::size_t>(group_->inv(cp.representative[static_cast<std::size_t>(c)]))]);
  for (const auto& row : rows_)
    if (static_cast<int>(row.values.size()) != cp.count())
      throw InvariantViolation("character row has the wrong number of class values");
}

const Cyclotomic& CharacterTable::value(int row, int element_index) const {
  return rows_[static_cast<std::size_t>(row)]
      .values[static_cast<std::size_t>(classes().class_of[static_cast<std::size_t>(element_index)])];
}

std::int64_t CharacterTable::inner_product(const std::vector<Cyclotomic>& f,
                                           const std::vector<Cyclotomic>& h) const {
  const auto& cp = classes();
  int m = 1;
  for (const auto& v : f) m = std::lcm(m, v.conductor());
  for (const auto& v : h) m = std::lcm(m, v.conductor());
  Cyclotomic sum(m);
  for (int k = 0; k < cp.count(); ++k) {
    // conj(h(g)) = h(g^-1)
    const auto& a = f[static_cast<std::size_t>(k)];
    const auto& b = h[static_cast<std::size_t>(inverse_class_[static_cast<std::size_t>(k)])];
    Cyclotomic term = (a.conductor() == m ? a : a.lift(m)) * (b.conductor() == m ? b : b.lift(m));
    sum += term * cp.size(k);
  }
  std::int64_t total = 0;
  if (!sum.is_integer(&total) || total % group_->order() != 0)
    throw InvariantViolation("character inner product is not an integer");
  return total / group_->order();
}

std::vector<std::pair<int, std::int64_t>> CharacterTable::decompose(
    const std::vector<Cyclotomic>& f) const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (int i = 0; i < size(); ++i) {
    std::int64_t mult = inner_product(f, rows_[static_cast<std::size_t>(i)].values);
    if (mult < 0) throw InvariantViolation("negative multiplicity in a character decomposition");
    if (mult) out.emplace_back(i, mult);
  }
  return out;
}

TablePtr compute_character_table(const GroupPtr& g) {
  const i64 m = g->exponent();
  i64 p = m + 1;
  const i64 floor_p = 2 * static_cast<i64>(g->order()) + 1;
  while (p <= floor_p) p += m;
  for (int attempt = 0; attempt < 64; ++attempt, p += m) {
    while (!is_prime(p)) p += m;
    ModularTable mt = try_prime(*g, p);
    if (!mt.ok) continue;
    auto rows = std::move(mt.rows);
    std::sort(rows.begin(), rows.end(), [](const Character& a, const Character& b) {
      bool ta = is_trivial_row(a), tb = is_trivial_row(b);
      if (ta != tb) return ta;
      if (a.degree != b.degree) return a.degree < b.degree;
      for (std::size_t k = 0; k < a.values.size(); ++k)
        if (a.values[k].coefficients() != b.values[k].coefficients())
          return a.values[k].coefficients() < b.values[k].coefficients();
      return false;
    });
    return std::make_shared<const CharacterTable>(g, std::move(rows));
  }
  throw InvariantViolation("character table computation failed for every candidate prime");
}

TablePtr character_table(const GroupPtr& g) {
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    if (auto it = c.tables.find(g->key()); it != c.tables.end()) return it->second;
  }
  TablePtr table;
  const auto path = disk_cache_path(*g);
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    try {
      auto j = nlohmann::json::parse(in);
      if (j.value("key", std::string()) == g->key()) table = table_from_json(g, j);
    } catch (const std::exception&) {
      table.reset();  // unreadable entry: recompute and overwrite
    }
  }
  if (!table) {
    table = compute_character_table(g);
    if (!path.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(path.parent_path(), ec);
      auto j = table_to_json(*table);
      j["key"] = g->key();
      auto tmp = path;
      tmp += ".tmp";
      {
        std::ofstream out(tmp);
        out << j.dump();
      }
      std::filesystem::rename(tmp, path, ec);
    }
  }
  std::unique_lock lock(c.mu);
  return c.tables.emplace(g->key(), table).first->second;
}

void clear_character_table_cache() {
  auto& c = cache();
  std::unique_lock lock(c.mu);
  c.tables.clear();
}

const Cyclotomic& IrreducibleCharacter::value_at(const Perm& g) const {
  int idx = group()->index_of(g);
  if (idx < 0) throw InputError("element " + g.to_cycle_string() + " is not in the character's group");
  return table->value(index, idx);
}

Fraction central_scalar(const IrreducibleCharacter& lambda, const Perm& z) {
  const FiniteGroup& g = *lambda.group();
  int zi = g.index_of(z);
  if (zi < 0) throw InputError("central_scalar: element is not in the group");
  for (int s : g.generator_indices())
    if (!g.commute(zi, s)) throw InputError("central_scalar: element " + z.to_cycle_string() + " is not central");
  const int l = g.element_order(zi);
  const int m = lambda.table->conductor();
  const Cyclotomic& value = lambda.table->value(lambda.index, zi);
  for (int k = 0; k < l; ++k) {
    Cyclotomic expect = Cyclotomic::root_power(m, static_cast<long long>(k) * (m / l)) * lambda.degree();
    if (expect == value) return Fraction(k, l);
  }
  throw InvariantViolation("central element does not act by a root-of-unity scalar");
}

bool QDegree::is_zero() const {
  return std::all_of(fractions.begin(), fractions.end(), [](const Fraction& f) { return f.numerator() == 0; });
}

std::string to_string(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

std::vector<std::string> QDegree::to_strings() const {
  std::vector<std::string> out;
  for (const auto& f : fractions) out.push_back(to_string(f));
  return out;
}

QDegree q_degree(const IrreducibleCharacter& lambda, const CommutingTuple& sigma) {
  QDegree q;
  for (const auto& s : sigma.entries()) q.fractions.push_back(central_scalar(lambda, s));
  return q;
}

std::vector<std::pair<int, std::int64_t>> tensor_decompose(const IrreducibleCharacter& lambda,
                                                           const IrreducibleCharacter& mu) {
  if (lambda.table->group()->key() != mu.table->group()->key())
    throw InputError("tensor_decompose: characters of different groups");
  const auto& a = lambda.table->row(lambda.index).values;
  const auto& b = mu.table->row(mu.index).values;
  std::vector<Cyclotomic> prod;
  for (std::size_t k = 0; k < a.size(); ++k) prod.push_back(a[k] * b[k]);
  return lambda.table->decompose(prod);
}

std::vector<std::pair<int, std::int64_t>> restrict_decompose(const IrreducibleCharacter& mu,
                                                             const GroupHom& phi) {
  if (phi.target()->key() != mu.group()->key())
    throw InputError("restrict_decompose: character is not over the hom target");
  TablePtr source_table = character_table(phi.source());
  const auto& cp = phi.source()->classes();
  std::vector<Cyclotomic> f;
  for (int c = 0; c < cp.count(); ++c)
    f.push_back(mu.table->value(mu.index, phi.apply_index(cp.representative[static_cast<std::size_t>(c)])));
  return source_table->decompose(f);
}

}  // namespace quasik
