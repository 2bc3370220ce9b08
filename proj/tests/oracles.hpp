#pragma once
// Brute-force reference computations used only by tests. They work on raw
// image arrays and never call the library's group machinery, so agreement
// with the library is a genuine cross-check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "quasik/cyclotomic.hpp"
#include "quasik/group.hpp"
#include "quasik/gset.hpp"

namespace oracle {

using Img = std::vector<int>;

inline Img compose(const Img& a, const Img& b) {
  Img out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

inline Img invert(const Img& a) {
  Img out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

inline Img raw(const quasik::Perm& p) { return Img(p.images().begin(), p.images().end()); }

/// Naive closure: multiply everything by everything until nothing new appears.
inline std::set<Img> closure(int degree, const std::vector<Img>& gens) {
  Img id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<Img> s{id};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Img> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (s.insert(compose(a, b)).second) grew = true;
  }
  return s;
}

inline std::vector<Img> elements(const quasik::FiniteGroup& g) {
  std::vector<Img> out;
  for (const auto& p : g.elements()) out.push_back(raw(p));
  return out;
}

inline std::vector<Img> generators(const quasik::FiniteGroup& g) {
  std::vector<Img> out;
  for (const auto& p : g.generators()) out.push_back(raw(p));
  return out;
}

inline bool commute(const Img& a, const Img& b) { return compose(a, b) == compose(b, a); }

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t roots() {
    std::size_t r = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) r += find(i) == i;
    return r;
  }
};

/// Sizes of conjugacy classes, sorted, via orbits under generator conjugation.
inline std::vector<int> class_sizes(const quasik::FiniteGroup& g) {
  auto els = elements(g);
  std::map<Img, std::size_t> index;
  for (std::size_t i = 0; i < els.size(); ++i) index[els[i]] = i;
  UnionFind uf(els.size());
  for (const auto& s : generators(g))
    for (std::size_t i = 0; i < els.size(); ++i) uf.unite(i, index.at(compose(compose(s, els[i]), invert(s))));
  std::map<std::size_t, int> sizes;
  for (std::size_t i = 0; i < els.size(); ++i) ++sizes[uf.find(i)];
  std::vector<int> out;
  for (auto [r, s] : sizes) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

/// Orbits of simultaneous conjugation on commuting k-tuples, counted by
/// union-find over generator conjugation on the full tuple set.
inline std::size_t commuting_tuple_orbits(const quasik::FiniteGroup& g, int k) {
  auto els = elements(g);
  const std::size_t n = els.size();
  std::map<Img, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[els[i]] = i;
  // every k-tuple of indices, encoded base n
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  std::vector<char> ok(total, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> t;
    for (std::size_t c = code, i = 0; i < static_cast<std::size_t>(k); ++i, c /= n) t.push_back(c % n);
    bool good = true;
    for (std::size_t a = 0; a < t.size() && good; ++a)
      for (std::size_t b = a + 1; b < t.size() && good; ++b) good = commute(els[t[a]], els[t[b]]);
    ok[code] = good;
  }
  std::vector<std::vector<std::size_t>> conj;  // per generator: element index -> conjugate index
  for (const auto& s : generators(g)) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = index.at(compose(compose(s, els[i]), invert(s)));
    conj.push_back(m);
  }
  UnionFind uf(total);
  for (std::size_t code = 0; code < total; ++code) {
    if (!ok[code]) continue;
    for (const auto& m : conj) {
      std::size_t image = 0, mult = 1;
      for (std::size_t c = code, i = 0; i < static_cast<std::size_t>(k); ++i, c /= n, mult *= n) image += m[c % n] * mult;
      uf.unite(code, image);
    }
  }
  std::size_t orbits = 0;
  for (std::size_t code = 0; code < total; ++code) orbits += ok[code] && uf.find(code) == code;
  return orbits;
}

/// Components of the constant-loop groupoid: orbits of G on pairs
/// (commuting k-tuple t, point x fixed by every entry of t).
inline std::size_t loop_components(const quasik::FiniteGroup& g, const quasik::GSet& x, int k) {
  auto els = elements(g);
  const std::size_t n = els.size();
  const std::size_t pts = static_cast<std::size_t>(x.points());
  std::map<Img, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[els[i]] = i;
  std::vector<Img> act;  // action of element i on X, computed from generator actions by BFS
  act.assign(n, {});
  Img id(pts);
  std::iota(id.begin(), id.end(), 0);
  Img gid(static_cast<std::size_t>(g.degree()));
  std::iota(gid.begin(), gid.end(), 0);
  const std::size_t start = index.at(gid);
  act[start] = id;
  auto gens = generators(g);
  std::vector<std::size_t> queue{start};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::size_t j = index.at(compose(gens[s], els[queue[q]]));
      if (act[j].empty()) {
        act[j] = compose(raw(x.generator_action()[s]), act[queue[q]]);
        queue.push_back(j);
      }
    }
  std::size_t total = pts;
  for (int i = 0; i < k; ++i) total *= n;
  auto decode = [&](std::size_t code) {
    std::vector<std::size_t> t;
    std::size_t c = code / pts;
    for (int i = 0; i < k; ++i, c /= n) t.push_back(c % n);
    return std::make_pair(t, code % pts);
  };
  auto encode = [&](const std::vector<std::size_t>& t, std::size_t p) {
    std::size_t code = 0, mult = 1;
    for (auto e : t) code += e * mult, mult *= n;
    return code * pts + p;
  };
  std::vector<char> ok(total, 0);
  for (std::size_t code = 0; code < total; ++code) {
    auto [t, p] = decode(code);
    bool good = true;
    for (std::size_t a = 0; a < t.size() && good; ++a) {
      good = act[t[a]][p] == static_cast<int>(p);
      for (std::size_t b = a + 1; b < t.size() && good; ++b) good = commute(els[t[a]], els[t[b]]);
    }
    ok[code] = good;
  }
  UnionFind uf(total);
  for (std::size_t code = 0; code < total; ++code) {
    if (!ok[code]) continue;
    auto [t, p] = decode(code);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::vector<std::size_t> ct;
      for (auto e : t) ct.push_back(index.at(compose(compose(gens[s], els[e]), invert(gens[s]))));
      uf.unite(code, encode(ct, static_cast<std::size_t>(x.generator_action()[s][static_cast<int>(p)])));
    }
  }
  std::size_t comps = 0;
  for (std::size_t code = 0; code < total; ++code) comps += ok[code] && uf.find(code) == code;
  return comps;
}

inline std::set<Img> centralizer(const quasik::FiniteGroup& g, const std::vector<Img>& tuple) {
  std::set<Img> out;
  for (const auto& e : elements(g)) {
    bool all = true;
    for (const auto& s : tuple) all = all && commute(e, s);
    if (all) out.insert(e);
  }
  return out;
}

/// {g : s_i g = g t_i}.
inline std::set<Img> transporter(const quasik::FiniteGroup& g, const std::vector<Img>& s, const std::vector<Img>& t) {
  std::set<Img> out;
  for (const auto& e : elements(g)) {
    bool all = true;
    for (std::size_t i = 0; i < s.size(); ++i) all = all && compose(s[i], e) == compose(e, t[i]);
    if (all) out.insert(e);
  }
  return out;
}

/// Floating-point value of a cyclotomic integer.
inline std::complex<double> numeric(const quasik::Cyclotomic& z) {
  std::complex<double> out = 0;
  const double m = z.conductor();
  for (std::size_t j = 0; j < z.coefficients().size(); ++j)
    out += static_cast<double>(z.coefficients()[j]) * std::polar(1.0, 2 * M_PI * static_cast<double>(j) / m);
  return out;
}

}  // namespace oracle
