#pragma once

#include <random>

#include "quasik/corpus.hpp"
#include "quasik/quasi_theory.hpp"

namespace support {

using namespace quasik;

inline GroupPtr group(const std::string& name) { return corpus_group(name); }

inline Perm cyc(int degree, std::vector<std::vector<int>> cycles) { return Perm::from_cycles(degree, cycles); }

inline GroupPtr generated(int degree, std::vector<Perm> gens) { return FiniteGroup::from_generators(degree, std::move(gens)); }

inline LaurentPoly random_poly(int nvars, std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(1, 3), coeff(-3, 3), expo(-2, 2);
  LaurentPoly p(nvars);
  for (int i = terms(rng); i > 0; --i) {
    LaurentPoly::Exponent e(static_cast<std::size_t>(nvars));
    for (auto& x : e) x = expo(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

inline ModuleElement random_element(const ModulePtr& m, std::mt19937& rng) {
  ModuleElement x(m);
  std::uniform_int_distribution<int> terms(1, 3), idx(0, m->rank() - 1);
  for (int i = terms(rng); i > 0; --i) x.add(idx(rng), random_poly(m->nvars(), rng));
  return x;
}

inline QTheoryClass random_class(const RingPtr& ring, std::mt19937& rng) {
  QTheoryClass x(ring);
  std::uniform_int_distribution<int> terms(1, 3), idx(0, ring->total_rank() - 1);
  for (int i = terms(rng); i > 0; --i) x.add(idx(rng), random_poly(ring->n(), rng));
  return x;
}

/// Corpus groups of order at most `max_order`.
inline std::vector<NamedGroup> corpus_upto(int max_order) {
  std::vector<NamedGroup> out;
  for (const auto& g : builtin_corpus())
    if (g.group->order() <= max_order) out.push_back(g);
  return out;
}

}  // namespace support
