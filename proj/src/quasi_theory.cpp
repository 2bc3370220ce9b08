#include "quasik/quasi_theory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "quasik/error.hpp"

namespace quasik {

namespace {

LaurentPoly::Exponent integral_shift(const std::vector<Fraction>& plus_a, const std::vector<Fraction>& plus_b,
                                     const std::vector<Fraction>& minus) {
  LaurentPoly::Exponent e;
  for (std::size_t i = 0; i < minus.size(); ++i) {
    Fraction d = -minus[i];
    if (!plus_a.empty()) d += plus_a[i];
    if (!plus_b.empty()) d += plus_b[i];
    if (d.denominator() != 1) throw InvariantViolation("non-integral q-shift between basis elements");
    e.push_back(static_cast<int>(d.numerator()));
  }
  return e;
}

}  // namespace

QTheoryRing::QTheoryRing(GroupPtr g, GSet x, int n) : skeleton_(std::move(g), std::move(x), n) {
  for (const auto& sc : skeleton_.components()) {
    auto module = std::make_shared<const LambdaModule>(sc.stabilizer, sc.sigma);
    components_.push_back({sc, module, total_rank_});
    total_rank_ += module->rank();
  }
}

std::pair<int, int> QTheoryRing::locate_basis(int global) const {
  auto it = std::upper_bound(components_.begin(), components_.end(), global,
                             [](int v, const Component& c) { return v < c.offset; });
  if (it == components_.begin() || global >= total_rank_) throw InvariantViolation("basis index out of range");
  --it;
  return {static_cast<int>(it - components_.begin()), global - it->offset};
}

RingPtr qk_compute(const GroupPtr& g, const GSet& x, int n) {
  if (n < 1) throw InputError("n must be at least 1");
  if (x.group()->key() != g->key()) throw InputError("G-set is over a different group");
  // Equal inputs share one ring, so maps built separately still compose.
  std::string key = g->key() + "|" + std::to_string(n) + "|";
  for (const auto& a : x.group()->generators()) key += a.to_cycle_string() + ";";
  key += "|" + std::to_string(x.points()) + "|";
  for (const auto& a : x.generator_action()) {
    for (int i : a.images()) key += std::to_string(i) + ",";
    key += ";";
  }
  static std::mutex mutex;
  static std::map<std::string, std::weak_ptr<const QTheoryRing>> rings;
  {
    std::lock_guard lock(mutex);
    if (auto it = rings.find(key); it != rings.end())
      if (auto ring = it->second.lock()) return ring;
  }
  auto ring = std::make_shared<const QTheoryRing>(g, x, n);
  std::lock_guard lock(mutex);
  auto& slot = rings[key];
  if (auto existing = slot.lock()) return existing;
  slot = ring;
  return ring;
}

QTheoryClass::QTheoryClass(RingPtr ring) : ring_(std::move(ring)) {
  for (const auto& c : ring_->components()) parts_.emplace_back(c.module);
}

QTheoryClass QTheoryClass::unit(RingPtr ring) {
  QTheoryClass x(ring);
  for (std::size_t c = 0; c < x.parts_.size(); ++c)
    x.parts_[c] = pi_star(LaurentPoly::constant(ring->n(), 1), ring->components()[c].module);
  return x;
}

QTheoryClass QTheoryClass::q(RingPtr ring, int i) {
  QTheoryClass x(ring);
  for (std::size_t c = 0; c < x.parts_.size(); ++c)
    x.parts_[c] = pi_star(LaurentPoly::variable(ring->n(), i), ring->components()[c].module);
  return x;
}

QTheoryClass QTheoryClass::basis(RingPtr ring, int component, int label, const LaurentPoly& p) {
  QTheoryClass x(ring);
  x.parts_[static_cast<std::size_t>(component)].add(label, p);
  return x;
}

bool QTheoryClass::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const ModuleElement& m) { return m.is_zero(); });
}

LaurentPoly QTheoryClass::coordinate(int global) const {
  auto [c, l] = ring_->locate_basis(global);
  return parts_[static_cast<std::size_t>(c)].coordinate(l);
}

void QTheoryClass::add(int global, const LaurentPoly& p) {
  auto [c, l] = ring_->locate_basis(global);
  parts_[static_cast<std::size_t>(c)].add(l, p);
}

void QTheoryClass::check(const QTheoryClass& o) const {
  if (ring_ != o.ring_) throw InputError("quasi-theory classes belong to different rings");
}

QTheoryClass& QTheoryClass::operator+=(const QTheoryClass& o) {
  check(o);
  for (std::size_t c = 0; c < parts_.size(); ++c) parts_[c] += o.parts_[c];
  return *this;
}

QTheoryClass QTheoryClass::scaled(const LaurentPoly& p) const {
  QTheoryClass r(ring_);
  for (std::size_t c = 0; c < parts_.size(); ++c) r.parts_[c] = parts_[c].scaled(p);
  return r;
}

bool operator==(const QTheoryClass& a, const QTheoryClass& b) {
  a.check(b);
  return a.parts_ == b.parts_;
}

QTheoryClass qk_mul(const QTheoryClass& x, const QTheoryClass& y) {
  if (x.ring() != y.ring()) throw InputError("qk_mul: classes belong to different rings");
  QTheoryClass r(x.ring());
  for (int c = 0; c < static_cast<int>(x.parts().size()); ++c) {
    auto prod = module_mul(x.part(c), y.part(c));
    for (const auto& [l, p] : prod.coords()) r.add(x.ring()->component(c).offset + l, p);
  }
  return r;
}

QTheoryClass QTheoryMap::apply(const QTheoryClass& x) const {
  if (x.ring() != domain) throw InputError("map applied to a class outside its domain");
  QTheoryClass out(codomain);
  for (int r = 0; r < matrix.rows; ++r) {
    LaurentPoly acc(codomain->n());
    for (const auto& [c, v] : matrix.entries[static_cast<std::size_t>(r)]) acc += v * x.coordinate(c);
    out.add(r, acc);
  }
  return out;
}

QTheoryMap QTheoryMap::then(const QTheoryMap& next) const {
  if (next.domain != codomain) throw InputError("maps do not compose");
  return {name + " then " + next.name, domain, next.codomain, next.matrix.multiply(matrix)};
}

QTheoryMap pullback_map(const GroupHom& phi, const std::vector<int>& point_map, RingPtr domain,
                        RingPtr codomain, std::string name) {
  const auto& G = phi.source();
  const auto& H = phi.target();
  if (codomain->group()->key() != G->key() || domain->group()->key() != H->key())
    throw InputError("pullback: rings do not match the homomorphism");
  if (codomain->n() != domain->n()) throw InputError("pullback: rings have different n");
  const GSet& X = codomain->gset();
  const GSet& Y = domain->gset();
  if (static_cast<int>(point_map.size()) != X.points()) throw InputError("pullback: point map has the wrong size");
  for (int s : G->generator_indices())
    for (int p = 0; p < X.points(); ++p)
      if (point_map[static_cast<std::size_t>(X.act(s, p))] !=
          Y.act(phi.apply_index(s), point_map[static_cast<std::size_t>(p)]))
        throw InputError("pullback: point map is not equivariant");

  const int n = codomain->n();
  QTheoryMap out{std::move(name), domain, codomain,
                 LaurentMatrix(codomain->total_rank(), domain->total_rank(), n)};
  for (const auto& cc : codomain->components()) {
    const auto& sc = cc.skeleton;
    std::vector<Perm> image_entries;
    for (const auto& s : sc.sigma.entries()) image_entries.push_back(phi(s));
    CommutingTuple rho(H, std::move(image_entries));
    auto loc = domain->skeleton().locate(rho, point_map[static_cast<std::size_t>(sc.orbit_rep)]);
    const auto& dc = domain->component(loc.component);
    const Perm k = loc.witness;
    const Perm k_inv = k.inverse();

    std::vector<Perm> gen_images;
    for (const auto& s : sc.stabilizer->generators()) gen_images.push_back(k * phi(s) * k_inv);
    GroupHom stab_hom(sc.stabilizer, dc.skeleton.stabilizer, std::move(gen_images));

    const auto& target_basis = cc.module->basis();
    const auto& source_basis = dc.module->basis();
    for (int mu = 0; mu < dc.module->rank(); ++mu) {
      for (auto [lambda, mult] : restrict_decompose({dc.module->table(), mu}, stab_hom)) {
        auto shift = integral_shift(source_basis[static_cast<std::size_t>(mu)].qdeg.fractions, {},
                                    target_basis[static_cast<std::size_t>(lambda)].qdeg.fractions);
        out.matrix.add(cc.offset + lambda, dc.offset + mu, LaurentPoly::monomial(shift, mult));
      }
    }
  }
  return out;
}

QTheoryMap qk_restriction(const GroupHom& phi, const GSet& x, int n) {
  RingPtr domain = qk_compute(phi.target(), x, n);
  RingPtr codomain = qk_compute(phi.source(), GSet::pullback(phi, x), n);
  std::vector<int> ident(static_cast<std::size_t>(x.points()));
  std::iota(ident.begin(), ident.end(), 0);
  return pullback_map(phi, ident, domain, codomain, "restriction");
}

ChangeOfGroup change_of_group(const GroupPtr& g, const GroupHom& incl, const GSet& x, int n) {
  if (!incl.is_injective()) throw InputError("change_of_group: subgroup map is not injective");
  InducedGSet induced = induced_gset(g, incl, x);
  const GroupPtr& h = incl.source();

  RingPtr over_g = qk_compute(g, induced.gset, n);
  RingPtr over_h_induced = qk_compute(h, GSet::pullback(incl, induced.gset), n);
  RingPtr over_h = qk_compute(h, x, n);

  std::vector<int> ident(static_cast<std::size_t>(induced.gset.points()));
  std::iota(ident.begin(), ident.end(), 0);
  QTheoryMap res = pullback_map(incl, ident, over_g, over_h_induced, "restriction");
  QTheoryMap emb = pullback_map(GroupHom::identity(h), induced.embedding, over_h_induced, over_h, "embedding");
  QTheoryMap rho = res.then(emb);
  rho.name = "change-of-group";
  bool bij = is_invertible(rho.matrix);
  return {std::move(induced), std::move(res), std::move(emb), std::move(rho), bij};
}

KunnethMap kunneth(RingPtr left, RingPtr right) {
  if (left->n() != right->n()) throw InputError("kunneth: rings have different n");
  const int n = left->n();
  GroupPtr product = direct_product(*left->group(), *right->group());
  GSet xy = GSet::product(product, left->gset(), right->gset());
  RingPtr target = qk_compute(product, xy, n);
  const int ny = right->gset().points();
  const int left_degree = left->group()->degree();
  const int rank_r = right->total_rank();

  KunnethMap out{left, right, target, LaurentMatrix(target->total_rank(), left->total_rank() * rank_r, n)};
  for (const auto& a : left->components()) {
    for (const auto& b : right->components()) {
      CommutingTuple rho = pair_tuple(product, a.skeleton.sigma, b.skeleton.sigma);
      auto loc = target->skeleton().locate(rho, a.skeleton.orbit_rep * ny + b.skeleton.orbit_rep);
      const auto& tc = target->component(loc.component);
      const Perm k_inv = loc.witness.inverse();
      const auto& w_group = *tc.skeleton.stabilizer;
      const auto& w_classes = w_group.classes();
      // stabilizer class reps pulled back to (S x U) and split
      std::vector<std::pair<Perm, Perm>> split_reps;
      for (int c = 0; c < w_classes.count(); ++c) {
        const Perm& w = w_group.element(w_classes.representative[static_cast<std::size_t>(c)]);
        split_reps.push_back(split_product(k_inv * w * loc.witness, left_degree));
      }
      const auto& la = a.module->basis();
      const auto& mb = b.module->basis();
      const auto& nb = tc.module->basis();
      const int conductor = std::lcm(std::lcm(a.module->table()->conductor(), b.module->table()->conductor()),
                                     tc.module->table()->conductor());
      // lambda (x) mu is almost always a single irreducible; find it by its values
      const auto& w_table = *tc.module->table();
      std::map<std::vector<std::vector<std::int64_t>>, int> row_of;
      for (int r = 0; r < w_table.size(); ++r) {
        std::vector<std::vector<std::int64_t>> key;
        for (const auto& v : w_table.row(r).values) key.push_back(v.lift(conductor).coefficients());
        row_of.emplace(std::move(key), r);
      }
      for (int lambda = 0; lambda < a.module->rank(); ++lambda) {
        IrreducibleCharacter chi_l{a.module->table(), lambda};
        for (int mu = 0; mu < b.module->rank(); ++mu) {
          IrreducibleCharacter chi_m{b.module->table(), mu};
          std::vector<Cyclotomic> f;
          for (const auto& [gpart, hpart] : split_reps)
            f.push_back(chi_l.value_at(gpart).lift(conductor) * chi_m.value_at(hpart).lift(conductor));
          std::vector<std::vector<std::int64_t>> key;
          for (const auto& v : f) key.push_back(v.coefficients());
          std::vector<std::pair<int, std::int64_t>> parts;
          if (auto it = row_of.find(key); it != row_of.end())
            parts.emplace_back(it->second, 1);
          else
            parts = w_table.decompose(f);
          for (auto [nu, mult] : parts) {
            auto shift = integral_shift(la[static_cast<std::size_t>(lambda)].qdeg.fractions,
                                        mb[static_cast<std::size_t>(mu)].qdeg.fractions,
                                        nb[static_cast<std::size_t>(nu)].qdeg.fractions);
            out.matrix.add(tc.offset + nu, (a.offset + lambda) * rank_r + (b.offset + mu),
                           LaurentPoly::monomial(shift, mult));
          }
        }
      }
    }
  }
  return out;
}

QTheoryClass KunnethMap::apply(const QTheoryClass& x, const QTheoryClass& y) const {
  if (x.ring() != left || y.ring() != right) throw InputError("kunneth_map: classes outside the map's rings");
  const int rank_r = right->total_rank();
  // column-wise view of the sparse matrix
  std::vector<std::vector<std::pair<int, const LaurentPoly*>>> cols(static_cast<std::size_t>(matrix.cols));
  for (int r = 0; r < matrix.rows; ++r)
    for (const auto& [c, v] : matrix.entries[static_cast<std::size_t>(r)]) cols[static_cast<std::size_t>(c)].emplace_back(r, &v);
  QTheoryClass out(target);
  for (int c = 0; c < static_cast<int>(x.parts().size()); ++c)
    for (const auto& [li, p] : x.part(c).coords())
      for (int d = 0; d < static_cast<int>(y.parts().size()); ++d)
        for (const auto& [ri, r] : y.part(d).coords()) {
          const int col = (left->component(c).offset + li) * rank_r + right->component(d).offset + ri;
          LaurentPoly coeff = p * r;
          for (const auto& [row, v] : cols[static_cast<std::size_t>(col)]) out.add(row, coeff * *v);
        }
  return out;
}

bool KunnethMap::bijective() const { return is_invertible(matrix); }

QTheoryClass kunneth_map(const KunnethMap& k, const QTheoryClass& x, const QTheoryClass& y) {
  return k.apply(x, y);
}

SplitCheck verify_trivial_action_split(const GroupPtr& g, const GroupPtr& h, const GSet& x, int n) {
  GroupPtr product = direct_product(*g, *h);
  if (x.group()->key() != product->key())
    throw InputError("trivial-action split: G-set is not over G x H");
  const auto& acts = x.generator_action();
  const std::size_t ng = g->generators().size();
  for (std::size_t i = ng; i < acts.size(); ++i)
    if (!acts[i].is_identity()) throw InputError("trivial-action split: H does not act trivially");
  GSet x_g(g, x.points(), std::vector<Perm>(acts.begin(), acts.begin() + static_cast<std::ptrdiff_t>(ng)));

  KunnethMap k = kunneth(qk_compute(g, x_g, n), qk_compute(h, GSet::point(h), n));
  if (k.target->gset().generator_action() != x.generator_action())
    throw InvariantViolation("trivial-action split: X x pt differs from X");
  SplitCheck out;
  out.source_rank = k.left->total_rank() * k.right->total_rank();
  out.target_rank = k.target->total_rank();
  out.holds = out.source_rank == out.target_rank && k.bijective();
  return out;
}

SplitCheck verify_free_action(const GroupPtr& g, const GSet& x, int n) {
  if (!x.is_free()) throw InputError("free-action check: the action is not free");
  RingPtr ring = qk_compute(g, x, n);
  const int orbits = static_cast<int>(x.orbit_representatives().size());
  GroupPtr trivial = FiniteGroup::from_generators(1, {});
  RingPtr quotient = qk_compute(trivial, GSet(trivial, orbits, {}), n);
  bool only_identity = std::all_of(ring->components().begin(), ring->components().end(),
                                   [](const QTheoryRing::Component& c) { return c.skeleton.sigma.is_identity(); });
  SplitCheck out;
  out.source_rank = ring->total_rank();
  out.target_rank = quotient->total_rank();
  out.holds = only_identity && out.source_rank == orbits && out.target_rank == orbits;
  return out;
}

std::string tate_symbol(const LambdaBasisElement& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < b.qdeg.fractions.size(); ++i) {
    const auto& f = b.qdeg.fractions[i];
    if (f.numerator() == 0) continue;
    os << 'q' << (i + 1) << "^{" << f.numerator() << '/' << f.denominator() << "}";
  }
  os << "[chi" << b.character_index << ']';
  return os.str();
}

}  // namespace quasik
