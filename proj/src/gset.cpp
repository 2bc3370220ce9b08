#include "quasik/gset.hpp"

#include <algorithm>
#include <numeric>

#include "quasik/error.hpp"

namespace quasik {

GSet::GSet(GroupPtr group, int points, std::vector<Perm> generator_action)
    : group_(std::move(group)), points_(points), generator_action_(std::move(generator_action)) {
  if (points_ < 1) throw InputError("a G-set needs at least one point");
  if (generator_action_.size() != group_->generators().size())
    throw InputError("generator_action needs one permutation per group generator (got " +
                     std::to_string(generator_action_.size()) + ", expected " +
                     std::to_string(group_->generators().size()) + ")");
  for (const auto& p : generator_action_)
    if (p.degree() != points_) throw InputError("generator_action entry has the wrong number of points");

  const auto& gens = group_->generator_indices();
  element_action_.assign(static_cast<std::size_t>(group_->order()), Perm());
  std::vector<bool> done(static_cast<std::size_t>(group_->order()), false);
  element_action_[0] = Perm::identity(points_);
  done[0] = true;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = group_->mul(x, gens[k]);
      Perm a = element_action_[static_cast<std::size_t>(x)] * generator_action_[k];
      if (!done[static_cast<std::size_t>(y)]) {
        done[static_cast<std::size_t>(y)] = true;
        element_action_[static_cast<std::size_t>(y)] = std::move(a);
        queue.push_back(y);
      } else if (element_action_[static_cast<std::size_t>(y)] != a) {
        throw InputError("generator_action does not define a group action");
      }
    }
  }
}

GSet GSet::point(GroupPtr g) {
  std::vector<Perm> acts(g->generators().size(), Perm::identity(1));
  return GSet(std::move(g), 1, std::move(acts));
}

GSet GSet::natural(GroupPtr g) {
  auto acts = g->generators();
  int d = g->degree();
  return GSet(std::move(g), d, std::move(acts));
}

GSet GSet::regular(GroupPtr g) {
  std::vector<Perm> acts;
  for (int s : g->generator_indices()) {
    std::vector<int> img;
    for (int x = 0; x < g->order(); ++x) img.push_back(g->mul(s, x));
    acts.emplace_back(std::move(img));
  }
  int n = g->order();
  return GSet(std::move(g), n, std::move(acts));
}

GSet GSet::cosets(GroupPtr g, const FiniteGroup& h) {
  std::vector<int> hidx;
  for (const auto& p : h.elements()) {
    int i = g->index_of(p);
    if (i < 0) throw InputError("coset subgroup is not contained in the group");
    hidx.push_back(i);
  }
  std::vector<int> coset_of(static_cast<std::size_t>(g->order()), -1);
  int count = 0;
  for (int x = 0; x < g->order(); ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    for (int hh : hidx) coset_of[static_cast<std::size_t>(g->mul(x, hh))] = count;
    ++count;
  }
  std::vector<int> rep(static_cast<std::size_t>(count), -1);
  for (int x = 0; x < g->order(); ++x)
    if (rep[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(x)])] < 0)
      rep[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(x)])] = x;
  std::vector<Perm> acts;
  for (int s : g->generator_indices()) {
    std::vector<int> img;
    for (int c = 0; c < count; ++c)
      img.push_back(coset_of[static_cast<std::size_t>(g->mul(s, rep[static_cast<std::size_t>(c)]))]);
    acts.emplace_back(std::move(img));
  }
  return GSet(std::move(g), count, std::move(acts));
}

GSet GSet::pullback(const GroupHom& phi, const GSet& x) {
  if (phi.target()->key() != x.group()->key()) throw InputError("pullback: G-set is not over the hom target");
  std::vector<Perm> acts;
  for (const auto& img : phi.generator_images()) acts.push_back(x.action(x.group()->index_of(img)));
  return GSet(phi.source(), x.points(), std::move(acts));
}

GSet GSet::product(GroupPtr product_group, const GSet& x, const GSet& y) {
  const int ny = y.points();
  std::vector<Perm> acts;
  for (const auto& a : x.generator_action()) {
    std::vector<int> img;
    for (int p = 0; p < x.points(); ++p)
      for (int q = 0; q < ny; ++q) img.push_back(a[p] * ny + q);
    acts.emplace_back(std::move(img));
  }
  for (const auto& b : y.generator_action()) {
    std::vector<int> img;
    for (int p = 0; p < x.points(); ++p)
      for (int q = 0; q < ny; ++q) img.push_back(p * ny + b[q]);
    acts.emplace_back(std::move(img));
  }
  return GSet(std::move(product_group), x.points() * ny, std::move(acts));
}

int GSet::act(const Perm& g, int point) const {
  int i = group_->index_of(g);
  if (i < 0) throw InputError("acting element is not in the group");
  return act(i, point);
}

bool GSet::is_free() const {
  for (int g = 1; g < group_->order(); ++g)
    for (int p = 0; p < points_; ++p)
      if (act(g, p) == p) return false;
  return true;
}

std::vector<int> GSet::orbit_representatives() const {
  std::vector<bool> seen(static_cast<std::size_t>(points_), false);
  std::vector<int> reps;
  for (int p = 0; p < points_; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    reps.push_back(p);
    for (int g = 0; g < group_->order(); ++g) seen[static_cast<std::size_t>(act(g, p))] = true;
  }
  return reps;
}

bool GSet::is_transitive() const { return orbit_representatives().size() == 1; }

InducedGSet induced_gset(const GroupPtr& g, const GroupHom& incl, const GSet& x) {
  if (incl.target()->key() != g->key()) throw InputError("induced_gset: inclusion does not land in G");
  if (x.group()->key() != incl.source()->key()) throw InputError("induced_gset: X is not over the subgroup");
  if (!incl.is_injective()) throw InputError("induced_gset: the subgroup map is not injective");

  const FiniteGroup& G = *g;
  const FiniteGroup& H = *incl.source();
  // image index in G -> source index in H
  std::vector<int> back(static_cast<std::size_t>(G.order()), -1);
  for (int h = 0; h < H.order(); ++h) back[static_cast<std::size_t>(incl.apply_index(h))] = h;

  std::vector<int> coset_of(static_cast<std::size_t>(G.order()), -1);
  std::vector<int> reps;
  for (int t = 0; t < G.order(); ++t) {
    if (coset_of[static_cast<std::size_t>(t)] >= 0) continue;
    for (int h = 0; h < H.order(); ++h)
      coset_of[static_cast<std::size_t>(G.mul(t, incl.apply_index(h)))] = static_cast<int>(reps.size());
    reps.push_back(t);
  }
  const int nx = x.points();
  const int npts = static_cast<int>(reps.size()) * nx;

  // g' [t, x] = [t', h x] with g' t = t' h.
  std::vector<Perm> acts;
  for (int s : G.generator_indices()) {
    std::vector<int> img(static_cast<std::size_t>(npts));
    for (std::size_t c = 0; c < reps.size(); ++c) {
      int st = G.mul(s, reps[c]);
      int c2 = coset_of[static_cast<std::size_t>(st)];
      int h_in_g = G.mul(G.inv(reps[static_cast<std::size_t>(c2)]), st);
      int h = back[static_cast<std::size_t>(h_in_g)];
      if (h < 0) throw InvariantViolation("coset decomposition left the subgroup");
      for (int p = 0; p < nx; ++p)
        img[c * static_cast<std::size_t>(nx) + static_cast<std::size_t>(p)] = c2 * nx + x.act(h, p);
    }
    acts.emplace_back(std::move(img));
  }

  InducedGSet out{GSet(g, npts, std::move(acts)), {}, {}};
  // The identity is the least element, so coset 0 is the image of H.
  for (int p = 0; p < nx; ++p) out.embedding.push_back(p);
  for (int t : reps) out.coset_representatives.push_back(G.element(t));
  return out;
}

}  // namespace quasik
