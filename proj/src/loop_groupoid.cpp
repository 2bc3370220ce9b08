#include "quasik/loop_groupoid.hpp"

#include "quasik/error.hpp"

namespace quasik {

FixedPointSet fixed_points(const GSet& x, const CommutingTuple& sigma) {
  if (sigma.ambient()->key() != x.group()->key())
    throw InputError("fixed_points: tuple and G-set are over different groups");
  FixedPointSet out{sigma, {}};
  std::vector<int> idx;
  for (const auto& s : sigma.entries()) idx.push_back(x.group()->index_of(s));
  for (int p = 0; p < x.points(); ++p) {
    bool fixed = true;
    for (int s : idx)
      if (x.act(s, p) != p) {
        fixed = false;
        break;
      }
    if (fixed) out.points.push_back(p);
  }
  return out;
}

LoopGroupoidSkeleton::LoopGroupoidSkeleton(GroupPtr g, GSet x, int n)
    : group_(std::move(g)), gset_(std::move(x)), n_(n) {
  if (gset_.group()->key() != group_->key()) throw InputError("lambda_skeleton: G-set is over a different group");
  tuples_ = commuting_tuples(group_, n_);
  const FiniteGroup& G = *group_;
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    const auto& sigma = tuples_[t];
    tuple_index_.emplace(sigma.entries(), static_cast<int>(t));
    GroupPtr cent = centralizer(group_, sigma);
    std::vector<int> cent_in_g;
    for (const auto& c : cent->elements()) cent_in_g.push_back(G.index_of(c));

    auto fixed = fixed_points(gset_, sigma);
    std::vector<int> comp(static_cast<std::size_t>(gset_.points()), -1);
    std::vector<Perm> wit(static_cast<std::size_t>(gset_.points()));
    for (int p : fixed.points) {
      if (comp[static_cast<std::size_t>(p)] >= 0) continue;
      const int id = static_cast<int>(components_.size());
      int orbit = 0;
      // c ascending, so the first c hitting y is the least with c y = p
      for (std::size_t ci = 0; ci < cent_in_g.size(); ++ci) {
        int y = gset_.act(G.inv(cent_in_g[ci]), p);
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = id;
          wit[static_cast<std::size_t>(y)] = cent->element(static_cast<int>(ci));
          ++orbit;
        }
      }
      GroupPtr stab = subgroup_where(*cent, [&](int ci) {
        return gset_.act(cent_in_g[static_cast<std::size_t>(ci)], p) == p;
      });
      if (orbit * stab->order() != cent->order())
        throw InvariantViolation("orbit-stabilizer count failed in the skeleton");
      components_.push_back({sigma, static_cast<int>(t), p, orbit, cent, std::move(stab)});
    }
    point_component_.push_back(std::move(comp));
    point_witness_.push_back(std::move(wit));
  }
}

LoopGroupoidSkeleton::Location LoopGroupoidSkeleton::locate(const CommutingTuple& rho, int point) const {
  auto canon = canonical_form(group_, rho);
  auto it = tuple_index_.find(canon.representative.entries());
  if (it == tuple_index_.end()) throw InvariantViolation("tuple representative missing from the skeleton");
  const auto t = static_cast<std::size_t>(it->second);
  const int moved = gset_.act(canon.witness, point);
  const int comp = point_component_[t][static_cast<std::size_t>(moved)];
  if (comp < 0) throw InputError("locate: point is not fixed by the tuple");
  return {comp, point_witness_[t][static_cast<std::size_t>(moved)] * canon.witness};
}

LoopGroupoidSkeleton lambda_skeleton(const GroupPtr& g, const GSet& x, int n) {
  return LoopGroupoidSkeleton(g, x, n);
}

long long iterated_component_count(const GroupPtr& g, const GSet& x, int n) {
  if (n < 0) throw InputError("iterated_component_count: n must be nonnegative");
  if (n == 0) return static_cast<long long>(x.orbit_representatives().size());
  long long total = 0;
  const auto& cp = g->classes();
  for (int c = 0; c < cp.count(); ++c) {
    const Perm& s = g->element(cp.representative[static_cast<std::size_t>(c)]);
    CommutingTuple one(g, {s});
    auto fixed = fixed_points(x, one);
    if (fixed.points.empty()) continue;
    GroupPtr cent = centralizer(g, one);
    std::vector<int> local(static_cast<std::size_t>(x.points()), -1);
    for (std::size_t i = 0; i < fixed.points.size(); ++i)
      local[static_cast<std::size_t>(fixed.points[i])] = static_cast<int>(i);
    std::vector<Perm> acts;
    for (const auto& gen : cent->generators()) {
      std::vector<int> img;
      for (int p : fixed.points) img.push_back(local[static_cast<std::size_t>(x.act(gen, p))]);
      acts.emplace_back(std::move(img));
    }
    total += iterated_component_count(cent, GSet(cent, static_cast<int>(fixed.points.size()), std::move(acts)), n - 1);
  }
  return total;
}

}  // namespace quasik
