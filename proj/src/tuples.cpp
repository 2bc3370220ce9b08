#include "quasik/tuples.hpp"

#include <algorithm>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "quasik/error.hpp"

namespace quasik {

namespace {

struct IndexTupleHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    return boost::hash_range(v.begin(), v.end());
  }
};

std::vector<int> tuple_indices(const FiniteGroup& g, const std::vector<Perm>& entries) {
  std::vector<int> idx;
  for (const auto& p : entries) {
    int i = g.index_of(p);
    if (i < 0) throw InputError("tuple entry " + p.to_cycle_string() + " is not in the ambient group");
    idx.push_back(i);
  }
  return idx;
}

}  // namespace

CommutingTuple::CommutingTuple(GroupPtr ambient, std::vector<Perm> entries)
    : ambient_(std::move(ambient)), entries_(std::move(entries)) {
  auto idx = tuple_indices(*ambient_, entries_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (!ambient_->commute(idx[i], idx[j])) throw InputError("tuple entries do not commute");
  for (int i : idx) orders_.push_back(ambient_->element_order(i));
}

CommutingTuple CommutingTuple::identity(GroupPtr ambient, int n) {
  std::vector<Perm> e(static_cast<std::size_t>(n), Perm::identity(ambient->degree()));
  return CommutingTuple(std::move(ambient), std::move(e));
}

bool CommutingTuple::is_identity() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Perm& p) { return p.is_identity(); });
}

CommutingTuple CommutingTuple::conjugated_by(const Perm& g) const {
  std::vector<Perm> out;
  for (const auto& p : entries_) out.push_back(conjugate(p, g));
  return CommutingTuple(ambient_, std::move(out));
}

std::vector<CommutingTuple> commuting_tuples(const GroupPtr& gp, int n) {
  if (n < 1) throw InputError("tuple length n must be at least 1");
  const FiniteGroup& g = *gp;
  const int order = g.order();

  // Commuting tuples are produced in lexicographic order, so the first
  // unvisited member of each orbit is its minimum.
  std::unordered_set<std::vector<int>, IndexTupleHash> visited;
  std::vector<std::vector<int>> reps;
  std::vector<int> cur;
  auto visit_orbit = [&](const std::vector<int>& t) {
    std::vector<int> img(t.size());
    for (int x = 0; x < order; ++x) {
      int xi = g.inv(x);
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = g.mul(g.mul(x, t[i]), xi);
      visited.insert(img);
    }
  };
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      if (!visited.contains(cur)) {
        reps.push_back(cur);
        visit_orbit(cur);
      }
      return;
    }
    for (int x = 0; x < order; ++x) {
      bool ok = true;
      for (int y : cur)
        if (!g.commute(x, y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  extend(extend);

  std::vector<CommutingTuple> out;
  out.reserve(reps.size());
  for (const auto& r : reps) {
    std::vector<Perm> entries;
    for (int i : r) entries.push_back(g.element(i));
    out.emplace_back(gp, std::move(entries));
  }
  return out;
}

GroupPtr centralizer(const GroupPtr& gp, const CommutingTuple& sigma) {
  const FiniteGroup& g = *gp;
  auto idx = tuple_indices(g, sigma.entries());
  return subgroup_where(g, [&](int x) {
    return std::all_of(idx.begin(), idx.end(), [&](int s) { return g.commute(x, s); });
  });
}

std::vector<Perm> transporter(const GroupPtr& gp, const CommutingTuple& sigma,
                              const CommutingTuple& sigma_prime) {
  if (sigma.size() != sigma_prime.size()) throw InputError("transporter needs tuples of equal length");
  const FiniteGroup& g = *gp;
  auto a = tuple_indices(g, sigma.entries());
  auto b = tuple_indices(g, sigma_prime.entries());
  std::vector<Perm> out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = g.mul(a[i], x) == g.mul(x, b[i]);
    if (ok) out.push_back(g.element(x));
  }
  return out;
}

CanonicalForm canonical_form(const GroupPtr& gp, const CommutingTuple& tuple) {
  const FiniteGroup& g = *gp;
  auto t = tuple_indices(g, tuple.entries());
  std::vector<int> best = t;
  int witness = 0;
  std::vector<int> img(t.size());
  for (int x = 1; x < g.order(); ++x) {
    int xi = g.inv(x);
    for (std::size_t i = 0; i < t.size(); ++i) img[i] = g.mul(g.mul(x, t[i]), xi);
    if (img < best) {
      best = img;
      witness = x;
    }
  }
  std::vector<Perm> entries;
  for (int i : best) entries.push_back(g.element(i));
  return {CommutingTuple(gp, std::move(entries)), g.element(witness)};
}

CommutingTuple pair_tuple(const GroupPtr& product, const CommutingTuple& sigma,
                          const CommutingTuple& tau) {
  if (sigma.size() != tau.size()) throw InputError("pair_tuple needs tuples of equal length");
  std::vector<Perm> entries;
  for (int i = 0; i < sigma.size(); ++i) entries.push_back(direct_sum(sigma[i], tau[i]));
  return CommutingTuple(product, std::move(entries));
}

}  // namespace quasik
