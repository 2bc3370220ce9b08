#include "quasik/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "quasik/error.hpp"

namespace quasik {

namespace {

constexpr int kCayleyTableLimit = 1024;

std::vector<Perm> close_under(int degree, const std::vector<Perm>& gens, int cap) {
  std::unordered_map<Perm, int, PermHash> seen;
  std::vector<Perm> out;
  std::deque<Perm> queue;
  Perm e = Perm::identity(degree);
  seen.emplace(e, 0);
  out.push_back(e);
  queue.push_back(e);
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Perm y = x * s;
      if (seen.contains(y)) continue;
      if (static_cast<int>(out.size()) >= cap)
        throw CapExceeded("QUASIK_MAX_ORDER",
                          "group closure exceeds the element cap of " + std::to_string(cap));
      seen.emplace(y, 0);
      out.push_back(y);
      queue.push_back(std::move(y));
    }
  }
  return out;
}

}  // namespace

int max_group_order() {
  if (const char* env = std::getenv("QUASIK_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 10000;
}

GroupPtr FiniteGroup::from_generators(int degree, std::vector<Perm> gens, int cap) {
  if (degree < 1) throw InputError("degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " + std::to_string(degree));
  std::shared_ptr<FiniteGroup> grp(new FiniteGroup());
  grp->degree_ = degree;
  grp->elements_ = close_under(degree, gens, cap);
  grp->generators_ = std::move(gens);
  grp->finish();
  return grp;
}

GroupPtr FiniteGroup::from_elements(int degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw InvariantViolation("subgroup element list lacks the identity");

  std::vector<Perm> gens;
  std::set<Perm> span{elements.front()};
  for (const auto& x : elements) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    auto closed = close_under(degree, gens, static_cast<int>(elements.size()) + 1);
    span = std::set<Perm>(closed.begin(), closed.end());
  }
  if (span.size() != elements.size())
    throw InvariantViolation("element list handed to from_elements is not closed");

  std::shared_ptr<FiniteGroup> grp(new FiniteGroup());
  grp->degree_ = degree;
  grp->elements_ = std::move(elements);
  grp->generators_ = std::move(gens);
  grp->finish();
  return grp;
}

void FiniteGroup::finish() {
  std::sort(elements_.begin(), elements_.end());
  const auto n = elements_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<int>(i));

  if (n <= static_cast<std::size_t>(kCayleyTableLimit)) {
    cayley_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        cayley_[a * n + b] = index_.at(elements_[a] * elements_[b]);
  }

  inverse_.resize(n);
  orders_.resize(n);
  exponent_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_.at(elements_[i].inverse());
    orders_[i] = elements_[i].order();
    exponent_ = std::lcm(exponent_, orders_[i]);
  }
  for (const auto& g : generators_) generator_index_.push_back(index_.at(g));

  std::ostringstream os;
  os << degree_ << ':';
  for (const auto& e : elements_) {
    for (int v : e.images()) os << v << ',';
    os << ';';
  }
  key_ = os.str();
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::mul(int a, int b) const {
  if (!cayley_.empty())
    return cayley_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  return index_.at(element(a) * element(b));
}

bool FiniteGroup::is_abelian() const {
  for (int a : generator_index_)
    for (int b : generator_index_)
      if (!commute(a, b)) return false;
  return true;
}

const ClassPartition& FiniteGroup::classes() const {
  std::call_once(classes_once_, [this] {
    const int n = order();
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> raw;
    for (int x = 0; x < n; ++x) {
      if (class_of[static_cast<std::size_t>(x)] >= 0) continue;
      std::vector<int> cls;
      const int id = static_cast<int>(raw.size());
      for (int g = 0; g < n; ++g) {
        int y = mul(mul(g, x), inv(g));
        if (class_of[static_cast<std::size_t>(y)] < 0) {
          class_of[static_cast<std::size_t>(y)] = id;
          cls.push_back(y);
        }
      }
      std::sort(cls.begin(), cls.end());
      raw.push_back(std::move(cls));
    }
    std::vector<std::size_t> order_idx(raw.size());
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
      if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
      return raw[a].front() < raw[b].front();
    });
    ClassPartition cp;
    cp.class_of.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < order_idx.size(); ++c) {
      auto& cls = raw[order_idx[c]];
      cp.representative.push_back(cls.front());
      for (int x : cls) cp.class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
      cp.members.push_back(std::move(cls));
    }
    classes_ = std::move(cp);
  });
  return classes_;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const auto& cp = g.classes();
  std::vector<ConjugacyClass> out;
  for (int c = 0; c < cp.count(); ++c) {
    ConjugacyClass cc{g.element(cp.representative[static_cast<std::size_t>(c)]), {}};
    for (int x : cp.members[static_cast<std::size_t>(c)]) cc.elements.push_back(g.element(x));
    out.push_back(std::move(cc));
  }
  return out;
}

std::vector<GroupPtr> all_subgroups(const FiniteGroup& g) {
  using Subset = std::vector<int>;
  auto closure = [&g](std::vector<int> gens) {
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    std::vector<int> out{0};
    in[0] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int s : gens) {
        int y = g.mul(out[i], s);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = true;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::set<Subset> found;
  std::vector<std::pair<Subset, std::vector<int>>> queue;
  found.insert(Subset{0});
  queue.push_back({Subset{0}, {}});
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto [members, gens] = queue[qi];
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(members.begin(), members.end(), x)) continue;
      auto next_gens = gens;
      next_gens.push_back(x);
      auto next = closure(next_gens);
      if (found.insert(next).second) queue.push_back({std::move(next), std::move(next_gens)});
    }
  }
  std::vector<Subset> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Subset& a, const Subset& b) { return a.size() < b.size(); });
  std::vector<GroupPtr> out;
  for (const auto& s : sorted) {
    std::vector<Perm> els;
    for (int x : s) els.push_back(g.element(x));
    out.push_back(FiniteGroup::from_elements(g.degree(), std::move(els)));
  }
  return out;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Perm> generator_images)
    : source_(std::move(source)), target_(std::move(target)),
      generator_images_(std::move(generator_images)) {
  if (generator_images_.size() != source_->generators().size())
    throw InputError("homomorphism needs one image per source generator");
  std::vector<int> gen_img;
  for (const auto& p : generator_images_) {
    int idx = target_->index_of(p);
    if (idx < 0) throw InputError("generator image " + p.to_cycle_string() + " is not in the target group");
    gen_img.push_back(idx);
  }
  const auto& gens = source_->generator_indices();
  map_.assign(static_cast<std::size_t>(source_->order()), -1);
  map_[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = source_->mul(x, gens[k]);
      int img = target_->mul(map_[static_cast<std::size_t>(x)], gen_img[k]);
      auto& slot = map_[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = img;
        queue.push_back(y);
      } else if (slot != img) {
        throw InputError("generator images do not define a homomorphism");
      }
    }
  }
}

GroupHom GroupHom::identity(GroupPtr g) {
  auto gens = g->generators();
  return GroupHom(g, g, std::move(gens));
}

GroupHom GroupHom::inclusion(GroupPtr sub, GroupPtr super) {
  auto gens = sub->generators();
  return GroupHom(std::move(sub), std::move(super), std::move(gens));
}

GroupHom GroupHom::trivial(GroupPtr source, GroupPtr target) {
  std::vector<Perm> imgs(source->generators().size(), Perm::identity(target->degree()));
  return GroupHom(std::move(source), std::move(target), std::move(imgs));
}

Perm GroupHom::operator()(const Perm& g) const {
  int idx = source_->index_of(g);
  if (idx < 0) throw InputError("element " + g.to_cycle_string() + " is not in the source group");
  return target_->element(map_[static_cast<std::size_t>(idx)]);
}

bool GroupHom::is_injective() const {
  std::vector<int> imgs = map_;
  std::sort(imgs.begin(), imgs.end());
  return std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end();
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (next.source_->key() != target_->key()) throw InputError("homomorphisms are not composable");
  std::vector<Perm> imgs;
  for (const auto& p : generator_images_) imgs.push_back(next(p));
  return GroupHom(source_, next.target_, std::move(imgs));
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<Perm> gens;
  const Perm eg = Perm::identity(g.degree());
  const Perm eh = Perm::identity(h.degree());
  for (const auto& s : g.generators()) gens.push_back(direct_sum(s, eh));
  for (const auto& t : h.generators()) gens.push_back(direct_sum(eg, t));
  return FiniteGroup::from_generators(g.degree() + h.degree(), std::move(gens));
}

std::pair<Perm, Perm> split_product(const Perm& gh, int left_degree) {
  auto img = gh.images();
  std::vector<int> a(img.begin(), img.begin() + left_degree);
  std::vector<int> b;
  for (auto it = img.begin() + left_degree; it != img.end(); ++it) b.push_back(*it - left_degree);
  return {Perm(std::move(a)), Perm(std::move(b))};
}

}  // namespace quasik
