#include "quasik/perm.hpp"

#include <numeric>
#include <sstream>

#include <boost/container_hash/hash.hpp>

#include "quasik/error.hpp"

namespace quasik {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw InputError("image array is not a permutation of 0..degree-1");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= degree) throw InputError("cycle entry out of range");
      img[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

int Perm::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  long long ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InputError("degree mismatch in permutation product");
  Perm r;
  r.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i)
    r.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return r;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    any = true;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j;
      first = false;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.to_cycle_string(); }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  auto img = p.images();
  return boost::hash_range(img.begin(), img.end());
}

Perm conjugate(const Perm& p, const Perm& g) { return g * p * g.inverse(); }

Perm direct_sum(const Perm& a, const Perm& b) {
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(a.degree() + b.degree()));
  for (int v : a.images()) img.push_back(v);
  for (int v : b.images()) img.push_back(v + a.degree());
  return Perm(std::move(img));
}

}  // namespace quasik
