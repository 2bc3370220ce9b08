#include "quasik/lambda_module.hpp"

#include "quasik/error.hpp"

namespace quasik {

std::vector<LambdaBasisElement> lambda_basis(const GroupPtr& c, const CommutingTuple& sigma) {
  TablePtr table = character_table(c);
  for (const auto& s : sigma.entries()) {
    int si = c->index_of(s);
    if (si < 0) throw InputError("lambda_basis: tuple entry " + s.to_cycle_string() + " is not in the group");
    for (int g : c->generator_indices())
      if (!c->commute(si, g))
        throw InputError("lambda_basis: tuple entry " + s.to_cycle_string() + " is not central");
  }
  std::vector<LambdaBasisElement> out;
  for (int i = 0; i < table->size(); ++i) {
    IrreducibleCharacter chi{table, i};
    out.push_back({i, chi.degree(), q_degree(chi, sigma)});
  }
  return out;
}

LambdaModule::LambdaModule(GroupPtr c, CommutingTuple sigma)
    : group_(std::move(c)), sigma_(std::move(sigma)), table_(character_table(group_)),
      basis_(lambda_basis(group_, sigma_)) {}

std::vector<LambdaModule::Product> LambdaModule::product(int a, int b) const {
  if (a > b) std::swap(a, b);
  {
    std::lock_guard lock(mu_);
    if (auto it = products_.find({a, b}); it != products_.end()) return it->second;
  }
  std::vector<Product> out;
  const auto& qa = basis_[static_cast<std::size_t>(a)].qdeg.fractions;
  const auto& qb = basis_[static_cast<std::size_t>(b)].qdeg.fractions;
  for (auto [nu, mult] : tensor_decompose({table_, a}, {table_, b})) {
    const auto& qn = basis_[static_cast<std::size_t>(nu)].qdeg.fractions;
    LaurentPoly::Exponent shift;
    for (std::size_t i = 0; i < qa.size(); ++i) {
      Fraction d = qa[i] + qb[i] - qn[i];
      if (d.denominator() != 1) throw InvariantViolation("non-integral q-shift in the module product");
      shift.push_back(static_cast<int>(d.numerator()));
    }
    out.push_back({nu, mult, std::move(shift)});
  }
  std::lock_guard lock(mu_);
  return products_.emplace(std::make_pair(a, b), std::move(out)).first->second;
}

ModuleElement ModuleElement::basis(ModulePtr module, int i) {
  int n = module->nvars();
  return basis(std::move(module), i, LaurentPoly::constant(n, 1));
}

ModuleElement ModuleElement::basis(ModulePtr module, int i, const LaurentPoly& p) {
  ModuleElement e(std::move(module));
  e.add(i, p);
  return e;
}

LaurentPoly ModuleElement::coordinate(int i) const {
  auto it = coords_.find(i);
  return it == coords_.end() ? LaurentPoly(module_->nvars()) : it->second;
}

void ModuleElement::add(int i, const LaurentPoly& p) {
  if (i < 0 || i >= module_->rank()) throw InvariantViolation("basis index out of range");
  if (p.nvars() != module_->nvars()) throw InvariantViolation("coordinate has the wrong variable count");
  if (p.is_zero()) return;
  auto [it, inserted] = coords_.emplace(i, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

void ModuleElement::check(const ModuleElement& o) const {
  if (module_ != o.module_ && (module_->group()->key() != o.module_->group()->key() ||
                               module_->sigma() != o.module_->sigma()))
    throw InvariantViolation("module elements live in different modules");
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  check(o);
  for (const auto& [i, p] : o.coords_) add(i, p);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  check(o);
  for (const auto& [i, p] : o.coords_) add(i, -p);
  return *this;
}

ModuleElement ModuleElement::scaled(const LaurentPoly& p) const {
  ModuleElement r(module_);
  for (const auto& [i, c] : coords_) r.add(i, c * p);
  return r;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  a.check(b);
  return a.coords_ == b.coords_;
}

ModuleElement module_mul(const ModuleElement& x, const ModuleElement& y) {
  if (x.module()->group()->key() != y.module()->group()->key() || x.module()->sigma() != y.module()->sigma())
    throw InputError("module_mul: elements over different tuples");
  ModuleElement r(x.module());
  for (const auto& [a, pa] : x.coords())
    for (const auto& [b, pb] : y.coords()) {
      LaurentPoly coeff = pa * pb;
      for (const auto& prod : x.module()->product(a, b))
        r.add(prod.nu, coeff.shifted(prod.shift) * prod.mult);
    }
  return r;
}

ModuleElement pi_star(const LaurentPoly& p, const ModulePtr& module) {
  if (p.nvars() != module->nvars()) throw InputError("pi_star: polynomial has the wrong variable count");
  return ModuleElement::basis(module, 0, p);
}

}  // namespace quasik
