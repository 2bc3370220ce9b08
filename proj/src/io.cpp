#include "quasik/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "quasik/error.hpp"

namespace quasik {

namespace {

std::vector<int> int_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("field '" + field + "' must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("field '" + field + "' must contain only integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Perm perm_field(const json& j, const std::string& field, int degree) {
  auto img = int_array(j, field);
  if (static_cast<int>(img.size()) != degree)
    throw InputError("field '" + field + "' has length " + std::to_string(img.size()) + ", expected " +
                     std::to_string(degree));
  try {
    return Perm(std::move(img));
  } catch (const InputError& e) {
    throw InputError("field '" + field + "': " + e.what());
  }
}

const json& require(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field)) throw InputError("missing field '" + field + "'");
  return j.at(field);
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

GroupPtr parse_group(const json& j) {
  const json& d = require(j, "degree");
  if (!d.is_number_integer() || d.get<int>() < 1) throw InputError("field 'degree' must be a positive integer");
  const int degree = d.get<int>();
  const json& gens = require(j, "generators");
  if (!gens.is_array()) throw InputError("field 'generators' must be an array");
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    perms.push_back(perm_field(gens[i], "generators[" + std::to_string(i) + "]", degree));
  return FiniteGroup::from_generators(degree, std::move(perms));
}

GroupPtr load_group(const std::filesystem::path& path) { return parse_group(load_json(path)); }

GSet parse_gset(const GroupPtr& g, const json& j) {
  const json& p = require(j, "points");
  if (!p.is_number_integer() || p.get<int>() < 1) throw InputError("field 'points' must be a positive integer");
  const int points = p.get<int>();
  const json& acts = require(j, "generator_action");
  if (!acts.is_array()) throw InputError("field 'generator_action' must be an array");
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < acts.size(); ++i)
    perms.push_back(perm_field(acts[i], "generator_action[" + std::to_string(i) + "]", points));
  return GSet(g, points, std::move(perms));
}

GSet load_gset(const GroupPtr& g, const std::filesystem::path& path) { return parse_gset(g, load_json(path)); }

json perm_to_json(const Perm& p) {
  auto img = p.images();
  return json(std::vector<int>(img.begin(), img.end()));
}

json tuple_to_json(const CommutingTuple& t) {
  json out = json::array();
  for (const auto& p : t.entries()) out.push_back(perm_to_json(p));
  return out;
}

json group_to_json(const FiniteGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(perm_to_json(p));
  return {{"degree", g.degree()}, {"generators", gens}};
}

json gset_to_json(const GSet& x) {
  json acts = json::array();
  for (const auto& p : x.generator_action()) acts.push_back(perm_to_json(p));
  return {{"points", x.points()}, {"generator_action", acts}};
}

json laurent_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exp", e}, {"c", c}});
  return out;
}

json table_to_json(const CharacterTable& t) {
  const auto& g = *t.group();
  const auto& cp = t.classes();
  json classes = json::array();
  for (int c = 0; c < cp.count(); ++c)
    classes.push_back({{"representative", perm_to_json(g.element(cp.representative[static_cast<std::size_t>(c)]))},
                       {"size", cp.size(c)}});
  json chars = json::array();
  for (const auto& row : t.rows()) {
    json vals = json::array();
    for (const auto& v : row.values) vals.push_back(v.coefficients());
    chars.push_back({{"degree", row.degree}, {"values", vals}});
  }
  return {{"order", g.order()}, {"conductor", t.conductor()}, {"classes", classes}, {"characters", chars}};
}

TablePtr table_from_json(const GroupPtr& g, const json& j) {
  const auto& cp = g->classes();
  if (require(j, "conductor").get<int>() != g->exponent()) throw InputError("cached table: conductor mismatch");
  const json& classes = require(j, "classes");
  if (static_cast<int>(classes.size()) != cp.count()) throw InputError("cached table: class count mismatch");
  for (int c = 0; c < cp.count(); ++c) {
    Perm rep = perm_field(require(classes[static_cast<std::size_t>(c)], "representative"), "representative", g->degree());
    if (g->index_of(rep) != cp.representative[static_cast<std::size_t>(c)])
      throw InputError("cached table: class representative mismatch");
  }
  std::vector<Character> rows;
  for (const auto& ch : require(j, "characters")) {
    Character row;
    row.degree = require(ch, "degree").get<int>();
    for (const auto& v : require(ch, "values"))
      row.values.push_back(Cyclotomic::from_coefficients(g->exponent(), v.get<std::vector<std::int64_t>>()));
    rows.push_back(std::move(row));
  }
  return std::make_shared<const CharacterTable>(g, std::move(rows));
}

json skeleton_to_json(const LoopGroupoidSkeleton& s) {
  json out = json::array();
  for (const auto& c : s.components())
    out.push_back({{"sigma", tuple_to_json(c.sigma)},
                   {"orbit_rep", c.orbit_rep},
                   {"orbit_size", c.orbit_size},
                   {"stabilizer_order", c.stabilizer->order()}});
  return out;
}

json module_element_to_json(const ModuleElement& x) {
  json terms = json::array();
  const auto& basis = x.module()->basis();
  for (const auto& [i, p] : x.coords())
    terms.push_back({{"character_index", i},
                     {"q_degree", basis[static_cast<std::size_t>(i)].qdeg.to_strings()},
                     {"coeff", laurent_to_json(p)}});
  return {{"sigma", tuple_to_json(x.module()->sigma())}, {"terms", terms}};
}

json ring_to_json(const QTheoryRing& r) {
  json comps = json::array();
  for (const auto& c : r.components()) {
    json basis = json::array();
    for (const auto& b : c.module->basis())
      basis.push_back({{"char_degree", b.char_degree}, {"q_degree", b.qdeg.to_strings()}});
    comps.push_back({{"sigma", tuple_to_json(c.skeleton.sigma)},
                     {"orbit_rep", c.skeleton.orbit_rep},
                     {"stabilizer_order", c.skeleton.stabilizer->order()},
                     {"basis", basis}});
  }
  return {{"group", group_to_json(*r.group())},
          {"gset", gset_to_json(r.gset())},
          {"n", r.n()},
          {"components", comps},
          {"total_rank", r.total_rank()}};
}

std::string ring_to_table(const QTheoryRing& r) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "sigma" << std::setw(8) << "orbit" << std::setw(8) << "|stab|"
     << std::setw(6) << "rank" << "q-degrees\n";
  for (const auto& c : r.components()) {
    std::string sigma;
    for (const auto& p : c.skeleton.sigma.entries()) sigma += (sigma.empty() ? "" : ",") + p.to_cycle_string();
    std::string degs;
    for (const auto& b : c.module->basis()) {
      std::string d;
      for (const auto& s : b.qdeg.to_strings()) d += (d.empty() ? "" : ",") + s;
      degs += (degs.empty() ? "" : " ") + ("(" + d + ")");
    }
    os << std::setw(28) << sigma << std::setw(8) << c.skeleton.orbit_rep << std::setw(8)
       << c.skeleton.stabilizer->order() << std::setw(6) << c.module->rank() << degs << '\n';
  }
  os << "total rank " << r.total_rank() << '\n';
  return os.str();
}

json map_check_to_json(const std::string& name, int source_rank, int target_rank, bool bijective,
                       const LaurentMatrix& m) {
  json entries = json::array();
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.entries[static_cast<std::size_t>(r)])
      entries.push_back({{"row", r}, {"col", c}, {"coeff", laurent_to_json(v)}});
  return {{"map", name},
          {"source_rank", source_rank},
          {"target_rank", target_rank},
          {"bijective", bijective},
          {"matrix", entries}};
}

json tate_export(const QTheoryRing& r) {
  json comps = json::array();
  for (const auto& c : r.components()) {
    json symbols = json::array();
    json basis = json::array();
    for (const auto& b : c.module->basis()) {
      symbols.push_back(tate_symbol(b));
      basis.push_back({{"character_index", b.character_index},
                       {"char_degree", b.char_degree},
                       {"q_degree", b.qdeg.to_strings()}});
    }
    comps.push_back({{"sigma", tuple_to_json(c.skeleton.sigma)},
                     {"orbit_rep", c.skeleton.orbit_rep},
                     {"symbols", symbols},
                     {"basis", basis}});
  }
  return {{"n", r.n()}, {"group_order", r.group()->order()}, {"components", comps}};
}

}  // namespace quasik
