#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "quasik/character_table.hpp"
#include "quasik/gset.hpp"
#include "quasik/lambda_module.hpp"
#include "quasik/loop_groupoid.hpp"
#include "quasik/quasi_theory.hpp"

namespace quasik {

using nlohmann::json;

// Input files. Parse failures throw InputError naming the offending field.

/// {"degree": d, "generators": [[images...], ...]}
GroupPtr parse_group(const json& j);
GroupPtr load_group(const std::filesystem::path& path);
/// {"points": k, "generator_action": [[images...], ...]}, generators in
/// the order of the group file.
GSet parse_gset(const GroupPtr& g, const json& j);
GSet load_gset(const GroupPtr& g, const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);

json perm_to_json(const Perm& p);
json tuple_to_json(const CommutingTuple& t);
json group_to_json(const FiniteGroup& g);
json gset_to_json(const GSet& x);
json laurent_to_json(const LaurentPoly& p);

/// {"order", "conductor", "classes": [{"representative", "size"}],
///  "characters": [{"degree", "values": [[coeffs...] per class]}]}
json table_to_json(const CharacterTable& t);
/// Inverse of table_to_json; the class representatives must match `g`.
TablePtr table_from_json(const GroupPtr& g, const json& j);

/// [{"sigma", "orbit_rep", "orbit_size", "stabilizer_order"}]
json skeleton_to_json(const LoopGroupoidSkeleton& s);

/// {"sigma", "terms": [{"character_index", "q_degree", "coeff": [{"exp", "c"}]}]}
json module_element_to_json(const ModuleElement& x);

/// {"group", "gset", "n", "components": [{"sigma", "orbit_rep",
///  "stabilizer_order", "basis": [{"char_degree", "q_degree"}]}], "total_rank"}
json ring_to_json(const QTheoryRing& r);

/// Human-readable table of the ring: one row per component.
std::string ring_to_table(const QTheoryRing& r);

/// {"map", "source_rank", "target_rank", "bijective", "matrix": [{"row", "col", "coeff"}]}
json map_check_to_json(const std::string& name, int source_rank, int target_rank, bool bijective,
                       const LaurentMatrix& m);

/// Per component, the fractional-degree symbols q^{k/l}[chi] of its basis.
json tate_export(const QTheoryRing& r);

}  // namespace quasik
