#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "quasik/group.hpp"

namespace quasik {

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

/// trivial, Z2, Z3, Z4, Z2xZ2, S3, D4, Q8, Z6, A4, D6, S4 in that order.
const std::vector<NamedGroup>& builtin_corpus();
/// Throws InputError on an unknown name.
GroupPtr corpus_group(const std::string& name);

/// User corpus: a JSON file holding either one group or
/// {"groups": [{"name": ..., "degree": ..., "generators": ...}, ...]},
/// or a directory of such files (read in filename order).
std::vector<NamedGroup> load_corpus(const std::filesystem::path& path);

/// A composable pair G -phi-> H -psi-> K.
struct HomPair {
  std::string name;
  GroupHom phi;
  GroupHom psi;
};

/// Ten fixed composable pairs among corpus groups.
const std::vector<HomPair>& corpus_hom_pairs();

}  // namespace quasik
