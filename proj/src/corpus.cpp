#include "quasik/corpus.hpp"

#include <algorithm>

#include "quasik/error.hpp"
#include "quasik/io.hpp"

namespace quasik {

namespace {

GroupPtr make(int degree, std::vector<std::vector<std::vector<int>>> gens) {
  std::vector<Perm> perms;
  for (auto& cycles : gens) perms.push_back(Perm::from_cycles(degree, cycles));
  return FiniteGroup::from_generators(degree, std::move(perms));
}

Perm cyc(int degree, std::vector<std::vector<int>> cycles) { return Perm::from_cycles(degree, cycles); }

}  // namespace

const std::vector<NamedGroup>& builtin_corpus() {
  static const std::vector<NamedGroup> corpus = [] {
    std::vector<NamedGroup> c;
    c.push_back({"trivial", make(1, {})});
    c.push_back({"Z2", make(2, {{{0, 1}}})});
    c.push_back({"Z3", make(3, {{{0, 1, 2}}})});
    c.push_back({"Z4", make(4, {{{0, 1, 2, 3}}})});
    c.push_back({"Z2xZ2", make(4, {{{0, 1}}, {{2, 3}}})});
    c.push_back({"S3", make(3, {{{0, 1}}, {{0, 1, 2}}})});
    c.push_back({"D4", make(4, {{{0, 1, 2, 3}}, {{1, 3}}})});
    // regular representation: i and j acting on {1,-1,i,-i,j,-j,k,-k}
    c.push_back({"Q8", FiniteGroup::from_generators(8, {Perm({2, 3, 1, 0, 6, 7, 5, 4}), Perm({4, 5, 7, 6, 1, 0, 2, 3})})});
    c.push_back({"Z6", make(6, {{{0, 1, 2, 3, 4, 5}}})});
    c.push_back({"A4", make(4, {{{0, 1, 2}}, {{0, 1}, {2, 3}}})});
    c.push_back({"D6", make(6, {{{0, 1, 2, 3, 4, 5}}, {{1, 5}, {2, 4}}})});
    c.push_back({"S4", make(4, {{{0, 1}}, {{0, 1, 2, 3}}})});
    return c;
  }();
  return corpus;
}

GroupPtr corpus_group(const std::string& name) {
  for (const auto& g : builtin_corpus())
    if (g.name == name) return g.group;
  throw InputError("unknown corpus group '" + name + "'");
}

std::vector<NamedGroup> load_corpus(const std::filesystem::path& path) {
  std::vector<NamedGroup> out;
  auto read_file = [&](const std::filesystem::path& p) {
    json j = load_json(p);
    if (j.is_object() && j.contains("groups")) {
      const json& gs = j.at("groups");
      if (!gs.is_array()) throw InputError("field 'groups' must be an array");
      for (std::size_t i = 0; i < gs.size(); ++i) {
        std::string name = gs[i].value("name", p.stem().string() + "[" + std::to_string(i) + "]");
        out.push_back({name, parse_group(gs[i])});
      }
    } else {
      out.push_back({p.stem().string(), parse_group(j)});
    }
  };
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(path))
      if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) read_file(f);
  } else {
    read_file(path);
  }
  if (out.empty()) throw InputError("corpus " + path.string() + " contains no groups");
  return out;
}

const std::vector<HomPair>& corpus_hom_pairs() {
  static const std::vector<HomPair> pairs = [] {
    auto z2 = corpus_group("Z2"), z3 = corpus_group("Z3"), z4 = corpus_group("Z4");
    auto v4 = corpus_group("Z2xZ2"), s3 = corpus_group("S3"), d4 = corpus_group("D4");
    auto q8 = corpus_group("Q8"), z6 = corpus_group("Z6"), a4 = corpus_group("A4");
    auto d6 = corpus_group("D6"), s4 = corpus_group("S4"), e = corpus_group("trivial");

    // subgroups of S4 realized on 4 points
    auto s3_in_4 = make(4, {{{0, 1}}, {{0, 1, 2}}});
    auto z2_in_4 = make(4, {{{0, 1}}});
    auto z3_in_4 = make(4, {{{0, 1, 2}}});
    auto v4_in_4 = make(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
    auto incl = [](const GroupPtr& a, const GroupPtr& b) { return GroupHom::inclusion(a, b); };
    auto sign_s3 = GroupHom(s3, z2, {cyc(2, {{0, 1}}), Perm::identity(2)});

    std::vector<HomPair> p;
    p.push_back({"Z2 -> S3 -> S4", incl(z2_in_4, s3_in_4), incl(s3_in_4, s4)});
    p.push_back({"Z3 -> A4 -> S4", incl(z3_in_4, a4), incl(a4, s4)});
    p.push_back({"Z4 -> D4 -> S4", GroupHom(z4, d4, {cyc(4, {{0, 1, 2, 3}})}), incl(d4, s4)});
    p.push_back({"V4 -> A4 -> S4", incl(v4_in_4, a4), incl(a4, s4)});
    p.push_back({"S4 -> S3 -> Z2", GroupHom(s4, s3, {cyc(3, {{1, 2}}), cyc(3, {{0, 2}})}), sign_s3});
    p.push_back({"Q8 -> Z2xZ2 -> Z2",
                 GroupHom(q8, v4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})}),
                 GroupHom(v4, z2, {cyc(2, {{0, 1}}), cyc(2, {{0, 1}})})});
    p.push_back({"Z6 -> Z3 -> S3", GroupHom(z6, z3, {cyc(3, {{0, 1, 2}})}),
                 GroupHom(z3, s3, {cyc(3, {{0, 1, 2}})})});
    p.push_back({"D6 -> S3 -> S4", GroupHom(d6, s3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})}),
                 GroupHom(s3, s4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2}})})});
    p.push_back({"Z2 -> Z4 -> D4", GroupHom(z2, z4, {cyc(4, {{0, 2}, {1, 3}})}),
                 GroupHom(z4, d4, {cyc(4, {{0, 1, 2, 3}})})});
    p.push_back({"e -> S3 -> Z2", GroupHom::trivial(e, s3), sign_s3});
    return p;
  }();
  return pairs;
}

}  // namespace quasik
