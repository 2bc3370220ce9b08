// quasik: command-line front end.
#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "quasik/corpus.hpp"
#include "quasik/error.hpp"
#include "quasik/io.hpp"
#include "quasik/quasi_theory.hpp"
#include "quasik/verify.hpp"

using namespace quasik;

namespace {

struct Job {
  std::string group_file;
  std::string gset_file;
  int n = 1;
  std::string format = "json";
  std::string suite;
  std::string corpus;
  int trials = 20;
  int workers = 0;
};

GSet load_space(const GroupPtr& g, const std::string& path) {
  return path.empty() ? GSet::point(g) : load_gset(g, path);
}

int cmd_classes(const Job& job) {
  GroupPtr g = load_group(job.group_file);
  auto classes = conjugacy_classes(*g);
  std::cout << "order " << g->order() << ", " << classes.size() << " classes\n";
  for (const auto& c : classes)
    std::cout << c.elements.size() << '\t' << c.representative.to_cycle_string() << '\n';
  return 0;
}

int cmd_tuples(const Job& job) {
  GroupPtr g = load_group(job.group_file);
  auto tuples = commuting_tuples(g, job.n);
  std::cout << tuples.size() << " commuting " << job.n << "-tuples up to conjugacy\n";
  for (const auto& t : tuples) {
    std::string row;
    for (const auto& p : t.entries()) row += (row.empty() ? "" : "\t") + p.to_cycle_string();
    std::cout << row << '\n';
  }
  return 0;
}

int cmd_qk(const Job& job) {
  GroupPtr g = load_group(job.group_file);
  RingPtr ring = qk_compute(g, load_space(g, job.gset_file), job.n);
  if (job.format == "table")
    std::cout << ring_to_table(*ring);
  else
    std::cout << ring_to_json(*ring).dump(2) << '\n';
  return 0;
}

int cmd_export_tate(const Job& job) {
  GroupPtr g = load_group(job.group_file);
  RingPtr ring = qk_compute(g, load_space(g, job.gset_file), job.n);
  std::cout << tate_export(*ring).dump(2) << '\n';
  return 0;
}

int cmd_verify(const Job& job) {
  std::vector<NamedGroup> corpus = job.corpus.empty() ? builtin_corpus() : load_corpus(job.corpus);
  VerifyOptions opt;
  opt.max_n = job.n;
  opt.trials = job.trials;
  opt.workers = job.workers;
  auto start = std::chrono::steady_clock::now();
  Report r = run_suite(job.suite, corpus, opt);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << r.to_text() << "elapsed " << secs << " s\n";
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-theory rings QK_{n,G}(X) of finite groups acting on finite sets"};
  app.require_subcommand(1);
  Job job;

  auto* classes = app.add_subcommand("classes", "List conjugacy classes");
  classes->add_option("-g,--group", job.group_file, "group JSON file")->required();

  auto* tuples = app.add_subcommand("tuples", "List commuting tuples up to simultaneous conjugacy");
  tuples->add_option("-g,--group", job.group_file, "group JSON file")->required();
  tuples->add_option("-n", job.n, "tuple length")->check(CLI::PositiveNumber);

  auto* qk = app.add_subcommand("qk", "Compute QK_{n,G}(X)");
  qk->add_option("-g,--group", job.group_file, "group JSON file")->required();
  qk->add_option("-x,--gset", job.gset_file, "G-set JSON file (default: a point)");
  qk->add_option("-n", job.n, "loop dimension")->check(CLI::PositiveNumber);
  qk->add_option("--format", job.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* tate = app.add_subcommand("export-tate", "Export fractional-degree basis symbols");
  tate->add_option("-g,--group", job.group_file, "group JSON file")->required();
  tate->add_option("-x,--gset", job.gset_file, "G-set JSON file (default: a point)");
  tate->add_option("-n", job.n, "loop dimension")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a verification suite over a corpus");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", job.suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--corpus", job.corpus, "group file, {\"groups\": [...]} file, or directory");
  job.n = 1;
  auto* max_n = verify->add_option("-n,--max-n", job.n, "largest n to check (default 2)")->check(CLI::PositiveNumber);
  verify->add_option("--trials", job.trials, "randomized classes per check")->check(CLI::PositiveNumber);
  verify->add_option("-j,--workers", job.workers, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (verify->parsed() && max_n->count() == 0) job.n = 2;

  try {
    if (classes->parsed()) return cmd_classes(job);
    if (tuples->parsed()) return cmd_tuples(job);
    if (qk->parsed()) return cmd_qk(job);
    if (tate->parsed()) return cmd_export_tate(job);
    if (verify->parsed()) return cmd_verify(job);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded (" << e.cap() << "): " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
