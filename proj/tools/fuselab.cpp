#include <iostream>

#include <CLI11.hpp>

#include "fuselab/cli.hpp"

namespace {

void add_common(CLI::App* cmd, fuselab::JobSpec& job) {
  cmd->add_option("--data", job.data, "catalog id (su2:<level>, fibonacci, ising, zn:<n>) or JSON file");
  cmd->add_option("--level", job.level, "level for a bare su2 id");
  cmd->add_option("--graph", job.graph, "A:n, D:n, E:n, regular or custom:<file>; join summands with '+'");
  cmd->add_option("--format", job.format, "human or json")->check(CLI::IsMember({"human", "json"}));
  cmd->add_option("--digits", job.digits, "decimal digits for numeric approximations");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuselab: exact fusion rings, modular data, NIM-reps and modular invariants"};
  app.require_subcommand(1);
  fuselab::JobSpec job;

  auto* catalog = app.add_subcommand("catalog", "built-in modular data");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog ids");
  list->add_option("--format", job.format)->check(CLI::IsMember({"human", "json"}));
  add_common(catalog->add_subcommand("show", "dimensions, spins and the stored document"), job);
  add_common(catalog->add_subcommand("export", "print the data document for round-tripping"), job);

  add_common(app.add_subcommand("verify-fusion", "fusion axioms, and modular-data identities if present"), job);
  add_common(app.add_subcommand("spectrum", "Spec(F) and idempotent agreement"), job);

  auto* nimrep = app.add_subcommand("nimrep", "NIM-reps");
  nimrep->require_subcommand(1);
  add_common(nimrep->add_subcommand("check", "build and verify a NIM-rep"), job);
  add_common(app.add_subcommand("profile", "eigenvalue multiplicity profile"), job);

  auto* gauge = app.add_subcommand("gauge", "pivotal gauge scalars");
  gauge->require_subcommand(1);
  auto* solve = gauge->add_subcommand("solve", "solve mu = d(lambda) from a gauge file, or use the d-eigenvector of a graph");
  add_common(solve, job);
  solve->add_option("--gauge", job.gauge, "gauge JSON file");

  add_common(app.add_subcommand("tm-dim", "dimension of TM and the indecomposability verdicts"), job);

  auto* inv = app.add_subcommand("invariant", "modular invariants");
  inv->require_subcommand(1);
  auto* verify = inv->add_subcommand("verify", "check a candidate Z");
  add_common(verify, job);
  verify->add_option("--z", job.z, "invariant JSON file or integer grid")->required();
  auto* search = inv->add_subcommand("search", "enumerate invariants with bounded entries");
  add_common(search, job);
  search->add_option("--bound", job.bound, "largest entry (default 3)");
  search->add_option("--cap", job.cap, "lattice node budget (default 1e7, or FUSELAB_SEARCH_CAP)");

  auto* diag = app.add_subcommand("diag-theorem", "NIM-rep profile vs eigen-oracle vs enumerated invariants");
  add_common(diag, job);
  diag->add_option("--bound", job.bound, "largest entry (default: largest multiplicity)");
  diag->add_option("--cap", job.cap, "lattice node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  for (const CLI::App* cur = &app; !cur->get_subcommands().empty();) {
    cur = cur->get_subcommands().front();
    job.command.push_back(cur->get_name());
  }

  const auto res = fuselab::run(job);
  if (res.document && res.exit_code == 0) std::cout << *res.document;
  else std::cout << fuselab::render_report(res.report, job.format);
  return res.exit_code;
}
