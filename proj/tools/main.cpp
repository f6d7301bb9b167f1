#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "permsum/cli.hpp"

namespace {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PERMSUM_ORACLE_BUDGET")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed PERMSUM_ORACLE_BUDGET\n";
  }
  return permsum::kDefaultOracleBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weighted product-set toolkit over Z/nZ"};
  app.require_subcommand(1);

  permsum::RunConfig cfg;
  cfg.oracle_budget = default_budget();

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "modulus n of Z/nZ")->required();
    sub->add_option("--format", cfg.format, "output format: human | json")
        ->check(CLI::IsMember({"human", "json"}));
    sub->add_option("--budget", cfg.oracle_budget,
                    "oracle DP budget in 64-bit words");
  };

  CLI::App* sumset = app.add_subcommand("sumset", "sumset A+B of two subsets");
  add_common(sumset);
  sumset->add_option("--a", cfg.a_text, "first set, e.g. {0,1,3}")->required();
  sumset->add_option("--b", cfg.b_text, "second set")->required();

  CLI::App* product = app.add_subcommand(
      "product-set", "exact product set S1*S2 with witnesses (oracle DP)");
  add_common(product);
  product->add_option("--s1", cfg.s1_text, "first sequence, e.g. 0^3,1^3,4")->required();
  product->add_option("--s2", cfg.s2_text, "second sequence")->required();

  CLI::App* witness = app.add_subcommand(
      "witness", "permutation witness placing a target in S1*S2");
  add_common(witness);
  witness->add_option("--s1", cfg.s1_text, "first sequence")->required();
  witness->add_option("--s2", cfg.s2_text, "second sequence")->required();
  witness->add_option("--target", cfg.target, "target residue")->required();

  CLI::App* chain = app.add_subcommand(
      "bound-chain", "prefix sumset cardinalities against their lower bounds");
  add_common(chain);
  chain->add_option("--s1", cfg.s1_text, "first sequence")->required();
  chain->add_option("--s2", cfg.s2_text, "second sequence")->required();

  CLI::App* lemma = app.add_subcommand(
      "check-lemma", "exhaustive triple-product floor check at a prime");
  add_common(lemma);

  CLI::App* verify = app.add_subcommand(
      "verify-theorem", "witness-construction verification campaign");
  add_common(verify);
  verify->add_option("--mode", cfg.mode, "exhaustive | sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--samples", cfg.samples, "instances in sampled mode");
  verify->add_option("--seed", cfg.seed, "campaign seed");
  verify->add_option("--jobs", cfg.jobs, "worker threads");

  CLI::App* extremal = app.add_subcommand(
      "extremal", "extremal family instances, optionally oracle-verified");
  add_common(extremal);
  extremal->add_option("--family", cfg.family, "family index: 1, 2 or 3")->required();
  extremal->add_flag("--verify", cfg.verify, "confirm the claimed property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "witness") cfg.has_target = true;
  return permsum::run(cfg, std::cout);
}
