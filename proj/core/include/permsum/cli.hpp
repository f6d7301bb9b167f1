#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "permsum/products.hpp"

namespace permsum {

// One fully resolved invocation. Exactly one command; sequence and set texts
// are parsed under `n` by run().
struct RunConfig {
  std::string command;  // sumset | product-set | witness | bound-chain |
                        // check-lemma | verify-theorem | extremal
  std::uint32_t n = 0;
  std::string s1_text;
  std::string s2_text;
  std::string a_text;
  std::string b_text;
  bool has_target = false;
  std::uint32_t target = 0;
  int family = 0;
  bool verify = false;
  std::string mode = "sampled";  // verify-theorem: exhaustive | sampled
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string format = "human";  // human | json
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

// Dispatches to the named operation and writes one report to `out`.
// Exit code: 0 property holds / witness found, 1 property violated or witness
// impossible (counterexample emitted), 2 usage or parse error, 3 budget
// exceeded. JSON reports have the fixed field order
// command, n, inputs, result, witnesses, violations, stats, seed and are
// byte-stable for identical config and seed.
int run(const RunConfig& config, std::ostream& out);

}  // namespace permsum
