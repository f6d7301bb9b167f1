#include "permsum/cli.hpp"

#include <ostream>

#include <json.hpp>

#include "permsum/analysis.hpp"
#include "permsum/gset.hpp"
#include "permsum/solver.hpp"

namespace permsum {

namespace {

using json = nlohmann::ordered_json;

json make_report(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["n"] = cfg.n;
  j["inputs"] = json::object();
  j["result"] = nullptr;
  j["witnesses"] = json::array();
  j["violations"] = json::array();
  j["stats"] = json::object();
  j["seed"] = nullptr;
  return j;
}

json matching_json(Residue value, const Matching& m) {
  json pairs = json::array();
  for (auto [i, k] : m.pairs) pairs.push_back(json::array({i, k}));
  return json{{"value", value}, {"pairs", std::move(pairs)}};
}

void emit(const RunConfig& cfg, const json& report, std::ostream& out) {
  if (cfg.format == "json") {
    out << report.dump(2) << '\n';
    return;
  }
  // Human format: one line per top-level fact.
  out << cfg.command << " (n = " << cfg.n << ")\n";
  if (!report["inputs"].empty()) {
    for (const auto& [key, val] : report["inputs"].items()) {
      out << "  " << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
          << '\n';
    }
  }
  if (!report["result"].is_null()) {
    for (const auto& [key, val] : report["result"].items()) {
      out << "  " << key << " = "
          << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
    }
  }
  for (const auto& w : report["witnesses"]) {
    out << "  witness " << w["value"] << ": ";
    bool first = true;
    for (const auto& p : w["pairs"]) {
      if (!first) out << ',';
      out << '(' << p[0] << ',' << p[1] << ')';
      first = false;
    }
    out << '\n';
  }
  for (const auto& v : report["violations"]) {
    out << "  violation: " << v.dump() << '\n';
  }
  if (!report["seed"].is_null()) {
    out << "  seed = " << report["seed"] << '\n';
  }
}

int cmd_sumset(const RunConfig& cfg, json& report) {
  Ring ring = make_ring(cfg.n);
  GSet a = parse_gset(ring, cfg.a_text);
  GSet b = parse_gset(ring, cfg.b_text);
  report["inputs"]["a"] = format_gset(a);
  report["inputs"]["b"] = format_gset(b);
  GSet s = sumset(a, b);
  json result;
  result["set"] = format_gset(s);
  result["size"] = s.size();
  if (ring.prime && !a.empty() && !b.empty()) {
    CdBound cd = cd_bound_holds(a, b);
    result["cd_lhs"] = cd.lhs;
    result["cd_rhs"] = cd.rhs;
    result["cd_holds"] = cd.holds;
  }
  report["result"] = std::move(result);
  return 0;
}

int cmd_product_set(const RunConfig& cfg, json& report) {
  Ring ring = make_ring(cfg.n);
  Sequence s1 = parse_sequence(ring, cfg.s1_text);
  Sequence s2 = parse_sequence(ring, cfg.s2_text);
  report["inputs"]["s1"] = format_sequence(s1);
  report["inputs"]["s2"] = format_sequence(s2);
  WitnessedSet ws = oracle_product_set(s1, s2, cfg.oracle_budget);
  json result;
  result["set"] = format_gset(ws.set);
  result["size"] = ws.set.size();
  result["contains_zero"] = ws.set.contains(0);
  report["result"] = std::move(result);
  for (const auto& [value, m] : ws.witness) {
    report["witnesses"].push_back(matching_json(value, m));
  }
  return 0;
}

int cmd_witness(const RunConfig& cfg, json& report) {
  Ring ring = make_ring(cfg.n);
  Sequence s1 = parse_sequence(ring, cfg.s1_text);
  Sequence s2 = parse_sequence(ring, cfg.s2_text);
  if (!cfg.has_target) {
    throw UsageError("witness requires --target");
  }
  if (cfg.target >= ring.n) {
    throw UsageError("target residue out of range");
  }
  report["inputs"]["s1"] = format_sequence(s1);
  report["inputs"]["s2"] = format_sequence(s2);
  report["inputs"]["target"] = cfg.target;
  SolveReport sr = solve(s1, s2, cfg.target);
  json result;
  result["found"] = true;
  result["target"] = sr.target;
  report["result"] = std::move(result);
  report["witnesses"].push_back(matching_json(sr.target, sr.witness));
  json blocks1 = json::array(), blocks2 = json::array();
  for (const Sequence& b : sr.factorization_1.blocks) blocks1.push_back(format_sequence(b));
  for (const Sequence& b : sr.factorization_2.blocks) blocks2.push_back(format_sequence(b));
  report["stats"]["blocks_1"] = std::move(blocks1);
  report["stats"]["blocks_2"] = std::move(blocks2);
  report["stats"]["prefix_sizes"] = sr.prefix_sizes;
  return 0;
}

int cmd_bound_chain(const RunConfig& cfg, json& report) {
  Ring ring = make_ring(cfg.n);
  Sequence s1 = parse_sequence(ring, cfg.s1_text);
  Sequence s2 = parse_sequence(ring, cfg.s2_text);
  report["inputs"]["s1"] = format_sequence(s1);
  report["inputs"]["s2"] = format_sequence(s2);
  BoundChainReport bc = bound_chain(s1, s2);
  json result;
  result["h"] = bc.h;
  result["chain_sizes"] = bc.chain_sizes;
  result["prefix_sizes"] = bc.prefix_sizes;
  json bounds = json::array();
  for (const BoundCheck& b : bc.bounds) {
    bounds.push_back(json{{"name", b.name},
                          {"prefix_index", b.prefix_index},
                          {"bound", b.bound},
                          {"cardinality", b.cardinality},
                          {"satisfied", b.satisfied}});
    if (!b.satisfied) {
      report["violations"].push_back(json{{"bound", b.name},
                                          {"expected", b.bound},
                                          {"actual", b.cardinality}});
    }
  }
  result["bounds"] = std::move(bounds);
  result["saturated"] = bc.saturated;
  if (!bc.saturated) {
    report["violations"].push_back(json{{"bound", "saturation"},
                                        {"expected", cfg.n},
                                        {"actual", bc.prefix_sizes.back()}});
  }
  report["result"] = std::move(result);
  return bc.all_satisfied() ? 0 : 1;
}

int cmd_check_lemma(const RunConfig& cfg, json& report) {
  Ring ring = make_ring(cfg.n);
  LemmaReport lr = check_lemma(ring);
  json result;
  result["pairs_checked"] = lr.pairs_checked;
  result["min_size"] = lr.min_size;
  json cases = json::array();
  for (const EqualityCase& c : lr.equality_cases) {
    cases.push_back(json{
        {"x", c.x},
        {"y", c.y},
        {"class", c.cls == EqualityClass::BOTH_AP ? "BOTH_AP" : "ROOT_PAIR"}});
  }
  result["equality_cases"] = std::move(cases);
  report["result"] = std::move(result);
  return 0;
}

int cmd_verify_theorem(const RunConfig& cfg, json& report) {
  Ring ring = make_ring(cfg.n);
  CampaignMode mode;
  if (cfg.mode == "exhaustive") {
    mode.exhaustive = true;
  } else if (cfg.mode == "sampled") {
    mode.exhaustive = false;
  } else {
    throw UsageError("mode must be 'exhaustive' or 'sampled'");
  }
  mode.samples = cfg.samples;
  mode.seed = cfg.seed;
  mode.jobs = cfg.jobs;
  report["inputs"]["mode"] = cfg.mode;
  if (!mode.exhaustive) report["inputs"]["samples"] = cfg.samples;

  CampaignReport cr = verify_theorem(ring, mode);
  json result;
  result["instances_checked"] = cr.instances_checked;
  result["targets_checked"] = cr.targets_checked;
  result["failures"] = cr.failures.size();
  report["result"] = std::move(result);
  for (const CampaignFailure& f : cr.failures) {
    report["violations"].push_back(json{{"instance", f.instance},
                                        {"s1", f.s1},
                                        {"s2", f.s2},
                                        {"target", f.target},
                                        {"reason", f.reason}});
  }
  report["stats"]["algorithm"] = cr.algorithm;
  if (!mode.exhaustive) report["seed"] = cr.seed;
  return cr.failures.empty() ? 0 : 1;
}

int cmd_extremal(const RunConfig& cfg, json& report) {
  FamilyInstance inst = make_family(cfg.family, cfg.n);
  report["inputs"]["family"] = cfg.family;
  report["inputs"]["verify"] = cfg.verify;
  json result;
  result["s1"] = format_sequence(inst.s1);
  result["s2"] = format_sequence(inst.s2);
  result["property"] = inst.property == FamilyProperty::ZERO_NOT_IN_PRODUCT
                           ? "ZERO_NOT_IN_PRODUCT"
                           : "PRODUCT_NOT_FULL";
  if (inst.family == 3) {
    result["x"] = inst.x;
    result["size_bound"] = inst.size_bound;
  }
  int code = 0;
  if (cfg.verify) {
    bool ok = verify_family(inst, cfg.oracle_budget);
    result["verified"] = ok;
    if (!ok) {
      report["violations"].push_back(json{{"family", inst.family},
                                          {"reason", "claimed property failed"}});
      code = 1;
    }
  } else {
    result["verified"] = nullptr;
  }
  report["result"] = std::move(result);
  return code;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out) {
  json report = make_report(cfg);
  int code = 0;
  try {
    if (cfg.command == "sumset") {
      code = cmd_sumset(cfg, report);
    } else if (cfg.command == "product-set") {
      code = cmd_product_set(cfg, report);
    } else if (cfg.command == "witness") {
      code = cmd_witness(cfg, report);
    } else if (cfg.command == "bound-chain") {
      code = cmd_bound_chain(cfg, report);
    } else if (cfg.command == "check-lemma") {
      code = cmd_check_lemma(cfg, report);
    } else if (cfg.command == "verify-theorem") {
      code = cmd_verify_theorem(cfg, report);
    } else if (cfg.command == "extremal") {
      code = cmd_extremal(cfg, report);
    } else {
      throw UsageError("unknown command '" + cfg.command + "'");
    }
  } catch (const BudgetError& e) {
    report["violations"].push_back(json{{"error", "budget"}, {"message", e.what()}});
    code = 3;
  } catch (const LemmaViolationError& e) {
    report["violations"].push_back(
        json{{"error", "violation"}, {"message", e.what()}, {"x", e.x}, {"y", e.y}});
    code = 1;
  } catch (const ViolationError& e) {
    report["violations"].push_back(json{{"error", "violation"}, {"message", e.what()}});
    code = 1;
  } catch (const UsageError& e) {
    report["violations"].push_back(json{{"error", "usage"}, {"message", e.what()}});
    code = 2;
  } catch (const Error& e) {
    report["violations"].push_back(json{{"error", "internal"}, {"message", e.what()}});
    code = 2;
  }
  emit(cfg, report, out);
  return code;
}

}  // namespace permsum
