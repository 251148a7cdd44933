// enritch: command line front end.
//
// Exit codes: 0 pass, 1 check failed, 2 schema or usage error,
// 3 precondition error, 4 bound refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "enritch/io.hpp"
#include "enritch/parmet.hpp"
#include "enritch/verify.hpp"

namespace {

using namespace enritch;
using io::ordered_json;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_schema = 2;
constexpr int exit_precondition = 3;
constexpr int exit_bound = 4;

struct Run {
  std::string command;
  ordered_json inputs = ordered_json::array();
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void input(const std::string& path) { inputs.push_back(io::input_entry(path)); }

  int emit(const std::string& check, bool result, ordered_json details, ordered_json witness = nullptr) const {
    ordered_json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["check"] = check;
    report["result"] = result;
    report["witness"] = std::move(witness);
    report["details"] = std::move(details);
    if (timing) {
      report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    std::cout << io::dump(report);
    return result ? exit_pass : exit_fail;
  }
};

int error_report(const std::string& command, const char* kind, const std::string& message, int code,
                 ordered_json witness = nullptr) {
  ordered_json report;
  report["command"] = command;
  report["error"] = kind;
  report["message"] = message;
  if (!witness.is_null()) report["witness"] = std::move(witness);
  std::cout << io::dump(report);
  std::cerr << "enritch: " << message << "\n";
  return code;
}

// ---------------------------------------------------------------------------

int quantale_check(Run& run, const std::string& path) {
  run.input(path);
  auto tables = io::load_quantale(path);
  auto laws = check_quantale_laws(tables);
  ordered_json details;
  details["elements"] = tables.elements;
  details["laws"] = io::law_report_to_json(laws);
  ordered_json witness = nullptr;
  for (const auto& r : laws.results) {
    if (r.passed) continue;
    witness = ordered_json::object();
    witness["law"] = r.law;
    witness["elements"] = r.witness;
    break;
  }
  return run.emit("quantale_laws", laws.all_passed(), std::move(details), std::move(witness));
}

ParMetSpace load_space(Run& run, const std::string& path) {
  run.input(path);
  return io::space_from_json(io::read_json_file(path));
}

RadiusFunction load_radius(Run& run, const std::string& path, const ParMetSpace& m) {
  run.input(path);
  return io::radius_from_json(io::read_json_file(path), m);
}

int hull_member(Run& run, const std::string& space_path, const std::string& radius_path) {
  auto m = load_space(run, space_path);
  auto mu = load_radius(run, radius_path, m);
  auto defect = tight_defect(m, mu);
  ordered_json details;
  details["radius"] = io::radius_to_json(mu, m);
  ordered_json witness = nullptr;
  if (defect) {
    witness = ordered_json::object();
    witness["point"] = m.points[*defect];
    witness["value"] = mu.values[*defect].str();
    witness["tight_value"] = tight_value(m, mu, *defect).str();
  }
  return run.emit("tight_member", !defect, std::move(details), std::move(witness));
}

int hull_tighten(Run& run, const std::string& space_path, const std::string& radius_path, const std::string& out_path,
                 const std::vector<std::string>& order_names) {
  auto m = load_space(run, space_path);
  auto mu = load_radius(run, radius_path, m);
  std::vector<std::size_t> order;
  for (const auto& name : order_names) order.push_back(m.index(name));
  auto result = tighten_sweep(m, mu, order);
  ordered_json out = io::radius_to_json(result.mu, m);
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw SchemaError("cannot write " + out_path);
    file << io::dump(out);
  }
  ordered_json details;
  details["radius"] = std::move(out);
  details["sweeps"] = result.sweeps;
  if (!out_path.empty()) details["written"] = out_path;
  return run.emit("tighten", true, std::move(details));
}

int hull_sigma(Run& run, const std::string& space_path, const std::string& first, const std::string& second) {
  auto m = load_space(run, space_path);
  auto mu = load_radius(run, first, m);
  auto lambda = load_radius(run, second, m);
  ordered_json details;
  details["sigma"] = sigma(m, mu, lambda).str();
  return run.emit("sigma", true, std::move(details));
}

int hull_dense(Run& run, const std::string& domain_path, const std::string& codomain_path,
               const std::string& map_path) {
  auto x = load_space(run, domain_path);
  auto y = load_space(run, codomain_path);
  run.input(map_path);
  auto f = io::point_map_from_json(io::read_json_file(map_path), x, y);
  const bool dense = dense_isometry_check(f, x, y);
  return run.emit("dense_isometry", dense, ordered_json::object());
}

int hull_hyperfamily(Run& run, const std::string& space_path, const std::string& family_path, bool strict) {
  auto m = load_space(run, space_path);
  run.input(family_path);
  auto family = io::family_from_json(io::read_json_file(family_path), m);
  auto report = hyperconvex_family_check(m, family.r, family.members, strict);
  if (!report.admissible) {
    ordered_json witness;
    if (report.bad_pair) {
      const auto& a = family.members[report.bad_pair->first];
      const auto& b = family.members[report.bad_pair->second];
      witness["pair"] = {m.points[a.point], m.points[b.point]};
      witness["distance"] = m(a.point, b.point).str();
      witness["radii"] = {a.radius.str(), b.radius.str()};
    } else {
      const auto& a = family.members[*report.bad_member];
      witness["member"] = m.points[a.point];
      witness["radius"] = a.radius.str();
    }
    return error_report(run.command, "precondition", "family is not admissible", exit_precondition,
                        std::move(witness));
  }
  ordered_json details;
  details["typing"] = strict ? "strict" : "lax";
  ordered_json witness = nullptr;
  if (report.witness) witness = m.points[*report.witness];
  return run.emit("hyperconvex_family", report.witness.has_value(), std::move(details), std::move(witness));
}

int verify(Run& run, const std::string& which, const std::string& quantale_path, std::size_t bound, bool lax) {
  auto theorem = theorem_from_name(which);
  if (!theorem) throw SchemaError("unknown theorem \"" + which + "\"; expected t36, l43, t44 or t54");
  if (bound > verify_max_bound) {
    throw BoundExceeded("bound " + std::to_string(bound) + " exceeds the maximum " + std::to_string(verify_max_bound));
  }
  run.input(quantale_path);
  FiniteDiagonals d(io::load_quantale(quantale_path));
  VerifyOptions options;
  options.bound = bound;
  options.typing = lax ? Typing::lax : Typing::strict;
  options.workers = workers_from_env();
  auto result = run_verify(*theorem, d, options);
  ordered_json witness = result.report["first_counterexample"];
  return run.emit(std::string(theorem_name(*theorem)), result.passed, std::move(result.report), std::move(witness));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric quantaloid-enriched categories: quantale laws, tight spans, injectivity checks"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall-clock milliseconds to the report");

  Run run;
  std::function<int()> action;

  auto* quantale = app.add_subcommand("quantale", "Quantale tables");
  quantale->require_subcommand(1);
  auto* q_check = quantale->add_subcommand("check", "Check every quantale law exhaustively");
  std::string q_path;
  q_check->add_option("file", q_path, "Quantale JSON file")->required();
  q_check->callback([&] {
    run.command = "quantale check";
    action = [&] { return quantale_check(run, q_path); };
  });

  auto* hull = app.add_subcommand("hull", "Partial metric tight spans");
  hull->require_subcommand(1);
  std::string space, radius, radius2, out, domain, codomain, map, family;
  std::vector<std::string> order;
  bool strict = false;

  auto* member = hull->add_subcommand("member", "Is the radius function tight?");
  member->add_option("--space", space, "Space file")->required();
  member->add_option("--radius", radius, "Radius function file")->required();
  member->callback([&] {
    run.command = "hull member";
    action = [&] { return hull_member(run, space, radius); };
  });

  auto* tighten_cmd = hull->add_subcommand("tighten", "Tighten an ambient radius function");
  tighten_cmd->add_option("--space", space, "Space file")->required();
  tighten_cmd->add_option("--radius", radius, "Radius function file")->required();
  tighten_cmd->add_option("--out", out, "Write the tightened radius function here");
  tighten_cmd->add_option("--order", order, "Sweep order as point names")->delimiter(',');
  tighten_cmd->callback([&] {
    run.command = "hull tighten";
    action = [&] { return hull_tighten(run, space, radius, out, order); };
  });

  auto* sigma_cmd = hull->add_subcommand("sigma", "Distance between two tight functions");
  sigma_cmd->add_option("--space", space, "Space file")->required();
  sigma_cmd->add_option("--radius", radius, "First radius function")->required();
  sigma_cmd->add_option("--radius2", radius2, "Second radius function")->required();
  sigma_cmd->callback([&] {
    run.command = "hull sigma";
    action = [&] { return hull_sigma(run, space, radius, radius2); };
  });

  auto* dense_cmd = hull->add_subcommand("dense", "Is the isometry dense?");
  dense_cmd->add_option("--domain", domain, "Domain space")->required();
  dense_cmd->add_option("--codomain", codomain, "Codomain space")->required();
  dense_cmd->add_option("--map", map, "Point map file")->required();
  dense_cmd->callback([&] {
    run.command = "hull dense";
    action = [&] { return hull_dense(run, domain, codomain, map); };
  });

  auto* family_cmd = hull->add_subcommand("hyperfamily", "Look for a common point of a ball family");
  family_cmd->add_option("--space", space, "Space file")->required();
  family_cmd->add_option("--family", family, "Family file")->required();
  family_cmd->add_flag("--strict-typing", strict, "Require the witness self-distance to equal r");
  family_cmd->callback([&] {
    run.command = "hull hyperfamily";
    action = [&] { return hull_hyperfamily(run, space, family, strict); };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive theorem checks over small categories");
  std::string theorem, quantale_path;
  std::size_t bound = 2;
  bool lax = false, strict_verify = false;
  verify_cmd->add_option("theorem", theorem, "t36, l43, t44 or t54")->required();
  verify_cmd->add_option("--quantale", quantale_path, "Quantale JSON file")->required();
  verify_cmd->add_option("--bound", bound, "Largest number of objects")->required();
  auto* strict_flag = verify_cmd->add_flag("--strict-typing", strict_verify, "Witnesses must have the column type (default)");
  verify_cmd->add_flag("--lax-typing", lax, "Drop the type condition on witnesses")->excludes(strict_flag);
  verify_cmd->callback([&] {
    run.command = "verify " + theorem;
    action = [&] { return verify(run, theorem, quantale_path, bound, lax); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_schema;
  }
  run.timing = timing;

  try {
    return action();
  } catch (const SchemaError& e) {
    return error_report(run.command, "schema", e.what(), exit_schema);
  } catch (const ShapeError& e) {
    return error_report(run.command, "schema", e.what(), exit_schema);
  } catch (const LawViolation& e) {
    return error_report(run.command, "law_violation", e.what(), exit_schema);
  } catch (const PreconditionError& e) {
    return error_report(run.command, "precondition", e.what(), exit_precondition);
  } catch (const BoundExceeded& e) {
    return error_report(run.command, "bound", e.what(), exit_bound);
  } catch (const Error& e) {
    return error_report(run.command, "error", e.what(), exit_precondition);
  }
}
