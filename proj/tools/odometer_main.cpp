// Command-line front end: odometer <command> <spec> [options].

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "odo/report.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInvalidInput = 2, kInvariantViolation = 3 };

struct Options {
  std::string spec;
  std::string format = "json";
  std::size_t max_degree = 3;
  std::optional<std::size_t> horizon;
  std::vector<std::size_t> ah_levels;
  std::vector<std::size_t> levels;
  bool colimit = false;
  std::optional<std::size_t> depth;
  std::optional<std::string> group;
};

std::string read_spec_text(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) odo::fail(odo::Errc::InvalidArgument, "cannot read specification file " + arg);
  return {std::istreambuf_iterator<char>(in), {}};
}

odo::OdometerSpec load_spec(const Options& o) {
  odo::Json doc;
  try {
    doc = odo::Json::parse(read_spec_text(o.spec));
  } catch (const nlohmann::json::parse_error& e) {
    odo::fail(odo::Errc::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object()) {
    if (o.depth) doc["depth"] = *o.depth;
    if (o.group) doc["group"] = *o.group;
  }
  return odo::parse_spec(doc);
}

bool contains_invariant_violation(const odo::Json& j) {
  if (j.is_object()) {
    if (j.contains("error") && j["error"] == "InvariantViolation") return true;
    for (const auto& [k, v] : j.items())
      if (contains_invariant_violation(v)) return true;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (contains_invariant_violation(v)) return true;
  }
  return false;
}

void emit(const odo::Json& j, const std::string& format) {
  if (format == "text") std::cout << odo::render_text(j);
  else std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of odometers of Z and of the infinite dihedral group"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec, "specification: JSON file, '-' for stdin, or inline JSON")
        ->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--depth", o.depth, "override the specification depth");
    sub->add_option("--group", o.group, "override the group kind");
  };

  auto* invariants = app.add_subcommand("invariants", "full invariant report");
  add_common(invariants);
  invariants->add_option("--max-degree", o.max_degree, "highest homology degree")->default_val(3);
  invariants->add_option("--horizon", o.horizon, "horizon for extendable fixed-point counts");
  invariants->add_option("--ah-levels", o.ah_levels, "levels for AH certificates")->delimiter(',');

  auto* hk = app.add_subcommand("hk-check", "compare K-theory with homology");
  add_common(hk);
  hk->add_option("--max-degree", o.max_degree, "highest homology degree")->default_val(3);

  auto* ah = app.add_subcommand("ah-check", "AH exact sequence certificates");
  add_common(ah);
  ah->add_option("--level", o.levels, "finite level (repeatable)");
  ah->add_flag("--colimit", o.colimit, "certify the colimit sequence");
  ah->add_option("--ah-levels", o.ah_levels, "levels for AH certificates")->delimiter(',');

  auto* topfree = app.add_subcommand("topfree", "topological freeness verdict");
  add_common(topfree);

  auto* oracles = app.add_subcommand("oracles", "closed forms against brute force");
  add_common(oracles);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const odo::OdometerSpec spec = load_spec(o);
    odo::ReportOptions options;
    options.max_degree = o.max_degree;
    options.horizon = o.horizon;
    options.ah_levels = o.ah_levels;

    odo::Json out;
    if (invariants->parsed()) {
      out = odo::run_report(spec, options);
    } else if (hk->parsed()) {
      out = odo::hk_check(spec, options);
    } else if (ah->parsed()) {
      options.ah_levels.insert(options.ah_levels.end(), o.levels.begin(), o.levels.end());
      options.ah_colimit = o.colimit;
      if (options.ah_levels.empty() && !o.colimit) {
        options.ah_levels = odo::default_ah_levels(spec);
        options.ah_colimit = spec.group() == odo::GroupKind::Dihedral && spec.tail().is_geometric();
      }
      out = odo::ah_check(spec, options);
    } else if (topfree->parsed()) {
      out = odo::Json{{"spec", odo::serialize_spec(spec)},
                      {"topological_freeness", odo::topfree_json(spec)}};
    } else {
      out = odo::run_oracles(spec, spec.depth());
    }
    emit(out, o.format);
    return contains_invariant_violation(out) ? kInvariantViolation : kOk;
  } catch (const odo::Error& e) {
    emit(odo::Json{{"error", std::string(odo::errc_name(e.code()))}, {"message", e.what()}}, o.format);
    return e.code() == odo::Errc::InvariantViolation ? kInvariantViolation : kInvalidInput;
  }
}
