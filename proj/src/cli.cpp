#include "complementa/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "complementa/bounds.hpp"
#include "complementa/complementation.hpp"
#include "complementa/error.hpp"
#include "complementa/examples.hpp"
#include "complementa/io.hpp"
#include "complementa/series.hpp"
#include "complementa/verify.hpp"

namespace complementa {

namespace {

constexpr std::size_t default_example_cap = 243;

struct Options {
  std::string recipe;
  std::string input;
  std::uint64_t p = 2;
  std::size_t n = 1;
  std::uint64_t m = 1;
  std::optional<std::uint64_t> q;
  std::string subgroup;
  std::string mode = "first";
  std::string suite;
  std::string predicate;
  bool json = false;
  std::string out;
  std::optional<std::size_t> cap;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

NamedGroup load_group(const Options& o) {
  if (!o.input.empty() && !o.recipe.empty()) throw UsageError("give either --recipe or --input, not both");
  if (!o.input.empty()) return name_generators(o.input, read_group(o.input));
  if (o.recipe.empty()) throw UsageError("a group is required: --recipe <name> or --input <cayley-v1 file>");
  try {
    return build_recipe(o.recipe, o.p, o.n, o.cap.value_or(default_example_cap));
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

std::size_t lattice_cap(const Options& o) { return o.cap.value_or(Limits::lattice); }

Subgroup parse_subgroup(const NamedGroup& ng, const std::string& text) {
  if (text.empty()) throw UsageError("--subgroup is required for this check");
  if (auto it = ng.subgroups.find(text); it != ng.subgroups.end()) return it->second;

  std::vector<std::string> tokens;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) tokens.push_back(trim(token));
  const bool numeric = std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  });

  std::vector<Element> elems;
  for (const auto& t : tokens) {
    if (numeric) {
      const auto e = std::stoull(t);
      if (e >= ng.group.order()) throw UsageError("element index " + t + " out of range");
      elems.push_back(static_cast<Element>(e));
    } else if (auto it = ng.elements.find(t); it != ng.elements.end()) {
      elems.push_back(it->second);
    } else {
      try {
        elems.push_back(ng.group.evaluate(t));
      } catch (const Error& e) {
        throw UsageError("cannot read subgroup generator \"" + t + "\": " + e.what());
      }
    }
  }
  return generated_subgroup(ng.group, elems);
}

Json optional_subgroup(const FiniteGroup& g, const std::optional<Subgroup>& s) {
  return s ? subgroup_to_json(g, *s) : Json(nullptr);
}

Json run_check(const Options& o) {
  const auto ng = load_group(o);
  const auto& g = ng.group;
  Json j;
  j["predicate"] = o.predicate;
  j["group"] = ng.name;

  if (o.predicate == "complemented" || o.predicate == "complements") {
    SearchMode mode = SearchMode::first;
    if (o.mode == "all")
      mode = SearchMode::all;
    else if (o.mode != "first")
      throw UsageError("--mode must be first or all");
    if (o.predicate == "complemented") mode = SearchMode::first;
    const auto h = parse_subgroup(ng, o.subgroup);
    const auto lattice = all_subgroups(g, lattice_cap(o));
    const auto r = complements(g, lattice, h, mode);
    j["subgroup"] = subgroup_to_json(g, h);
    j["result"] = !r.complements.empty();
    j["exhaustive"] = r.exhaustive;
    Json list = Json::array();
    for (const auto& t : r.complements) list.push_back(subgroup_to_json(g, t));
    j["complements"] = std::move(list);
  } else if (o.predicate == "supercomplemented") {
    const auto h = parse_subgroup(ng, o.subgroup);
    const auto r = is_supercomplemented(g, all_subgroups(g, lattice_cap(o)), h);
    j["subgroup"] = subgroup_to_json(g, h);
    j["result"] = r.holds;
    j["witness"] = optional_subgroup(g, r.witness);
  } else if (o.predicate == "completely-factorizable") {
    const auto r = is_completely_factorizable(g, all_subgroups(g, lattice_cap(o)));
    j["result"] = r.holds;
    j["witness"] = optional_subgroup(g, r.witness);
  } else if (o.predicate == "c-separating") {
    const auto lattice = all_subgroups(g, lattice_cap(o));
    if (!o.subgroup.empty()) {
      const auto h = parse_subgroup(ng, o.subgroup);
      j["subgroup"] = subgroup_to_json(g, h);
      j["result"] = is_c_separating(g, lattice, h);
    } else {
      const auto all = c_separating_subgroups(g, lattice);
      j["result"] = !all.empty();
      Json list = Json::array();
      for (const auto& h : all) list.push_back(subgroup_to_json(g, h));
      j["subgroups"] = std::move(list);
    }
  } else if (o.predicate == "normal") {
    const auto h = parse_subgroup(ng, o.subgroup);
    j["subgroup"] = subgroup_to_json(g, h);
    j["result"] = is_normal(g, h);
  } else if (o.predicate == "derived-series" || o.predicate == "lower-central-series" ||
             o.predicate == "chief-series") {
    const auto report = o.predicate == "derived-series"        ? derived_series(g)
                        : o.predicate == "lower-central-series" ? lower_central_series(g)
                                                                : chief_series(g);
    j["result"] = report.length ? Json(*report.length) : Json(nullptr);
    j["series"] = series_to_json(g, report);
  } else {
    throw UsageError("unknown predicate \"" + o.predicate +
                     "\"; expected complemented, complements, supercomplemented, completely-factorizable, "
                     "c-separating, normal, derived-series, lower-central-series or chief-series");
  }
  return j;
}

std::vector<VerificationReport> run_suite(const Options& o) {
  const std::string& s = o.suite;
  if (s == "holomorph8" || s == "theorem4") return verify_holomorph8();
  if (s == "example") {
    if (o.p != 2 && o.p != 3) throw UsageError("the example suite covers --p 2 and --p 3");
    return verify_example(o.p);
  }
  if (s == "catalog") return run_catalog_suite();
  for (const auto& entry : catalog())
    if (entry.name == s) return run_catalog_suite({entry});
  throw UsageError("unknown suite \"" + s + "\"; expected holomorph8, example, catalog or a catalog entry name");
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error("cannot write " + o.out);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite-group complementation toolkit", "complementa"};
  app.require_subcommand(1);

  auto group_flags = [&](CLI::App* sub) {
    sub->add_option("--recipe", o.recipe, "Group recipe or catalog entry name");
    sub->add_option("--input", o.input, "cayley-v1 JSON file");
    sub->add_option("--p", o.p, "Prime parameter for example and elementary");
    sub->add_option("--n", o.n, "Size parameter for the families");
    sub->add_option("--cap", o.cap, "Override the lattice and example-order caps");
  };
  auto output_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--out", o.out, "Write to this path instead of standard output");
  };

  auto* build = app.add_subcommand("build", "Build a group and emit its cayley-v1 table");
  group_flags(build);
  output_flags(build);

  auto* lattice = app.add_subcommand("lattice", "Emit the subgroup lattice as JSON");
  group_flags(lattice);
  output_flags(lattice);

  auto* check = app.add_subcommand("check", "Decide a predicate for a group or subgroup");
  check->add_option("predicate", o.predicate, "Predicate name")->required();
  group_flags(check);
  output_flags(check);
  check->add_option("--subgroup", o.subgroup, "Handle, comma-separated words, or comma-separated element indices");
  check->add_option("--mode", o.mode, "Complement search mode: first or all");

  auto* bounds = app.add_subcommand("bounds", "Evaluate the numeric bounds for m");
  bounds->add_option("--m", o.m, "Order of the cyclic p-subgroup")->required();
  bounds->add_option("--q", o.q, "Prime for the minimal normal subgroup bound");
  output_flags(bounds);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "holomorph8 (alias theorem4), example, catalog or a catalog entry")
      ->required();
  verify->add_option("--p", o.p, "Prime for the example suite");
  output_flags(verify);

  auto* exp = app.add_subcommand("export", "Export the lattice as a DOT Hasse diagram (JSON with --json)");
  group_flags(exp);
  output_flags(exp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (build->parsed()) {
      emit(o, out, group_to_json(load_group(o).group).dump(2) + "\n");
    } else if (lattice->parsed()) {
      const auto ng = load_group(o);
      emit(o, out, lattice_to_json(ng.group, all_subgroups(ng.group, lattice_cap(o))).dump(2) + "\n");
    } else if (check->parsed()) {
      emit(o, out, run_check(o).dump(2) + "\n");
    } else if (bounds->parsed()) {
      if (o.m == 0) throw UsageError("--m must be at least 1");
      if (o.q && !is_prime(*o.q)) throw UsageError("--q must be prime");
      emit(o, out, bounds_to_json(bound_report(o.m, o.q)).dump(2) + "\n");
    } else if (verify->parsed()) {
      const auto reports = run_suite(o);
      emit(o, out, reports_to_json(reports).dump(2) + "\n");
      return any_failed(reports) ? exit_verification_failed : exit_ok;
    } else if (exp->parsed()) {
      const auto ng = load_group(o);
      const auto lat = all_subgroups(ng.group, lattice_cap(o));
      emit(o, out, o.json ? lattice_to_json(ng.group, lat).dump(2) + "\n" : lattice_to_dot(ng.group, lat, ng.name));
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " [cap: " << e.cap_name() << "]\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace complementa
