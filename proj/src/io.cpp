#include "complementa/io.hpp"

#include <fstream>
#include <sstream>

#include "complementa/error.hpp"

namespace complementa {

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["format"] = cayley_format;
  j["order"] = g.order();
  j["mult"] = std::vector<Element>(g.table().begin(), g.table().end());
  j["generators"] = std::vector<Element>(g.generators().begin(), g.generators().end());
  j["generator_names"] = std::vector<std::string>(g.generator_names().begin(), g.generator_names().end());
  j["labels"] = std::vector<std::string>(g.labels().begin(), g.labels().end());
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidStructure("group JSON must be an object");
  if (j.value("format", std::string{}) != cayley_format)
    throw InvalidStructure(std::string("group JSON must carry format \"") + cayley_format + "\"");
  try {
    const auto order = j.at("order").get<std::size_t>();
    if (order == 0) throw InvalidStructure("group order must be positive");
    auto mult = j.at("mult").get<std::vector<Element>>();
    if (mult.size() != order * order) throw InvalidStructure("mult must hold order² entries");
    auto gens = j.at("generators").get<std::vector<Element>>();
    std::vector<std::string> names;
    if (j.contains("generator_names")) names = j["generator_names"].get<std::vector<std::string>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    if (!labels.empty() && labels.size() != order) throw InvalidStructure("labels must have one entry per element");
    return FiniteGroup::from_table(order, std::move(mult), std::move(gens), std::move(names), std::move(labels));
  } catch (const Json::exception& e) {
    throw InvalidStructure(std::string("malformed group JSON: ") + e.what());
  }
}

FiniteGroup read_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidStructure(path + ": " + e.what());
  }
  return group_from_json(j);
}

std::vector<Element> member_list(const Subgroup& h) {
  std::vector<Element> out;
  out.reserve(h.order());
  h.members().for_each([&](Element e) { out.push_back(e); });
  return out;
}

namespace {

std::vector<std::string> generator_words(const FiniteGroup& g, const Subgroup& h) {
  std::vector<std::string> out;
  for (Element e : generating_set(g, h)) out.push_back(g.label(e));
  return out;
}

}  // namespace

Json subgroup_to_json(const FiniteGroup& g, const Subgroup& h) {
  Json j;
  j["order"] = h.order();
  j["generators"] = generator_words(g, h);
  j["members"] = member_list(h);
  return j;
}

Json lattice_to_json(const FiniteGroup& g, const SubgroupLattice& lattice) {
  std::vector<std::size_t> class_of(lattice.size(), 0);
  for (std::size_t c = 0; c < lattice.conjugacy_classes.size(); ++c)
    for (std::size_t i : lattice.conjugacy_classes[c]) class_of[i] = c;

  Json subs = Json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    Json s;
    s["index"] = i;
    s["order"] = lattice.subgroups[i].order();
    s["normal"] = static_cast<bool>(lattice.normal[i]);
    s["conjugacy_class"] = class_of[i];
    s["generators"] = generator_words(g, lattice.subgroups[i]);
    s["members"] = member_list(lattice.subgroups[i]);
    subs.push_back(std::move(s));
  }
  Json covers = Json::array();
  for (const auto& [lo, hi] : lattice.covers) covers.push_back({lo, hi});

  Json j;
  j["order"] = g.order();
  j["subgroups"] = std::move(subs);
  j["covers"] = std::move(covers);
  j["conjugacy_classes"] = lattice.conjugacy_classes;
  return j;
}

std::string lattice_to_dot(const FiniteGroup& g, const SubgroupLattice& lattice, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto words = generator_words(g, lattice.subgroups[i]);
    std::string gens = words.empty() ? "e" : "";
    for (std::size_t k = 0; k < words.size(); ++k) gens += (k ? ", " : "") + words[k];
    out << "  s" << i << " [label=\"<" << gens << ">\\n" << lattice.subgroups[i].order() << "\""
        << (lattice.normal[i] ? ", shape=box" : ", shape=ellipse") << "];\n";
  }
  for (const auto& [lo, hi] : lattice.covers) out << "  s" << lo << " -> s" << hi << ";\n";
  out << "}\n";
  return out.str();
}

Json series_to_json(const FiniteGroup& g, const SeriesReport& report) {
  Json j;
  j["kind"] = std::string(to_string(report.kind));
  if (report.length)
    j["length"] = *report.length;
  else
    j["length"] = nullptr;
  Json terms = Json::array();
  for (const auto& t : report.terms) terms.push_back(subgroup_to_json(g, t));
  j["terms"] = std::move(terms);
  Json factors = Json::array();
  for (const auto& f : report.factors) {
    Json fj;
    fj["order"] = f.order;
    fj["abelian"] = f.abelian;
    fj["elementary_abelian"] = f.elementary_abelian;
    if (f.prime)
      fj["prime"] = *f.prime;
    else
      fj["prime"] = nullptr;
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  return j;
}

Json bounds_to_json(const BoundReport& r) {
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["zeta"] = r.zeta_n;
  if (r.m < 8)
    j["d_bound"] = r.d_bound.floor;
  else
    j["d_bound"] = static_cast<double>(r.d_bound.value);
  j["d_bound_floor"] = r.d_bound.floor;
  j["general_d_bound"] = r.general_d_bound;
  if (r.factorial)
    j["factorial_index_bound"] = r.factorial->str();
  else
    j["factorial_index_bound"] = nullptr;
  if (r.q) {
    j["q"] = *r.q;
    j["minimal_normal_bound"] = r.minimal_normal_bound->str();
  }
  return j;
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["claim"] = report.claim;
  j["status"] = std::string(to_string(report.status));
  j["witnesses"] = report.witnesses;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

Json reports_to_json(const std::vector<VerificationReport>& reports) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(report_to_json(r));
  return j;
}

}  // namespace complementa
