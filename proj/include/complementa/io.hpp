#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "complementa/bounds.hpp"
#include "complementa/complementation.hpp"
#include "complementa/group.hpp"
#include "complementa/lattice.hpp"
#include "complementa/series.hpp"
#include "complementa/verify.hpp"

namespace complementa {

using Json = nlohmann::ordered_json;

inline constexpr const char* cayley_format = "cayley-v1";

/// {format, order, mult (row-major), generators, generator_names, labels}.
Json group_to_json(const FiniteGroup& g);

/// Validates the format tag and shapes, then audits the table. Throws InvalidStructure.
FiniteGroup group_from_json(const Json& j);

/// Throws Error when the file cannot be read or parsed.
FiniteGroup read_group(const std::string& path);

std::vector<Element> member_list(const Subgroup& h);

/// {order, generators (words), members}.
Json subgroup_to_json(const FiniteGroup& g, const Subgroup& h);

/// {order, subgroups: [{index, order, normal, conjugacy_class, generators, members}], covers, conjugacy_classes}.
Json lattice_to_json(const FiniteGroup& g, const SubgroupLattice& lattice);

/// Hasse diagram of the covering relation; normal subgroups are drawn as boxes.
std::string lattice_to_dot(const FiniteGroup& g, const SubgroupLattice& lattice, const std::string& name = "lattice");

Json series_to_json(const FiniteGroup& g, const SeriesReport& report);

/// Big integers are written as decimal strings.
Json bounds_to_json(const BoundReport& report);

Json report_to_json(const VerificationReport& report);
Json reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace complementa
