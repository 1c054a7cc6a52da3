#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "lexit/biarray.hpp"
#include "lexit/committee.hpp"
#include "lexit/graph.hpp"
#include "lexit/labelers.hpp"
#include "lexit/order_types.hpp"
#include "lexit/regularity.hpp"
#include "lexit/subset_sum.hpp"

namespace lexit {

using Json = nlohmann::json;

// All emitters produce key-sorted objects; dumps() appends a trailing
// newline so files are byte-stable.

Json graph_to_json(const LatticeDigraph& G);
LatticeDigraph graph_from_json(const Json& j);

Json labels_to_json(const LabelMap& f);
LabelMap labels_from_json(const Json& j);

Json biarray_to_json(const CappedBiArray& B);
CappedBiArray biarray_from_json(const Json& j);

Json report_to_json(const RegularityReport& r);

Json instance_to_json(const SubsetSumInstance& inst);
SubsetSumInstance instance_from_json(const Json& j);

// {"kind":"total-min"|"seeded","r":..,"q":..,"seed":..,
//  "diagonal_restricted":..}
SelectionFunction selection_from_json(const Json& j);

std::string dumps(const Json& j);
void dump_file(const Json& j, const std::string& path);
Json load_file(const std::string& path);

// rank tuple as a compact digit key, e.g. (0,1) -> "01"
std::string ot_key(const Tuple& t);

}  // namespace lexit
