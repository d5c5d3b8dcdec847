#pragma once

#include "json.hpp"

#include "hsa/areas.hpp"
#include "hsa/elimination.hpp"
#include "hsa/free_element.hpp"
#include "hsa/magma.hpp"
#include "hsa/pbw.hpp"

namespace hsa {

using nlohmann::json;

json free_element_to_json(const FreeElement& f);
FreeElement free_element_from_json(const json& j);

json tree_to_json(const Tree& t);  // {"leaf": k} / {"node": [L, R]}
Tree tree_from_json(const json& j);

json hall_poly_to_json(const HallPoly& p);
json area_poly_to_json(const AreaPoly& p);
json series_in_c_to_json(const SeriesInC& s);
json rank_report_to_json(const std::vector<DegreeRankReport>& reports);

}  // namespace hsa
