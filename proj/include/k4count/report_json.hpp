#pragma once

#include "k4count/bounds.hpp"
#include "k4count/graph.hpp"
#include "k4count/k4.hpp"
#include "k4count/reductions.hpp"

#include <json.hpp>

namespace k4count {

nlohmann::json graph_json(const Graph& g);
nlohmann::json certificate_json(const SubdivisionCertificate& cert);
nlohmann::json bound_report_json(const BoundReport& r);
nlohmann::json apex_census_json(const ApexCensus& census);

}  // namespace k4count
