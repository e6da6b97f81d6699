#pragma once

#include <string>

#include "simpcodes/analysis.hpp"

namespace simpcodes {

// JSON rendering of an AnalysisReport with a fixed key order and no
// volatile fields, so identical inputs serialize byte for byte.
std::string report_to_json(const AnalysisReport& report, int indent = 2);

}  // namespace simpcodes
