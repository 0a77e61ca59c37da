#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "siegel/trace.hpp"

namespace siegel {

/// JSON object with every report field. Integers that fit in 64 bits are JSON numbers,
/// larger ones decimal strings; rationals are "num/den" strings.
nlohmann::json to_json(const TraceReport& report);

/// Columns k1,k2,p,traceA2,secondRow,endoTerm,fourTimesTrace,heckeTrace,checksPassed.
std::string csv_header();
std::string csv_row(const TraceReport& report);

std::string to_csv(const std::vector<TraceReport>& reports);
std::string to_json_array(const std::vector<TraceReport>& reports);

}  // namespace siegel
