#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ratpow/ratpow.hpp"

namespace ratpow::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Rounds every floating-point value to 15 significant digits, in place.
void round_floats(json& doc);

/// Compact single-line dump with sorted keys and rounded floats.
std::string dump_line(json doc);

struct OracleCheck {
  bool ran = false;
  std::size_t rp = 0;
  bool agrees = false;
};

json analysis_document(const WordAnalysis& analysis, const BoundReport& report,
                       const OracleCheck& oracle);
json optimization_document(const OptimizationReport& report);
json search_document(const SearchResult& result);
json construction_document(const ConstructionSpec& spec, const Word& word, bool measure);

}  // namespace ratpow::cli
