#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "relcm/corpus.hpp"
#include "relcm/oracle.hpp"

namespace relcm {

using Json = nlohmann::ordered_json;

/// Machine-readable reports. Each carries a "summary" string with a one-line
/// verdict; every other field is data. Infinite sentinels are rendered as the
/// strings "-inf" and "+inf".
Json moduleJson(const PresentedModule& m);
Json analyzeReport(const PresentedModule& m, std::uint64_t seed);
Json rcmVerdictReport(const PresentedModule& m);
/// Component table of H^i_Q(M)_j for j in [jMin, jMax].
Json lcTableReport(const PresentedModule& m, int i, int jMin, int jMax);
Json resolutionReport(const PresentedModule& m);
Json componentResolutionReport(const PresentedModule& m, int q, int j);
Json crossCheckJson(const CrossCheckReport& report);
Json corpusListReport(const std::vector<CorpusEntry>& entries);

std::string renderJson(const Json& report);

/// The summary line followed by one "path: value" line per leaf, in document
/// order. Paths join object keys with '.' and array indices as [i].
std::string renderText(const Json& report);

}  // namespace relcm
