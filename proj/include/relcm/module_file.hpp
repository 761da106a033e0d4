#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relcm/resolution.hpp"

namespace relcm {

/// Text form of a presented module:
///
///   ring{p:32003, m:2, n:2}
///   module{twists:[[0,0]], relations:[["x1^2", "x1*x2"]]}
///
/// relations is row-major: one row per ambient summand, one entry per
/// relation column, "0" for a zero entry. Column twists are inferred from the
/// entries. '#' starts a comment running to the end of the line. The same
/// reader accepts the JSON form {"ring": {...}, "module": {...}}, in which
/// keys are quoted and top-level keys are followed by ':'. p defaults to 32003.
struct ModuleFile {
  struct Position {
    int line = 1;
    int column = 1;
  };

  std::uint32_t prime = kDefaultPrime;
  int m = 0;
  int n = 0;
  std::vector<BiDegree> twists;
  std::vector<std::vector<std::string>> relations;
  // Position of the opening quote of each relation entry.
  std::vector<std::vector<Position>> entryPositions;
};

/// Syntax only. Throws ParseError with the line and column of the problem.
ModuleFile readModuleFile(std::string_view text);

/// Builds the module; a prime override replaces the file's p. Polynomial
/// syntax errors raise ParseError located in the file; an entry or column
/// without a single bidegree raises DegreeInconsistent with its column index.
/// Zero columns are dropped.
PresentedModule buildModule(const ModuleFile& file, std::optional<std::uint32_t> prime = std::nullopt);

PresentedModule parseModuleFile(std::string_view text, std::optional<std::uint32_t> prime = std::nullopt);

/// Canonical printers; parsing either output gives back the module with its
/// zero relation columns removed.
std::string printModuleFile(const PresentedModule& m);
std::string printModuleJson(const PresentedModule& m);

}  // namespace relcm
