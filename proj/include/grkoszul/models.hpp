#pragma once
#include <string>
#include <vector>

#include "grkoszul/quiver.hpp"

namespace grk::models {

// Bundled presentations, as `.qalg` text.
std::string b5_text();
std::string b9_text();
std::string dual_numbers_text();     // K[x]/(x^2)
std::string truncated_cubic_text();  // K[x]/(x^3)
std::string linear2_text();          // 1 -> 2
std::string semisimple_text(int n);

QuiverPresentation b5();
QuiverPresentation b9();
QuiverPresentation dual_numbers();
QuiverPresentation truncated_cubic();
QuiverPresentation linear2();
QuiverPresentation semisimple(int n);

// name -> presentation for "b5", "b9", "dual", "cubic", "linear2", "ss<n>"
QuiverPresentation by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace grk::models
