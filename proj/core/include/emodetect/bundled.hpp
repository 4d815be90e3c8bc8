#pragma once

#include <string_view>

// Contents of the data/ directory, compiled into the library.
namespace emodetect::bundled {

std::string_view ontology_text();
std::string_view negation_cues_text();
std::string_view intensity_text();
std::string_view counter_pairs_text();

}  // namespace emodetect::bundled
