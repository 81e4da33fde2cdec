#pragma once

#include <json.hpp>

#include "fog/enumerate.hpp"
#include "fog/gallery.hpp"
#include "fog/semiprime.hpp"

namespace fog {

nlohmann::json to_json(const Grade& g);
nlohmann::json to_json(const Groupoid& s);
nlohmann::json to_json(const FuzzySubset& f);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const WitnessReport& r);
nlohmann::json to_json(const SearchHit& hit);
nlohmann::json to_json(const SearchResult& result);
nlohmann::json to_json(const gallery::GalleryCheck& check);

// One-line human description of a witness, e.g. for terminal output.
std::string describe(const Witness& w);
std::string describe(const WitnessReport& r);

}  // namespace fog
