#pragma once

#include <string>

#include <json.hpp>

#include "grouphom/hopf.hpp"
#include "grouphom/parse.hpp"
#include "grouphom/presentation.hpp"

namespace grouphom {

// Stable-schema report object; keys serialize in sorted order, so two runs
// differ at most in the wall_times_ms values.
inline nlohmann::json to_json(const HopfReport& rep, const Presentation& pres) {
  nlohmann::json j;
  j["a"] = rep.a;
  j["b"] = rep.b;
  j["c"] = rep.c;
  j["e"] = rep.e;
  j["d"] = rep.d;
  j["exact"] = rep.exact;
  j["all_confluent"] = rep.all_confluent;
  j["pass_history"] = rep.pass_history;
  j["survivors"] = nlohmann::json::array();
  for (const Word& w : rep.survivor_words) {
    j["survivors"].push_back(format_letters(w.letters(), pres.generator_names));
  }
  j["statuses"] = nlohmann::json::array();
  for (KbStatus s : rep.statuses) j["statuses"].push_back(to_string(s));
  j["wall_times_ms"] = nlohmann::json::object();
  for (const auto& [phase, ms] : rep.wall_times_ms) {
    j["wall_times_ms"][phase] = ms;
  }
  return j;
}

}  // namespace grouphom
