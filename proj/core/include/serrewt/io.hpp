#pragma once

// JSON encodings of the library types and scenario parsing. Parse errors
// carry the JSON pointer of the offending field.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "serrewt/breuil.hpp"
#include "serrewt/brauer.hpp"
#include "serrewt/chars.hpp"
#include "serrewt/weights.hpp"

namespace serrewt::io {

using json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string pointer, const std::string& msg)
      : std::runtime_error(pointer + ": " + msg), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

json to_json(const Tuple& t);
json to_json(const InertialChar& x);  // {"scalar", "digits"}
json to_json(const GaloisChar& x);    // + "unramified_dlog"
json to_json(const RankOneBreuil& M); // {"r", "a_norm_dlog", "c", "alpha"}
json to_json(const ExtBasis& B);      // {"slots", "delta_slot", "dim"}
json to_json(const SerreWeight& w);   // {"m", "n"}
json to_json(const WeightParam& x);   // {"J", "d", "exceptional"}
json to_json(const PartitionCell& c); // {"a", "delta_a", "W_a", "Wprime_extra"}
json to_json(const LSpace& L);
json to_json(const TypePair& t);
json to_json(const brauer::Multiset& ms);

struct ModuleSpec {
  Tuple r;
  std::int64_t a_norm_dlog = 0;
  Tuple c;
};

struct Scenario {
  Params params;
  std::optional<GaloisChar> chi1, chi2;
  std::optional<Tuple> a, a_max, d;
  std::optional<std::vector<int>> J;
  std::optional<TypePair> tau;
  std::optional<GaloisChar> chi;  // generic fibre for `models`
  std::optional<ModuleSpec> M, N;
  bool tres_ramifiee = false;
};

// Validates structure and ranges; throws ConfigError naming the field.
Scenario parse_scenario(const json& j);

RankOneBreuil build_module(const Params& P, const ModuleSpec& spec, const std::string& pointer);

}  // namespace serrewt::io
