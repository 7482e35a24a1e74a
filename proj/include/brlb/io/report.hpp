// CertificateReport serialization. Keys are sorted (nlohmann::json objects are
// ordered maps) so that equal inputs give byte-identical output.
#pragma once

#include <brlb/certificates/battery.hpp>
#include <brlb/io/json_io.hpp>

#include <string>

namespace brlb {

inline constexpr const char* kToolVersion = "0.1.0";

inline Json obstruction_to_json(const Obstruction& ob) {
  Json j = {{"name", to_string(ob.name)},
            {"verdict", to_string(ob.verdict)},
            {"field", ob.field},
            {"seed", ob.seed},
            {"witness", ob.witness},
            {"wall_ms", ob.wall_ms}};
  j["payload"] = ob.payload ? Json(*ob.payload) : Json(nullptr);
  j["lower_bound"] = ob.lower_bound ? Json(*ob.lower_bound) : Json(nullptr);
  return j;
}

template <typename S>
Json battery_to_json(const BatteryReport<S>& rep) {
  Json gen = Json::object();
  for (int f = 0; f < 3; ++f)
    gen[factor_name(static_cast<Factor>(f))] = {{"max_slice_rank", rep.genericity[f].max_rank}, {"generic", rep.genericity[f].generic}};
  Json obs = Json::array();
  for (const auto& ob : rep.obstructions) obs.push_back(obstruction_to_json(ob));
  Json kos = Json::array();
  for (const auto& kb : rep.koszul)
    kos.push_back({{"side", factor_name(kb.side)},
                   {"p", kb.p},
                   {"rank", kb.rank},
                   {"constant", kb.constant},
                   {"bound", kb.bound},
                   {"restricted", kb.restricted},
                   {"restrictions_tried", kb.restrictions_tried},
                   {"seed", kb.seed}});
  Json j = {{"field", rep.field},
            {"seed", rep.seed},
            {"conciseness", {{"concise", rep.conciseness.concise}, {"slice_dims", rep.conciseness.slice_dims}}},
            {"genericity", gen},
            {"obstructions", obs},
            {"koszul", kos},
            {"minimal_obstruction_failed", rep.minimal_obstruction_failed},
            {"aggregate_lower_bound", rep.aggregate_lower_bound}};
  if (rep.symmetry)
    j["symmetry_lie_dims"] = {{"full", rep.symmetry->full}, {"ab", rep.symmetry->ab}, {"ac", rep.symmetry->ac}, {"bc", rep.symmetry->bc}};
  if (rep.algebra_dim) j["algebra111_dim"] = *rep.algebra_dim;
  return j;
}

/// Copy of a report with every "wall_ms" field removed.
inline Json strip_wall_time(Json j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto& [k, v] : j.items()) v = strip_wall_time(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_wall_time(v);
  }
  return j;
}

/// SHA-256 of the report without wall times and without this hash itself.
inline std::string reproducibility_hash(const Json& report) {
  Json j = strip_wall_time(report);
  j.erase("reproducibility_hash");
  return sha256_hex(j.dump());
}

}  // namespace brlb
