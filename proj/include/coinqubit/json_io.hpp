#pragma once

#include <string>

#include <json.hpp>

#include "coinqubit/observables.hpp"
#include "coinqubit/qubit_core.hpp"

namespace coinqubit {

using Json = nlohmann::ordered_json;

/// {"kind":"coin-state","p1":..,"p2":..,"p3":..}
Json coin_state_json(const ProbabilityTriple& p);

/// Accepts the coin-state object; "kind" may be omitted but must be
/// "coin-state" when present.
ProbabilityTriple coin_state_from_json(const Json& j);

/// {"x":..,"y":..,"z1":..,"z2":..}; missing members default to 0.
CoinObservable observable_from_json(const Json& j);

/// {"re":[[..,..],[..,..]],"im":[[..,..],[..,..]]}
Json density_json(const DensityMatrix2& rho);
DensityMatrix2 density_from_json(const Json& j);

/// Compact serialization with every floating point number written to 17
/// significant digits.
std::string dump(const Json& j);

}  // namespace coinqubit
