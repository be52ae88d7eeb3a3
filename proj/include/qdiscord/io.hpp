#pragma once

#include <string>

#include <json.hpp>

#include "qdiscord/bounds.hpp"
#include "qdiscord/monogamy.hpp"

namespace qdiscord {

using Json = nlohmann::json;

/// Value rounded to 12 significant digits, the precision of every emitted
/// number.
double round12(double value);

/// Formats with %.12g.
std::string format12(double value);

/// {"dims": [...], "matrix": [[[re, im], ...], ...]}, row-major. Reading
/// validates the state and throws ParseError on malformed documents.
Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& doc);
DensityMatrix read_state_file(const std::string& path);

/// {"dim": d, "vectors": [[[re, im], ...], ...]}; vectors[k] is column k of
/// the unitary.
Json basis_to_json(const ProjectiveBasis& basis);
ProjectiveBasis basis_from_json(const Json& doc);

/// {"q": basis, "r": basis}
ObservablePair pair_from_json(const Json& doc);

Json to_json(const CorrelationReport& report);
Json to_json(const UncertaintyReport& report);
Json to_json(const BoundReport& report);
Json to_json(const EurCheck& check);
Json to_json(const SameSideReport& report);
Json to_json(const CrossSideReport& report);

}  // namespace qdiscord
