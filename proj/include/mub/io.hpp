#pragma once

#include <string>

#include <json.hpp>

#include "mub/basis.hpp"
#include "mub/entanglement.hpp"
#include "mub/partition.hpp"
#include "mub/tomography.hpp"

namespace mub {

using OrderedJson = nlohmann::ordered_json;

/// { "n_qubits": N, "sets": [ { "members": [...], "generators": [...] } ] }
OrderedJson partition_to_json(const MubPartition& p);

/// Structural parse only; validity is validate_partition's job. Generators
/// are optional on input.
MubPartition partition_from_json(const nlohmann::json& j);

/// { "n_qubits": N, "bases": [ { "vectors": [[[re,im],..],..],
///   "label": ..., "source_members": [...] } ] }
OrderedJson bases_to_json(const std::vector<OrthonormalBasis>& bases);
std::vector<OrthonormalBasis> bases_from_json(const nlohmann::json& j);

OrderedJson fingerprint_to_json(const EntanglementFingerprint& fp);

OrderedJson density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

/// CSV with header "basis,state,probability", indices 0-based.
std::string table_to_csv(const ProbabilityTable& table);
ProbabilityTable table_from_csv(const std::string& text);

}  // namespace mub
