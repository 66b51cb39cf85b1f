#pragma once

#include <map>
#include <string>
#include <vector>

#include "mub/basis.hpp"
#include "mub/dense.hpp"
#include "mub/partition.hpp"

namespace mub {

enum class BasisCategory { product, bell, bell_product, ghz, other };

std::string category_name(BasisCategory c);

struct BasisClassification {
  BasisCategory category = BasisCategory::other;
  int free_qubit = 0;            // 1-based, bell_product only
  std::vector<double> purities;  // single-qubit purities of the states
};

/// Partial trace onto the kept qubits (1-based indices).
CMatrix reduced_density(const CVector& state, const std::vector<int>& keep);

double purity(const CMatrix& rho);

/// Classifies a basis by the reduced purities of its states; every state
/// must land in the same category or the basis is rejected.
BasisClassification classify_basis(const OrthonormalBasis& b);

struct EntanglementFingerprint {
  std::vector<BasisClassification> per_basis;
  std::map<std::string, int> counts;
};

/// Synthesizes each set's eigenbasis and tallies the categories.
EntanglementFingerprint partition_fingerprint(const MubPartition& p);

/// |purity - 1| below this means pure; |purity - 1/2| below it means
/// maximally mixed.
constexpr double kTolPurity = 1e-8;

}  // namespace mub
