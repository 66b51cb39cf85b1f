#pragma once

#include <cstdint>
#include <vector>

#include "mub/basis.hpp"
#include "mub/dense.hpp"
#include "mub/partition.hpp"

namespace mub {

/// Hermitian, unit-trace, positive-semidefinite matrix (within tolerance).
struct DensityMatrix {
  CMatrix rho;
  int dim() const { return rho.dim; }
};

/// Validates the density-matrix invariants before wrapping.
DensityMatrix make_density(CMatrix m);

/// (2^N+1) x 2^N Born probabilities; rows follow the basis order,
/// columns follow the state order within each basis.
struct ProbabilityTable {
  int n_qubits = 0;
  std::vector<std::vector<double>> rows;
};

std::vector<OrthonormalBasis> synthesize_all(const MubPartition& p);

/// Born-rule table over d+1 pairwise-unbiased bases (verified).
ProbabilityTable mub_probabilities(const DensityMatrix& rho,
                                   const std::vector<OrthonormalBasis>& bases);
ProbabilityTable mub_probabilities(const DensityMatrix& rho,
                                   const MubPartition& p);

/// Linear inversion through the epsilon rows: operator expectations from the
/// table, then rho = 2^{-N} (I + sum <O> O). Exact on noiseless input; with
/// project_physical the eigenvalues are clipped to >= 0 and renormalized.
DensityMatrix reconstruct(const ProbabilityTable& table, const MubPartition& p,
                          bool project_physical = false);

/// SplitMix64: state advances by 0x9E3779B97F4A7C15; output z = state mixed
/// by (z ^= z>>30) * 0xBF58476D1CE4E5B9, (z ^= z>>27) * 0x94D049BB133111EB,
/// z ^= z>>31. Doubles take the top 53 bits / 2^53.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  double next_double();  // in [0, 1)
};

/// Multinomial empirical frequencies: per row, shots inverse-CDF draws from
/// one SplitMix64 stream (rows in order), divided by the shot count.
ProbabilityTable sample_shots(const ProbabilityTable& table,
                              int64_t shots_per_basis, uint64_t seed);

/// Half the absolute-eigenvalue sum of rho1 - rho2.
double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Ginibre-ensemble state: G G^dag / Tr, Gaussian entries from a seeded
/// SplitMix64 stream via Box-Muller.
DensityMatrix random_density(int n_qubits, uint64_t seed);

}  // namespace mub
