#pragma once

#include <string>
#include <vector>

#include "mub/dense.hpp"
#include "mub/partition.hpp"

namespace mub {

/// Eigenvalue sign matrix of a CommutingSet. Row a < 2^N-1 holds the
/// eigenvalues of members[a] across the 2^N joint eigenstates; the final row
/// belongs to the identity and is all +1. Columns enumerate the generator
/// sign assignments in binary order (generator 0 most significant, bit 0
/// meaning eigenvalue +1).
struct EpsilonMatrix {
  int n_qubits = 0;
  std::vector<int8_t> entries;  // 2^N x 2^N, row-major

  int dim() const { return 1 << n_qubits; }
  int sign(int a, int alpha) const {
    return entries[static_cast<size_t>(a) * dim() + alpha];
  }
};

struct OrthonormalBasis {
  int n_qubits = 0;
  std::vector<CVector> vectors;
  std::string label;                        // notation tag, may be empty
  std::vector<std::string> source_members;  // stabilizer labels, may be empty
};

EpsilonMatrix epsilon_matrix(const CommutingSet& s);

/// Rank-1 projector 2^{-N} (I + sum_a eps(a,alpha) O_a) onto joint
/// eigenstate alpha.
CMatrix projector(const CommutingSet& s, const EpsilonMatrix& eps, int alpha);

/// Joint eigenbasis of a CommutingSet, states in epsilon column order.
/// Global phases fixed by making the first non-negligible component real
/// positive.
OrthonormalBasis eigenbasis(const CommutingSet& s);

/// Max over state pairs of | |<a|b>|^2 - 1/d |, cross-checked through the
/// projector-trace route. Equals 1 - 1/d when given the same basis twice.
double verify_unbiased(const OrthonormalBasis& a, const OrthonormalBasis& b);

/// Tensor products of single-qubit eigenvectors; axes like "zx". State
/// index bits (qubit 1 most significant) select +1 / -1 eigenvectors.
OrthonormalBasis product_basis(const std::string& axes);

/// Two-qubit basis (|n1,n2> +- phi |n1bar,n2bar>)/sqrt2 with phi = 1 or i.
OrthonormalBasis bell_basis(char axis1, char axis2, bool i_phase);

/// Three-qubit basis (|n1,n2,n3> +- phi |flipped>)/sqrt2 with phi = 1 or i.
OrthonormalBasis ghz_basis(const std::string& axes, bool i_phase);

/// Parsed basis descriptor, e.g. "(zz)pi", "(zx)B", "(yz)Bi", "(xxx)Gi",
/// "(x1)(yz)Bi" (one qubit factored out, Bell pair on the rest).
struct BasisLabelSpec {
  enum class Kind { product, bell, ghz, bell_product };
  Kind kind = Kind::product;
  std::string axes;   // product: N letters; bell: 2; ghz: 3; bell_product: 2
  bool i_phase = false;
  int free_qubit = 0;   // bell_product only, 1-based
  char free_axis = 0;   // bell_product only

  int n_qubits() const;
  std::string str() const;
  static BasisLabelSpec parse(const std::string& text);
};

std::vector<BasisLabelSpec> parse_basis_specs(const std::string& csv);

OrthonormalBasis build_basis(const BasisLabelSpec& spec);

/// All non-identity phase-+1 operators that have every basis vector as an
/// eigenvector; requires exactly 2^N-1 of them.
CommutingSet stabilizing_set(const OrthonormalBasis& basis);

/// Builds each basis from its spec, recovers the stabilizing sets, and
/// asserts the result is a valid partition.
MubPartition partition_from_labels(const std::vector<BasisLabelSpec>& specs);

/// Label lists for the bundled reference choices: "fig1" (two qubits),
/// "fig2" (three qubits, product + GHZ), "fig4" (three qubits, product-Bell).
std::vector<std::string> reference_choice_labels(const std::string& name);

constexpr double kTolExact = 1e-12;    // algebraically exact identities
constexpr double kTolChained = 1e-10;  // chained floating constructions

}  // namespace mub
