#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mub/dense.hpp"

namespace mub {

/// Dense realizations are capped at 2^10 x 2^10; every qubit count in the
/// library obeys this bound.
constexpr int kMaxQubits = 10;

/// N-qubit Pauli operator in symplectic form, with a tracked phase i^phase_exp.
///
/// Bit k of x_bits / z_bits belongs to qubit k+1. Qubit 1 is the leftmost
/// letter of the printed label and the most significant tensor factor of the
/// dense realization. Per-qubit letters decode as (x,z): (0,0)=I, (1,0)=X,
/// (1,1)=Y, (0,1)=Z, with Y carrying its usual matrix [[0,-i],[i,0]] (so the
/// canonical single-qubit factor is i^{xz} X^x Z^z).
struct PauliOperator {
  int n_qubits = 0;
  uint32_t x_bits = 0;
  uint32_t z_bits = 0;
  uint8_t phase_exp = 0;  // phase = i^phase_exp, phase_exp in {0,1,2,3}

  Cplx phase() const;
  bool is_identity() const { return x_bits == 0 && z_bits == 0; }
  PauliOperator canonical() const;  // same letters, phase +1

  /// Sort key: per-qubit letters ordered I < X < Y < Z with qubit 1 most
  /// significant; equals lexicographic order of the printed label.
  uint64_t canonical_key() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
};

bool canonical_less(const PauliOperator& p, const PauliOperator& q);

/// Parses labels of the form [+|-|+i|-i]?[IXYZ]{N}.
PauliOperator parse_label(const std::string& text);
std::string to_label(const PauliOperator& p);

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
bool commutes(const PauliOperator& p, const PauliOperator& q);

/// Tr(pq) as an exact integer; requires both phases to be +-1.
int64_t trace_inner_product(const PauliOperator& p, const PauliOperator& q);

CMatrix dense_matrix(const PauliOperator& p);

/// All 4^N operators with phase +1, in canonical order (identity first).
std::vector<PauliOperator> enumerate_all(int n_qubits);

}  // namespace mub
