#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mub/pauli.hpp"

namespace mub {

/// Maximal set of 2^N-1 mutually commuting non-identity Pauli operators,
/// closed under multiplication modulo phase. Members are stored with phase
/// +1 in canonical order; generators are the first N members (canonical
/// order) that are GF(2)-independent.
struct CommutingSet {
  int n_qubits = 0;
  std::vector<PauliOperator> members;
  std::vector<PauliOperator> generators;
};

/// 2^N+1 disjoint CommutingSets covering all 4^N-1 non-identity operators.
/// Canonical form: sets sorted by their smallest member.
struct MubPartition {
  int n_qubits = 0;
  std::vector<CommutingSet> sets;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
  std::string to_string() const;
};

bool same_members(const CommutingSet& a, const CommutingSet& b);

/// Canonicalizes member order and re-derives generators; throws if the
/// members do not form a maximal commuting set.
CommutingSet make_commuting_set(std::vector<PauliOperator> members);

/// Generates the 2^N-1 subset products of N independent commuting
/// generators, phase-canonicalized.
CommutingSet close_under_multiplication(std::vector<PauliOperator> generators);

/// Sorts members within sets and sets by smallest member.
MubPartition canonicalize(MubPartition p);

/// The field-based construction: one pure-Z set plus, for each field element
/// lambda, the set {(v, M_lambda v) : v != 0}. Valid for every N it accepts.
MubPartition standard_partition(int n_qubits);
MubPartition standard_partition(int n_qubits, uint32_t poly);

/// Independent structural checker; never throws, reports all violations.
ValidationReport validate_partition(const MubPartition& p);

/// Every maximal commuting set, in canonical order. Exhaustive search,
/// restricted to N <= 2.
std::vector<CommutingSet> all_maximal_commuting_sets(int n_qubits);

/// Complete duplicate-free list of partitions in canonical form,
/// deterministic order. Exhaustive search, restricted to N <= 2.
std::vector<MubPartition> enumerate_partitions(int n_qubits);

}  // namespace mub
