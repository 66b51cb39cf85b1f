#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mub {

/// GF(2^N) arithmetic over a fixed irreducible polynomial, N <= 10.
/// Elements are bit vectors over the polynomial basis {1, x, .., x^{N-1}},
/// stored as integers in [0, 2^N).
struct FieldTables {
  int degree = 0;
  uint32_t poly = 0;           // (N+1)-bit modulus, x^N coefficient set
  std::vector<uint16_t> mul;   // full 2^N x 2^N product table

  int order() const { return 1 << degree; }
  uint16_t multiply(uint16_t a, uint16_t b) const {
    return mul[(static_cast<size_t>(a) << degree) | b];
  }
};

/// Polynomial modulus format: most significant coefficient first, e.g.
/// "111" = x^2 + x + 1 parses to 0b111.
uint32_t parse_polynomial(const std::string& bits);

uint32_t default_polynomial(int degree);
bool is_irreducible(int degree, uint32_t poly);

FieldTables make_field(int degree, uint32_t poly);
FieldTables make_field(int degree);  // built-in polynomial table

/// GF(2)-valued field trace e + e^2 + e^4 + ... + e^{2^{N-1}}.
int field_trace(const FieldTables& f, uint16_t e);

/// Basis of GF(2^N) over GF(2) with Tr(b_i b_j) = delta_ij.
struct SelfDualBasis {
  std::vector<uint16_t> elements;
};

/// First self-dual basis in canonical search order (elements strictly
/// increasing, lexicographically smallest sequence). N <= 8.
SelfDualBasis find_self_dual_basis(const FieldTables& f);

/// N x N GF(2) matrix; row i is a bitmask over columns.
using GF2Matrix = std::vector<uint32_t>;

/// Matrix of the trace form (M_lambda)_{ij} = Tr(lambda b_i b_j). Symmetric
/// for every lambda because the basis is self-dual; lambda -> M_lambda is
/// additive and injective.
GF2Matrix multiplication_matrix(const FieldTables& f, const SelfDualBasis& basis,
                                uint16_t lambda);

uint32_t gf2_matvec(const GF2Matrix& m, uint32_t v);

}  // namespace mub
