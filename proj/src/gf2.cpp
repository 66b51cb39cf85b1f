#include "mub/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace mub {

namespace {

constexpr int kMaxFieldDegree = 10;
constexpr int kMaxSelfDualDegree = 8;

int poly_degree(uint32_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

uint32_t poly_multiply(uint32_t a, uint32_t b) {
  uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

uint32_t poly_mod(uint32_t a, uint32_t m) {
  const int dm = poly_degree(m);
  int da = poly_degree(a);
  while (da >= dm) {
    a ^= m << (da - dm);
    da = poly_degree(a);
  }
  return a;
}

}  // namespace

uint32_t parse_polynomial(const std::string& bits) {
  if (bits.empty()) throw std::invalid_argument("empty polynomial string");
  uint32_t p = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("polynomial string must be over {0,1}");
    p = (p << 1) | static_cast<uint32_t>(c - '0');
  }
  return p;
}

uint32_t default_polynomial(int degree) {
  // Lowest-weight irreducible choices, constant + leading terms included.
  static constexpr uint32_t kTable[kMaxFieldDegree + 1] = {
      0,
      0b11,           // x + 1
      0b111,          // x^2 + x + 1
      0b1011,         // x^3 + x + 1
      0b10011,        // x^4 + x + 1
      0b100101,       // x^5 + x^2 + 1
      0b1000011,      // x^6 + x + 1
      0b10000011,     // x^7 + x + 1
      0b100011011,    // x^8 + x^4 + x^3 + x + 1
      0b1000010001,   // x^9 + x^4 + 1
      0b10000001001,  // x^10 + x^3 + 1
  };
  if (degree < 1 || degree > kMaxFieldDegree)
    throw std::invalid_argument("field degree must be in [1, 10]");
  return kTable[degree];
}

bool is_irreducible(int degree, uint32_t poly) {
  if (poly_degree(poly) != degree) return false;
  if (degree == 1) return true;
  // Trial division by every monic polynomial of degree 1..N/2.
  for (int d = 1; d <= degree / 2; ++d) {
    for (uint32_t q = 1u << d; q < (2u << d); ++q) {
      if (poly_mod(poly, q) == 0) return false;
    }
  }
  return true;
}

FieldTables make_field(int degree, uint32_t poly) {
  if (degree < 1 || degree > kMaxFieldDegree)
    throw std::invalid_argument("field degree must be in [1, 10]");
  if (!is_irreducible(degree, poly))
    throw std::invalid_argument("polynomial is not irreducible of degree " +
                                std::to_string(degree));
  FieldTables f;
  f.degree = degree;
  f.poly = poly;
  const size_t order = size_t{1} << degree;
  f.mul.resize(order * order);
  for (size_t a = 0; a < order; ++a)
    for (size_t b = a; b < order; ++b) {
      const uint16_t prod = static_cast<uint16_t>(
          poly_mod(poly_multiply(static_cast<uint32_t>(a),
                                 static_cast<uint32_t>(b)),
                   poly));
      f.mul[(a << degree) | b] = prod;
      f.mul[(b << degree) | a] = prod;
    }
  return f;
}

FieldTables make_field(int degree) {
  return make_field(degree, default_polynomial(degree));
}

int field_trace(const FieldTables& f, uint16_t e) {
  uint16_t acc = 0;
  uint16_t power = e;
  for (int i = 0; i < f.degree; ++i) {
    acc ^= power;
    power = f.multiply(power, power);
  }
  if (acc > 1) throw std::runtime_error("field trace left the prime subfield");
  return acc;
}

namespace {

// pivots[b] holds an echelon row whose leading bit is b, or 0.
uint16_t gf2_reduce(uint16_t v, const std::vector<uint16_t>& pivots) {
  while (v) {
    const int lead = std::bit_width(v) - 1;
    if (pivots[lead] == 0) break;
    v ^= pivots[lead];
  }
  return v;
}

// Backtracking over strictly increasing element sequences. A candidate must
// have Tr(c*c) = 1, trace-orthogonality to everything already chosen, and
// GF(2)-linear independence from it.
bool self_dual_search(const FieldTables& f, std::vector<uint16_t>& chosen,
                      std::vector<uint16_t>& pivots) {
  const int n = f.degree;
  if (static_cast<int>(chosen.size()) == n) return true;
  const uint16_t start = chosen.empty() ? 1 : chosen.back() + 1;
  for (uint16_t c = start; c < f.order(); ++c) {
    const uint16_t reduced = gf2_reduce(c, pivots);
    if (reduced == 0) continue;  // dependent
    if (field_trace(f, f.multiply(c, c)) != 1) continue;
    bool orthogonal = true;
    for (uint16_t b : chosen)
      if (field_trace(f, f.multiply(c, b)) != 0) {
        orthogonal = false;
        break;
      }
    if (!orthogonal) continue;
    const int lead = std::bit_width(reduced) - 1;
    chosen.push_back(c);
    pivots[lead] = reduced;
    if (self_dual_search(f, chosen, pivots)) return true;
    chosen.pop_back();
    pivots[lead] = 0;
  }
  return false;
}

}  // namespace

SelfDualBasis find_self_dual_basis(const FieldTables& f) {
  if (f.degree > kMaxSelfDualDegree)
    throw std::invalid_argument("self-dual basis search supports N <= 8");
  std::vector<uint16_t> chosen;
  std::vector<uint16_t> pivots(16, 0);
  if (!self_dual_search(f, chosen, pivots))
    throw std::runtime_error("self-dual basis search exhausted");
  return SelfDualBasis{chosen};
}

GF2Matrix multiplication_matrix(const FieldTables& f, const SelfDualBasis& basis,
                                uint16_t lambda) {
  const int n = f.degree;
  if (static_cast<int>(basis.elements.size()) != n)
    throw std::invalid_argument("basis size does not match field degree");
  GF2Matrix m(n, 0);
  for (int i = 0; i < n; ++i) {
    const uint16_t lb = f.multiply(lambda, basis.elements[i]);
    for (int j = 0; j < n; ++j)
      if (field_trace(f, f.multiply(lb, basis.elements[j])))
        m[i] |= 1u << j;
  }
  return m;
}

uint32_t gf2_matvec(const GF2Matrix& m, uint32_t v) {
  uint32_t out = 0;
  for (size_t i = 0; i < m.size(); ++i)
    if (std::popcount(m[i] & v) & 1) out |= 1u << i;
  return out;
}

}  // namespace mub
