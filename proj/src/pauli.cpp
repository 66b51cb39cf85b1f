#include "mub/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace mub {

namespace {

constexpr Cplx kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
}

void check_compatible(const PauliOperator& p, const PauliOperator& q) {
  if (p.n_qubits != q.n_qubits)
    throw std::invalid_argument("mismatched qubit counts");
}

int letter_code(uint32_t x, uint32_t z, int bit) {
  const bool xb = (x >> bit) & 1u;
  const bool zb = (z >> bit) & 1u;
  if (xb) return zb ? 2 : 1;  // Y : X
  return zb ? 3 : 0;          // Z : I
}

}  // namespace

Cplx PauliOperator::phase() const { return kPhases[phase_exp & 3u]; }

PauliOperator PauliOperator::canonical() const {
  return {n_qubits, x_bits, z_bits, 0};
}

uint64_t PauliOperator::canonical_key() const {
  uint64_t key = 0;
  for (int k = 0; k < n_qubits; ++k)
    key = key * 4 + static_cast<uint64_t>(letter_code(x_bits, z_bits, k));
  return key;
}

bool canonical_less(const PauliOperator& p, const PauliOperator& q) {
  return p.canonical_key() < q.canonical_key();
}

PauliOperator parse_label(const std::string& text) {
  size_t pos = 0;
  uint8_t phase_exp = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    const bool negative = text[pos] == '-';
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      phase_exp = negative ? 3 : 1;
      ++pos;
    } else {
      phase_exp = negative ? 2 : 0;
    }
  }
  const std::string body = text.substr(pos);
  if (body.empty()) throw std::invalid_argument("empty Pauli label");
  check_qubit_count(static_cast<int>(body.size()));
  PauliOperator p{static_cast<int>(body.size()), 0, 0, phase_exp};
  for (size_t k = 0; k < body.size(); ++k) {
    switch (body[k]) {
      case 'I':
        break;
      case 'X':
        p.x_bits |= 1u << k;
        break;
      case 'Y':
        p.x_bits |= 1u << k;
        p.z_bits |= 1u << k;
        break;
      case 'Z':
        p.z_bits |= 1u << k;
        break;
      default:
        throw std::invalid_argument("invalid Pauli label character: " +
                                    std::string(1, body[k]));
    }
  }
  return p;
}

std::string to_label(const PauliOperator& p) {
  static const char* kPrefix[4] = {"", "+i", "-", "-i"};
  static const char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  std::string out = kPrefix[p.phase_exp & 3u];
  for (int k = 0; k < p.n_qubits; ++k)
    out.push_back(kLetters[letter_code(p.x_bits, p.z_bits, k)]);
  return out;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  check_compatible(p, q);
  const uint32_t x = p.x_bits ^ q.x_bits;
  const uint32_t z = p.z_bits ^ q.z_bits;
  // Each canonical factor is i^{xz} X^x Z^z; commuting Z^{z_p} past X^{x_q}
  // costs (-1)^{z_p x_q}, and re-canonicalizing the result absorbs i^{-xz}.
  const int exponent = std::popcount(p.x_bits & p.z_bits) +
                       std::popcount(q.x_bits & q.z_bits) -
                       std::popcount(x & z) +
                       2 * std::popcount(p.z_bits & q.x_bits) + p.phase_exp +
                       q.phase_exp;
  return {p.n_qubits, x, z, static_cast<uint8_t>(((exponent % 4) + 4) % 4)};
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  check_compatible(p, q);
  const int form =
      std::popcount(p.x_bits & q.z_bits) + std::popcount(q.x_bits & p.z_bits);
  return (form & 1) == 0;
}

int64_t trace_inner_product(const PauliOperator& p, const PauliOperator& q) {
  check_compatible(p, q);
  if ((p.phase_exp & 1u) || (q.phase_exp & 1u))
    throw std::invalid_argument("trace_inner_product requires phases +-1");
  if (p.x_bits != q.x_bits || p.z_bits != q.z_bits) return 0;
  const int64_t magnitude = int64_t{1} << p.n_qubits;
  return ((p.phase_exp + q.phase_exp) & 2u) ? -magnitude : magnitude;
}

CMatrix dense_matrix(const PauliOperator& p) {
  check_qubit_count(p.n_qubits);
  const int n = p.n_qubits;
  const int dim = 1 << n;
  // Map qubit bits into dense-index bits (qubit 1 = most significant).
  uint32_t x_idx = 0;
  uint32_t z_idx = 0;
  for (int k = 0; k < n; ++k) {
    if ((p.x_bits >> k) & 1u) x_idx |= 1u << (n - 1 - k);
    if ((p.z_bits >> k) & 1u) z_idx |= 1u << (n - 1 - k);
  }
  const Cplx base =
      p.phase() * kPhases[std::popcount(p.x_bits & p.z_bits) & 3];
  CMatrix m(dim);
  for (int col = 0; col < dim; ++col) {
    const int row = col ^ static_cast<int>(x_idx);
    const double sign =
        (std::popcount(z_idx & static_cast<uint32_t>(col)) & 1) ? -1.0 : 1.0;
    m(row, col) = sign * base;
  }
  return m;
}

std::vector<PauliOperator> enumerate_all(int n_qubits) {
  check_qubit_count(n_qubits);
  // Letter codes: 0=I, 1=X, 2=Y, 3=Z per qubit.
  static constexpr uint32_t kX[4] = {0, 1, 1, 0};
  static constexpr uint32_t kZ[4] = {0, 0, 1, 1};
  const uint64_t total = uint64_t{1} << (2 * n_qubits);
  std::vector<PauliOperator> ops;
  ops.reserve(total);
  for (uint64_t code = 0; code < total; ++code) {
    PauliOperator p{n_qubits, 0, 0, 0};
    uint64_t rest = code;
    for (int k = n_qubits - 1; k >= 0; --k) {
      const int c = static_cast<int>(rest & 3u);
      rest >>= 2;
      p.x_bits |= kX[c] << k;
      p.z_bits |= kZ[c] << k;
    }
    ops.push_back(p);
  }
  return ops;
}

}  // namespace mub
