#include "mub/basis.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mub {

namespace {

constexpr Cplx kImag{0.0, 1.0};

// Subset of generators whose product has the member's (x|z) vector; solved
// by Gaussian elimination over GF(2).
uint32_t generator_decomposition(const CommutingSet& s,
                                 const PauliOperator& member) {
  const int n = s.n_qubits;
  struct Row {
    uint64_t bits;
    uint32_t combo;
  };
  std::vector<Row> rows;
  for (int i = 0; i < n; ++i) {
    const PauliOperator& g = s.generators[i];
    rows.push_back({static_cast<uint64_t>(g.x_bits) |
                        (static_cast<uint64_t>(g.z_bits) << n),
                    1u << i});
  }
  uint64_t target = static_cast<uint64_t>(member.x_bits) |
                    (static_cast<uint64_t>(member.z_bits) << n);
  uint32_t combo = 0;
  // Forward-eliminate: bring rows into echelon form while folding them into
  // the target whenever its leading bit matches.
  for (int bit = 2 * n - 1; bit >= 0; --bit) {
    const uint64_t mask = uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin(), rows.end(),
                              [&](const Row& r) { return r.bits & mask; });
    if (pivot == rows.end()) continue;
    const Row prow = *pivot;
    rows.erase(pivot);
    for (Row& r : rows)
      if (r.bits & mask) {
        r.bits ^= prow.bits;
        r.combo ^= prow.combo;
      }
    if (target & mask) {
      target ^= prow.bits;
      combo ^= prow.combo;
    }
  }
  if (target != 0)
    throw std::runtime_error("member outside the generator span");
  return combo;
}

CVector single_qubit_eigenvector(char axis, int n) {
  // n = 1 is the +1 eigenvector ("up"), n = 0 the -1 eigenvector.
  const double r = 1.0 / std::sqrt(2.0);
  switch (axis) {
    case 'z':
      return n ? CVector{1.0, 0.0} : CVector{0.0, 1.0};
    case 'x':
      return n ? CVector{r, r} : CVector{r, -r};
    case 'y':
      return n ? CVector{r, r * kImag} : CVector{r, -r * kImag};
    default:
      throw std::invalid_argument("axis must be one of x, y, z");
  }
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

CVector product_ket(const std::string& axes, uint32_t spins) {
  // Bit (N-k) of spins holds qubit k's label n in {1,0}.
  CVector v{1.0};
  const int n = static_cast<int>(axes.size());
  for (int k = 0; k < n; ++k)
    v = kron(v, single_qubit_eigenvector(axes[k], (spins >> (n - 1 - k)) & 1u));
  return v;
}

void check_axes(const std::string& axes) {
  for (char c : axes)
    if (c != 'x' && c != 'y' && c != 'z')
      throw std::invalid_argument("axis must be one of x, y, z");
}

// (|spins> +- phi |~spins>)/sqrt2 over the label choices with n^1 = 1.
OrthonormalBasis superposition_basis(const std::string& axes, bool i_phase) {
  check_axes(axes);
  const int n = static_cast<int>(axes.size());
  const uint32_t all = (1u << n) - 1;
  const Cplx phi = i_phase ? kImag : Cplx{1.0};
  OrthonormalBasis b;
  b.n_qubits = n;
  for (uint32_t rest = (1u << (n - 1)) - 1; rest + 1 > 0; --rest) {
    const uint32_t spins = (1u << (n - 1)) | rest;  // n^1 = 1
    const CVector up = product_ket(axes, spins);
    const CVector down = product_ket(axes, spins ^ all);
    for (double sign : {1.0, -1.0}) {
      CVector v(up.size());
      const double r = 1.0 / std::sqrt(2.0);
      for (size_t i = 0; i < v.size(); ++i)
        v[i] = r * (up[i] + sign * phi * down[i]);
      b.vectors.push_back(std::move(v));
    }
    if (rest == 0) break;
  }
  return b;
}

bool is_orthonormal(const std::vector<CVector>& vectors, double tol) {
  for (size_t i = 0; i < vectors.size(); ++i)
    for (size_t j = i; j < vectors.size(); ++j) {
      const Cplx g = inner(vectors[i], vectors[j]);
      const Cplx want = (i == j) ? Cplx{1.0} : Cplx{0.0};
      if (std::abs(g - want) > tol) return false;
    }
  return true;
}

}  // namespace

EpsilonMatrix epsilon_matrix(const CommutingSet& s) {
  const int n = s.n_qubits;
  const int dim = 1 << n;
  if (static_cast<int>(s.generators.size()) != n)
    throw std::invalid_argument("set lacks a full generator list");
  EpsilonMatrix eps;
  eps.n_qubits = n;
  eps.entries.assign(static_cast<size_t>(dim) * dim, 1);

  for (size_t a = 0; a < s.members.size(); ++a) {
    const uint32_t combo = generator_decomposition(s, s.members[a]);
    // The canonical member differs from the ordered generator product by a
    // +-1 factor (the tracked product phase is i^0 or i^2).
    PauliOperator prod{n, 0, 0, 0};
    for (int i = 0; i < n; ++i)
      if ((combo >> i) & 1u) prod = multiply(prod, s.generators[i]);
    if (prod.phase_exp & 1u)
      throw std::runtime_error("generator product phase is imaginary");
    const int base_sign = (prod.phase_exp == 0) ? 1 : -1;
    for (int alpha = 0; alpha < dim; ++alpha) {
      int sign = base_sign;
      for (int i = 0; i < n; ++i)
        if (((combo >> i) & 1u) && ((alpha >> (n - 1 - i)) & 1u)) sign = -sign;
      eps.entries[a * dim + alpha] = static_cast<int8_t>(sign);
    }
  }
  return eps;
}

CMatrix projector(const CommutingSet& s, const EpsilonMatrix& eps, int alpha) {
  const int dim = eps.dim();
  if (alpha < 0 || alpha >= dim)
    throw std::invalid_argument("state index out of range");
  CMatrix p = CMatrix::identity(dim);
  for (size_t a = 0; a < s.members.size(); ++a) {
    const CMatrix m = dense_matrix(s.members[a]);
    const double sign = eps.sign(static_cast<int>(a), alpha);
    for (size_t i = 0; i < p.a.size(); ++i) p.a[i] += sign * m.a[i];
  }
  const double scale = 1.0 / dim;
  for (Cplx& v : p.a) v *= scale;

  if (max_abs_diff(p * p, p) > kTolExact ||
      std::abs(trace(p) - Cplx{1.0}) > kTolExact ||
      !is_hermitian(p, kTolExact))
    throw std::runtime_error("projector failed idempotency check");
  return p;
}

OrthonormalBasis eigenbasis(const CommutingSet& s) {
  const EpsilonMatrix eps = epsilon_matrix(s);
  const int dim = eps.dim();
  OrthonormalBasis basis;
  basis.n_qubits = s.n_qubits;
  for (const PauliOperator& m : s.members)
    basis.source_members.push_back(to_label(m));

  for (int alpha = 0; alpha < dim; ++alpha) {
    const CMatrix p = projector(s, eps, alpha);
    // Rank-1 projector: any non-null column spans the range.
    int best = 0;
    double best_norm = -1.0;
    for (int c = 0; c < dim; ++c) {
      const double n2 = std::abs(p(c, c).real());  // column norm^2 = diagonal
      if (n2 > best_norm) {
        best_norm = n2;
        best = c;
      }
    }
    CVector v = p.column(best);
    const double vnorm = norm(v);
    if (vnorm < 1e-8)
      throw std::runtime_error("projector is numerically rank-deficient");
    for (Cplx& x : v) x /= vnorm;
    for (const Cplx& x : v)
      if (std::abs(x) > 1e-8) {
        const Cplx rot = std::conj(x) / std::abs(x);
        for (Cplx& y : v) y *= rot;
        break;
      }
    basis.vectors.push_back(std::move(v));
  }
  if (!is_orthonormal(basis.vectors, kTolExact))
    throw std::runtime_error("synthesized basis is not orthonormal");
  return basis;
}

double verify_unbiased(const OrthonormalBasis& a, const OrthonormalBasis& b) {
  if (a.n_qubits != b.n_qubits || a.vectors.size() != b.vectors.size())
    throw std::invalid_argument("dimension mismatch");
  const double target = 1.0 / static_cast<double>(a.vectors.size());
  double deviation = 0.0;
  for (const CVector& va : a.vectors)
    for (const CVector& vb : b.vectors) {
      const double overlap = std::norm(inner(va, vb));
      deviation = std::max(deviation, std::abs(overlap - target));
      // Same quantity through the projector route.
      const double tr =
          trace_of_product(outer(va, va), outer(vb, vb)).real();
      deviation = std::max(deviation, std::abs(tr - target));
    }
  return deviation;
}

OrthonormalBasis product_basis(const std::string& axes) {
  check_axes(axes);
  if (axes.empty() || static_cast<int>(axes.size()) > kMaxQubits)
    throw std::invalid_argument("bad axis count");
  const int n = static_cast<int>(axes.size());
  OrthonormalBasis b;
  b.n_qubits = n;
  b.label = "(" + axes + ")pi";
  for (uint32_t idx = 0; idx < (1u << n); ++idx) {
    // Index bit 0 means "up" so the all-z basis comes out in computational
    // order.
    b.vectors.push_back(product_ket(axes, ~idx & ((1u << n) - 1)));
  }
  return b;
}

OrthonormalBasis bell_basis(char axis1, char axis2, bool i_phase) {
  OrthonormalBasis b =
      superposition_basis(std::string{axis1, axis2}, i_phase);
  b.label = std::string("(") + axis1 + axis2 + ")" + (i_phase ? "Bi" : "B");
  return b;
}

OrthonormalBasis ghz_basis(const std::string& axes, bool i_phase) {
  if (axes.size() != 3)
    throw std::invalid_argument("ghz basis needs exactly 3 axes");
  OrthonormalBasis b = superposition_basis(axes, i_phase);
  b.label = "(" + axes + ")" + (i_phase ? "Gi" : "G");
  return b;
}

int BasisLabelSpec::n_qubits() const {
  switch (kind) {
    case Kind::product:
      return static_cast<int>(axes.size());
    case Kind::bell:
      return 2;
    case Kind::ghz:
    case Kind::bell_product:
      return 3;
  }
  return 0;
}

std::string BasisLabelSpec::str() const {
  switch (kind) {
    case Kind::product:
      return "(" + axes + ")pi";
    case Kind::bell:
      return "(" + axes + ")" + (i_phase ? "Bi" : "B");
    case Kind::ghz:
      return "(" + axes + ")" + (i_phase ? "Gi" : "G");
    case Kind::bell_product:
      return std::string("(") + free_axis + std::to_string(free_qubit) +
             ")(" + axes + ")" + (i_phase ? "Bi" : "B");
  }
  return {};
}

BasisLabelSpec BasisLabelSpec::parse(const std::string& text) {
  auto bad = [&text]() {
    return std::invalid_argument("malformed basis spec: " + text);
  };
  if (text.empty() || text.front() != '(') throw bad();
  const size_t close1 = text.find(')');
  if (close1 == std::string::npos) throw bad();
  const std::string inner1 = text.substr(1, close1 - 1);
  BasisLabelSpec spec;

  if (close1 + 1 < text.size() && text[close1 + 1] == '(') {
    // (a<digit>)(bc)B[i]
    const size_t close2 = text.find(')', close1 + 2);
    if (close2 == std::string::npos) throw bad();
    const std::string inner2 = text.substr(close1 + 2, close2 - close1 - 2);
    const std::string tag = text.substr(close2 + 1);
    if (inner1.size() != 2 || !std::isdigit(inner1[1])) throw bad();
    if (inner2.size() != 2) throw bad();
    if (tag != "B" && tag != "Bi") throw bad();
    spec.kind = Kind::bell_product;
    spec.free_axis = inner1[0];
    spec.free_qubit = inner1[1] - '0';
    spec.axes = inner2;
    spec.i_phase = tag == "Bi";
    if (spec.free_qubit < 1 || spec.free_qubit > 3) throw bad();
    check_axes(std::string{spec.free_axis});
    check_axes(spec.axes);
    return spec;
  }

  const std::string tag = text.substr(close1 + 1);
  spec.axes = inner1;
  check_axes(spec.axes);
  if (tag == "pi") {
    spec.kind = Kind::product;
    if (spec.axes.empty()) throw bad();
  } else if (tag == "B" || tag == "Bi") {
    spec.kind = Kind::bell;
    spec.i_phase = tag == "Bi";
    if (spec.axes.size() != 2) throw bad();
  } else if (tag == "G" || tag == "Gi") {
    spec.kind = Kind::ghz;
    spec.i_phase = tag == "Gi";
    if (spec.axes.size() != 3) throw bad();
  } else {
    throw bad();
  }
  return spec;
}

std::vector<BasisLabelSpec> parse_basis_specs(const std::string& csv) {
  std::vector<BasisLabelSpec> specs;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    const size_t first = token.find_first_not_of(" \t\n");
    const size_t last = token.find_last_not_of(" \t\n");
    if (first == std::string::npos) continue;
    specs.push_back(BasisLabelSpec::parse(token.substr(first, last - first + 1)));
  }
  if (specs.empty()) throw std::invalid_argument("no basis specs given");
  return specs;
}

OrthonormalBasis build_basis(const BasisLabelSpec& spec) {
  switch (spec.kind) {
    case BasisLabelSpec::Kind::product:
      return product_basis(spec.axes);
    case BasisLabelSpec::Kind::bell:
      return bell_basis(spec.axes[0], spec.axes[1], spec.i_phase);
    case BasisLabelSpec::Kind::ghz:
      return ghz_basis(spec.axes, spec.i_phase);
    case BasisLabelSpec::Kind::bell_product:
      break;
  }

  // One qubit factored out, Bell pair on the remaining two (pair axes are
  // listed in ascending qubit order).
  const int f = spec.free_qubit;
  std::vector<int> pair;
  for (int q = 1; q <= 3; ++q)
    if (q != f) pair.push_back(q);
  OrthonormalBasis bell = superposition_basis(spec.axes, spec.i_phase);

  OrthonormalBasis b;
  b.n_qubits = 3;
  b.label = spec.str();
  for (const CVector& pair_state : bell.vectors) {
    for (int up : {1, 0}) {
      const CVector free_state = single_qubit_eigenvector(spec.free_axis, up);
      CVector full(8);
      for (int pb = 0; pb < 4; ++pb)
        for (int fb = 0; fb < 2; ++fb) {
          const int idx = (((pb >> 1) & 1) << (3 - pair[0])) |
                          ((pb & 1) << (3 - pair[1])) | (fb << (3 - f));
          full[idx] = pair_state[pb] * free_state[fb];
        }
      b.vectors.push_back(std::move(full));
    }
  }
  return b;
}

CommutingSet stabilizing_set(const OrthonormalBasis& basis) {
  const int n = basis.n_qubits;
  const size_t dim = size_t{1} << n;
  if (basis.vectors.size() != dim)
    throw std::invalid_argument("basis has wrong vector count");
  if (!is_orthonormal(basis.vectors, kTolChained))
    throw std::invalid_argument("basis is not orthonormal");

  std::vector<PauliOperator> found;
  for (const PauliOperator& p : enumerate_all(n)) {
    if (p.is_identity()) continue;
    const CMatrix m = dense_matrix(p);
    bool stabilizes = true;
    for (const CVector& v : basis.vectors) {
      const CVector w = matvec(m, v);
      double plus = 0.0, minus = 0.0;
      for (size_t i = 0; i < w.size(); ++i) {
        plus = std::max(plus, std::abs(w[i] - v[i]));
        minus = std::max(minus, std::abs(w[i] + v[i]));
      }
      if (std::min(plus, minus) > 1e-8) {
        stabilizes = false;
        break;
      }
    }
    if (stabilizes) found.push_back(p);
  }
  if (found.size() != dim - 1)
    throw std::runtime_error(
        "basis is stabilized by " + std::to_string(found.size()) +
        " operators, expected " + std::to_string(dim - 1));
  return make_commuting_set(std::move(found));
}

MubPartition partition_from_labels(const std::vector<BasisLabelSpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("no basis specs given");
  const int n = specs[0].n_qubits();
  MubPartition p;
  p.n_qubits = n;
  for (const BasisLabelSpec& spec : specs) {
    if (spec.n_qubits() != n)
      throw std::invalid_argument("specs disagree on qubit count");
    p.sets.push_back(stabilizing_set(build_basis(spec)));
  }
  p = canonicalize(std::move(p));
  const ValidationReport report = validate_partition(p);
  if (!report.valid())
    throw std::runtime_error("label specs do not form a valid partition:\n" +
                             report.to_string());
  return p;
}

std::vector<std::string> reference_choice_labels(const std::string& name) {
  if (name == "fig1")
    return {"(zz)pi", "(xy)pi", "(yx)pi", "(zx)B", "(yz)Bi"};
  if (name == "fig2")
    return {"(xyz)pi", "(yzx)pi", "(zxy)pi", "(xxx)Gi", "(yyy)G",
            "(zzz)G",  "(xzy)G",  "(yxz)G",  "(zyx)G"};
  if (name == "fig4")
    return {"(x1)(yz)Bi", "(y1)(zx)B",  "(z1)(xy)B",
            "(x2)(xy)B",  "(y2)(yz)Bi", "(z2)(zx)B",
            "(x3)(zx)B",  "(y3)(xy)B",  "(z3)(yz)Bi"};
  throw std::invalid_argument("unknown reference choice: " + name);
}

}  // namespace mub
