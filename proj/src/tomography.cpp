#include "mub/tomography.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mub {

DensityMatrix make_density(CMatrix m) {
  if (m.dim < 2) throw std::invalid_argument("density matrix too small");
  if (!is_hermitian(m, kTolExact))
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(trace(m) - Cplx{1.0}) > kTolExact)
    throw std::invalid_argument("density matrix trace is not 1");
  const std::vector<double> evals = hermitian_eigenvalues(m);
  if (evals.front() < -1e-10)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  return DensityMatrix{std::move(m)};
}

std::vector<OrthonormalBasis> synthesize_all(const MubPartition& p) {
  std::vector<OrthonormalBasis> bases;
  bases.reserve(p.sets.size());
  for (const CommutingSet& s : p.sets) bases.push_back(eigenbasis(s));
  return bases;
}

ProbabilityTable mub_probabilities(const DensityMatrix& rho,
                                   const std::vector<OrthonormalBasis>& bases) {
  if (bases.empty()) throw std::invalid_argument("no bases given");
  const int n = bases[0].n_qubits;
  const size_t d = size_t{1} << n;
  if (static_cast<size_t>(rho.dim()) != d)
    throw std::invalid_argument("state dimension does not match bases");
  if (bases.size() != d + 1)
    throw std::invalid_argument("need d+1 bases, got " +
                                std::to_string(bases.size()));
  for (size_t a = 0; a < bases.size(); ++a)
    for (size_t b = a + 1; b < bases.size(); ++b)
      if (verify_unbiased(bases[a], bases[b]) > 1e-8)
        throw std::invalid_argument("bases " + std::to_string(a) + " and " +
                                    std::to_string(b) +
                                    " are not mutually unbiased");

  ProbabilityTable table;
  table.n_qubits = n;
  for (const OrthonormalBasis& basis : bases) {
    std::vector<double> row;
    row.reserve(d);
    double sum = 0.0;
    for (const CVector& v : basis.vectors) {
      const double p = inner(v, matvec(rho.rho, v)).real();
      row.push_back(p);
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw std::runtime_error("probability row does not sum to 1");
    table.rows.push_back(std::move(row));
  }
  return table;
}

ProbabilityTable mub_probabilities(const DensityMatrix& rho,
                                   const MubPartition& p) {
  return mub_probabilities(rho, synthesize_all(p));
}

DensityMatrix reconstruct(const ProbabilityTable& table, const MubPartition& p,
                          bool project_physical) {
  const int n = p.n_qubits;
  const size_t d = size_t{1} << n;
  if (table.rows.size() != p.sets.size() || table.rows.size() != d + 1)
    throw std::invalid_argument("table row count does not match partition");
  for (const std::vector<double>& row : table.rows)
    if (row.size() != d)
      throw std::invalid_argument("table column count does not match");

  CMatrix acc = CMatrix::identity(static_cast<int>(d));
  for (size_t si = 0; si < p.sets.size(); ++si) {
    const CommutingSet& s = p.sets[si];
    const EpsilonMatrix eps = epsilon_matrix(s);
    for (size_t a = 0; a < s.members.size(); ++a) {
      double expectation = 0.0;
      for (size_t alpha = 0; alpha < d; ++alpha)
        expectation +=
            eps.sign(static_cast<int>(a), static_cast<int>(alpha)) *
            table.rows[si][alpha];
      const CMatrix op = dense_matrix(s.members[a]);
      for (size_t i = 0; i < acc.a.size(); ++i)
        acc.a[i] += expectation * op.a[i];
    }
  }
  const double scale = 1.0 / static_cast<double>(d);
  for (Cplx& v : acc.a) v *= scale;

  if (project_physical) {
    auto [evals, vecs] = hermitian_eigensystem(acc);
    double total = 0.0;
    for (double& e : evals) {
      e = std::max(e, 0.0);
      total += e;
    }
    if (total <= 0.0) throw std::runtime_error("projection annihilated state");
    CMatrix out(acc.dim);
    for (int k = 0; k < acc.dim; ++k) {
      if (evals[k] == 0.0) continue;
      const CVector v = vecs.column(k);
      for (int i = 0; i < acc.dim; ++i)
        for (int j = 0; j < acc.dim; ++j)
          out(i, j) += (evals[k] / total) * v[i] * std::conj(v[j]);
    }
    acc = std::move(out);
  }
  // Returned unwrapped on purpose: noisy tables yield slightly unphysical
  // matrices unless project_physical is set.
  return DensityMatrix{std::move(acc)};
}

uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

ProbabilityTable sample_shots(const ProbabilityTable& table,
                              int64_t shots_per_basis, uint64_t seed) {
  if (shots_per_basis < 1)
    throw std::invalid_argument("shots_per_basis must be >= 1");
  SplitMix64 rng(seed);
  ProbabilityTable out;
  out.n_qubits = table.n_qubits;
  for (const std::vector<double>& row : table.rows) {
    std::vector<int64_t> counts(row.size(), 0);
    for (int64_t shot = 0; shot < shots_per_basis; ++shot) {
      const double u = rng.next_double();
      double cumulative = 0.0;
      size_t pick = row.size() - 1;
      for (size_t k = 0; k < row.size(); ++k) {
        cumulative += std::max(row[k], 0.0);
        if (u < cumulative) {
          pick = k;
          break;
        }
      }
      counts[pick] += 1;
    }
    std::vector<double> freq(row.size());
    for (size_t k = 0; k < row.size(); ++k)
      freq[k] = static_cast<double>(counts[k]) /
                static_cast<double>(shots_per_basis);
    out.rows.push_back(std::move(freq));
  }
  return out;
}

double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim())
    throw std::invalid_argument("dimension mismatch");
  if (!is_hermitian(rho1.rho, 1e-9) || !is_hermitian(rho2.rho, 1e-9))
    throw std::invalid_argument("trace distance needs Hermitian inputs");
  double sum = 0.0;
  for (double e : hermitian_eigenvalues(rho1.rho - rho2.rho))
    sum += std::abs(e);
  return 0.5 * sum;
}

DensityMatrix random_density(int n_qubits, uint64_t seed) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  const int d = 1 << n_qubits;
  SplitMix64 rng(seed);
  auto gaussian = [&rng]() {
    // Box-Muller; u1 shifted away from zero.
    const double u1 = (static_cast<double>(rng.next() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  };
  CMatrix g(d);
  for (Cplx& v : g.a) {
    const double re = gaussian();
    const double im = gaussian();
    v = Cplx{re, im} / std::sqrt(2.0);
  }
  CMatrix rho = g * adjoint(g);
  const double tr = trace(rho).real();
  for (Cplx& v : rho.a) v /= tr;
  // Clean up rounding asymmetry so make_density's exact checks pass.
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const Cplx avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      rho(i, j) = avg;
      rho(j, i) = std::conj(avg);
    }
  return make_density(std::move(rho));
}

}  // namespace mub
