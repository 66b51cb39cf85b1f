#include "mub/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mub {

std::string category_name(BasisCategory c) {
  switch (c) {
    case BasisCategory::product:
      return "product";
    case BasisCategory::bell:
      return "bell";
    case BasisCategory::bell_product:
      return "bell_product";
    case BasisCategory::ghz:
      return "ghz";
    case BasisCategory::other:
      return "other";
  }
  return "other";
}

CMatrix reduced_density(const CVector& state, const std::vector<int>& keep) {
  const size_t dim = state.size();
  int n = 0;
  while ((size_t{1} << n) < dim) ++n;
  if ((size_t{1} << n) != dim || n < 1)
    throw std::invalid_argument("state dimension is not a power of two");

  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || static_cast<int>(kept.size()) >= n ||
      std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
      kept.front() < 1 || kept.back() > n)
    throw std::invalid_argument("kept qubits must be a nonempty proper subset");

  std::vector<int> traced;
  for (int q = 1; q <= n; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

  // Qubit q occupies bit (n - q) of the dense index.
  auto assemble = [n](const std::vector<int>& qubits, int bits) {
    int idx = 0;
    for (size_t i = 0; i < qubits.size(); ++i)
      if ((bits >> (qubits.size() - 1 - i)) & 1)
        idx |= 1 << (n - qubits[i]);
    return idx;
  };

  const int dk = 1 << kept.size();
  const int de = 1 << traced.size();
  CMatrix rho(dk);
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      Cplx sum{};
      for (int e = 0; e < de; ++e) {
        const int env = assemble(traced, e);
        sum += state[assemble(kept, i) | env] *
               std::conj(state[assemble(kept, j) | env]);
      }
      rho(i, j) = sum;
    }
  return rho;
}

double purity(const CMatrix& rho) {
  double s = 0.0;
  for (const Cplx& v : rho.a) s += std::norm(v);
  return s;
}

namespace {

bool near(double value, double target) {
  return std::abs(value - target) < kTolPurity;
}

struct StateClass {
  BasisCategory category;
  int free_qubit;
};

StateClass classify_state(const CVector& state, int n,
                          std::vector<double>* purities_out) {
  std::vector<double> singles(n);
  for (int q = 1; q <= n; ++q)
    singles[q - 1] = purity(reduced_density(state, {q}));
  if (purities_out) *purities_out = singles;

  const int pure_count =
      static_cast<int>(std::count_if(singles.begin(), singles.end(),
                                     [](double p) { return near(p, 1.0); }));
  const int mixed_count =
      static_cast<int>(std::count_if(singles.begin(), singles.end(),
                                     [](double p) { return near(p, 0.5); }));

  if (pure_count == n) return {BasisCategory::product, 0};
  if (n == 2 && mixed_count == 2) return {BasisCategory::bell, 0};
  if (n == 3 && pure_count == 1 && mixed_count == 2) {
    int free_qubit = 0;
    for (int q = 1; q <= 3; ++q)
      if (near(singles[q - 1], 1.0)) free_qubit = q;
    return {BasisCategory::bell_product, free_qubit};
  }
  if (n == 3 && mixed_count == 3) {
    // GHZ additionally needs every two-qubit marginal at purity 1/2.
    for (const std::vector<int>& pair :
         std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}})
      if (!near(purity(reduced_density(state, pair)), 0.5))
        return {BasisCategory::other, 0};
    return {BasisCategory::ghz, 0};
  }
  return {BasisCategory::other, 0};
}

}  // namespace

BasisClassification classify_basis(const OrthonormalBasis& b) {
  if (b.vectors.empty()) throw std::invalid_argument("empty basis");
  BasisClassification result;
  bool first = true;
  for (const CVector& state : b.vectors) {
    std::vector<double> purities;
    const StateClass sc = classify_state(state, b.n_qubits, &purities);
    if (first) {
      result.category = sc.category;
      result.free_qubit = sc.free_qubit;
      result.purities = purities;
      first = false;
    } else if (sc.category != result.category ||
               sc.free_qubit != result.free_qubit) {
      throw std::runtime_error("basis states fall into mixed categories");
    }
  }
  return result;
}

EntanglementFingerprint partition_fingerprint(const MubPartition& p) {
  EntanglementFingerprint fp;
  for (const CommutingSet& s : p.sets) {
    BasisClassification c = classify_basis(eigenbasis(s));
    fp.counts[category_name(c.category)] += 1;
    fp.per_basis.push_back(std::move(c));
  }
  return fp;
}

}  // namespace mub
