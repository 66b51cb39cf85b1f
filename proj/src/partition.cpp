#include "mub/partition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mub/gf2.hpp"

namespace mub {

namespace {

// (x|z) rows packed into one word for GF(2) rank computations.
uint64_t symplectic_row(const PauliOperator& p) {
  return static_cast<uint64_t>(p.x_bits) |
         (static_cast<uint64_t>(p.z_bits) << p.n_qubits);
}

int gf2_rank(std::vector<uint64_t> rows) {
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const uint64_t mask = uint64_t{1} << bit;
    size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<size_t>(rank) && (rows[r] & mask))
        rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::vector<PauliOperator> pick_generators(
    const std::vector<PauliOperator>& members, int n_qubits) {
  std::vector<PauliOperator> generators;
  std::vector<uint64_t> rows;
  for (const PauliOperator& m : members) {
    rows.push_back(symplectic_row(m));
    if (gf2_rank(rows) == static_cast<int>(rows.size()))
      generators.push_back(m);
    else
      rows.pop_back();
    if (static_cast<int>(generators.size()) == n_qubits) break;
  }
  return generators;
}

std::string partition_key_string(const MubPartition& p) {
  std::string out;
  for (const CommutingSet& s : p.sets) {
    for (const PauliOperator& m : s.members) {
      out += to_label(m);
      out.push_back(' ');
    }
    out.push_back('|');
  }
  return out;
}

}  // namespace

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const std::string& v : violations) os << v << "\n";
  return os.str();
}

bool same_members(const CommutingSet& a, const CommutingSet& b) {
  if (a.n_qubits != b.n_qubits || a.members.size() != b.members.size())
    return false;
  for (size_t i = 0; i < a.members.size(); ++i)
    if (a.members[i].canonical() != b.members[i].canonical()) return false;
  return true;
}

CommutingSet make_commuting_set(std::vector<PauliOperator> members) {
  if (members.empty()) throw std::invalid_argument("empty member list");
  const int n = members[0].n_qubits;
  const size_t expected = (size_t{1} << n) - 1;
  for (PauliOperator& m : members) {
    if (m.n_qubits != n) throw std::invalid_argument("mismatched qubit counts");
    m = m.canonical();
  }
  std::sort(members.begin(), members.end(), canonical_less);
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("duplicate members");
  if (members.size() != expected)
    throw std::invalid_argument("maximal commuting set for " +
                                std::to_string(n) + " qubits needs " +
                                std::to_string(expected) + " members");
  std::set<uint64_t> keys;
  for (const PauliOperator& m : members) {
    if (m.is_identity())
      throw std::invalid_argument("identity cannot be a member");
    keys.insert(m.canonical_key());
  }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) {
      if (!commutes(members[i], members[j]))
        throw std::invalid_argument("members " + to_label(members[i]) +
                                    " and " + to_label(members[j]) +
                                    " do not commute");
      const uint64_t prod_key =
          multiply(members[i], members[j]).canonical_key();
      if (!keys.count(prod_key))
        throw std::invalid_argument("set not closed under multiplication");
    }
  CommutingSet s;
  s.n_qubits = n;
  s.members = std::move(members);
  s.generators = pick_generators(s.members, n);
  if (static_cast<int>(s.generators.size()) != n)
    throw std::invalid_argument("members span fewer than N dimensions");
  return s;
}

CommutingSet close_under_multiplication(std::vector<PauliOperator> generators) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const int n = generators[0].n_qubits;
  if (static_cast<int>(generators.size()) != n)
    throw std::invalid_argument("need exactly N generators for N qubits");
  std::vector<uint64_t> rows;
  for (PauliOperator& g : generators) {
    if (g.n_qubits != n) throw std::invalid_argument("mismatched qubit counts");
    g = g.canonical();
    if (g.is_identity())
      throw std::invalid_argument("identity cannot be a generator");
    rows.push_back(symplectic_row(g));
  }
  if (gf2_rank(rows) != n)
    throw std::invalid_argument("generators are dependent");
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (!commutes(generators[i], generators[j]))
        throw std::invalid_argument("generators do not commute");

  std::vector<PauliOperator> members;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    PauliOperator prod{n, 0, 0, 0};  // identity
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) prod = multiply(prod, generators[i]);
    members.push_back(prod.canonical());
  }
  return make_commuting_set(std::move(members));
}

MubPartition canonicalize(MubPartition p) {
  for (CommutingSet& s : p.sets) {
    std::sort(s.members.begin(), s.members.end(), canonical_less);
    s.generators = pick_generators(s.members, s.n_qubits);
  }
  std::sort(p.sets.begin(), p.sets.end(),
            [](const CommutingSet& a, const CommutingSet& b) {
              if (a.members.empty() || b.members.empty())
                return a.members.size() < b.members.size();
              return canonical_less(a.members.front(), b.members.front());
            });
  return p;
}

MubPartition standard_partition(int n_qubits) {
  return standard_partition(n_qubits, default_polynomial(n_qubits));
}

MubPartition standard_partition(int n_qubits, uint32_t poly) {
  const FieldTables field = make_field(n_qubits, poly);
  const SelfDualBasis basis = find_self_dual_basis(field);
  const uint32_t count = 1u << n_qubits;

  MubPartition p;
  p.n_qubits = n_qubits;

  std::vector<PauliOperator> pure_z;
  for (uint32_t v = 1; v < count; ++v)
    pure_z.push_back({n_qubits, 0, v, 0});
  p.sets.push_back(make_commuting_set(std::move(pure_z)));

  for (uint32_t lambda = 0; lambda < count; ++lambda) {
    const GF2Matrix m = multiplication_matrix(field, basis,
                                              static_cast<uint16_t>(lambda));
    std::vector<PauliOperator> members;
    for (uint32_t v = 1; v < count; ++v)
      members.push_back({n_qubits, v, gf2_matvec(m, v), 0});
    p.sets.push_back(make_commuting_set(std::move(members)));
  }
  return canonicalize(std::move(p));
}

ValidationReport validate_partition(const MubPartition& p) {
  ValidationReport report;
  auto fail = [&report](const std::string& msg) {
    report.violations.push_back(msg);
  };

  const int n = p.n_qubits;
  if (n < 1 || n > kMaxQubits) {
    fail("n_qubits out of range");
    return report;
  }
  const size_t want_sets = (size_t{1} << n) + 1;
  const size_t want_size = (size_t{1} << n) - 1;
  if (p.sets.size() != want_sets)
    fail("set count " + std::to_string(p.sets.size()) + " != expected " +
         std::to_string(want_sets));

  std::map<uint64_t, int> seen;  // canonical key -> multiplicity
  for (size_t si = 0; si < p.sets.size(); ++si) {
    const CommutingSet& s = p.sets[si];
    const std::string tag = "set " + std::to_string(si) + ": ";
    if (s.n_qubits != n) {
      fail(tag + "mismatched qubit count");
      continue;
    }
    if (s.members.size() != want_size)
      fail(tag + "size " + std::to_string(s.members.size()) + " != expected " +
           std::to_string(want_size));

    std::set<uint64_t> keys;
    bool members_ok = true;
    for (const PauliOperator& m : s.members) {
      if (m.n_qubits != n) {
        fail(tag + "member " + to_label(m) + " has wrong qubit count");
        members_ok = false;
        continue;
      }
      if (m.is_identity()) {
        fail(tag + "contains the identity");
        members_ok = false;
      }
      if (m.phase_exp != 0)
        fail(tag + "member " + to_label(m) + " not phase-canonical");
      if (!keys.insert(m.canonical_key()).second) {
        fail(tag + "duplicate member " + to_label(m));
        members_ok = false;
      }
      seen[m.canonical_key()] += 1;
    }
    if (!members_ok) continue;

    for (size_t i = 0; i < s.members.size(); ++i)
      for (size_t j = i + 1; j < s.members.size(); ++j) {
        if (!commutes(s.members[i], s.members[j]))
          fail(tag + to_label(s.members[i]) + " and " +
               to_label(s.members[j]) + " do not commute");
        else if (!keys.count(
                     multiply(s.members[i], s.members[j]).canonical_key()))
          fail(tag + "product of " + to_label(s.members[i]) + " and " +
               to_label(s.members[j]) + " escapes the set");
      }

    if (!s.generators.empty()) {
      std::vector<uint64_t> rows;
      bool gens_ok = true;
      for (const PauliOperator& g : s.generators) {
        if (!keys.count(g.canonical_key())) {
          fail(tag + "generator " + to_label(g) + " is not a member");
          gens_ok = false;
        }
        rows.push_back(symplectic_row(g));
      }
      if (gens_ok && (static_cast<int>(s.generators.size()) != n ||
                      gf2_rank(rows) != n))
        fail(tag + "generators do not span N dimensions");
    }
  }

  for (const auto& [key, count] : seen)
    if (count > 1)
      fail("operator shared by " + std::to_string(count) + " sets (key " +
           std::to_string(key) + ")");
  const size_t want_total = (size_t{1} << (2 * n)) - 1;
  if (seen.size() != want_total)
    fail("coverage: " + std::to_string(seen.size()) + " distinct operators, " +
         "expected " + std::to_string(want_total));
  return report;
}

std::vector<CommutingSet> all_maximal_commuting_sets(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 2)
    throw std::invalid_argument("exhaustive search supports N <= 2");
  std::vector<CommutingSet> sets;
  if (n_qubits == 1) {
    for (const char* label : {"X", "Y", "Z"})
      sets.push_back(make_commuting_set({parse_label(label)}));
    return sets;
  }
  std::vector<PauliOperator> ops = enumerate_all(2);
  ops.erase(ops.begin());  // drop identity
  std::set<std::vector<uint64_t>> dedup;
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j) {
      if (!commutes(ops[i], ops[j])) continue;
      CommutingSet s = make_commuting_set(
          {ops[i], ops[j], multiply(ops[i], ops[j]).canonical()});
      std::vector<uint64_t> key;
      for (const PauliOperator& m : s.members) key.push_back(m.canonical_key());
      if (dedup.insert(key).second) sets.push_back(std::move(s));
    }
  std::sort(sets.begin(), sets.end(),
            [](const CommutingSet& a, const CommutingSet& b) {
              return canonical_less(a.members.front(), b.members.front());
            });
  return sets;
}

namespace {

// Exact cover: always branch on the lowest uncovered operator, so each
// partition is produced exactly once.
void cover_search(const std::vector<CommutingSet>& sets,
                  const std::vector<uint32_t>& masks, uint32_t covered,
                  uint32_t full, std::vector<int>& chosen,
                  std::vector<std::vector<int>>& out) {
  if (covered == full) {
    out.push_back(chosen);
    return;
  }
  const int lowest = std::countr_one(covered);
  for (size_t i = 0; i < sets.size(); ++i) {
    if (!(masks[i] >> lowest & 1u)) continue;
    if (masks[i] & covered) continue;
    chosen.push_back(static_cast<int>(i));
    cover_search(sets, masks, covered | masks[i], full, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MubPartition> enumerate_partitions(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 2)
    throw std::invalid_argument("exhaustive enumeration supports N <= 2");
  const std::vector<CommutingSet> sets = all_maximal_commuting_sets(n_qubits);

  std::vector<PauliOperator> ops = enumerate_all(n_qubits);
  ops.erase(ops.begin());
  std::map<uint64_t, int> index_of;
  for (size_t i = 0; i < ops.size(); ++i)
    index_of[ops[i].canonical_key()] = static_cast<int>(i);

  std::vector<uint32_t> masks(sets.size(), 0);
  for (size_t i = 0; i < sets.size(); ++i)
    for (const PauliOperator& m : sets[i].members)
      masks[i] |= 1u << index_of.at(m.canonical_key());

  const uint32_t full = (1u << ops.size()) - 1;
  std::vector<int> chosen;
  std::vector<std::vector<int>> covers;
  cover_search(sets, masks, 0, full, chosen, covers);

  std::vector<MubPartition> partitions;
  for (const std::vector<int>& cover : covers) {
    MubPartition p;
    p.n_qubits = n_qubits;
    for (int idx : cover) p.sets.push_back(sets[idx]);
    partitions.push_back(canonicalize(std::move(p)));
  }
  std::sort(partitions.begin(), partitions.end(),
            [](const MubPartition& a, const MubPartition& b) {
              return partition_key_string(a) < partition_key_string(b);
            });
  partitions.erase(
      std::unique(partitions.begin(), partitions.end(),
                  [](const MubPartition& a, const MubPartition& b) {
                    return partition_key_string(a) == partition_key_string(b);
                  }),
      partitions.end());
  return partitions;
}

}  // namespace mub
