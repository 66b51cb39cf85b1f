#include "mub/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mub {

OrderedJson partition_to_json(const MubPartition& p) {
  OrderedJson j;
  j["n_qubits"] = p.n_qubits;
  j["sets"] = OrderedJson::array();
  for (const CommutingSet& s : p.sets) {
    OrderedJson set_json;
    set_json["members"] = OrderedJson::array();
    for (const PauliOperator& m : s.members)
      set_json["members"].push_back(to_label(m));
    set_json["generators"] = OrderedJson::array();
    for (const PauliOperator& g : s.generators)
      set_json["generators"].push_back(to_label(g));
    j["sets"].push_back(std::move(set_json));
  }
  return j;
}

MubPartition partition_from_json(const nlohmann::json& j) {
  MubPartition p;
  p.n_qubits = j.at("n_qubits").get<int>();
  for (const auto& set_json : j.at("sets")) {
    CommutingSet s;
    s.n_qubits = p.n_qubits;
    for (const auto& label : set_json.at("members"))
      s.members.push_back(parse_label(label.get<std::string>()));
    if (set_json.contains("generators"))
      for (const auto& label : set_json.at("generators"))
        s.generators.push_back(parse_label(label.get<std::string>()));
    p.sets.push_back(std::move(s));
  }
  return p;
}

namespace {

OrderedJson vector_to_json(const CVector& v) {
  OrderedJson out = OrderedJson::array();
  for (const Cplx& x : v) out.push_back({x.real(), x.imag()});
  return out;
}

CVector vector_from_json(const nlohmann::json& j) {
  CVector v;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("complex entries must be [re, im] pairs");
    v.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return v;
}

}  // namespace

OrderedJson bases_to_json(const std::vector<OrthonormalBasis>& bases) {
  if (bases.empty()) throw std::invalid_argument("no bases to serialize");
  OrderedJson j;
  j["n_qubits"] = bases[0].n_qubits;
  j["bases"] = OrderedJson::array();
  for (const OrthonormalBasis& b : bases) {
    OrderedJson basis_json;
    if (!b.label.empty()) basis_json["label"] = b.label;
    if (!b.source_members.empty())
      basis_json["source_members"] = b.source_members;
    basis_json["vectors"] = OrderedJson::array();
    for (const CVector& v : b.vectors)
      basis_json["vectors"].push_back(vector_to_json(v));
    j["bases"].push_back(std::move(basis_json));
  }
  return j;
}

std::vector<OrthonormalBasis> bases_from_json(const nlohmann::json& j) {
  std::vector<OrthonormalBasis> bases;
  const nlohmann::json& list =
      j.contains("bases") ? j.at("bases")
                          : nlohmann::json::array({j});  // single-basis file
  const int n = j.at("n_qubits").get<int>();
  for (const auto& basis_json : list) {
    OrthonormalBasis b;
    b.n_qubits = n;
    if (basis_json.contains("label"))
      b.label = basis_json.at("label").get<std::string>();
    if (basis_json.contains("source_members"))
      for (const auto& m : basis_json.at("source_members"))
        b.source_members.push_back(m.get<std::string>());
    for (const auto& vec_json : basis_json.at("vectors"))
      b.vectors.push_back(vector_from_json(vec_json));
    if (b.vectors.size() != size_t{1} << n)
      throw std::invalid_argument("basis has wrong vector count");
    bases.push_back(std::move(b));
  }
  return bases;
}

OrderedJson fingerprint_to_json(const EntanglementFingerprint& fp) {
  OrderedJson j;
  j["per_basis"] = OrderedJson::array();
  for (const BasisClassification& c : fp.per_basis) {
    OrderedJson entry;
    entry["category"] = category_name(c.category);
    if (c.category == BasisCategory::bell_product)
      entry["free_qubit"] = c.free_qubit;
    entry["purities"] = c.purities;
    j["per_basis"].push_back(std::move(entry));
  }
  j["counts"] = OrderedJson::object();
  for (const auto& [name, count] : fp.counts) j["counts"][name] = count;
  return j;
}

OrderedJson density_to_json(const DensityMatrix& rho) {
  OrderedJson j;
  j["dim"] = rho.dim();
  j["rho"] = OrderedJson::array();
  for (int r = 0; r < rho.dim(); ++r) {
    OrderedJson row = OrderedJson::array();
    for (int c = 0; c < rho.dim(); ++c)
      row.push_back({rho.rho(r, c).real(), rho.rho(r, c).imag()});
    j["rho"].push_back(std::move(row));
  }
  return j;
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  const int dim = j.at("dim").get<int>();
  const auto& rows = j.at("rho");
  if (static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument("density row count mismatch");
  CMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    const CVector row = vector_from_json(rows[r]);
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("density column count mismatch");
    for (int c = 0; c < dim; ++c) m(r, c) = row[c];
  }
  return make_density(std::move(m));
}

std::string table_to_csv(const ProbabilityTable& table) {
  std::string out = "basis,state,probability\n";
  char line[80];
  for (size_t a = 0; a < table.rows.size(); ++a)
    for (size_t s = 0; s < table.rows[a].size(); ++s) {
      std::snprintf(line, sizeof line, "%zu,%zu,%.17g\n", a, s,
                    table.rows[a][s]);
      out += line;
    }
  return out;
}

ProbabilityTable table_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "basis,state,probability")
    throw std::invalid_argument("bad CSV header");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t basis, state;
    double prob;
    if (std::sscanf(line.c_str(), "%zu,%zu,%lf", &basis, &state, &prob) != 3)
      throw std::invalid_argument("bad CSV line: " + line);
    if (basis >= rows.size()) rows.resize(basis + 1);
    if (state >= rows[basis].size()) rows[basis].resize(state + 1);
    rows[basis][state] = prob;
  }
  if (rows.empty()) throw std::invalid_argument("empty CSV table");

  int n = 0;
  while ((size_t{1} << n) + 1 < rows.size()) ++n;
  const size_t d = size_t{1} << n;
  if (rows.size() != d + 1)
    throw std::invalid_argument("row count is not 2^N + 1");
  for (const std::vector<double>& row : rows)
    if (row.size() != d)
      throw std::invalid_argument("column count is not 2^N");
  ProbabilityTable table;
  table.n_qubits = n;
  table.rows = std::move(rows);
  return table;
}

}  // namespace mub
