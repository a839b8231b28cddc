#include "hamuni/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hamuni {

using nlohmann::ordered_json;

const std::vector<std::string>& pauli_string_order() {
  static const std::vector<std::string> order = [] {
    const char axes[] = {'I', 'X', 'Y', 'Z'};
    std::vector<std::string> v;
    for (char a : axes)
      for (char b : axes) v.push_back(std::string{a, b});
    return v;
  }();
  return order;
}

namespace {

int pauli_axis(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
  }
  return -1;
}

Hermitian matrix_from_json(const ordered_json& jm) {
  if (!jm.is_array() || jm.size() != 4)
    throw ParseError("field 'matrix': expected a 4x4 array of [re, im] pairs");
  Matrix m(4);
  for (int i = 0; i < 4; ++i) {
    const auto& row = jm[i];
    if (!row.is_array() || row.size() != 4)
      throw ParseError("field 'matrix' row " + std::to_string(i) + ": expected 4 entries");
    for (int j = 0; j < 4; ++j) {
      const auto& ent = row[j];
      if (!ent.is_array() || ent.size() != 2 || !ent[0].is_number() || !ent[1].is_number())
        throw ParseError("field 'matrix' entry (" + std::to_string(i) + "," + std::to_string(j) +
                         "): expected [re, im] with numeric parts");
      m(i, j) = cplx(ent[0].get<double>(), ent[1].get<double>());
    }
  }
  try {
    return Hermitian(m);
  } catch (const std::invalid_argument&) {
    throw ParseError("field 'matrix': matrix is not Hermitian within tolerance");
  }
}

}  // namespace

HamiltonianDocument parse_document(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document root must be a JSON object");

  HamiltonianDocument doc;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("field 'n': required integer qubit count");
  doc.n = j["n"].get<int>();
  if (doc.n != 2) throw ParseError("field 'n': only two-qubit documents are supported");

  if (!j.contains("format") || !j["format"].is_string())
    throw ParseError("field 'format': required, \"matrix\" or \"pauli\"");
  const std::string fmt = j["format"].get<std::string>();

  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("field 'name': expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      throw ParseError("field 'seed': expected an unsigned integer");
    doc.seed = j["seed"].get<uint64_t>();
  }

  if (fmt == "matrix") {
    doc.format = HamiltonianDocument::Format::Matrix;
    if (!j.contains("matrix")) throw ParseError("field 'matrix': required for format \"matrix\"");
    doc.h = matrix_from_json(j["matrix"]);
  } else if (fmt == "pauli") {
    doc.format = HamiltonianDocument::Format::Pauli;
    if (!j.contains("pauli") || !j["pauli"].is_object())
      throw ParseError("field 'pauli': required object for format \"pauli\"");
    std::map<std::string, double> seen;
    for (const auto& [key, value] : j["pauli"].items()) {
      if (key.size() != 2 || pauli_axis(key[0]) < 0 || pauli_axis(key[1]) < 0)
        throw ParseError("field 'pauli': unknown Pauli string '" + key + "'");
      if (!value.is_number())
        throw ParseError("field 'pauli." + key + "': coefficients must be real numbers");
      if (!seen.emplace(key, value.get<double>()).second)
        throw ParseError("field 'pauli': duplicate key '" + key + "'");
    }
    std::array<double, 16> coeff{};
    for (const auto& key : pauli_string_order()) {
      const auto it = seen.find(key);
      if (it == seen.end()) continue;
      doc.pauli_terms.emplace_back(key, it->second);
      coeff[pauli_axis(key[0]) * 4 + pauli_axis(key[1])] = it->second;
    }
    doc.h = hermitian_from_pauli(coeff);
  } else {
    throw ParseError("field 'format': unknown value '" + fmt + "'");
  }
  return doc;
}

HamiltonianDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string write_document(const HamiltonianDocument& doc) {
  ordered_json j;
  j["n"] = doc.n;
  j["format"] = doc.format == HamiltonianDocument::Format::Matrix ? "matrix" : "pauli";
  if (doc.name) j["name"] = *doc.name;
  if (doc.seed) j["seed"] = *doc.seed;
  if (doc.format == HamiltonianDocument::Format::Matrix) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 4; ++i) {
      ordered_json row = ordered_json::array();
      for (int jj = 0; jj < 4; ++jj)
        row.push_back(ordered_json::array({doc.h(i, jj).real(), doc.h(i, jj).imag()}));
      rows.push_back(row);
    }
    j["matrix"] = rows;
  } else {
    ordered_json terms = ordered_json::object();
    for (const auto& [key, value] : doc.pauli_terms) terms[key] = value;
    j["pauli"] = terms;
  }
  return j.dump();
}

HamiltonianDocument document_from_hermitian(const Hermitian& h, HamiltonianDocument::Format format,
                                            std::optional<std::string> name,
                                            std::optional<uint64_t> seed) {
  HamiltonianDocument doc;
  doc.format = format;
  doc.h = h;
  doc.name = std::move(name);
  doc.seed = seed;
  if (format == HamiltonianDocument::Format::Pauli) {
    const auto coeff = pauli_coefficients(h);
    for (const auto& key : pauli_string_order()) {
      const double c = coeff[pauli_axis(key[0]) * 4 + pauli_axis(key[1])];
      if (c != 0.0) doc.pauli_terms.emplace_back(key, c);
    }
  }
  return doc;
}

}  // namespace hamuni
