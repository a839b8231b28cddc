#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hamuni/linalg.hpp"

namespace hamuni {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// JSON Hamiltonian document.
///
/// Matrix form:
///   {"n": 2, "format": "matrix", "matrix": [[[re,im], ...4], ...4]}
/// Pauli form:
///   {"n": 2, "format": "pauli", "pauli": {"II": 1.0, "ZZ": 0.5}}
/// plus optional "name" (string) and "seed" (unsigned integer).
///
/// Matrix entries must be Hermitian within kHermTol; Pauli keys are the
/// sixteen two-letter strings over {I,X,Y,Z} with real coefficients.  The
/// writer emits keys in a fixed order and Pauli terms in the canonical
/// II, IX, IY, IZ, XI, ... ZZ order, so writing a parsed canonical document
/// reproduces it byte for byte.
struct HamiltonianDocument {
  enum class Format { Matrix, Pauli };
  int n = 2;
  Format format = Format::Matrix;
  Hermitian h;
  // Present exactly as given for Pauli documents (canonically reordered).
  std::vector<std::pair<std::string, double>> pauli_terms;
  std::optional<std::string> name;
  std::optional<uint64_t> seed;
};

HamiltonianDocument parse_document(const std::string& json_text);
HamiltonianDocument load_document(const std::string& path);
std::string write_document(const HamiltonianDocument& doc);

HamiltonianDocument document_from_hermitian(const Hermitian& h, HamiltonianDocument::Format format,
                                            std::optional<std::string> name = std::nullopt,
                                            std::optional<uint64_t> seed = std::nullopt);

/// Canonical order of the sixteen Pauli strings: II, IX, IY, IZ, XI, ... ZZ.
const std::vector<std::string>& pauli_string_order();

}  // namespace hamuni
