// hamuni: decide two-qubit Hamiltonian universality, compute tridiagonal
// forms, Lie closure dimensions and universality certificates, and sample
// the structured Hamiltonian families.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamuni/certificate.hpp"
#include "hamuni/classify2.hpp"
#include "hamuni/io.hpp"
#include "hamuni/lie.hpp"
#include "hamuni/rng.hpp"
#include "hamuni/sampling.hpp"
#include "hamuni/tridiagonal.hpp"

namespace {

using nlohmann::ordered_json;
using namespace hamuni;

constexpr int kExitNonUniversal = 10;
constexpr int kExitParseError = 2;

ordered_json json_matrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(ordered_json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

ordered_json json_vector(const Vec& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(ordered_json::array({x.real(), x.imag()}));
  return out;
}

ordered_json json_tridiagonal(const TridiagonalForm& t) {
  ordered_json j;
  j["a"] = t.a;
  j["b"] = t.b;
  j["c"] = t.c;
  j["d"] = t.d;
  j["e"] = t.e;
  j["f"] = t.f;
  j["g"] = t.g;
  j["type"] = t.form_type;
  j["raw_b"] = t.raw_b;
  j["raw_d"] = t.raw_d;
  j["raw_f"] = t.raw_f;
  j["borderline"] = t.borderline;
  return j;
}

void print_tridiagonal_text(const TridiagonalForm& t, std::ostream& os) {
  os << std::setprecision(17);
  os << "tridiagonal form (singlet basis): type " << t.form_type << "\n";
  os << "  a = " << t.a << "\n  b = " << t.b << "\n  c = " << t.c << "\n  d = " << t.d
     << "\n  e = " << t.e << "\n  f = " << t.f << "\n  g = " << t.g << "\n";
  if (t.borderline) os << "  note: a zero cut for b, d or f was borderline\n";
}

int cmd_classify(const std::string& path, bool as_json, double tol) {
  const HamiltonianDocument doc = load_document(path);
  const ClassificationReport rep = classify(doc.h, tol);
  const bool universal = rep.verdict == Verdict::Universal;
  if (as_json) {
    ordered_json j;
    j["verdict"] = universal ? "universal" : "non-universal";
    j["conditions"]["swap_similar_to_local"] = rep.cond_swap_similar_local;
    j["conditions"]["shares_eigenvector_with_swap"] = rep.cond_shared_eigenvector;
    j["conditions"]["traceless"] = rep.cond_traceless;
    j["trace"] = rep.trace_value;
    j["diagonal_spread"] = rep.diagonal_spread;
    j["tridiagonal"] = json_tridiagonal(rep.tridiagonal);
    if (rep.shared_eigenvector) j["shared_eigenvector"] = json_vector(*rep.shared_eigenvector);
    if (rep.local_witness) {
      j["local_witness"]["h1"] = json_matrix(rep.local_witness->h1.mat());
      j["local_witness"]["h2"] = json_matrix(rep.local_witness->h2.mat());
      j["local_witness"]["conjugator"] = json_matrix(rep.local_witness->conjugator);
    }
    j["borderline"] = rep.borderline.any();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << (universal ? "universal" : "non-universal") << "\n";
    std::cout << "conditions:\n";
    std::cout << "  swap-similar to a local Hamiltonian: "
              << (rep.cond_swap_similar_local ? "yes" : "no") << "\n";
    std::cout << "  shares an eigenvector with the swap gate: "
              << (rep.cond_shared_eigenvector ? "yes" : "no") << "\n";
    std::cout << "  traceless: " << (rep.cond_traceless ? "yes" : "no")
              << "  (trace = " << std::setprecision(12) << rep.trace_value << ")\n";
    print_tridiagonal_text(rep.tridiagonal, std::cout);
    if (rep.borderline.any()) std::cout << "warning: a decision quantity was near its threshold\n";
  }
  return universal ? 0 : kExitNonUniversal;
}

int cmd_tridiag(const std::string& path, bool as_json, double tol) {
  const HamiltonianDocument doc = load_document(path);
  const TridiagonalForm t = tridiagonalize(doc.h, tol);
  if (as_json) {
    ordered_json j = json_tridiagonal(t);
    j["conjugator"] = json_matrix(t.conjugator);
    std::cout << j.dump(2) << "\n";
  } else {
    print_tridiagonal_text(t, std::cout);
    std::cout << "conjugator (computational basis):\n" << std::setprecision(12);
    for (int i = 0; i < 4; ++i) {
      std::cout << " ";
      for (int j = 0; j < 4; ++j) {
        const cplx z = t.conjugator(i, j);
        std::cout << " (" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_lie_dim(const std::string& path, int qubits, double rank_tol, bool as_json) {
  const HamiltonianDocument doc = load_document(path);
  const int dim = universality_dimension(doc.h, qubits, rank_tol);
  const int full = (1 << qubits) * (1 << qubits);
  if (as_json) {
    ordered_json j;
    j["qubits"] = qubits;
    j["dimension"] = dim;
    j["full_dimension"] = full;
    j["certifies_universality"] = dim == full;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Lie closure dimension on " << qubits << " qubits: " << dim << " / " << full
              << (dim == full ? "  (certifies universality)" : "") << "\n";
  }
  return 0;
}

int cmd_certify(const std::string& path, const std::string& scheme, bool as_json, double tol) {
  const HamiltonianDocument doc = load_document(path);
  Certificate cert;
  std::string rejected;
  if (scheme == "paper") {
    const TridiagonalForm xi = tridiagonalize(doc.h, tol);
    try {
      cert = tridiagonal_certificate(xi, tol);
    } catch (const std::invalid_argument& e) {
      rejected = e.what();
    }
  } else {
    cert = nested_commutator_certificate(doc.h);
  }
  if (as_json) {
    ordered_json j;
    j["scheme"] = scheme;
    if (!rejected.empty()) {
      j["rejected"] = rejected;
    } else {
      j["rank"] = cert.rank;
      j["independent"] = cert.independent;
      ordered_json gens = ordered_json::array();
      for (const auto& gen : cert.generators) {
        ordered_json g;
        g["label"] = gen.label;
        g["construction"] = gen.construction;
        if (gen.canonical_residual >= 0.0) g["canonical_residual"] = gen.canonical_residual;
        gens.push_back(g);
      }
      j["generators"] = gens;
      if (scheme == "paper") j["max_canonical_residual"] = cert.max_canonical_residual;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (!rejected.empty()) {
      std::cout << "certificate rejected: " << rejected << "\n";
    } else {
      std::cout << "scheme: " << scheme << "\n";
      std::cout << "rank: " << cert.rank << " / 16  ("
                << (cert.independent ? "independent: certifies universality"
                                     : "dependent: certifies nothing")
                << ")\n";
      for (const auto& gen : cert.generators) {
        std::cout << "  " << std::setw(4) << gen.label << "  " << gen.construction;
        if (gen.canonical_residual >= 0.0)
          std::cout << "  residual " << std::scientific << std::setprecision(2)
                    << gen.canonical_residual << std::defaultfloat;
        std::cout << "\n";
      }
    }
  }
  if (!rejected.empty()) return kExitNonUniversal;
  return cert.independent ? 0 : kExitNonUniversal;
}

int cmd_sample(const std::string& family_str, int count, uint64_t seed, bool as_json, double tol) {
  const auto family = family_from_string(family_str);
  if (!family) {
    std::cerr << "unknown family '" << family_str << "'\n";
    return kExitParseError;
  }
  for (int i = 0; i < count; ++i) {
    Rng root(seed);
    const uint64_t sub = root.substream(static_cast<uint64_t>(i)).next_u64();
    const Hermitian h = sample_family(*family, sub);
    const ClassificationReport rep = classify(h, tol);
    const std::string verdict =
        rep.verdict == Verdict::Universal ? "universal" : "non-universal";
    std::ostringstream name;
    name << family_str << "-" << i;
    if (as_json) {
      const HamiltonianDocument doc = document_from_hermitian(
          h, HamiltonianDocument::Format::Matrix, name.str(), seed);
      ordered_json j;
      j["index"] = i;
      j["family"] = family_str;
      j["verdict"] = verdict;
      j["hamiltonian"] = ordered_json::parse(write_document(doc));
      std::cout << j.dump() << "\n";
    } else {
      std::cout << name.str() << ": " << verdict << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit Hamiltonian universality toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  double tol = kDegTol;
  app.add_option("--tol", tol, "relative tolerance for classification decisions");

  std::string input;
  bool as_json = false;

  auto* classify_cmd = app.add_subcommand("classify", "decide two-qubit universality");
  classify_cmd->add_option("input", input, "Hamiltonian document (JSON)")->required();
  classify_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* tridiag_cmd = app.add_subcommand("tridiag", "print the tridiagonal form");
  tridiag_cmd->add_option("input", input, "Hamiltonian document (JSON)")->required();
  tridiag_cmd->add_flag("--json", as_json, "machine-readable output");

  int qubits = 2;
  double rank_tol = kRankTol;
  auto* lie_cmd = app.add_subcommand("lie-dim", "brute-force Lie closure dimension");
  lie_cmd->add_option("input", input, "Hamiltonian document (JSON)")->required();
  lie_cmd->add_option("--qubits", qubits, "register size (2 or 3)")
      ->check(CLI::IsMember({2, 3}));
  lie_cmd->add_option("--rank-tol", rank_tol, "rank threshold for the closure");
  lie_cmd->add_flag("--json", as_json, "machine-readable output");

  std::string scheme = "paper";
  auto* certify_cmd = app.add_subcommand("certify", "build a universality certificate");
  certify_cmd->add_option("input", input, "Hamiltonian document (JSON)")->required();
  certify_cmd->add_option("--scheme", scheme, "certificate scheme")
      ->check(CLI::IsMember({"paper", "dbe"}));
  certify_cmd->add_flag("--json", as_json, "machine-readable output");

  std::string family = "generic";
  int count = 1;
  uint64_t seed = 12345;
  bool seed_given = false;
  auto* sample_cmd = app.add_subcommand("sample", "sample structured Hamiltonian families");
  sample_cmd->add_option("--family", family,
                         "generic|traceless|shared-eigvec|t-local|local|product-eigvec|antisym|commuting-u");
  sample_cmd->add_option("--count", count, "number of samples");
  sample_cmd->add_option("--seed", seed, "root seed")->each([&](const std::string&) {
    seed_given = true;
  });
  sample_cmd->add_flag("--json", as_json, "emit one JSON document per line");

  CLI11_PARSE(app, argc, argv);

  if (!seed_given) {
    if (const char* env = std::getenv("HAMUNI_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (...) {
        std::cerr << "invalid HAMUNI_SEED value '" << env << "'\n";
        return kExitParseError;
      }
    }
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(input, as_json, tol);
    if (tridiag_cmd->parsed()) return cmd_tridiag(input, as_json, tol);
    if (lie_cmd->parsed()) return cmd_lie_dim(input, qubits, rank_tol, as_json);
    if (certify_cmd->parsed()) return cmd_certify(input, scheme, as_json, tol);
    if (sample_cmd->parsed()) return cmd_sample(family, count, seed, as_json, tol);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
