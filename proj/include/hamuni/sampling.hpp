#pragma once

#include <optional>
#include <string>

#include "hamuni/linalg.hpp"

namespace hamuni {

/// Constructive families of two-qubit Hamiltonians used by the sample command
/// and the statistical suites.  Except for Generic each sampler builds a
/// member by construction and re-checks membership with the matching witness
/// test before returning.
enum class Family {
  Generic,            // Gaussian Hermitian
  Traceless,          // trace removed
  SharedEigvec,       // has an eigenvector in common with the swap gate
  SwapLocal,          // swap-commuting conjugate of a local Hamiltonian
  Local,              // h1 (x) I + I (x) h2
  ProductEigvec,      // has an eigenvector a (x) a
  Antisymmetric,      // r I + (U(x)U) A (U(x)U)^dag, A^T = -A
  CommutingU,         // commutes with some u (x) I + I (x) u
};

std::optional<Family> family_from_string(const std::string& name);
const char* family_name(Family f);
std::vector<Family> all_families();

/// Deterministic family member for the given seed.
Hermitian sample_family(Family f, uint64_t seed);

/// Witness-based membership check used to validate samples.
bool verify_family_membership(Family f, const Hermitian& h);

}  // namespace hamuni
