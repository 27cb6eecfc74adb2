#pragma once

// Eigenvalue specs for irreducible 3-strand braid representations of
// dimension 2..5, the existence conditions on them, and the explicit
// triangular generator pairs (A, B) with ABA = BAB.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "b3img/cyclolinalg.hpp"
#include "b3img/exactfield.hpp"

namespace b3img {

/// Spectrum of the image of the first braid generator, plus the discrete
/// parameter that pins down the representation: gamma^2 in dimension 4 and
/// gamma = det(A)^{1/5} in dimension 5.
struct EigenSpec {
  int dim = 0;
  std::vector<RootOfUnity> eigenvalues;
  std::optional<RootOfUnity> gamma_squared;  // dim 4 only
  std::optional<RootOfUnity> gamma;          // dim 5 only

  static EigenSpec of(std::vector<RootOfUnity> eigenvalues);

  /// lcm(2, eigenvalue orders, parameter order).
  std::int64_t conductor() const;
  bool has_repeated_eigenvalue() const;
  RootOfUnity determinant() const;

  /// Image under zeta -> zeta^a, parameters transported.
  EigenSpec galois(std::int64_t a) const;
  /// chi * S, with gamma^2 -> chi^2 gamma^2 and gamma -> chi gamma.
  EigenSpec scaled(const RootOfUnity& chi) const;

  std::string to_string() const;

  bool operator==(const EigenSpec&) const = default;
};

/// Eigenvalues {s, -s, r, -r} written in the normal form diag(1, -1, u, -u) / s,
/// u = r/s. Among the two admissible choices of u (u and -u) the one of odd order
/// is taken when it exists, otherwise the one with the smaller exponent.
struct BlockNormalForm {
  RootOfUnity s;
  RootOfUnity r;
  RootOfUnity u;
};

/// Returns the normal form when the spectrum is two disjoint +-pairs.
std::optional<BlockNormalForm> block_normal_form(const std::vector<RootOfUnity>& eigenvalues);

/// e^{pi i x} for e^{2 pi i x}, x in [0,1).
RootOfUnity principal_sqrt(const RootOfUnity& z);

/// Dimension-4 parameter from a sign. For +-pair spectra the sign is D in the
/// block normal form (D = gamma^2 / (s * -r)); otherwise D = sign * sqrt(l2 l3 / (l1 l4))
/// for the listed order, principal branch. In both cases gamma^2 = D * l1 * l4.
RootOfUnity gamma_squared_from_d_sign(const std::vector<RootOfUnity>& eigenvalues, int sign);
/// Inverse of gamma_squared_from_d_sign; nullopt if gamma^2 is not of that shape.
std::optional<int> d_sign_of(const EigenSpec& spec);
/// Convenience: dimension-4 spec with the parameter set from a sign.
EigenSpec with_d_sign(EigenSpec spec, int sign);

enum class ValidationStatus { Valid, RepeatedEigenvalues, ExistenceFails, UnknownConditions };

struct ValidationWitness {
  std::string condition;     // which polynomial vanished
  std::vector<int> indices;  // 0-based eigenvalue indices
};

struct ValidationReport {
  ValidationStatus status = ValidationStatus::Valid;
  std::vector<ValidationWitness> witnesses;
};

std::string to_string(ValidationStatus status);

/// Existence/irreducibility conditions. Dimension 4 requires gamma_squared
/// (MissingParam otherwise). Dimensions 2 and 5 have no polynomial conditions.
ValidationReport validate_spec(const EigenSpec& spec);

struct GeneratorPair {
  CycMatrix a;
  CycMatrix b;
};

/// Spectrum {1, theta, phi}: A upper triangular, B lower triangular.
GeneratorPair build_d3(const RootOfUnity& theta, const RootOfUnity& phi);
/// Block-imprimitive dimension-4 pair in u = r/s and D = +-1.
GeneratorPair build_d4_block(const RootOfUnity& u, int d_sign);
/// Spin representation pair for so7 at q = e^{pi i / ell}, D = +q^4 only.
GeneratorPair build_so7(std::int64_t ell, int d_sign = +1);
/// Spin representation pair for so9 at q = e^{pi i / ell}, gamma = q^12.
GeneratorPair build_so9(std::int64_t ell);

}  // namespace b3img
