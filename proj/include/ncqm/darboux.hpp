#pragma once

#include "ncqm/group.hpp"
#include "ncqm/sector.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ncqm {

/// A linear change of operator frame zeta = T eta with T Omega T^T = hbar J,
/// J the canonical form on (positions..., momenta...).
struct DarbouxMap {
  CommutatorMatrix source;   // the Omega being canonicalized
  Rational hbar;             // target scale
  RealizationMatrix matrix;  // T

  bool operator==(const DarbouxMap&) const = default;
};

/// Coefficient matrix M of H = (1/2) eta^T M eta; construction validates
/// even positive dimension and exact symmetry.
class QuadraticForm {
 public:
  explicit QuadraticForm(RatMatrix entries);
  static QuadraticForm identity(std::size_t dim);

  std::size_t dim() const { return entries_.rows(); }
  const RatMatrix& entries() const { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  /// Exact positive-definiteness via leading principal minors.
  bool is_positive_definite() const;

  bool operator==(const QuadraticForm&) const = default;

 private:
  RatMatrix entries_;
};

struct SpectrumResult {
  std::vector<double> frequencies;  // sorted ascending, one per mode
  double tolerance;

  bool operator==(const SpectrumResult&) const = default;
};

struct ReductionVerdict {
  bool darboux_exists;
  bool conjugation_possible;
  bool sectors_equivalent;
  std::string narrative;

  bool operator==(const ReductionVerdict&) const = default;
};

/// Symplectic Gram-Schmidt over exact rationals. Pivot rule: pick the
/// lowest-index unpaired vector u, then the lowest-index v with B(u,v) != 0,
/// scale v alone so B(u,v) = hbar, then B-orthogonalize the remainder.
/// Deterministic, and the identity is a fixed point on an already-canonical
/// input. Dimensions 2..8.
DarbouxMap canonicalize(const CommutatorMatrix& omega, const Rational& hbar);

/// The explicit closed-form map: x' = X, y' = Y - (theta/hbar) Pi_x,
/// p'_x = (hbar/kappa)(Pi_x - b_in Y), p'_y = (hbar/kappa) Pi_y.
DarbouxMap intrinsic_canonicalization(const SectorLabel& label);

/// True iff T Omega T^T = hbar J exactly.
bool is_darboux_map(const RealizationMatrix& t, const CommutatorMatrix& omega,
                    const Rational& hbar);

/// Transport of the Hamiltonian coefficient matrix: M' = T^-T M T^-1, so that
/// (1/2) eta^T M eta = (1/2) zeta^T M' zeta under zeta = T eta.
QuadraticForm transform_quadratic(const QuadraticForm& m, const DarbouxMap& t);

/// Normal-mode frequencies: moduli of the eigenvalues of Omega * M, which pair
/// up as +-i omega_k. The one floating-point computation in the library; the
/// positive-definiteness gate stays exact. hbar is already inside Omega, so no
/// further hbar factor enters.
SpectrumResult williamson_frequencies(const QuadraticForm& m, const CommutatorMatrix& omega);

/// Sum_k omega_k (n_k + 1/2).
double quadratic_spectrum(const SpectrumResult& freqs, const std::vector<std::uint64_t>& quanta);

/// The three-way separation for a label against its commutative companion
/// (hbar, 0, 0): a Darboux map exists on the generic stratum, yet componentwise
/// conjugation is impossible and the sectors stay inequivalent.
ReductionVerdict reduction_verdict(const SectorLabel& label);

}  // namespace ncqm
