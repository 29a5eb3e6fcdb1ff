#pragma once

#include "ncqm/matrix.hpp"
#include "ncqm/rational.hpp"

#include <cstddef>

namespace ncqm {

/// The physical triple (hbar, theta, b_in) labelling an irreducible sector
/// on the regular stratum. Any triple is representable; regularity is a
/// queryable predicate, not a constructor constraint.
struct SectorLabel {
  Rational hbar;
  Rational theta;
  Rational b_in;

  /// kappa = hbar - theta * b_in; nonzero iff the commutator matrix is nondegenerate.
  Rational kappa() const { return hbar - theta * b_in; }
  bool is_regular() const { return hbar != 0 && kappa() != 0; }

  bool operator==(const SectorLabel&) const = default;
};

/// Scalars (alpha1, alpha2, alpha3) by which the three central directions act.
struct CentralCharacterVector {
  Rational alpha1;
  Rational alpha2;
  Rational alpha3;

  bool operator==(const CentralCharacterVector&) const = default;
};

/// Real antisymmetric matrix Omega with [eta_a, eta_b] = i Omega_ab.
/// Construction validates even positive dimension and exact antisymmetry.
class CommutatorMatrix {
 public:
  explicit CommutatorMatrix(RatMatrix entries);

  std::size_t dim() const { return entries_.rows(); }
  const RatMatrix& entries() const { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  bool operator==(const CommutatorMatrix&) const = default;

 private:
  RatMatrix entries_;
};

/// Invertible real matrix relating operator quadruples (Bopp S(r,s), Darboux T,
/// symplectic freedom M). Construction validates even dimension and det != 0.
class RealizationMatrix {
 public:
  explicit RealizationMatrix(RatMatrix entries);
  static RealizationMatrix identity(std::size_t dim);

  std::size_t dim() const { return entries_.rows(); }
  const RatMatrix& entries() const { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  RealizationMatrix inverse() const;
  RealizationMatrix operator*(const RealizationMatrix& other) const;
  Rational determinant() const { return entries_.determinant(); }

  bool operator==(const RealizationMatrix&) const = default;

 private:
  RatMatrix entries_;
};

// Basis ordering is fixed globally: (X, Y, Pi_x, Pi_y) for NCQM quadruples,
// (x, y, p_x, p_y) for CCR quadruples.

/// The 4x4 NCQM commutator matrix: Omega_12 = theta, Omega_13 = Omega_24 = hbar,
/// Omega_34 = hbar * b_in, antisymmetric completion.
CommutatorMatrix omega_nc(const SectorLabel& label);

/// hbar * J on 2*degrees variables ordered (positions..., momenta...).
CommutatorMatrix omega_ccr(const Rational& hbar, std::size_t degrees);

/// Pfaffian by recursive cofactor expansion; dims 2..8 only.
/// Pf^2 = det, and Pf(omega_nc(L)) = -hbar * (hbar - theta * b_in).
Rational pfaffian(const CommutatorMatrix& omega);

/// Pushforward of commutators under the linear recombination S: S * Omega * S^T.
CommutatorMatrix push_commutators(const RealizationMatrix& s, const CommutatorMatrix& omega);

/// (alpha1, alpha2, alpha3) = (hbar, theta, hbar * b_in) under the fixed
/// normalization [X1,P1] = [X2,P2] = Z1, [X1,X2] = Z2, [P1,P2] = Z3.
CentralCharacterVector central_character(const SectorLabel& label);

/// True iff the commutator matrices agree entrywise, the necessary condition
/// for a componentwise unitary conjugation between the quadruples.
bool conjugation_compatible(const CommutatorMatrix& omega_a, const CommutatorMatrix& omega_b);

}  // namespace ncqm
