#pragma once

#include "ncqm/sector.hpp"

namespace ncqm {

/// Parameters of the generalized Bopp-shift family S(r,s).
struct BoppParams {
  Rational r;
  Rational s;

  bool operator==(const BoppParams&) const = default;
};

/// Admissible iff hbar - r * theta * b_in != 0.
bool admissible(const SectorLabel& label, const BoppParams& params);

/// a = (1-r) * hbar * b_in / (hbar - r * theta * b_in).
/// Throws InadmissibleParams when the denominator vanishes.
Rational a_coefficient(const SectorLabel& label, const Rational& r);

/// A realization eta = S(r,s) xi of the NCQM quadruple in terms of a CCR
/// quadruple; bopp_matrix guarantees push_commutators(matrix, hbar J) = omega_nc(label).
struct BoppRealization {
  SectorLabel label;
  BoppParams params;
  RealizationMatrix matrix;
};

/// The 4x4 matrix S(r,s) in the ordered basis (x, y, p_x, p_y).
/// Fails fast off the regular stratum: ZeroHbar when hbar = 0, DegenerateLabel
/// when kappa = 0 (the matrix would be singular), InadmissibleParams otherwise.
BoppRealization bopp_matrix(const SectorLabel& label, const BoppParams& params);

/// True iff S pushes the CCR matrix hbar J onto omega_nc(label), exactly.
/// False signals a corrupted realization.
bool verify_sector_invariance(const BoppRealization& realization);

/// G = S(r',s') * S(r,s)^-1, the linear relation between two realizations of
/// the same sector; G preserves omega_nc(label) under pushforward.
RealizationMatrix realization_transfer(const BoppRealization& from, const BoppParams& to_params);

/// Same, between two existing realizations. Throws LabelMismatch when the
/// realizations belong to different sectors.
RealizationMatrix realization_transfer(const BoppRealization& from, const BoppRealization& to);

}  // namespace ncqm
