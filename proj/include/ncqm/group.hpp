#pragma once

#include "ncqm/sector.hpp"

#include <optional>
#include <string>

namespace ncqm {

// Exponential coordinates on the step-two nilpotent kinematical group with
// three-dimensional center Z1, Z2, Z3 and noncentral directions X1, X2, P1, P2.
// Structure constants: [X1,P1] = [X2,P2] = Z1, [X1,X2] = Z2, [P1,P2] = Z3,
// all other basis brackets zero.

struct LieElement {
  Rational z1, z2, z3;
  Rational q1, q2;  // along X1, X2
  Rational p1, p2;  // along P1, P2

  bool operator==(const LieElement&) const = default;
};

/// Bilinear, antisymmetric, purely central.
LieElement bracket(const LieElement& u, const LieElement& v);

struct GroupElement {
  Rational theta, phi, psi;  // central coordinates
  Rational q1, q2;
  Rational p1, p2;

  bool operator==(const GroupElement&) const = default;
};

GroupElement group_identity();

/// Step-two BCH: noncentral parts add, central parts pick up the half-pairings
/// theta'' = theta + theta' + (q.p' - p.q')/2, and likewise phi from q, psi from p.
GroupElement bch_multiply(const GroupElement& g, const GroupElement& h);

/// exp(x)^-1 = exp(-x): negate every coordinate.
GroupElement group_inverse(const GroupElement& g);

/// Weyl-Heisenberg coordinates (theta, q, p) with the induced quotient law.
struct WeylHeisenbergElement {
  Rational theta;
  Rational q1, q2;
  Rational p1, p2;

  bool operator==(const WeylHeisenbergElement&) const = default;
};

/// Forgets the two extra central coordinates; a surjective homomorphism with
/// kernel {(0, phi, psi, 0, 0)}.
WeylHeisenbergElement quotient_project(const GroupElement& g);

/// The Weyl-Heisenberg law with cocycle (q.p' - p.q')/2.
WeylHeisenbergElement wh_multiply(const WeylHeisenbergElement& g, const WeylHeisenbergElement& h);

/// Linear functional on the Lie algebra: values on (Z1,Z2,Z3) and (X1,X2,P1,P2).
struct Functional {
  Rational a1, a2, a3;
  Rational b1, b2;  // values on X1, X2
  Rational c1, c2;  // values on P1, P2

  bool operator==(const Functional&) const = default;
};

/// Coadjoint action Ad*_g l = l o Ad_{g^-1}; central values are invariant,
/// noncentral values shift by l evaluated on brackets with log g.
Functional coadjoint_act(const GroupElement& g, const Functional& l);

/// Kirillov data of the orbit through l: the 4x4 form B_l(u,v) = l([u,v]) on
/// the noncentral basis, its rank, and the recovered sector label when a1 != 0.
struct OrbitData {
  std::size_t rank;
  CommutatorMatrix kirillov;
  std::optional<SectorLabel> label;  // nullopt marks the degenerate case a1 = 0
};

OrbitData orbit_data(const Functional& l);

/// True iff the central character kills the two extra central directions
/// (alpha2 = alpha3 = 0), i.e. the sector factors through the quotient onto
/// the Weyl-Heisenberg group.
bool factors_through_quotient(const SectorLabel& label);

enum class EquivalenceStatus { Equivalent, Inequivalent, Unsupported };

std::string_view equivalence_status_name(EquivalenceStatus status);

struct EquivalenceVerdict {
  EquivalenceStatus status;
  std::string reason;
};

/// Kinematical equivalence decided at label level: on the supported strata
/// (hbar != 0 and kappa != 0), two sectors are equivalent iff their central
/// characters coincide. Anything off those strata is Unsupported.
EquivalenceVerdict decide_equivalence(const SectorLabel& a, const SectorLabel& b);

}  // namespace ncqm
