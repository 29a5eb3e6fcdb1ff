#include "ncqm/group.hpp"

#include <utility>

namespace ncqm {

namespace {

const Rational kHalf{1, 2};

std::string label_text(const SectorLabel& label) {
  return "(" + to_string(label.hbar) + ", " + to_string(label.theta) + ", " +
         to_string(label.b_in) + ")";
}

}  // namespace

LieElement bracket(const LieElement& u, const LieElement& v) {
  LieElement w{};
  w.z1 = (u.q1 * v.p1 - u.p1 * v.q1) + (u.q2 * v.p2 - u.p2 * v.q2);
  w.z2 = u.q1 * v.q2 - u.q2 * v.q1;
  w.z3 = u.p1 * v.p2 - u.p2 * v.p1;
  return w;
}

GroupElement group_identity() { return GroupElement{}; }

GroupElement bch_multiply(const GroupElement& g, const GroupElement& h) {
  GroupElement out;
  out.q1 = g.q1 + h.q1;
  out.q2 = g.q2 + h.q2;
  out.p1 = g.p1 + h.p1;
  out.p2 = g.p2 + h.p2;
  out.theta = g.theta + h.theta +
              kHalf * ((g.q1 * h.p1 - g.p1 * h.q1) + (g.q2 * h.p2 - g.p2 * h.q2));
  out.phi = g.phi + h.phi + kHalf * (g.q1 * h.q2 - g.q2 * h.q1);
  out.psi = g.psi + h.psi + kHalf * (g.p1 * h.p2 - g.p2 * h.p1);
  return out;
}

GroupElement group_inverse(const GroupElement& g) {
  return GroupElement{-g.theta, -g.phi, -g.psi, -g.q1, -g.q2, -g.p1, -g.p2};
}

WeylHeisenbergElement quotient_project(const GroupElement& g) {
  return WeylHeisenbergElement{g.theta, g.q1, g.q2, g.p1, g.p2};
}

WeylHeisenbergElement wh_multiply(const WeylHeisenbergElement& g,
                                  const WeylHeisenbergElement& h) {
  WeylHeisenbergElement out;
  out.q1 = g.q1 + h.q1;
  out.q2 = g.q2 + h.q2;
  out.p1 = g.p1 + h.p1;
  out.p2 = g.p2 + h.p2;
  out.theta = g.theta + h.theta +
              kHalf * ((g.q1 * h.p1 - g.p1 * h.q1) + (g.q2 * h.p2 - g.p2 * h.q2));
  return out;
}

Functional coadjoint_act(const GroupElement& g, const Functional& l) {
  // (Ad*_g l)(Y) = l(Ad_{g^-1} Y) = l(Y - [x, Y]) for g = exp(x), since the
  // algebra is step-two. Only the central values of l see the brackets:
  //   [x, X1] = -p1 Z1 - q2 Z2        [x, P1] =  q1 Z1 - p2 Z3
  //   [x, X2] = -p2 Z1 + q1 Z2        [x, P2] =  q2 Z1 + p1 Z3
  Functional out = l;
  out.b1 = l.b1 + g.p1 * l.a1 + g.q2 * l.a2;
  out.b2 = l.b2 + g.p2 * l.a1 - g.q1 * l.a2;
  out.c1 = l.c1 - g.q1 * l.a1 + g.p2 * l.a3;
  out.c2 = l.c2 - g.q2 * l.a1 - g.p1 * l.a3;
  return out;
}

OrbitData orbit_data(const Functional& l) {
  // B_l(u, v) = l([u, v]) on the noncentral basis (X1, X2, P1, P2) depends
  // on the central values alone and lands in the omega_nc shape with
  // (hbar, theta, hbar*b_in) read off as (a1, a2, a3).
  RatMatrix b(4, 4);
  b(0, 1) = l.a2;
  b(1, 0) = -l.a2;
  b(0, 2) = l.a1;
  b(2, 0) = -l.a1;
  b(1, 3) = l.a1;
  b(3, 1) = -l.a1;
  b(2, 3) = l.a3;
  b(3, 2) = -l.a3;

  OrbitData data{b.rank(), CommutatorMatrix(std::move(b)), std::nullopt};
  if (l.a1 != 0) {
    data.label = SectorLabel{l.a1, l.a2, l.a3 / l.a1};
  }
  return data;
}

bool factors_through_quotient(const SectorLabel& label) {
  const CentralCharacterVector chi = central_character(label);
  return chi.alpha2 == 0 && chi.alpha3 == 0;
}

std::string_view equivalence_status_name(EquivalenceStatus status) {
  switch (status) {
    case EquivalenceStatus::Equivalent:
      return "Equivalent";
    case EquivalenceStatus::Inequivalent:
      return "Inequivalent";
    case EquivalenceStatus::Unsupported:
      return "Unsupported";
  }
  return "Unsupported";
}

EquivalenceVerdict decide_equivalence(const SectorLabel& a, const SectorLabel& b) {
  // Supported strata: regular labels (hbar != 0, kappa != 0). The quotient
  // sector (theta = b_in = 0, hbar != 0) has kappa = hbar, hence is regular.
  if (!a.is_regular() || !b.is_regular()) {
    const SectorLabel& off = !a.is_regular() ? a : b;
    std::string why = off.hbar == 0 ? "hbar = 0" : "kappa = 0";
    return EquivalenceVerdict{
        EquivalenceStatus::Unsupported,
        "label " + label_text(off) + " lies off the classified strata (" + why + ")"};
  }
  const CentralCharacterVector chi_a = central_character(a);
  const CentralCharacterVector chi_b = central_character(b);
  if (chi_a == chi_b) {
    return EquivalenceVerdict{
        EquivalenceStatus::Equivalent,
        "central characters coincide: (" + to_string(chi_a.alpha1) + ", " +
            to_string(chi_a.alpha2) + ", " + to_string(chi_a.alpha3) + ")"};
  }
  return EquivalenceVerdict{
      EquivalenceStatus::Inequivalent,
      "central characters differ: (" + to_string(chi_a.alpha1) + ", " +
          to_string(chi_a.alpha2) + ", " + to_string(chi_a.alpha3) + ") vs (" +
          to_string(chi_b.alpha1) + ", " + to_string(chi_b.alpha2) + ", " +
          to_string(chi_b.alpha3) + ")"};
}

}  // namespace ncqm
