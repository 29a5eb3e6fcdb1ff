#include "ncqm/bopp.hpp"

#include "ncqm/errors.hpp"

namespace ncqm {

bool admissible(const SectorLabel& label, const BoppParams& params) {
  return label.hbar - params.r * label.theta * label.b_in != 0;
}

Rational a_coefficient(const SectorLabel& label, const Rational& r) {
  const Rational denom = label.hbar - r * label.theta * label.b_in;
  if (denom == 0) {
    throw DomainError(ErrorKind::InadmissibleParams,
                      "r = hbar / (theta * b_in); the a-coefficient is undefined");
  }
  return (1 - r) * label.hbar * label.b_in / denom;
}

BoppRealization bopp_matrix(const SectorLabel& label, const BoppParams& params) {
  if (label.hbar == 0) {
    throw DomainError(ErrorKind::ZeroHbar, "bopp_matrix requires hbar != 0");
  }
  if (label.kappa() == 0) {
    throw DomainError(ErrorKind::DegenerateLabel,
                      "kappa = hbar - theta * b_in = 0: S(r,s) would be singular");
  }
  if (!admissible(label, params)) {
    throw DomainError(ErrorKind::InadmissibleParams,
                      "params (r,s) inadmissible: hbar - r * theta * b_in = 0");
  }

  const Rational& hbar = label.hbar;
  const Rational& theta = label.theta;
  const Rational& b_in = label.b_in;
  const Rational a = a_coefficient(label, params.r);
  const Rational theta_over_hbar = theta / hbar;

  RatMatrix m(4, 4);
  m(0, 0) = 1;
  m(0, 3) = -params.s * theta_over_hbar;
  m(1, 1) = 1;
  m(1, 2) = (1 - params.s) * theta_over_hbar;
  m(2, 1) = a;
  m(2, 2) = 1 - a * params.s * theta_over_hbar;
  m(3, 0) = -params.r * b_in;
  m(3, 3) = 1 - params.r * b_in * (1 - params.s) * theta_over_hbar;

  return BoppRealization{label, params, RealizationMatrix(std::move(m))};
}

bool verify_sector_invariance(const BoppRealization& realization) {
  const CommutatorMatrix pushed =
      push_commutators(realization.matrix, omega_ccr(realization.label.hbar, 2));
  return pushed == omega_nc(realization.label);
}

RealizationMatrix realization_transfer(const BoppRealization& from, const BoppParams& to_params) {
  const BoppRealization to = bopp_matrix(from.label, to_params);
  return to.matrix * from.matrix.inverse();
}

RealizationMatrix realization_transfer(const BoppRealization& from, const BoppRealization& to) {
  if (from.label != to.label) {
    throw DomainError(ErrorKind::LabelMismatch,
                      "realization transfer requires a shared sector label");
  }
  return to.matrix * from.matrix.inverse();
}

}  // namespace ncqm
