#include "ncqm/sector.hpp"

#include "ncqm/errors.hpp"

#include <string>
#include <vector>

namespace ncqm {

namespace {

void require_even_positive_dim(const RatMatrix& entries, const char* what) {
  if (!entries.is_square() || entries.rows() == 0 || entries.rows() % 2 != 0) {
    throw DomainError(ErrorKind::UnsupportedDimension,
                      std::string(what) + " requires an even positive dimension, got " +
                          std::to_string(entries.rows()) + "x" +
                          std::to_string(entries.cols()));
  }
}

}  // namespace

CommutatorMatrix::CommutatorMatrix(RatMatrix entries) : entries_(std::move(entries)) {
  require_even_positive_dim(entries_, "a commutator matrix");
  if (!entries_.is_antisymmetric()) {
    throw DomainError(ErrorKind::NotAntisymmetric, "commutator matrix entries must satisfy Omega_ab = -Omega_ba");
  }
}

RealizationMatrix::RealizationMatrix(RatMatrix entries) : entries_(std::move(entries)) {
  require_even_positive_dim(entries_, "a realization matrix");
  if (entries_.determinant() == 0) {
    throw DomainError(ErrorKind::SingularMatrix, "realization matrix must be invertible");
  }
}

RealizationMatrix RealizationMatrix::identity(std::size_t dim) {
  return RealizationMatrix(RatMatrix::identity(dim));
}

RealizationMatrix RealizationMatrix::inverse() const {
  return RealizationMatrix(entries_.inverse());
}

RealizationMatrix RealizationMatrix::operator*(const RealizationMatrix& other) const {
  return RealizationMatrix(entries_ * other.entries());
}

CommutatorMatrix omega_nc(const SectorLabel& label) {
  RatMatrix m(4, 4);
  m(0, 1) = label.theta;
  m(0, 2) = label.hbar;
  m(1, 3) = label.hbar;
  m(2, 3) = label.hbar * label.b_in;
  m(1, 0) = -m(0, 1);
  m(2, 0) = -m(0, 2);
  m(3, 1) = -m(1, 3);
  m(3, 2) = -m(2, 3);
  return CommutatorMatrix(std::move(m));
}

CommutatorMatrix omega_ccr(const Rational& hbar, std::size_t degrees) {
  if (degrees == 0) {
    throw DomainError(ErrorKind::UnsupportedDimension, "degrees must be positive");
  }
  RatMatrix m(2 * degrees, 2 * degrees);
  for (std::size_t i = 0; i < degrees; ++i) {
    m(i, degrees + i) = hbar;
    m(degrees + i, i) = -hbar;
  }
  return CommutatorMatrix(std::move(m));
}

namespace {

// Expansion along the first remaining row:
// Pf(A) = sum_j (-1)^j a_{1j} Pf(A with rows/cols 1 and j removed).
Rational pfaffian_on(const RatMatrix& m, std::vector<std::size_t> idx) {
  if (idx.empty()) return Rational(1);
  const std::size_t first = idx.front();
  Rational result = 0;
  int sign = 1;
  for (std::size_t k = 1; k < idx.size(); ++k, sign = -sign) {
    const Rational& entry = m(first, idx[k]);
    if (entry != 0) {
      std::vector<std::size_t> rest;
      rest.reserve(idx.size() - 2);
      for (std::size_t l = 1; l < idx.size(); ++l) {
        if (l != k) rest.push_back(idx[l]);
      }
      result += sign * entry * pfaffian_on(m, std::move(rest));
    }
  }
  return result;
}

}  // namespace

Rational pfaffian(const CommutatorMatrix& omega) {
  if (omega.dim() > 8) {
    throw DomainError(ErrorKind::UnsupportedDimension,
                      "pfaffian supports dimensions 2..8, got " + std::to_string(omega.dim()));
  }
  std::vector<std::size_t> idx(omega.dim());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_on(omega.entries(), std::move(idx));
}

CommutatorMatrix push_commutators(const RealizationMatrix& s, const CommutatorMatrix& omega) {
  if (s.dim() != omega.dim()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "realization dim " + std::to_string(s.dim()) +
                          " does not match commutator dim " + std::to_string(omega.dim()));
  }
  return CommutatorMatrix(s.entries() * omega.entries() * s.entries().transpose());
}

CentralCharacterVector central_character(const SectorLabel& label) {
  return CentralCharacterVector{label.hbar, label.theta, label.hbar * label.b_in};
}

bool conjugation_compatible(const CommutatorMatrix& omega_a, const CommutatorMatrix& omega_b) {
  if (omega_a.dim() != omega_b.dim()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "commutator dims differ: " + std::to_string(omega_a.dim()) + " vs " +
                          std::to_string(omega_b.dim()));
  }
  return omega_a.entries() == omega_b.entries();
}

}  // namespace ncqm
