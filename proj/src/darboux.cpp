#include "ncqm/darboux.hpp"

#include "ncqm/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <utility>

namespace ncqm {

namespace {

/// B(u, v) = u Omega v^T for row vectors u, v.
Rational pairing(const std::vector<Rational>& u, const RatMatrix& omega,
                 const std::vector<Rational>& v) {
  Rational acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      acc += u[i] * omega(i, j) * v[j];
    }
  }
  return acc;
}

RatMatrix canonical_j(std::size_t dim, const Rational& hbar) {
  RatMatrix j(dim, dim);
  const std::size_t n = dim / 2;
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = hbar;
    j(n + i, i) = -hbar;
  }
  return j;
}

}  // namespace

QuadraticForm::QuadraticForm(RatMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0 || entries_.rows() % 2 != 0) {
    throw DomainError(ErrorKind::UnsupportedDimension,
                      "quadratic form requires even positive dimension");
  }
  if (!entries_.is_symmetric()) {
    throw DomainError(ErrorKind::NotSymmetric, "quadratic form matrix must be symmetric");
  }
}

QuadraticForm QuadraticForm::identity(std::size_t dim) {
  return QuadraticForm(RatMatrix::identity(dim));
}

bool QuadraticForm::is_positive_definite() const {
  for (std::size_t k = 1; k <= entries_.rows(); ++k) {
    RatMatrix leading(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) leading(i, j) = entries_(i, j);
    }
    if (leading.determinant() <= 0) return false;
  }
  return true;
}

DarbouxMap canonicalize(const CommutatorMatrix& omega, const Rational& hbar) {
  if (hbar == 0) {
    throw DomainError(ErrorKind::ZeroHbar, "canonical scale hbar must be nonzero");
  }
  if (pfaffian(omega) == 0) {
    throw DomainError(ErrorKind::DegenerateOmega,
                      "commutator matrix is degenerate (Pfaffian vanishes)");
  }

  const std::size_t dim = omega.dim();
  const std::size_t n = dim / 2;
  const RatMatrix& w = omega.entries();

  std::vector<std::vector<Rational>> pool;
  pool.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rational> e(dim, Rational(0));
    e[i] = 1;
    pool.push_back(std::move(e));
  }

  std::vector<std::vector<Rational>> positions, momenta;
  while (!pool.empty()) {
    std::vector<Rational> u = std::move(pool.front());
    pool.erase(pool.begin());

    std::size_t partner = pool.size();
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (pairing(u, w, pool[k]) != 0) {
        partner = k;
        break;
      }
    }
    if (partner == pool.size()) {
      // Unreachable after the Pfaffian gate: the restricted form stays
      // nondegenerate at every step of symplectic Gram-Schmidt.
      throw DomainError(ErrorKind::DegenerateOmega,
                        "no symplectic partner found for an unpaired vector");
    }
    std::vector<Rational> v = std::move(pool[partner]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));

    const Rational scale = hbar / pairing(u, w, v);
    for (auto& c : v) c *= scale;

    for (auto& rest : pool) {
      const Rational cu = pairing(v, w, rest) / hbar;
      const Rational cv = pairing(u, w, rest) / hbar;
      if (cu == 0 && cv == 0) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        rest[i] += cu * u[i] - cv * v[i];
      }
    }

    positions.push_back(std::move(u));
    momenta.push_back(std::move(v));
  }

  RatMatrix t(dim, dim);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < dim; ++i) {
      t(k, i) = positions[k][i];
      t(n + k, i) = momenta[k][i];
    }
  }
  return DarbouxMap{omega, hbar, RealizationMatrix(std::move(t))};
}

DarbouxMap intrinsic_canonicalization(const SectorLabel& label) {
  const Rational kappa = label.kappa();
  if (label.hbar == 0 || kappa == 0) {
    throw DomainError(ErrorKind::DegenerateLabel,
                      "intrinsic canonicalization needs hbar != 0 and kappa != 0");
  }
  const Rational& h = label.hbar;
  const Rational ratio = h / kappa;
  RatMatrix t = RatMatrix::from_rows({
      {1, 0, 0, 0},
      {0, 1, -label.theta / h, 0},
      {0, -ratio * label.b_in, ratio, 0},
      {0, 0, 0, ratio},
  });
  return DarbouxMap{omega_nc(label), h, RealizationMatrix(std::move(t))};
}

bool is_darboux_map(const RealizationMatrix& t, const CommutatorMatrix& omega,
                    const Rational& hbar) {
  if (t.dim() != omega.dim()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "realization and commutator dimensions differ");
  }
  const RatMatrix pushed = t.entries() * omega.entries() * t.entries().transpose();
  return pushed == canonical_j(omega.dim(), hbar);
}

QuadraticForm transform_quadratic(const QuadraticForm& m, const DarbouxMap& t) {
  if (m.dim() != t.matrix.dim()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "quadratic form and Darboux map dimensions differ");
  }
  const RatMatrix tinv = t.matrix.inverse().entries();
  return QuadraticForm(tinv.transpose() * m.entries() * tinv);
}

SpectrumResult williamson_frequencies(const QuadraticForm& m, const CommutatorMatrix& omega) {
  if (m.dim() != omega.dim()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "quadratic form and commutator dimensions differ");
  }
  if (!m.is_positive_definite()) {
    throw DomainError(ErrorKind::NotPositiveDefinite,
                      "quadratic form must be positive-definite");
  }
  if (omega.entries().determinant() == 0) {
    throw DomainError(ErrorKind::DegenerateOmega,
                      "commutator matrix is degenerate (Pfaffian vanishes)");
  }

  const std::size_t dim = omega.dim();
  const RatMatrix product = omega.entries() * m.entries();
  Eigen::MatrixXd a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(product(i, j));
    }
  }

  const Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  std::vector<double> moduli;
  moduli.reserve(dim);
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    moduli.push_back(std::abs(solver.eigenvalues()[k]));
  }
  std::sort(moduli.begin(), moduli.end());

  // The eigenvalues of Omega * M come in pairs +-i omega_k, so the sorted
  // moduli repeat each frequency twice; average the mates.
  SpectrumResult result;
  result.tolerance = 1e-9;
  result.frequencies.reserve(dim / 2);
  for (std::size_t k = 0; k + 1 < moduli.size(); k += 2) {
    result.frequencies.push_back((moduli[k] + moduli[k + 1]) / 2.0);
  }
  return result;
}

double quadratic_spectrum(const SpectrumResult& freqs, const std::vector<std::uint64_t>& quanta) {
  if (freqs.frequencies.size() != quanta.size()) {
    throw DomainError(ErrorKind::LengthMismatch,
                      "one occupation number is required per frequency");
  }
  double energy = 0.0;
  for (std::size_t k = 0; k < quanta.size(); ++k) {
    energy += freqs.frequencies[k] * (static_cast<double>(quanta[k]) + 0.5);
  }
  return energy;
}

ReductionVerdict reduction_verdict(const SectorLabel& label) {
  if (label.hbar == 0) {
    throw DomainError(ErrorKind::ZeroHbar, "reduction verdict needs hbar != 0");
  }
  const SectorLabel companion{label.hbar, 0, 0};
  const Rational kappa = label.kappa();

  ReductionVerdict verdict;
  verdict.darboux_exists = kappa != 0;
  verdict.conjugation_possible =
      conjugation_compatible(omega_nc(label), omega_nc(companion));
  verdict.sectors_equivalent =
      decide_equivalence(label, companion).status == EquivalenceStatus::Equivalent;

  std::string text;
  if (verdict.darboux_exists) {
    text = "a Darboux map onto the canonical pair frame exists (kappa = " + to_string(kappa) +
           ")";
  } else {
    text = "no Darboux map exists (kappa = 0)";
  }
  text += verdict.conjugation_possible
              ? "; the commutator matrices already coincide with the commutative frame"
              : "; componentwise conjugation onto the commutative frame is impossible "
                "(the commutator matrices differ)";
  text += verdict.sectors_equivalent
              ? "; the sectors are kinematically equivalent (equal central characters)."
              : "; the sectors remain kinematically inequivalent (distinct central "
                "characters).";
  verdict.narrative = std::move(text);
  return verdict;
}

}  // namespace ncqm
