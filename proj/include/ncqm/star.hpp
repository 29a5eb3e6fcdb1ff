#pragma once

#include "ncqm/group.hpp"
#include "ncqm/sector.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace ncqm {

/// Element of Q(i): carrier for the imaginary unit in i*Omega_ab and the
/// Moyal coefficients (i/2)^k / k!.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  bool operator==(const GaussianRational&) const = default;
};

std::string to_string(const GaussianRational& value);

/// Polynomial in the four phase-space variables (x, y, p_x, p_y) with
/// Gaussian-rational coefficients. Terms are keyed by exponent 4-tuples in
/// graded-lexicographic order; zero coefficients are never stored.
class PolySymbol {
 public:
  using Exponents = std::array<std::uint32_t, 4>;

  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
      const std::uint64_t da = a[0] + a[1] + a[2] + a[3];
      const std::uint64_t db = b[0] + b[1] + b[2] + b[3];
      if (da != db) return da < db;
      return a < b;
    }
  };
  using TermMap = std::map<Exponents, GaussianRational, GradedLex>;

  static constexpr std::size_t kVariables = 4;
  static const std::array<std::string_view, kVariables>& variable_names();

  PolySymbol() = default;

  static PolySymbol constant(GaussianRational value);
  static PolySymbol variable(std::size_t index);
  static PolySymbol monomial(const Exponents& exponents, GaussianRational coefficient);

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for the zero polynomial.
  std::uint64_t degree() const;
  const TermMap& terms() const { return terms_; }

  PolySymbol operator+(const PolySymbol& o) const;
  PolySymbol operator-(const PolySymbol& o) const;
  PolySymbol operator*(const PolySymbol& o) const;
  PolySymbol operator-() const;
  PolySymbol scaled(const GaussianRational& c) const;

  PolySymbol derivative(std::size_t axis) const;

  /// Human-readable rendering in graded-lex term order, e.g. "x*y + (0+1/4i)".
  std::string text() const;

  bool operator==(const PolySymbol&) const = default;

 private:
  void add_term(const Exponents& exponents, const GaussianRational& coefficient);

  TermMap terms_;
};

/// The Moyal product for constant Omega:
/// f*g = sum_k (1/k!)(i/2)^k Omega^{a1 b1}...Omega^{ak bk}
///       (d_{a1}..d_{ak} f)(d_{b1}..d_{bk} g),
/// terminating at k = min(deg f, deg g). Omega must be 4x4.
PolySymbol moyal_star(const PolySymbol& f, const PolySymbol& g, const CommutatorMatrix& omega);

/// f*g - g*f; on coordinate symbols equals i * Omega_ab * 1.
PolySymbol star_commutator(const PolySymbol& f, const PolySymbol& g,
                           const CommutatorMatrix& omega);

/// {f, g}_Omega = Omega_ab (d_a f)(d_b g), the k = 1 kernel of the series.
PolySymbol poisson_bracket(const PolySymbol& f, const PolySymbol& g,
                           const CommutatorMatrix& omega);

/// f composed with T: substitute variable a by sum_b T(a,b) * variable b.
/// Intertwines the products: pullback(f *_{T Omega T^T} g, T) =
/// pullback(f, T) *_Omega pullback(g, T).
PolySymbol pullback_linear(const PolySymbol& f, const RealizationMatrix& t);

struct ShadowReport {
  SectorLabel label;
  bool intertwining_verified;
  std::size_t samples;
  bool sectors_equivalent;
  std::string narrative;

  bool operator==(const ShadowReport&) const = default;
};

/// Contrast of the coarse phase-space shadow with the sector classification:
/// the linear Darboux intertwiner identifies the star algebras of the label
/// and its commutative companion (hbar, 0, 0), yet the sectors themselves
/// are inequivalent away from theta = b_in = 0. Sampling is fixed-seed.
ShadowReport shadow_report(const SectorLabel& label);

}  // namespace ncqm
