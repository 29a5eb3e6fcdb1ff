#include "ncqm/darboux.hpp"
#include "ncqm/errors.hpp"
#include "ncqm/star.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace ncqm;
using ncqm::testing::kind_of;

namespace {

const SectorLabel kGeneric{1, Rational(1, 2), Rational(1, 3)};

PolySymbol x() { return PolySymbol::variable(0); }
PolySymbol y() { return PolySymbol::variable(1); }
PolySymbol px() { return PolySymbol::variable(2); }
PolySymbol py() { return PolySymbol::variable(3); }

PolySymbol one() { return PolySymbol::constant(GaussianRational(1)); }

GaussianRational imaginary(Rational value) { return {0, std::move(value)}; }

}  // namespace

TEST_SUITE("star") {

TEST_CASE("gaussian rational arithmetic and rendering") {
  const GaussianRational a{Rational(1, 2), Rational(-1, 3)};
  const GaussianRational b{0, 1};
  CHECK(a * b == GaussianRational{Rational(1, 3), Rational(1, 2)});
  CHECK(b * b == GaussianRational(-1));
  CHECK(a + (-a) == GaussianRational());
  CHECK((a - a).is_zero());

  CHECK(to_string(GaussianRational(Rational(3, 4))) == "3/4");
  CHECK(to_string(imaginary(Rational(1, 4))) == "1/4i");
  CHECK(to_string(GaussianRational{1, Rational(-1, 2)}) == "1-1/2i");
  CHECK(to_string(GaussianRational()) == "0");
}

TEST_CASE("polynomial symbol basics") {
  CHECK(PolySymbol().is_zero());
  CHECK((x() - x()).is_zero());
  CHECK(x().degree() == 1);
  CHECK((x() * y() * py()).degree() == 3);
  CHECK(PolySymbol::constant(GaussianRational(5)).degree() == 0);

  const PolySymbol m = PolySymbol::monomial({2, 0, 1, 0}, GaussianRational(Rational(1, 2)));
  CHECK(m == x() * x() * px().scaled(GaussianRational(Rational(1, 2))));

  // d/dx (x^2 p_x) = 2 x p_x, d/dp_x (x^2 p_x) = x^2.
  const PolySymbol f = PolySymbol::monomial({2, 0, 1, 0}, GaussianRational(1));
  CHECK(f.derivative(0) == PolySymbol::monomial({1, 0, 1, 0}, GaussianRational(2)));
  CHECK(f.derivative(2) == PolySymbol::monomial({2, 0, 0, 0}, GaussianRational(1)));
  CHECK(f.derivative(1).is_zero());

  CHECK((x() + y()) * (x() - y()) == x() * x() - y() * y());
}

TEST_CASE("polynomial text rendering") {
  CHECK(x().text() == "x");
  CHECK((x() * y() + one()).text() == "1 + x*y");
  CHECK(PolySymbol::monomial({0, 2, 0, 1}, imaginary(Rational(1, 4))).text() ==
        "(1/4i)*y^2*p_y");
  CHECK(PolySymbol().text() == "0");
}

TEST_CASE("moyal product worked examples") {
  const CommutatorMatrix omega = omega_nc(kGeneric);
  SUBCASE("x * y picks up i theta / 2") {
    const PolySymbol product = moyal_star(x(), y(), omega);
    CHECK(product == x() * y() + PolySymbol::constant(imaginary(Rational(1, 4))));
  }
  SUBCASE("constants are the unit") {
    std::mt19937_64 rng(81);
    for (int i = 0; i < 20; ++i) {
      const PolySymbol g = testing::random_symbol(rng);
      CHECK(moyal_star(one(), g, omega) == g);
      CHECK(moyal_star(g, one(), omega) == g);
    }
  }
  SUBCASE("a symbol with itself has no correction at degree one") {
    CHECK(moyal_star(x(), x(), omega) == x() * x());
    CHECK(moyal_star(px(), px(), omega) == px() * px());
  }
  SUBCASE("vanishing Omega collapses to the pointwise product") {
    const CommutatorMatrix zero{RatMatrix(4, 4)};
    std::mt19937_64 rng(82);
    for (int i = 0; i < 20; ++i) {
      const PolySymbol f = testing::random_symbol(rng);
      const PolySymbol g = testing::random_symbol(rng);
      CHECK(moyal_star(f, g, zero) == f * g);
    }
  }
}

TEST_CASE("star commutator recovers i Omega on coordinates") {
  const CommutatorMatrix omega = omega_nc(kGeneric);
  CHECK(star_commutator(x(), y(), omega) ==
        PolySymbol::constant(imaginary(Rational(1, 2))));
  CHECK(star_commutator(px(), py(), omega) ==
        PolySymbol::constant(imaginary(Rational(1, 3))));
  CHECK(star_commutator(x(), px(), omega) == PolySymbol::constant(imaginary(1)));
  CHECK(star_commutator(x(), py(), omega).is_zero());

  const CommutatorMatrix ccr = omega_ccr(1, 2);
  CHECK(star_commutator(x(), y(), ccr).is_zero());
  CHECK(star_commutator(x(), px(), ccr) == PolySymbol::constant(imaginary(1)));

  std::mt19937_64 rng(83);
  for (int i = 0; i < 50; ++i) {
    const CommutatorMatrix random_omega{testing::random_antisymmetric(rng, 4)};
    const std::size_t a = rng() % 4;
    const std::size_t b = rng() % 4;
    CHECK(star_commutator(PolySymbol::variable(a), PolySymbol::variable(b), random_omega) ==
          PolySymbol::constant(imaginary(random_omega(a, b))));
  }
}

TEST_CASE("moyal product is associative") {
  std::mt19937_64 rng(84);
  for (int i = 0; i < 100; ++i) {
    const CommutatorMatrix omega{testing::random_antisymmetric(rng, 4)};
    const PolySymbol f = testing::random_symbol(rng);
    const PolySymbol g = testing::random_symbol(rng);
    const PolySymbol h = testing::random_symbol(rng);
    CHECK(moyal_star(moyal_star(f, g, omega), h, omega) ==
          moyal_star(f, moyal_star(g, h, omega), omega));
  }
}

TEST_CASE("moyal product degree bound") {
  std::mt19937_64 rng(85);
  for (int i = 0; i < 50; ++i) {
    const CommutatorMatrix omega{testing::random_antisymmetric(rng, 4)};
    const PolySymbol f = testing::random_symbol(rng);
    const PolySymbol g = testing::random_symbol(rng);
    const PolySymbol product = moyal_star(f, g, omega);
    if (!product.is_zero()) CHECK(product.degree() <= f.degree() + g.degree());
  }
}

TEST_CASE("star commutator reduces to the poisson bracket at low degree") {
  // Third derivatives vanish for degree <= 2, and the k = 2 terms cancel in
  // the commutator, so [f, g]_* = i {f, g} exactly on quadratics.
  std::mt19937_64 rng(86);
  for (int i = 0; i < 50; ++i) {
    const CommutatorMatrix omega{testing::random_antisymmetric(rng, 4)};
    const PolySymbol f = testing::random_symbol(rng, 3, 2);
    const PolySymbol g = testing::random_symbol(rng, 3, 2);
    CHECK(star_commutator(f, g, omega) ==
          poisson_bracket(f, g, omega).scaled(imaginary(1)));
  }
}

TEST_CASE("poisson bracket worked example") {
  const CommutatorMatrix omega = omega_nc(kGeneric);
  CHECK(poisson_bracket(x(), y(), omega) ==
        PolySymbol::constant(GaussianRational(Rational(1, 2))));
  CHECK(poisson_bracket(x() * x(), px(), omega) == x().scaled(GaussianRational(2)));
}

TEST_CASE("pullback substitutes rows of the realization matrix") {
  const RealizationMatrix t = intrinsic_canonicalization(kGeneric).matrix;
  SUBCASE("worked example") {
    CHECK(pullback_linear(px(), t) ==
          px().scaled(GaussianRational(Rational(6, 5))) -
              y().scaled(GaussianRational(Rational(2, 5))));
    CHECK(pullback_linear(x(), t) == x());
  }
  SUBCASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(87);
    for (int i = 0; i < 30; ++i) {
      const PolySymbol f = testing::random_symbol(rng);
      const PolySymbol g = testing::random_symbol(rng);
      CHECK(pullback_linear(f * g, t) ==
            pullback_linear(f, t) * pullback_linear(g, t));
      CHECK(pullback_linear(f + g, t) ==
            pullback_linear(f, t) + pullback_linear(g, t));
    }
  }
  SUBCASE("dimension mismatch") {
    const RealizationMatrix small = RealizationMatrix::identity(2);
    CHECK(kind_of([&] { (void)pullback_linear(x(), small); }) ==
          ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("pullback intertwines the two star products") {
  std::mt19937_64 rng(88);
  for (int i = 0; i < 30; ++i) {
    const RealizationMatrix t{testing::random_invertible(rng, 4)};
    const CommutatorMatrix omega{testing::random_antisymmetric(rng, 4)};
    const CommutatorMatrix pushed = push_commutators(t, omega);
    const PolySymbol f = testing::random_symbol(rng);
    const PolySymbol g = testing::random_symbol(rng);
    CHECK(pullback_linear(moyal_star(f, g, pushed), t) ==
          moyal_star(pullback_linear(f, t), pullback_linear(g, t), omega));
  }
}

TEST_CASE("moyal product requires a 4x4 commutator matrix") {
  CHECK(kind_of([] { (void)moyal_star(PolySymbol::variable(0), PolySymbol::variable(1),
                                      omega_ccr(1, 3)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("shadow report") {
  SUBCASE("noncommutative label") {
    const ShadowReport report = shadow_report(kGeneric);
    CHECK(report.label == kGeneric);
    CHECK(report.intertwining_verified);
    CHECK(report.samples == 8);
    CHECK_FALSE(report.sectors_equivalent);
    CHECK_FALSE(report.narrative.empty());
  }
  SUBCASE("quotient sector") {
    const ShadowReport report = shadow_report({Rational(3, 2), 0, 0});
    CHECK(report.intertwining_verified);
    CHECK(report.sectors_equivalent);
  }
  SUBCASE("degenerate label is rejected") {
    CHECK(kind_of([] { (void)shadow_report({1, 2, Rational(1, 2)}); }) ==
          ErrorKind::DegenerateLabel);
    CHECK(kind_of([] { (void)shadow_report({0, 1, 1}); }) == ErrorKind::ZeroHbar);
  }
  SUBCASE("report is deterministic") {
    CHECK(shadow_report(kGeneric) == shadow_report(kGeneric));
  }
}

}  // TEST_SUITE
