#include "ncqm/errors.hpp"
#include "ncqm/group.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <array>

using namespace ncqm;

namespace {

LieElement basis_element(std::size_t index) {
  // Order: Z1, Z2, Z3, X1, X2, P1, P2.
  LieElement e{};
  Rational* slots[] = {&e.z1, &e.z2, &e.z3, &e.q1, &e.q2, &e.p1, &e.p2};
  *slots[index] = 1;
  return e;
}

bool is_zero(const LieElement& e) {
  return e == LieElement{};
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("defining brackets") {
  const LieElement x1 = basis_element(3);
  const LieElement x2 = basis_element(4);
  const LieElement p1 = basis_element(5);
  const LieElement p2 = basis_element(6);

  CHECK(bracket(x1, p1) == basis_element(0));  // Z1
  CHECK(bracket(x2, p2) == basis_element(0));  // Z1
  CHECK(bracket(x1, x2) == basis_element(1));  // Z2
  CHECK(bracket(p1, p2) == basis_element(2));  // Z3
  CHECK(is_zero(bracket(x1, p2)));
  CHECK(is_zero(bracket(x2, p1)));
}

TEST_CASE("center brackets to zero") {
  std::mt19937_64 rng(51);
  const LieElement z2 = basis_element(1);
  for (int i = 0; i < 20; ++i) {
    LieElement u{};
    u.q1 = testing::random_rational(rng);
    u.q2 = testing::random_rational(rng);
    u.p1 = testing::random_rational(rng);
    u.p2 = testing::random_rational(rng);
    u.z1 = testing::random_rational(rng);
    CHECK(is_zero(bracket(z2, u)));
    CHECK(is_zero(bracket(u, z2)));
  }
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 50; ++i) {
    LieElement u{}, v{}, w{};
    auto fill = [&](LieElement& e) {
      e.q1 = testing::random_rational(rng);
      e.q2 = testing::random_rational(rng);
      e.p1 = testing::random_rational(rng);
      e.p2 = testing::random_rational(rng);
    };
    fill(u);
    fill(v);
    fill(w);

    const LieElement uv = bracket(u, v);
    const LieElement vu = bracket(v, u);
    CHECK(uv.z1 == -vu.z1);
    CHECK(uv.z2 == -vu.z2);
    CHECK(uv.z3 == -vu.z3);

    LieElement vw_sum{};  // v + w
    vw_sum.q1 = v.q1 + w.q1;
    vw_sum.q2 = v.q2 + w.q2;
    vw_sum.p1 = v.p1 + w.p1;
    vw_sum.p2 = v.p2 + w.p2;
    const LieElement left = bracket(u, vw_sum);
    const LieElement right_v = bracket(u, v);
    const LieElement right_w = bracket(u, w);
    CHECK(left.z1 == right_v.z1 + right_w.z1);
    CHECK(left.z2 == right_v.z2 + right_w.z2);
    CHECK(left.z3 == right_v.z3 + right_w.z3);
  }
}

TEST_CASE("Jacobi identity over the basis") {
  // All brackets are central and the center brackets to zero, so each
  // double bracket vanishes separately; checked exhaustively anyway.
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = 0; b < 7; ++b) {
      for (std::size_t c = 0; c < 7; ++c) {
        const LieElement u = basis_element(a);
        const LieElement v = basis_element(b);
        const LieElement w = basis_element(c);
        const LieElement term1 = bracket(bracket(u, v), w);
        const LieElement term2 = bracket(bracket(v, w), u);
        const LieElement term3 = bracket(bracket(w, u), v);
        CHECK(is_zero(term1));
        CHECK(is_zero(term2));
        CHECK(is_zero(term3));
      }
    }
  }
}

TEST_CASE("BCH product on a worked pair") {
  const GroupElement g{0, 0, 0, 1, 0, 0, 0};
  const GroupElement h{0, 0, 0, 0, 1, 0, 0};
  const GroupElement product = bch_multiply(g, h);
  CHECK(product == GroupElement{0, Rational(1, 2), 0, 1, 1, 0, 0});
}

TEST_CASE("unit and inverse laws") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = testing::random_group_element(rng);
    CHECK(bch_multiply(g, group_identity()) == g);
    CHECK(bch_multiply(group_identity(), g) == g);
    CHECK(bch_multiply(g, group_inverse(g)) == group_identity());
    CHECK(bch_multiply(group_inverse(g), g) == group_identity());
  }
}

TEST_CASE("BCH multiplication is associative") {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 500; ++i) {
    const GroupElement g = testing::random_group_element(rng);
    const GroupElement h = testing::random_group_element(rng);
    const GroupElement k = testing::random_group_element(rng);
    CHECK(bch_multiply(bch_multiply(g, h), k) == bch_multiply(g, bch_multiply(h, k)));
  }
}

TEST_CASE("quotient projection") {
  SUBCASE("coordinate projection") {
    const GroupElement g{3, 7, 9, 1, 2, 3, 4};
    CHECK(quotient_project(g) == WeylHeisenbergElement{3, 1, 2, 3, 4});
  }
  SUBCASE("projection of the worked BCH pair") {
    const GroupElement g{0, 0, 0, 1, 0, 0, 0};
    const GroupElement h{0, 0, 0, 0, 1, 0, 0};
    const WeylHeisenbergElement both{0, 1, 1, 0, 0};
    CHECK(quotient_project(bch_multiply(g, h)) == both);
    CHECK(wh_multiply(quotient_project(g), quotient_project(h)) == both);
  }
  SUBCASE("identity maps to the WH identity") {
    CHECK(quotient_project(group_identity()) == WeylHeisenbergElement{});
  }
}

TEST_CASE("projection is a homomorphism") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 500; ++i) {
    const GroupElement g = testing::random_group_element(rng);
    const GroupElement h = testing::random_group_element(rng);
    CHECK(quotient_project(bch_multiply(g, h)) ==
          wh_multiply(quotient_project(g), quotient_project(h)));
  }
}

TEST_CASE("kernel of the projection is the extra center") {
  std::mt19937_64 rng(56);
  for (int i = 0; i < 50; ++i) {
    const Rational phi = testing::random_rational(rng);
    const Rational psi = testing::random_rational(rng);
    CHECK(quotient_project(GroupElement{0, phi, psi, 0, 0, 0, 0}) ==
          WeylHeisenbergElement{});
  }
  // Anything outside {(0, phi, psi, 0, 0)} survives.
  CHECK(quotient_project(GroupElement{1, 0, 0, 0, 0, 0, 0}) != WeylHeisenbergElement{});
  CHECK(quotient_project(GroupElement{0, 5, 5, 1, 0, 0, 0}) != WeylHeisenbergElement{});
}

TEST_CASE("coadjoint action on a worked example") {
  const GroupElement exp_x1{0, 0, 0, 1, 0, 0, 0};
  const Functional l0{1, Rational(1, 2), Rational(1, 3), 0, 0, 0, 0};
  const Functional moved = coadjoint_act(exp_x1, l0);
  CHECK(moved.a1 == 1);
  CHECK(moved.a2 == Rational(1, 2));
  CHECK(moved.a3 == Rational(1, 3));
  CHECK(moved.b1 == 0);
  CHECK(moved.b2 == Rational(-1, 2));  // value on X2 picks up -theta
  CHECK(moved.c1 == -1);               // value on P1 picks up -hbar
  CHECK(moved.c2 == 0);
}

TEST_CASE("point orbits and central elements act trivially") {
  std::mt19937_64 rng(57);
  SUBCASE("functional with zero central part is fixed") {
    for (int i = 0; i < 20; ++i) {
      Functional l{0, 0, 0, testing::random_rational(rng), testing::random_rational(rng),
                   testing::random_rational(rng), testing::random_rational(rng)};
      CHECK(coadjoint_act(testing::random_group_element(rng), l) == l);
    }
  }
  SUBCASE("central group elements fix every functional") {
    for (int i = 0; i < 20; ++i) {
      const Functional l = testing::random_functional(rng);
      const GroupElement central{testing::random_rational(rng),
                                 testing::random_rational(rng),
                                 testing::random_rational(rng),
                                 0,
                                 0,
                                 0,
                                 0};
      CHECK(coadjoint_act(central, l) == l);
    }
  }
}

TEST_CASE("orbit data on worked functionals") {
  SUBCASE("generic functional recovers the sector label") {
    const Functional l{1, Rational(1, 2), Rational(1, 3), 5, -2, 7, 0};
    const OrbitData data = orbit_data(l);
    CHECK(data.rank == 4);
    CHECK(data.kirillov ==
          omega_nc({1, Rational(1, 2), Rational(1, 3)}));
    REQUIRE(data.label.has_value());
    CHECK(*data.label == SectorLabel{1, Rational(1, 2), Rational(1, 3)});
  }
  SUBCASE("zero central part gives a point orbit") {
    const Functional l{0, 0, 0, 1, 2, 3, 4};
    const OrbitData data = orbit_data(l);
    CHECK(data.rank == 0);
    CHECK_FALSE(data.label.has_value());
  }
  SUBCASE("quotient-sector functional") {
    const Functional l{1, 0, 0, 0, 0, 0, 0};
    const OrbitData data = orbit_data(l);
    CHECK(data.rank == 4);
    CHECK(data.kirillov == omega_ccr(1, 2));
  }
}

TEST_CASE("kirillov form matches omega_nc whenever a1 != 0") {
  std::mt19937_64 rng(58);
  for (int i = 0; i < 100; ++i) {
    Functional l = testing::random_functional(rng);
    l.a1 = testing::random_nonzero_rational(rng);
    const OrbitData data = orbit_data(l);
    REQUIRE(data.label.has_value());
    CHECK(data.kirillov == omega_nc(*data.label));
    const bool degenerate = l.a1 * l.a1 == l.a2 * l.a3;
    CHECK(data.rank == (degenerate ? 2 : 4));
  }
}

TEST_CASE("coadjoint invariants of the orbit") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 100; ++i) {
    const Functional l = testing::random_functional(rng);
    const GroupElement g = testing::random_group_element(rng);
    const Functional moved = coadjoint_act(g, l);
    CHECK(moved.a1 == l.a1);
    CHECK(moved.a2 == l.a2);
    CHECK(moved.a3 == l.a3);
    const OrbitData before = orbit_data(l);
    const OrbitData after = orbit_data(moved);
    CHECK(after.rank == before.rank);
    CHECK(after.kirillov == before.kirillov);
    CHECK(after.label == before.label);
  }
}

TEST_CASE("coadjoint action composes along the group law") {
  std::mt19937_64 rng(60);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = testing::random_group_element(rng);
    const GroupElement h = testing::random_group_element(rng);
    const Functional l = testing::random_functional(rng);
    CHECK(coadjoint_act(bch_multiply(g, h), l) == coadjoint_act(g, coadjoint_act(h, l)));
  }
}

TEST_CASE("factors through the quotient") {
  CHECK(factors_through_quotient({1, 0, 0}));
  CHECK_FALSE(factors_through_quotient({1, Rational(1, 2), Rational(1, 3)}));
  CHECK(factors_through_quotient({0, 0, 0}));
  // theta = 0 with hbar * b_in = 0 is what counts, not b_in alone.
  CHECK(factors_through_quotient({0, 0, 5}));
  CHECK_FALSE(factors_through_quotient({1, 0, 5}));
}

TEST_CASE("equivalence decision on worked labels") {
  const SectorLabel generic{1, Rational(1, 2), Rational(1, 3)};
  const SectorLabel quotient{1, 0, 0};
  const SectorLabel degenerate{1, 2, Rational(1, 2)};

  CHECK(decide_equivalence(generic, quotient).status == EquivalenceStatus::Inequivalent);
  CHECK(decide_equivalence(generic, generic).status == EquivalenceStatus::Equivalent);
  CHECK(decide_equivalence(degenerate, quotient).status == EquivalenceStatus::Unsupported);
  CHECK(decide_equivalence(quotient, degenerate).status == EquivalenceStatus::Unsupported);
  CHECK(decide_equivalence({0, 1, 1}, quotient).status == EquivalenceStatus::Unsupported);

  CHECK_FALSE(decide_equivalence(generic, quotient).reason.empty());
}

TEST_CASE("equivalence is an equivalence relation on the supported strata") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const SectorLabel a = testing::random_regular_label(rng);
    const SectorLabel b = testing::random_regular_label(rng);
    const SectorLabel c = testing::random_regular_label(rng);

    CHECK(decide_equivalence(a, a).status == EquivalenceStatus::Equivalent);
    CHECK(decide_equivalence(a, b).status == decide_equivalence(b, a).status);
    if (decide_equivalence(a, b).status == EquivalenceStatus::Equivalent &&
        decide_equivalence(b, c).status == EquivalenceStatus::Equivalent) {
      CHECK(decide_equivalence(a, c).status == EquivalenceStatus::Equivalent);
    }
  }
}

TEST_CASE("quotient-factoring labels with equal alpha1 are equivalent") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 50; ++i) {
    const Rational hbar = testing::random_nonzero_rational(rng);
    const SectorLabel a{hbar, 0, 0};
    const SectorLabel b{hbar, 0, 0};
    REQUIRE(factors_through_quotient(a));
    REQUIRE(factors_through_quotient(b));
    CHECK(decide_equivalence(a, b).status == EquivalenceStatus::Equivalent);
  }
}

TEST_CASE("central character equality decides equivalence") {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 100; ++i) {
    const SectorLabel a = testing::random_regular_label(rng);
    const SectorLabel b = testing::random_regular_label(rng);
    const bool same = central_character(a) == central_character(b);
    CHECK((decide_equivalence(a, b).status == EquivalenceStatus::Equivalent) == same);
  }
}

}  // TEST_SUITE
