#include "doctest.h"
#include "eds/form_matrix.hpp"
#include "test_util.hpp"

using namespace eds;
using eds::testing::random_form;
using eds::testing::random_integrable_sd;
using eds::testing::so3_sd;

TEST_CASE("flat differential annihilates everything") {
  auto space = Space::standard(4);
  auto sd = StructureDifferential::flat(space);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 10; ++trial) CHECK(sd.d(random_form(rng, space, rng.range_int(0, 3))).is_zero());
}

TEST_CASE("d on basis elements and Leibniz contractions") {
  auto space = Space::standard(3);
  StructureDifferential sd(space);
  sd.set_basis_d(3, Form::basis(space, {1, 2}));

  CHECK(sd.d(Form::basis(space, {3})) == Form::basis(space, {1, 2}));
  // d(w3 ^ w1) = (w1^w2)^w1 = 0
  CHECK(sd.d(Form::basis(space, {1, 3})).is_zero());
  CHECK(sd.d(Form::basis(space, {2, 3})).is_zero());
}

TEST_CASE("d squared defects") {
  auto space = Space::standard(3);

  StructureDifferential flat = StructureDifferential::flat(space);
  for (const auto& [idx, defect] : flat.d_squared_defects()) CHECK(defect.is_zero());

  StructureDifferential heisenberg(space);
  heisenberg.set_basis_d(3, Form::basis(space, {1, 2}));
  CHECK(heisenberg.is_integrable());

  CHECK(so3_sd(space).is_integrable());

  // d(w2) = w2 ^ w3 with d(w3) = w1 ^ w2 is not integrable
  StructureDifferential bad(space);
  bad.set_basis_d(2, Form::basis(space, {2, 3}));
  bad.set_basis_d(3, Form::basis(space, {1, 2}));
  CHECK(!bad.is_integrable());
}

TEST_CASE("graded Leibniz rule for random structure data") {
  auto space = Space::standard(4);
  SplitMix64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    StructureDifferential sd(space);
    for (int mu = 1; mu <= 4; ++mu) sd.set_basis_d(mu, random_form(rng, space, 2, 2));
    const int p = rng.range_int(0, 2);
    const Form a = random_form(rng, space, p);
    const Form b = random_form(rng, space, rng.range_int(0, 2));
    const Form lhs = sd.d(a.wedge(b));
    Form rhs = sd.d(a).wedge(b);
    const Form adb = a.wedge(sd.d(b));
    rhs = (p % 2 == 0) ? rhs + adb : rhs - adb;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("d squared vanishes under integrable structure data") {
  auto space = Space::standard(5);
  SplitMix64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    StructureDifferential sd = random_integrable_sd(rng, space);
    REQUIRE(sd.is_integrable());
    const Form phi = random_form(rng, space, rng.range_int(0, 3));
    CHECK(sd.d(sd.d(phi)).is_zero());
  }
}

TEST_CASE("auxiliaries: point value and differential are independent") {
  auto space = Space::make({"w1", "w2", "w3"}, {"p"});
  StructureDifferential sd(space);
  sd.set_auxiliary("p", Form(space, 1), Form::basis(space, {1, 2}));

  const Form beta = Form::basis(space, {3}) - Form::basis(space, {4});  // w3 - p
  CHECK(sd.point_value(beta) == Form::basis(space, {3}));
  CHECK(sd.d(beta) == -Form::basis(space, {1, 2}));
  CHECK(sd.is_integrable());

  // evaluate refuses un-substituted auxiliaries
  CHECK_THROWS_AS(beta.evaluate({Vector::unit(space, 1)}), error);

  StructureDifferential undeclared(space);
  CHECK_THROWS_AS(undeclared.d(beta), error);
  CHECK_THROWS_AS(undeclared.point_value(beta), error);
}

TEST_CASE("auxiliary with nonzero point value") {
  auto space = Space::make({"w1", "w2"}, {"q"});
  StructureDifferential sd(space);
  sd.set_auxiliary("q", Form::basis(space, {1}) + Form::basis(space, {2}), Form(space, 2));
  const Form f = Form::basis(space, {3}).wedge(Form::basis(space, {2}));  // q ^ w2
  CHECK(sd.point_value(f) == Form::basis(space, {1, 2}));
}

TEST_CASE("form matrices") {
  auto space = Space::standard(3);
  auto sd = StructureDifferential::flat(space);

  FormMatrix zero(space, 2, 2, 1);
  CHECK(matrix_wedge(zero, zero).is_zero());
  CHECK(check_skew(zero));

  // 1x1 wedge reduces to the scalar wedge
  FormMatrix a(space, 1, 1, 1);
  a.set(0, 0, Form::basis(space, {1}));
  FormMatrix b(space, 1, 1, 1);
  b.set(0, 0, Form::basis(space, {2}));
  CHECK(matrix_wedge(a, b).at(0, 0) == Form::basis(space, {1, 2}));

  // 2x2 skew with omega_12 = w1: (omega ^ omega)_11 = w1 ^ (-w1) = 0
  FormMatrix skew(space, 2, 2, 1);
  skew.set(0, 1, Form::basis(space, {1}));
  skew.set(1, 0, -Form::basis(space, {1}));
  CHECK(check_skew(skew));
  CHECK(matrix_wedge(skew, skew).at(0, 0).is_zero());

  FormMatrix notskew(space, 2, 2, 1);
  notskew.set(0, 1, Form::basis(space, {1}));
  notskew.set(1, 0, Form::basis(space, {1}));
  CHECK(!check_skew(notskew));

  CHECK(matrix_d(skew, sd).is_zero());
  CHECK_THROWS_AS(matrix_wedge(a, FormMatrix(space, 2, 2, 1)), error);
}
