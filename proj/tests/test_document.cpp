#include "doctest.h"
#include "eds/document.hpp"

using namespace eds;

namespace {

const char* kFrobenius =
    "eds 1\n"
    "dim 3\n"
    "coframe w1 w2 w3\n"
    "generator 1/1*w3\n"
    "vector 1/1 0/1 0/1\n"
    "vector 0/1 1/1 0/1\n"
    "split 1 2 | 3\n";

}  // namespace

TEST_CASE("minimal documents parse") {
  const EdsDocument doc = parse_document("eds 1\ndim 3\ngenerator 1/1*w3\n");
  CHECK(doc.space->dim() == 3);
  CHECK(doc.generators.size() == 1);
  CHECK(!doc.flag.has_value());
  CHECK(!doc.split.has_value());
}

TEST_CASE("structure table and auxiliaries") {
  const EdsDocument doc = parse_document(
      "eds 1\n"
      "dim 3\n"
      "aux p value 0 diff 1/1*w1^w2\n"
      "d 3 = 1/1*w1^w2\n"
      "generator 1/1*w3 - 1/1*p\n");
  CHECK(doc.sd.basis_d(3) == Form::basis(doc.space, {1, 2}));
  CHECK(doc.space->auxiliary_count() == 1);
  CHECK(doc.generators[0].degree() == 1);
  CHECK(doc.sd.point_value(doc.generators[0]) == Form::basis(doc.space, {3}));
}

TEST_CASE("parse errors carry positions") {
  // multi-index (2,1) is out of order
  CHECK_THROWS_AS(parse_document("eds 1\ndim 3\ngenerator 1/1*w2^w1\n"), parse_error);
  CHECK_THROWS_AS(parse_document("eds 1\ndim 3\ngenerator 1/1*w9\n"), parse_error);
  CHECK_THROWS_AS(parse_document("bad header\n"), parse_error);
  CHECK_THROWS_AS(parse_document("eds 1\ndim 3\nvector 1/1 0/1\n"), parse_error);
  CHECK_THROWS_AS(parse_document("eds 1\ndim 3\nnonsense 1\n"), parse_error);
  CHECK_THROWS_AS(parse_document("eds 1\ndim 0\n"), parse_error);

  try {
    parse_document("eds 1\ndim 3\ngenerator 1/1*w2^w1\n");
    FAIL("expected parse error");
  } catch (const parse_error& err) {
    CHECK(err.line == 3);
  }
}

TEST_CASE("canonical round trip") {
  const EdsDocument doc = parse_document(kFrobenius);
  const std::string canonical = serialize_document(doc);
  CHECK(canonical == kFrobenius);
  const EdsDocument again = parse_document(canonical);
  CHECK(serialize_document(again) == canonical);
}

TEST_CASE("round trip with structure data, comments ignored") {
  const char* text =
      "eds 1\n"
      "dim 4\n"
      "coframe a b c d\n"
      "aux q value 0 diff 1/1*a^b\n"
      "d 3 = 1/1*a^b - 2/3*b^c\n"
      "generator 1/1*a^q + 1/2*c^d\n"
      "vector 1/1 0/1 0/1 0/1\n"
      "split 1 | 2 3 4\n";
  const EdsDocument doc = parse_document(std::string("# header comment\n") + text + "# trailing\n");
  CHECK(serialize_document(doc) == text);
}

TEST_CASE("form literals") {
  auto space = Space::standard(3);
  CHECK(parse_form_literal(space, "0").is_zero());
  CHECK(parse_form_literal(space, "2/1*w1^w2 - 1/2*w1^w3") ==
        Rational(2) * Form::basis(space, {1, 2}) - Rational(1, 2) * Form::basis(space, {1, 3}));
  CHECK(parse_form_literal(space, "-1/1*w2") == -Form::basis(space, {2}));
  CHECK_THROWS_AS(parse_form_literal(space, "1/1*w1 + 1/1*w1^w2"), parse_error);
  CHECK_THROWS_AS(parse_form_literal(space, "1/1*zz"), parse_error);

  // literal -> form -> literal is the identity on canonical strings
  const std::string canon = "3/2*w1^w2 - 1/1*w1^w3";
  CHECK(parse_form_literal(space, canon).str() == canon);
}

TEST_CASE("curvature files") {
  const char* text =
      "riemann 1\n"
      "m 2\n"
      "R 1 2 1 2 = 5/1\n";
  const RiemannTensor r = load_riemann(text);
  CHECK(r.at(1, 2, 1, 2) == Rational(5));
  CHECK(r.at(2, 1, 1, 2) == Rational(-5));
  CHECK(r.at(1, 2, 2, 1) == Rational(-5));
  CHECK(validate(r));
  CHECK(serialize_riemann(r) == text);

  CHECK_THROWS_AS(load_riemann("riemann 1\nm 2\nR 1 2 1 2 = 1/1\nR 2 1 1 2 = 1/1\n"), error);
  CHECK_THROWS_AS(load_riemann("riemann 1\nR 1 2 1 2 = 1/1\n"), parse_error);
}

TEST_CASE("h files") {
  const SecondFundamentalForm h = load_h("h 1\nm 2\nN 3\nh 3 1 1 = 1/1\nh 3 2 2 = 1/1\n");
  CHECK(h.at(3, 1, 1) == Rational(1));
  CHECK(h.at(3, 1, 2) == Rational(0));
  CHECK(serialize_h(h) == "h 1\nm 2\nN 3\nh 3 1 1 = 1/1\nh 3 2 2 = 1/1\n");
  CHECK_THROWS_AS(load_h("h 1\nm 2\nN 3\nh 2 1 1 = 1/1\n"), parse_error);
}

TEST_CASE("malformed input always raises parse_error, never crashes") {
  const char* junk[] = {
      "",
      "\n\n\n",
      "eds 2\ndim 3\n",
      "eds 1\n",
      "eds 1\ndim -4\n",
      "eds 1\ndim 3\ncoframe a b\n",
      "eds 1\ndim 3\nd 9 = 1/1*w1^w2\n",
      "eds 1\ndim 3\nd 1 = 1/1*w1\n",
      "eds 1\ndim 3\ngenerator\n",
      "eds 1\ndim 3\ngenerator 1/0*w1\n",
      "eds 1\ndim 3\ngenerator 1/1*w1 +\n",
      "eds 1\ndim 3\naux p value diff\n",
      "eds 1\ndim 3\nsplit 1 2 3\n",
      "eds 1\ndim 3\nsplit 1 | 9\n",
      "eds 1\ndim 3\nvector 1/1 x 0/1\n",
      "eds 1\ndim 2\ngenerator 2/4*w1^w2^w1\n",
  };
  for (const char* text : junk) CHECK_THROWS_AS(parse_document(text), parse_error);
}

TEST_CASE("cartan lemma documents") {
  const CartanLemmaDocument doc = parse_cartan_lemma_document(
      "cartan-lemma 1\n"
      "dim 3\n"
      "theta 2/1*w1 + 3/1*w2\n"
      "theta 3/1*w1 + 5/1*w2\n"
      "omega 1/1*w1\n"
      "omega 1/1*w2\n");
  CHECK(doc.theta.size() == 2);
  CHECK(doc.omega.size() == 2);
  CHECK(doc.space->dim() == 3);
}
