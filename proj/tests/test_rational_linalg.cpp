#include "doctest.h"
#include "eds/linalg.hpp"
#include "eds/prng.hpp"

using namespace eds;

TEST_CASE("rational parse and render") {
  CHECK(rational_str(parse_rational("3/6")) == "1/2");
  CHECK(rational_str(parse_rational("-4/2")) == "-2/1");
  CHECK(rational_str(parse_rational("7")) == "7/1");
  CHECK(rational_str(parse_rational("0")) == "0/1");
  CHECK(rational_str(parse_rational("1/-2")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), error);
  CHECK_THROWS_AS(parse_rational("a/2"), error);
  CHECK_THROWS_AS(parse_rational("1 2"), error);
  CHECK_THROWS_AS(parse_rational(""), error);
}

TEST_CASE("rank, rref and nullspace") {
  RationalMatrix m(3, 4);
  // rows: [1 2 3 4], [2 4 6 8], [0 1 1 0]
  const int data[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m.at(r, c) = data[r][c];
  CHECK(m.rank() == 2);

  std::vector<int> pivots;
  RationalMatrix red = m.rref(&pivots);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(static_cast<int>(m.nullspace().size()) == 2);

  // every kernel vector annihilates every row
  for (const auto& v : m.nullspace())
    for (int r = 0; r < 3; ++r) {
      Rational dot(0);
      for (int c = 0; c < 4; ++c) dot += m.at(r, c) * v[c];
      CHECK(is_zero(dot));
    }
}

TEST_CASE("rank agrees with rref pivots on random matrices") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = rng.range_int(1, 6);
    const int cols = rng.range_int(1, 6);
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = rng.rational(4, 3);
    std::vector<int> pivots;
    m.rref(&pivots);
    CHECK(m.rank() == static_cast<int>(pivots.size()));
    CHECK(m.rank() + static_cast<int>(m.nullspace().size()) == cols);
  }
}

TEST_CASE("hilbert matrix stays exact") {
  // H_ij = 1/(i+j-1); the inverse has integer entries and the top-left one
  // is n^2 for n = 5 -> 25.
  const int n = 5;
  RationalMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.at(i, j) = Rational(1, i + j + 1);
  CHECK(h.rank() == n);
  const auto inv = h.inverse();
  REQUIRE(inv.has_value());
  CHECK(inv->at(0, 0) == Rational(25));
  CHECK(inv->at(0, 1) == Rational(-300));
  CHECK(inv->at(4, 4) == Rational(44100));
  // round trip
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational dot(0);
      for (int k = 0; k < n; ++k) dot += h.at(i, k) * inv->at(k, j);
      CHECK(dot == Rational(i == j ? 1 : 0));
    }
}

TEST_CASE("solve and inverse") {
  RationalMatrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  const auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(inv->at(0, 0) == Rational(-2));
  CHECK(inv->at(0, 1) == Rational(1));
  CHECK(inv->at(1, 0) == Rational(3, 2));
  CHECK(inv->at(1, 1) == Rational(-1, 2));

  const auto x = a.solve({Rational(5), Rational(11)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(2));

  RationalMatrix singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(1, 0) = 2;
  CHECK(!singular.inverse().has_value());
  CHECK(!singular.solve({Rational(1), Rational(3)}).has_value());
}
