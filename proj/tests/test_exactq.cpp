#include "eicat/exactq.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace eicat;

TEST_CASE("rationals are normalized") {
  CHECK(rat(2, 4).to_string() == "1/2");
  CHECK(rat(3, -6).to_string() == "-1/2");
  CHECK(rat(0, 7).to_string() == "0");
  CHECK(rat(0, 7).denominator() == 1);
  CHECK(rat(-8, -4).to_string() == "2");
  CHECK_THROWS_AS(rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parse round-trips canonical strings") {
  for (const char* s : {"0", "1", "-1", "2/3", "-7/12", "123456789012345678901234567891/2"}) {
    CHECK(Rational::parse(s).to_string() == s);
  }
  CHECK(Rational::parse("4/6") == rat(2, 3));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("arithmetic and ordering") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(1, 2) - rat(1, 3) == rat(1, 6));
  CHECK(rat(2, 3) * rat(3, 4) == rat(1, 2));
  CHECK(rat(2, 3) / rat(4, 9) == rat(3, 2));
  CHECK(-rat(1, 2) == rat(-1, 2));
  CHECK(rat(1, 3) < rat(1, 2));
  CHECK(rat(-1, 2) < Rational(0));
  CHECK(rat(6, 3).is_integer());
  CHECK_FALSE(rat(1, 3).is_integer());
}

TEST_CASE("large values stay exact") {
  Rational r = 1;
  for (int i = 1; i <= 40; ++i) r *= Rational(i);
  for (int i = 1; i <= 40; ++i) r /= Rational(i);
  CHECK(r == Rational(1));
}

TEST_CASE("matrix inversion") {
  const QMatrix a{{2, 1}, {1, 2}};
  const auto inv = mat_invert(a);
  REQUIRE(inv);
  CHECK(*inv == QMatrix{{rat(2, 3), rat(-1, 3)}, {rat(-1, 3), rat(2, 3)}});
  CHECK(inv->sum() == rat(2, 3));
  CHECK(*mat_invert(QMatrix::identity(4)) == QMatrix::identity(4));
  CHECK_FALSE(mat_invert(QMatrix{{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(mat_invert(QMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("inverse of random unimodular-ish matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 5;
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    }
    const auto inv = mat_invert(m);
    if (inv) {
      CHECK((m * *inv).is_identity());
      CHECK((*inv * m).is_identity());
    } else {
      CHECK(row_reduce(m).pivot_columns.size() < n);
    }
  }
}

TEST_CASE("linear solve") {
  auto r = solve_linear(QMatrix{{2, 1}, {1, 2}}, QVector{1, 1});
  CHECK(r.consistent);
  CHECK(*r.solution == QVector{rat(1, 3), rat(1, 3)});
  CHECK(r.kernel_dim == 0);

  const QVector b{3, -2, 5};
  r = solve_linear(QMatrix::identity(3), b);
  CHECK(*r.solution == b);

  r = solve_linear(QMatrix{{2, 2, 1, 1}, {2, 2, 1, 2}, {1, 1, 1, 1}, {0, 0, 0, 1}}, QVector{1, 1, 1, 1});
  CHECK_FALSE(r.consistent);
  CHECK_FALSE(r.solution);

  r = solve_linear(QMatrix{{1, 1}, {2, 2}}, QVector{1, 2});
  CHECK(r.consistent);
  CHECK(r.kernel_dim == 1);
  CHECK(*r.solution == QVector{1, 0});
  CHECK(QMatrix{{1, 1}, {2, 2}} * r.kernel_basis[0] == QVector{0, 0});
  CHECK_THROWS_AS(solve_linear(QMatrix(2, 2), QVector{1}), std::invalid_argument);
}

TEST_CASE("labels and permutation") {
  QMatrix m{{1, 2}, {3, 4}};
  m.set_labels({"a", "b"});
  const QMatrix p = m.permuted({1, 0}, {1, 0});
  CHECK(p == QMatrix{{4, 3}, {2, 1}});
  CHECK(p.row_labels() == std::vector<std::string>{"b", "a"});
  CHECK_THROWS(m.set_row_labels({"a", "a"}));
  CHECK(QMatrix{{1, 5}, {0, 1}}.is_upper_triangular());
  CHECK_FALSE(QMatrix{{1, 0}, {5, 1}}.is_upper_triangular());
}
