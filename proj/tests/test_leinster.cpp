#include "eicat/constructions.hpp"
#include "eicat/corpus.hpp"
#include "eicat/leinster.hpp"
#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace eicat;
namespace t = eicat::testing;

TEST_CASE("zeta matrices") {
  CHECK(zeta_matrix(non_ei_pair()) == QMatrix{{2, 1}, {1, 2}});
  const QMatrix za = zeta_matrix(leinster_a());
  CHECK(za.sum() == Rational(18));
  for (std::size_t c = 0; c < 3; ++c) CHECK(za(3, c) == Rational(0));
  CHECK(za(3, 3) == Rational(1));
  CHECK(zeta_matrix(delooping(cyclic_group(2))) == QMatrix{{2}});
}

TEST_CASE("weightings") {
  auto w = weighting(span_category());
  REQUIRE(w.weighting);
  CHECK(*w.weighting == QVector{-1, 1, 1});
  w = weighting(parallel_pair());
  REQUIRE(w.weighting);
  CHECK(*w.weighting == QVector{-1, 1});
  w = weighting(leinster_a());
  CHECK_FALSE(w.exists);
  CHECK_FALSE(w.weighting);

  w = weighting(indiscrete(2));
  CHECK(w.exists);
  CHECK(w.kernel_dim == 1);
  CHECK(w.weighting->sum() == Rational(1));
}

TEST_CASE("Leinster Euler characteristic") {
  CHECK(chi_L(non_ei_pair()) == rat(2, 3));
  CHECK_FALSE(chi_L(leinster_a()));
  CHECK(chi_L(span_category()) == Rational(1));
  // A terminal object forces chi_L = 1.
  CHECK(chi_L(opposite(span_category())) == Rational(1));
  CHECK(chi_L(divisor_poset(30)) == Rational(1));
  CHECK(chi_L(delooping(symmetric_group(3))) == rat(1, 6));
  CHECK(leinster_moebius(non_ei_pair()) == QMatrix{{rat(2, 3), rat(-1, 3)}, {rat(-1, 3), rat(2, 3)}});
  CHECK_FALSE(leinster_moebius(indiscrete(2)));

  t::Rng rng(23);
  for (int i = 0; i < 15; ++i) {
    const auto b = t::random_biset(rng);
    const Rational g = static_cast<long>(b.g.order()), h = static_cast<long>(b.h.order());
    const Rational want = Rational(1) / h + Rational(1) / g - Rational(static_cast<long>(b.s.size)) / (g * h);
    CHECK(chi_L(biset_category(b.g, b.h, b.s)) == want);
  }
}

TEST_CASE("weighting from cells") {
  const auto span = weighting_from_cells(span_category(), {{0, "1"}, {0, "2"}, {1, "0"}});
  CHECK(span.k == QVector{-1, 1, 1});
  CHECK(span.verified);

  const auto pp = weighting_from_cells(parallel_pair(), {{1, "a"}, {0, "b"}});
  CHECK(pp.k == QVector{-1, 1});
  CHECK(pp.verified);

  for (std::size_t q = 0; q <= 3; ++q) {
    const FiniteCategory s = subsets_category(q);
    std::vector<Cell> cells;
    for (const auto& name : s.objects()) {
      const auto size = static_cast<std::size_t>(std::count(name.begin(), name.end(), ',') + 1);
      cells.push_back({size - 1, name});
    }
    const auto k = weighting_from_cells(s, cells);
    CHECK(k.verified);
    for (std::size_t i = 0; i < s.num_objects(); ++i) {
      const auto size = std::count(s.objects()[i].begin(), s.objects()[i].end(), ',') + 1;
      CHECK(k.k[i] == Rational(size % 2 == 1 ? 1 : -1));
    }
  }

  // One 0-cell at the terminal object of the span's opposite.
  const auto term = weighting_from_cells(opposite(span_category()), {{0, "0"}});
  CHECK(term.k == QVector{1, 0, 0});
  CHECK(term.verified);

  CHECK_FALSE(weighting_from_cells(span_category(), {{0, "0"}}).verified);
  CHECK_THROWS_AS(weighting_from_cells(span_category(), {{0, "nope"}}), std::invalid_argument);
}
