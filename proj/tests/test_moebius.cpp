#include "eicat/constructions.hpp"
#include "eicat/corpus.hpp"
#include "eicat/errors.hpp"
#include "eicat/moebius.hpp"
#include "eicat/orbitcat.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace eicat;
namespace t = eicat::testing;

TEST_CASE("iso order") {
  const IsoPoset d4 = iso_order(divisor_poset(4));
  CHECK(d4.labels == std::vector<std::string>{"1", "2", "4"});
  CHECK(d4.less(0, 1));
  CHECK(d4.less(1, 2));
  CHECK(d4.less(0, 2));

  const IsoPoset orb = iso_order(orbit_category(cyclic_group(2)).category);
  REQUIRE(orb.size() == 2);
  CHECK(orb.less(0, 1));
  CHECK_FALSE(orb.less(1, 0));

  const IsoPoset one = iso_order(delooping(symmetric_group(3)));
  CHECK(one.size() == 1);
  CHECK_FALSE(one.less(0, 0));
  CHECK_THROWS_AS(iso_order(non_ei_pair()), PreconditionError);
}

TEST_CASE("chains") {
  const IsoPoset d4 = iso_order(divisor_poset(4));
  CHECK(enumerate_chains(d4, "1", "4", 2) == std::vector<Chain>{{0, 1, 2}});
  CHECK(enumerate_chains(d4, "1", "4", 1).size() == 1);
  CHECK(enumerate_chains(d4, "2", "2", 0) == std::vector<Chain>{{1}});
  const IsoPoset s1 = iso_order(subsets_category(1));
  CHECK(enumerate_chains(s1, "{0,1}", "{0}", 1).size() == 1);
  CHECK(enumerate_chains(s1, "{0}", "{0,1}", 1).empty());
}

TEST_CASE("chain bisets") {
  const FiniteCategory pp = parallel_pair();
  const IsoPoset p = iso_order(pp);
  CHECK(chain_biset(pp, p, {0, 1}).size() == 2);
  CHECK(chain_biset(pp, p, {0}).size() == 1);

  const auto orb = orbit_category(cyclic_group(2));
  const IsoPoset po = iso_order(orb.category);
  const ChainBiset s = chain_biset(orb.category, po, {0, 1});
  CHECK(s.size() == 1);
  CHECK(double_coset_count(s) == 1);

  const auto g = cyclic_group(2);
  const FiniteCategory gamma = biset_category(g, trivial_group(), regular_left_biset(g));
  const IsoPoset pg = iso_order(gamma);
  const ChainBiset sg = chain_biset(gamma, pg, {0, 1});
  CHECK(sg.size() == 2);
  CHECK(double_coset_count(sg) == 1);
  CHECK(left_orbit_count(sg) == 1);

  const FiniteCategory s3 = delooping(symmetric_group(3));
  const ChainBiset l0 = chain_biset(s3, iso_order(s3), {0});
  CHECK(l0.size() == 6);
  CHECK(double_coset_count(l0) == 1);

  // Trivial automorphisms: |S(c)| counts composable non-identity paths.
  t::Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const FiniteCategory c = t::random_path_category(rng);
    const IsoPoset pc = iso_order(c);
    for (std::size_t a = 0; a < pc.size(); ++a) {
      for (std::size_t b = 0; b < pc.size(); ++b) {
        if (!pc.less(a, b)) continue;
        for (const auto& ch : enumerate_chains(pc, a, b, 2)) {
          std::size_t paths = 0;
          for (int f : c.hom(pc.reps[ch[0]], pc.reps[ch[1]])) {
            (void)f;
            paths += c.hom(pc.reps[ch[1]], pc.reps[ch[2]]).size();
          }
          CHECK(chain_biset(c, pc, ch).size() == paths);
        }
      }
    }
  }
}

TEST_CASE("permutation module dimension") {
  const auto g = symmetric_group(3);
  for (const auto& cls : subgroup_classes(g)) {
    // L\G as a right G-set.
    const auto& l = cls.representative;
    std::vector<std::vector<int>> cosets;
    std::vector<int> coset_of(6, -1);
    for (int a = 0; a < 6; ++a) {
      if (coset_of[a] >= 0) continue;
      for (int b : l) coset_of[g.mul(b, a)] = static_cast<int>(cosets.size());
      cosets.push_back({a});
    }
    RightGSet tset;
    tset.size = cosets.size();
    for (int a = 0; a < 6; ++a) {
      std::vector<int> row;
      for (const auto& c : cosets) row.push_back(coset_of[g.mul(c[0], a)]);
      tset.action.push_back(row);
    }
    CHECK(perm_module_dim(tset, g) == rat(1, static_cast<long>(l.size())));
  }
}

TEST_CASE("omega bar and mu bar") {
  for (int p : {2, 3, 5}) {
    const auto orb = orbit_category(cyclic_group(p));
    CHECK(omega_bar2(orb.category) == QMatrix{{1, rat(1, p)}, {0, 1}});
    CHECK(mu_bar2_chains(orb.category) == QMatrix{{1, rat(-1, p)}, {0, 1}});
  }
  CHECK(omega_bar2(delooping(symmetric_group(3))) == QMatrix{{1}});
  CHECK(mu_bar2_chains(delooping(symmetric_group(3))) == QMatrix{{1}});
  const QMatrix span = omega_bar2(span_category());
  CHECK(span.row_labels() == std::vector<std::string>{"0", "1", "2"});
  CHECK(span == QMatrix{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}});

  const FiniteCategory d12 = divisor_poset(12);
  const QMatrix mu = mu_bar2_chains(d12);
  const IsoPoset p = iso_order(d12);
  for (std::size_t y = 0; y < p.size(); ++y) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      const long dy = std::stol(p.labels[y]), dx = std::stol(p.labels[x]);
      const Rational want = dx % dy == 0 ? Rational(t::classical_mu(static_cast<std::size_t>(dx / dy))) : Rational(0);
      CHECK(mu(y, x) == want);
    }
  }
}

TEST_CASE("integral Moebius") {
  const std::vector<std::vector<bool>> chain2{{true, true}, {false, true}};
  const IntegralMoebius two = integral_moebius(poset_category({"0", "1"}, chain2));
  CHECK(two.a == QMatrix{{1, 0}, {1, 1}});
  CHECK(two.b == QMatrix{{1, 0}, {-1, 1}});

  const IntegralMoebius d4 = integral_moebius(divisor_poset(4));
  CHECK(d4.b(2, 0) == Rational(0));
  CHECK(d4.b(1, 0) == Rational(-1));

  const IntegralMoebius pp = integral_moebius(parallel_pair());
  CHECK(pp.a == QMatrix{{1, 0}, {2, 1}});
  CHECK(pp.b == QMatrix{{1, 0}, {-2, 1}});
  CHECK_THROWS_AS(integral_moebius(indiscrete(2)), PreconditionError);
  CHECK_THROWS_AS(integral_moebius(delooping(cyclic_group(2))), PreconditionError);
}

TEST_CASE("Euler characteristics of named examples") {
  const EulerReport span = euler_characteristics(span_category());
  CHECK(span.chi == Rational(1));
  CHECK(span.chi2 == Rational(1));
  CHECK(span.chi_nerve == BigInt(1));
  CHECK(span.chi_f == QVector{-1, 1, 1});
  CHECK(span.chi_f2 == QVector{-1, 1, 1});
  CHECK(span.chi_f.labels() == std::vector<std::string>{"0", "1", "2"});

  const EulerReport z2 = euler_characteristics(delooping(cyclic_group(2)));
  CHECK(z2.chi_f2 == QVector{rat(1, 2)});
  CHECK(z2.chi2 == rat(1, 2));
  CHECK_FALSE(z2.chi_nerve);
  CHECK_FALSE(z2.warnings.empty());

  const EulerReport ind = euler_characteristics(indiscrete(3));
  CHECK(ind.chi_nerve == BigInt(1));
  CHECK(ind.chi2 == Rational(1));

  CHECK_THROWS_AS(euler_characteristics(non_ei_pair()), PreconditionError);
}

TEST_CASE("eta route") {
  CHECK(chi_f2_via_eta(span_category()) == QVector{-1, 1, 1});
  CHECK(chi_f2_via_eta(delooping(symmetric_group(3))) == QVector{rat(1, 6)});
  const auto orb = orbit_category(cyclic_group(2));
  CHECK(chi_f2_via_eta(orb.category) == euler_characteristics(orb.category).chi_f2);
  const auto g = cyclic_group(2);
  CHECK_THROWS_AS(chi_f2_via_eta(biset_category(g, trivial_group(), point_biset(g, trivial_group()))),
                  PreconditionError);
}

TEST_CASE("nerve Euler characteristic") {
  CHECK(nerve_euler_characteristic(span_category()).value == BigInt(1));
  CHECK(nerve_euler_characteristic(parallel_pair()).value == BigInt(0));
  CHECK_FALSE(nerve_euler_characteristic(delooping(cyclic_group(3))).value);
  t::Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const FiniteCategory c = t::random_path_category(rng);
    CHECK(nerve_euler_characteristic(c).value == t::nerve_by_enumeration(c));
  }
}

TEST_CASE("chain length cap") {
  const FiniteCategory s = subsets_category(2);
  ChainOptions opts;
  opts.max_chain_length = 0;
  const QMatrix capped = mu_bar2_chains(s, opts);
  CHECK(capped.is_identity());
  CHECK_FALSE((mu_bar2_chains(s) == capped));
}
