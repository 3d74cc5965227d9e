#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fixture;
using srtrunc::degree_slice;
using srtrunc::squarefree_slice;

namespace {

/// Degree-j monomials of I, minimalized: an independent reading of I_<j>.
std::vector<Monomial> slice_by_enumeration(const MonomialIdeal& ideal, unsigned j, bool squarefree_only) {
  std::vector<Monomial> out;
  srtrunc::for_each_monomial_of_degree(ideal.ambient(), j, [&](const Monomial& m) {
    if ((!squarefree_only || m.is_squarefree()) && ideal.contains(m)) out.push_back(m);
  });
  std::sort(out.begin(), out.end(), srtrunc::CanonicalLess{});
  return out;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("normalize drops non-minimal generators and duplicates") {
    auto ideal = monomial_ideal(2, {{1, 0}, {1, 1}, {1, 0}});
    REQUIRE(ideal.size() == 1);
    CHECK(ideal.generators().front() == mono({1, 0}));
  }

  TEST_CASE("normalize keeps an antichain unchanged") {
    auto ideal = three_generator_ideal();
    CHECK(ideal.size() == 3);
    CHECK(ideal.is_squarefree());
    CHECK(ideal.min_degree() == 3u);
    CHECK(ideal.max_degree() == 6u);
  }

  TEST_CASE("generators in different ambient rings are rejected") {
    CHECK_THROWS_AS(MonomialIdeal::normalize(3, {mono({1, 0}), mono({0, 1, 0})}), srtrunc::InputError);
  }

  TEST_CASE("zero and unit ideals") {
    MonomialIdeal zero(4);
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.contains(mono({5, 5, 5, 5})));
    auto unit = MonomialIdeal::unit(4);
    CHECK(unit.is_unit());
    CHECK(unit.contains(Monomial(4)));
    CHECK(unit.min_degree() == 0u);
  }

  TEST_CASE("normalize is idempotent and order independent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      auto ideal = random_monomial(rng, 4, 3, 6);
      auto gens = ideal.generators();
      std::shuffle(gens.begin(), gens.end(), rng);
      gens.push_back(gens.front() * Monomial::variable(4, 1));
      auto again = MonomialIdeal::normalize(4, gens);
      CHECK(again == ideal);
      CHECK(MonomialIdeal::normalize(4, again.generators()) == again);
    }
  }

  TEST_CASE("monomial arithmetic") {
    auto a = mono({2, 0, 1});
    auto b = mono({1, 3, 0});
    CHECK(a.lcm(b) == mono({2, 3, 1}));
    CHECK(a.gcd(b) == mono({1, 0, 0}));
    CHECK(a * b == mono({3, 3, 1}));
    CHECK(a.colon(b) == mono({1, 0, 1}));
    CHECK(mono({1, 0, 0}).divides(a));
    CHECK_FALSE(b.divides(a));
    CHECK(a.degree() == 3);
    CHECK(a.support() == vars({1, 3}));
    CHECK(srtrunc::to_string(a) == "x1^2*x3");
    CHECK(srtrunc::to_string(Monomial(3)) == "1");
  }

  TEST_CASE("support of monomials") {
    CHECK(srtrunc::support(mono({3, 0, 1})) == vars({1, 3}));
    CHECK(srtrunc::support(Monomial(3)).empty());
  }

  TEST_CASE("canonical order sorts by degree first") {
    CHECK(srtrunc::canonical_less(mono({0, 0, 1}), mono({1, 1, 0})));
    CHECK(srtrunc::canonical_less(mono({1, 1, 0}), mono({0, 1, 1})));
    CHECK_FALSE(srtrunc::canonical_less(mono({1, 0}), mono({1, 0})));
  }

  TEST_CASE("degree slice examples") {
    auto slice = degree_slice(monomial_ideal(2, {{1, 0}}), 2);
    CHECK(slice == monomial_ideal(2, {{2, 0}, {1, 1}}));
    CHECK(degree_slice(monomial_ideal(2, {{1, 1}}), 1).is_zero());
    auto ex = degree_slice(three_generator_ideal(), 3);
    CHECK(ex.generators() == slice_by_enumeration(three_generator_ideal(), 3, false));
  }

  TEST_CASE("squarefree slice examples") {
    CHECK(squarefree_slice(monomial_ideal(1, {{2}}), 2).is_zero());
    CHECK(squarefree_slice(squarefree(3, {{1, 2}}), 3) == squarefree(3, {{1, 2, 3}}));
    auto ex = squarefree_slice(three_generator_ideal(), 4);
    CHECK(ex.generators() == slice_by_enumeration(three_generator_ideal(), 4, true));
  }

  TEST_CASE("slices agree with enumeration on random ideals") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      auto ideal = random_monomial(rng, 3, 3, 4);
      for (unsigned j = 0; j <= 7; ++j) {
        auto slice = degree_slice(ideal, j);
        CHECK(slice.generators() == slice_by_enumeration(ideal, j, false));
        auto sq = squarefree_slice(ideal, j);
        CHECK(sq.generators() == slice_by_enumeration(ideal, j, true));
        for (const auto& g : sq.generators()) CHECK(slice.contains(g));
      }
    }
  }

  TEST_CASE("varset order is by size then lexicographic") {
    CHECK(vars({3}) < vars({1, 2}));
    CHECK(vars({1, 2}) < vars({1, 3}));
    CHECK(vars({1, 3}) < vars({2, 3}));
    CHECK(srtrunc::to_string(vars({1, 3})) == "{1,3}");
  }

  TEST_CASE("for_each_subset_of_size counts binomially") {
    int count = 0;
    srtrunc::for_each_subset_of_size(VarSet::full(7), 3, [&](VarSet s) {
      CHECK(s.size() == 3);
      ++count;
    });
    CHECK(count == 35);
  }
}
