#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fixture;
using srtrunc::BettiTable;
using srtrunc::HilbertNumerator;

namespace {

BettiTable table_of(unsigned n, std::initializer_list<std::tuple<unsigned, unsigned, long>> entries) {
  BettiTable t = BettiTable::of_ring(n, Characteristic());
  for (auto [i, j, v] : entries) t.set(i, j, v);
  return t;
}

HilbertNumerator numerator(unsigned n, std::initializer_list<std::pair<unsigned, long>> terms) {
  HilbertNumerator h;
  h.n = n;
  for (auto [s, c] : terms) {
    if (h.coefficients.size() <= s) h.coefficients.resize(s + 1, 0);
    h.coefficients[s] = c;
  }
  return h;
}

BettiTable three_generator_table() {
  return table_of(9, {{1, 3, 1}, {1, 4, 1}, {1, 6, 1}, {2, 7, 2}, {2, 8, 1}, {3, 9, 1}});
}

HilbertNumerator eight_squares_numerator() {
  return numerator(8, {{0, 1},
                       {5, -736},
                       {6, 4200},
                       {7, -10528},
                       {8, 14910},
                       {9, -12832},
                       {10, 6720},
                       {11, -2016},
                       {12, 288},
                       {14, -8},
                       {16, 1}});
}

BettiTable koszul_table(unsigned n, unsigned d) {
  BettiTable t = BettiTable::of_ring(n, Characteristic());
  for (unsigned r = 1; r <= n; ++r) t.set(r, d * r, srtrunc::binomial(n, r));
  return t;
}

}  // namespace

TEST_SUITE("betti") {
  TEST_CASE("single edge") {
    auto t = srtrunc::hochster_betti(squarefree(2, {{1, 2}}), Characteristic());
    CHECK(t == table_of(2, {{1, 2, 1}}));
  }

  TEST_CASE("three-generator ideal") {
    CHECK(srtrunc::hochster_betti(three_generator_ideal(), Characteristic()) == three_generator_table());
  }

  TEST_CASE("hochster sweep agrees with the unpruned dense oracle") {
    std::mt19937_64 rng(201);
    for (unsigned p : {0u, 2u}) {
      for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(rng() % 5);
        auto ideal = random_squarefree(rng, n);
        if (ideal.is_unit()) continue;
        CHECK(srtrunc::hochster_betti(ideal, Characteristic(p)) == oracle::hochster(ideal, p));
      }
    }
  }

  TEST_CASE("hochster sweep is identical across thread counts") {
    std::mt19937_64 rng(203);
    for (int trial = 0; trial < 20; ++trial) {
      auto ideal = random_squarefree(rng, 12, 8);
      if (ideal.is_unit()) continue;
      auto serial = srtrunc::hochster_betti(ideal, Characteristic(), 1);
      CHECK(srtrunc::hochster_betti(ideal, Characteristic(), 3) == serial);
      CHECK(srtrunc::hochster_betti(ideal, Characteristic(), 8) == serial);
    }
  }

  TEST_CASE("hochster on the zero ideal is the ring alone") {
    CHECK(srtrunc::hochster_betti(MonomialIdeal(4), Characteristic()) == BettiTable::of_ring(4, Characteristic()));
  }

  TEST_CASE("closed form on the three-generator ideal at five") {
    auto ideal = three_generator_ideal();
    auto base = srtrunc::hochster_betti(ideal, Characteristic());
    auto f5 = srtrunc::f_vector(srtrunc::stanley_reisner(srtrunc::squarefree_truncate(ideal, 5)));
    auto t = srtrunc::closed_form_truncation_betti(base, f5, 9, 5);
    auto expected = table_of(9, {{1, 5, 20},
                                 {2, 6, 50},
                                 {3, 7, 55},
                                 {4, 8, 29},
                                 {5, 9, 6},
                                 {1, 6, 1},
                                 {2, 7, 2},
                                 {2, 8, 1},
                                 {3, 9, 1}});
    CHECK(t == expected);
    CHECK(srtrunc::truncation_alpha(base, f5, 9, 1, 4) == 20);
    CHECK(srtrunc::truncation_alpha(base, f5, 9, 2, 4) == 50);
    CHECK(srtrunc::truncation_alpha(base, f5, 9, 3, 4) == 55);
    CHECK(srtrunc::truncation_alpha(base, f5, 9, 4, 4) == 29);
    CHECK(srtrunc::truncation_alpha(base, f5, 9, 5, 4) == 6);
  }

  TEST_CASE("closed form requires k above the minimal degree") {
    auto ideal = three_generator_ideal();
    auto base = srtrunc::hochster_betti(ideal, Characteristic());
    auto f = srtrunc::f_vector(srtrunc::stanley_reisner(ideal));
    CHECK_THROWS_AS(srtrunc::closed_form_truncation_betti(base, f, 9, 3), srtrunc::InputError);
  }

  TEST_CASE("closed form flags a mismatched f-vector") {
    auto ideal = three_generator_ideal();
    auto base = srtrunc::hochster_betti(ideal, Characteristic());
    auto wrong = srtrunc::f_vector(srtrunc::stanley_reisner(ideal));
    CHECK_THROWS_AS(srtrunc::closed_form_truncation_betti(base, wrong, 9, 5), srtrunc::InconsistencyError);
  }

  TEST_CASE("linear ideal stays linear under truncation") {
    auto ideal = squarefree(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {2, 4}, {3, 5}});
    auto base = srtrunc::hochster_betti(ideal, Characteristic());
    REQUIRE(srtrunc::has_linear_resolution(base, 2));
    CHECK(srtrunc::squarefree_truncate(ideal, 2) == ideal);
    for (unsigned k = 3; k <= 5; ++k) {
      auto fk = srtrunc::f_vector(srtrunc::stanley_reisner(srtrunc::squarefree_truncate(ideal, k)));
      CHECK(srtrunc::has_linear_resolution(srtrunc::closed_form_truncation_betti(base, fk, 5, k), k));
    }
  }

  TEST_CASE("closed form equals the oracle on random ideals up to nine variables") {
    std::mt19937_64 rng(207);
    for (unsigned n = 3; n <= 9; ++n) {
      for (int trial = 0; trial < 30; ++trial) {
        auto ideal = random_squarefree(rng, n);
        if (ideal.is_unit()) continue;
        auto base = srtrunc::hochster_betti(ideal, Characteristic());
        for (unsigned k = *ideal.min_degree() + 1; k <= n; ++k) {
          auto ik = srtrunc::squarefree_truncate(ideal, k);
          auto fk = srtrunc::f_vector(srtrunc::stanley_reisner(ik));
          auto t = srtrunc::closed_form_truncation_betti(base, fk, n, k);
          CHECK(t == srtrunc::hochster_betti(ik, Characteristic()));
          for (const auto& [key, value] : t.entries())
            if (key.first >= 1) CHECK(key.second - key.first + 2 > k);
        }
      }
    }
  }

  TEST_CASE("numerator of the full simplex is one") {
    auto h = srtrunc::hilbert_numerator_from_fvector(srtrunc::f_vector(srtrunc::SimplicialComplex::simplex(4)), 4);
    CHECK(h == numerator(4, {{0, 1}}));
  }

  TEST_CASE("numerator of two points") {
    CHECK(srtrunc::hilbert_numerator_from_fvector(fv({1, 2}), 2) == numerator(2, {{0, 1}, {2, -1}}));
  }

  TEST_CASE("numerators from f-vector and from betti agree") {
    auto ideal = three_generator_ideal();
    auto f = srtrunc::f_vector(srtrunc::stanley_reisner(ideal));
    CHECK(srtrunc::hilbert_numerator_from_fvector(f, 9) == srtrunc::hilbert_numerator_from_betti(three_generator_table()));
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 80; ++trial) {
      const unsigned n = 2 + static_cast<unsigned>(rng() % 6);
      auto random = random_squarefree(rng, n);
      if (random.is_unit()) continue;
      auto g = srtrunc::f_vector(srtrunc::stanley_reisner(random));
      auto from_f = srtrunc::hilbert_numerator_from_fvector(g, n);
      CHECK(from_f == srtrunc::hilbert_numerator_from_betti(srtrunc::hochster_betti(random, Characteristic())));
      CHECK(from_f == oracle::hilbert_by_counting(random));
    }
  }

  TEST_CASE("numerator from a table") {
    CHECK(srtrunc::hilbert_numerator_from_betti(BettiTable::of_ring(3, Characteristic())) == numerator(3, {{0, 1}}));
    auto t = table_of(8, {{1, 5, 736},
                          {2, 6, 4200},
                          {3, 7, 10528},
                          {4, 8, 14910},
                          {5, 9, 12832},
                          {6, 10, 6776},
                          {7, 11, 2016},
                          {8, 12, 260},
                          {5, 10, 56},
                          {6, 12, 28},
                          {7, 14, 8},
                          {8, 16, 1}});
    CHECK(srtrunc::hilbert_numerator_from_betti(t) == eight_squares_numerator());
  }

  TEST_CASE("monomial numerators") {
    auto truncated = srtrunc::truncate_geq(power_complete_intersection(8, 2), 5);
    CHECK(srtrunc::hilbert_numerator_monomial(truncated) == eight_squares_numerator());
    CHECK(srtrunc::hilbert_numerator_monomial(MonomialIdeal(3)) == numerator(3, {{0, 1}}));
    CHECK(srtrunc::hilbert_numerator_monomial(MonomialIdeal::unit(3)).coefficients.empty());
  }

  TEST_CASE("monomial numerator agrees with counting and inclusion-exclusion") {
    std::mt19937_64 rng(213);
    for (int trial = 0; trial < 120; ++trial) {
      const unsigned n = 1 + static_cast<unsigned>(rng() % 4);
      auto ideal = random_monomial(rng, n, 3, 6);
      auto h = srtrunc::hilbert_numerator_monomial(ideal);
      CHECK(h == oracle::hilbert_by_counting(ideal));
      CHECK(h == srtrunc::hilbert_numerator_inclusion_exclusion(ideal));
    }
  }

  TEST_CASE("inclusion-exclusion has a generator bound") {
    auto many = srtrunc::truncate_geq(power_complete_intersection(4, 2), 3);
    REQUIRE(many.size() > 5);
    CHECK_THROWS_AS(srtrunc::hilbert_numerator_inclusion_exclusion(many, 5), srtrunc::ResourceError);
  }

  TEST_CASE("betti of the eight squares truncated at five from the numerator") {
    auto t = srtrunc::betti_geq_k(koszul_table(8, 2), eight_squares_numerator(), 5);
    auto expected = table_of(8, {{1, 5, 736},
                                 {2, 6, 4200},
                                 {3, 7, 10528},
                                 {4, 8, 14910},
                                 {5, 9, 12832},
                                 {6, 10, 6776},
                                 {7, 11, 2016},
                                 {8, 12, 260},
                                 {5, 10, 56},
                                 {6, 12, 28},
                                 {7, 14, 8},
                                 {8, 16, 1}});
    CHECK(t == expected);
  }

  TEST_CASE("betti_geq_k at the minimal degree returns the input table") {
    auto base = koszul_table(4, 2);
    auto h = srtrunc::hilbert_numerator_monomial(power_complete_intersection(4, 2));
    CHECK(srtrunc::betti_geq_k(base, h, 2) == base);
  }

  TEST_CASE("betti_geq_k rejects an inconsistent numerator") {
    auto h = eight_squares_numerator();
    h.coefficients[5] = 736;
    CHECK_THROWS_AS(srtrunc::betti_geq_k(koszul_table(8, 2), h, 5), srtrunc::InconsistencyError);
  }

  TEST_CASE("betti_geq_k agrees with the polarized oracle") {
    std::mt19937_64 rng(217);
    for (int trial = 0; trial < 40; ++trial) {
      const unsigned n = 2 + static_cast<unsigned>(rng() % 4);
      auto ideal = random_squarefree(rng, n);
      if (ideal.is_unit()) continue;
      auto base = srtrunc::hochster_betti(ideal, Characteristic());
      for (unsigned k = *ideal.min_degree(); k <= *ideal.min_degree() + 2; ++k) {
        auto geq = srtrunc::truncate_geq(ideal, k);
        auto pol = srtrunc::polarize(geq);
        if (pol.target_n() > 14) continue;
        auto expected = srtrunc::hochster_betti(pol.ideal, Characteristic());
        expected.set_ambient(n);
        auto t = srtrunc::betti_geq_k(base, srtrunc::hilbert_numerator_monomial(geq), k);
        CHECK(t == expected);
      }
    }
  }
}
