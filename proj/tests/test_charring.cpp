#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superweyl/charring.hpp"

using namespace superweyl;

namespace {

Perm P(std::initializer_list<int> one) { return Perm::from_one_line(one); }

Weight W(std::initializer_list<long long> c) { return Weight::integral(c); }

std::vector<Perm> all_words(int k) {
  std::vector<int> one(static_cast<std::size_t>(k));
  std::iota(one.begin(), one.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_one_line(one));
  } while (std::next_permutation(one.begin(), one.end()));
  return out;
}

Weight random_weight(std::mt19937_64& rng, int dim, long long lo, long long hi) {
  std::uniform_int_distribution<long long> coord(lo, hi);
  std::vector<long long> c(static_cast<std::size_t>(dim));
  for (auto& x : c) x = coord(rng);
  return Weight::integral(std::move(c));
}

LaurentPoly random_poly(std::mt19937_64& rng, int dim, int terms) {
  LaurentPoly p(dim);
  std::uniform_int_distribution<long long> coeff(-4, 4);
  for (int t = 0; t < terms; ++t)
    p.add_term(random_weight(rng, dim, -3, 3), coeff(rng));
  return p;
}

// Classical Weyl dimension through the even group: the value of the even
// character at 1 equals prod (lambda + rho, a^vee) / (rho0/2, a^vee).
Rat dimension_formula(const Weight& lam, const RootSystem& sys) {
  Rat num(1), den(1);
  Weight shifted = lam + sys.rho;
  Weight half_rho0 = sys.rho0.halved();
  for (const Root& a : sys.phi0_plus) {
    num *= pair_coroot(shifted, a);
    den *= pair_coroot(half_rho0, a);
  }
  return num / den;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPoly p = LaurentPoly::monomial(W({1, 0})) +
                  LaurentPoly::monomial(W({0, 1}), -1);
  CHECK(p.term_count() == 2);
  CHECK((p - p).is_zero());
  CHECK(p * LaurentPoly::unit(2) == p);
  CHECK(evaluate_dimension(p) == 0);
  LaurentPoly q = p * p;
  CHECK(q.coeff_at(W({1, 1})) == -2);
  CHECK(q.coeff_at(W({2, 0})) == 1);
  LaurentPoly collapse = LaurentPoly::monomial(W({1, 0}));
  collapse.add_term(W({1, 0}), -1);
  CHECK(collapse.is_zero());
}

TEST_CASE("exact division golden cases") {
  // (x^2 - y^2) / (x - y) = x + y.
  LaurentPoly f = LaurentPoly::monomial(W({2, 0})) +
                  LaurentPoly::monomial(W({0, 2}), -1);
  LaurentPoly g = LaurentPoly::monomial(W({1, 0})) +
                  LaurentPoly::monomial(W({0, 1}), -1);
  auto q = exact_divide(f, g);
  REQUIRE(q);
  CHECK(*q == LaurentPoly::monomial(W({1, 0})) + LaurentPoly::monomial(W({0, 1})));

  // Laurent shift: (1 - x^-2 y^2) / (1 - x^-1 y) = 1 + x^-1 y.
  LaurentPoly f2 = LaurentPoly::unit(2) + LaurentPoly::monomial(W({-2, 2}), -1);
  LaurentPoly g2 = LaurentPoly::unit(2) + LaurentPoly::monomial(W({-1, 1}), -1);
  auto q2 = exact_divide(f2, g2);
  REQUIRE(q2);
  CHECK(*q2 == LaurentPoly::unit(2) + LaurentPoly::monomial(W({-1, 1})));

  // Monomial divisibility failure.
  LaurentPoly h = LaurentPoly::monomial(W({2, 0})) + LaurentPoly::monomial(W({0, 2}));
  CHECK_FALSE(exact_divide(h, g));

  // Coefficient divisibility failure.
  CHECK_FALSE(exact_divide(LaurentPoly::monomial(W({1, 0}), 3),
                           LaurentPoly::monomial(W({1, 0}), 2)));
  CHECK(exact_divide(LaurentPoly::monomial(W({1, 0}), 6),
                     LaurentPoly::monomial(W({1, 0}), 2)));

  CHECK_THROWS_AS(exact_divide(f, LaurentPoly::zero(2)), std::invalid_argument);
  CHECK(exact_divide(LaurentPoly::zero(2), g)->is_zero());
}

TEST_CASE("exact division round trips on random products") {
  std::mt19937_64 rng(11);
  int nontrivial = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly f = random_poly(rng, 3, 4);
    LaurentPoly g = random_poly(rng, 3, 3);
    if (g.is_zero()) continue;
    auto q = exact_divide(f * g, g);
    REQUIRE(q);
    CHECK(*q == f);
    if (!f.is_zero()) ++nontrivial;
  }
  CHECK(nontrivial > 150);
}

TEST_CASE("antisymmetrize basics") {
  Superdim d11(1, 1);
  CHECK(antisymmetrize(W({3, -1}), d11) == LaurentPoly::monomial(W({3, -1})));

  Superdim d21(2, 1);
  // Repeated first-block coordinate kills the alternant.
  CHECK(antisymmetrize(W({2, 2, 0}), d21).is_zero());
  LaurentPoly a = antisymmetrize(W({2, 0, 1}), d21);
  CHECK(a == LaurentPoly::monomial(W({2, 0, 1})) +
                 LaurentPoly::monomial(W({0, 2, 1}), -1));
}

TEST_CASE("even Weyl character golden values") {
  Superdim d(2, 1);
  RootSystem sys23 = root_system(d, P({1, 3, 2}));
  for (long long c : {0LL, 5LL, -3LL})
    CHECK(weyl_character_even(W({1, 0, c}), sys23) ==
          LaurentPoly::monomial(W({1, 0, c})));

  RootSystem id21 = root_system(d, Perm::identity(3));
  for (long long a : {0LL, 2LL, -1LL})
    CHECK(weyl_character_even(W({a, a, 4}), id21) ==
          LaurentPoly::monomial(W({a, a, 4})));

  // Vanishing: the alternant dies on within-block repeats of lambda + rho.
  CHECK(weyl_character_even(W({1, 1, 0}), sys23).is_zero());

  RootSystem gl11 = root_system(Superdim(1, 1), Perm::identity(2));
  CHECK(weyl_character_even(W({4, -7}), gl11) == LaurentPoly::monomial(W({4, -7})));
}

TEST_CASE("even Weyl character dimension oracle") {
  std::mt19937_64 rng(13);
  for (const Superdim& d : {Superdim(2, 1), Superdim(2, 2), Superdim(3, 1)}) {
    for (const Perm& w : all_words(d.total())) {
      RootSystem sys = root_system(d, w);
      for (int trial = 0; trial < 8; ++trial) {
        Weight lam = random_weight(rng, d.total(), -4, 4);
        Rat expected = dimension_formula(lam, sys);
        REQUIRE(expected.denominator() == 1);
        CHECK(evaluate_dimension(weyl_character_even(lam, sys)) ==
              Coeff(expected.numerator()));
      }
    }
  }
}

TEST_CASE("even Weyl character symmetry after bookkeeping") {
  // e^{rho - rho0/2} = e^{-rho1/2} times the character is W-symmetric for
  // every Borel; the raw character is symmetric for block-preserving words.
  std::mt19937_64 rng(17);
  for (const Superdim& d : {Superdim(2, 1), Superdim(2, 2)}) {
    for (const Perm& w : all_words(d.total())) {
      RootSystem sys = root_system(d, w);
      Weight shift = sys.rho - sys.rho0.halved();
      for (int trial = 0; trial < 5; ++trial) {
        Weight lam = random_weight(rng, d.total(), -3, 3);
        LaurentPoly sym = LaurentPoly::monomial(shift) *
                          weyl_character_even(lam, sys);
        for (const Perm& u : weyl_group(d)) {
          LaurentPoly moved(d.total());
          for (const auto& [e, c] : sym.terms())
            moved.add_term(permute_weight(u, Weight::halves(e)), c);
          CHECK(moved == sym);
        }
      }
    }
  }
}

TEST_CASE("denominator identity in half-sum form") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      Superdim d(m, n);
      std::vector<Perm> words =
          m + n <= 5 ? all_words(m + n) : std::vector<Perm>{Perm::identity(m + n)};
      for (const Perm& w : words) {
        RootSystem sys = root_system(d, w);
        LaurentPoly lhs = LaurentPoly::unit(d.total());
        for (const Root& a : sys.phi0_plus) {
          Weight half = a.to_weight(d.total()).halved();
          lhs = lhs * (LaurentPoly::monomial(half) +
                       LaurentPoly::monomial(-half, -1));
        }
        CHECK(lhs == antisymmetrize(sys.rho0.halved(), d));
      }
    }
  }
}
