#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "superweyl/roots.hpp"

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

}  // namespace

TEST_CASE("supersymmetric form and coroots") {
  Superdim d(2, 1);
  CHECK(bilinear_form(epsilon(0, 3), epsilon(0, 3), d) == Rat(1));
  CHECK(bilinear_form(epsilon(2, 3), epsilon(2, 3), d) == Rat(-1));
  CHECK(bilinear_form(epsilon(0, 3), epsilon(1, 3), d) == Rat(0));

  Root even(0, 1), odd(0, 2);
  CHECK(even.parity(d) == 0);
  CHECK(odd.parity(d) == 1);
  CHECK(even.coroot(d) == W({1, -1, 0}));
  CHECK(odd.coroot(d) == W({1, 0, 1}));  // eps'_1 - eps'_3 = eps_1 + eps_3

  // (mu, alpha^vee) = mu_i - mu_j for both parities.
  Weight mu = W({4, 1, -2});
  CHECK(pair_coroot(mu, even) == Rat(3));
  CHECK(pair_coroot(mu, odd) == Rat(6));
  CHECK(pair_root(mu, odd, d) == Rat(2));  // sigma_1 mu_1 - sigma_3 mu_3
  CHECK(pair_root(mu, odd, d) == bilinear_form(mu, odd.to_weight(3), d));
  CHECK(pair_coroot(mu, odd) == bilinear_form(mu, odd.coroot(d), d));
}

TEST_CASE("reflection in an even root is a transposition") {
  Superdim d(2, 1);
  CHECK(reflect(Root(0, 1), W({4, 1, -2}), d) == W({1, 4, -2}));
  CHECK_THROWS_AS(reflect(Root(0, 2), W({4, 1, -2}), d), std::invalid_argument);
}

TEST_CASE("parity function counts the odd block mod 2") {
  Superdim d(2, 1);
  CHECK(parity_function(W({1, 0, 5}), d) == 1);
  CHECK(parity_function(W({7, -3, 4}), d) == 0);
  CHECK(parity_function(W({0, 0, -3}), d) == 1);
}

TEST_CASE("GL(2|1) golden root systems") {
  Superdim d(2, 1);

  RootSystem sys23 = root_system(d, P({1, 3, 2}));
  CHECK(sys23.phi0_plus == std::vector<Root>{Root(0, 1)});
  CHECK(sys23.phi1_plus == std::vector<Root>{Root(0, 2), Root(2, 1)});
  CHECK(sys23.simple == std::vector<Root>{Root(0, 2), Root(2, 1)});
  CHECK(sys23.rho0 == W({1, -1, 0}));
  CHECK(sys23.rho1 == W({1, -1, 0}));
  CHECK(sys23.rho == W({0, 0, 0}));
  CHECK_FALSE(sys23.standard);

  RootSystem sys132 = root_system(d, P({3, 1, 2}));
  CHECK(sys132.simple == std::vector<Root>{Root(2, 0), Root(0, 1)});
  CHECK(sys132.rho == W({1, 0, -1}));
  CHECK(sys132.standard);

  RootSystem id21 = root_system(d, Perm::identity(3));
  CHECK(id21.rho0 == W({1, -1, 0}));
  CHECK(id21.rho1 == W({1, 1, -2}));
  CHECK(id21.rho == W({0, -1, 1}));
  CHECK(id21.standard);
}

TEST_CASE("GL(1|1) and GL(2|2) golden rho vectors") {
  RootSystem gl11 = root_system(Superdim(1, 1), Perm::identity(2));
  CHECK(gl11.rho == Weight::halves({-1, 1}));
  CHECK(gl11.phi0_plus.empty());
  CHECK(gl11.standard);

  Superdim d22(2, 2);
  RootSystem sys23 = root_system(d22, P({1, 3, 2, 4}));
  CHECK(sys23.rho1 == W({2, 0, 0, -2}));

  RootSystem sys1342 = root_system(d22, P({3, 1, 4, 2}));
  int odd = 0;
  for (const Root& a : sys1342.simple) odd += a.parity(d22);
  CHECK(odd == 3);
  CHECK_FALSE(sys1342.standard);

  CHECK(root_system(d22, Perm::identity(4)).rho ==
        Weight::halves({-1, -3, 3, 1}));
}

TEST_CASE("decompose splits into block part and shuffle") {
  Superdim d(2, 1);
  Decomposition dec = decompose(P({3, 2, 1}), d);
  CHECK(dec.w0.block_preserving(2));
  CHECK(dec.w0.compose(dec.w1) == P({3, 2, 1}));
  CHECK(dec.w1 == P({3, 1, 2}));
  CHECK(dec.w0 == P({2, 1, 3}));
}

TEST_CASE("decomposition is a bijection W x shuffles -> S_{m+n}") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; m + n <= 6; ++n) {
      Superdim d(m, n);
      std::set<std::string> seen;
      int shuffles = 0;
      for (const Perm& w : all_words(m + n)) {
        Decomposition dec = decompose(w, d);
        // Exhaustive uniqueness: every w gets a distinct valid pair, and the
        // factors multiply back (asserted internally as well).
        seen.insert(dec.w0.one_line() + "|" + dec.w1.one_line());
        if (dec.w0.is_identity()) ++shuffles;
      }
      int fact_total = 1;
      for (int i = 2; i <= m + n; ++i) fact_total *= i;
      CHECK(static_cast<int>(seen.size()) == fact_total);
      int fm = 1, fn = 1;
      for (int i = 2; i <= m; ++i) fm *= i;
      for (int i = 2; i <= n; ++i) fn *= i;
      CHECK(shuffles == fact_total / (fm * fn));
    }
  }
}

TEST_CASE("weyl group enumeration") {
  Superdim d(2, 2);
  std::vector<Perm> group = weyl_group(d);
  REQUIRE(group.size() == 4);
  for (const Perm& u : group) CHECK(u.block_preserving(2));
  CHECK(group.front().is_identity());
}

TEST_CASE("length and sign") {
  Superdim d(2, 1);
  RootSystem sys23 = root_system(d, P({1, 3, 2}));
  Perm s12 = P({2, 1, 3});
  auto [len, sign] = length_and_sign(s12, sys23);
  CHECK(len == 1);
  CHECK(sign == -1);
  CHECK(length_and_sign(Perm::identity(3), sys23) == std::pair{0, 1});

  // Longest element has length m(m-1)/2 + n(n-1)/2 in every twisted system.
  Superdim d32(3, 2);
  for (const Perm& w : {Perm::identity(5), P({4, 1, 5, 2, 3})}) {
    RootSystem sys = root_system(d32, w);
    int longest = 0;
    for (const Perm& u : weyl_group(d32))
      longest = std::max(longest, length_and_sign(u, sys).first);
    CHECK(longest == 3 + 1);
  }
}

TEST_CASE("dot action") {
  Superdim d(2, 1);
  RootSystem id21 = root_system(d, Perm::identity(3));
  Perm s12 = P({2, 1, 3});
  // u ._w lambda = u(lambda + rho) - rho with rho = (0,-1,1).
  CHECK(dot_action(s12, W({3, 0, 4}), id21) == W({-1, 4, 4}));
  CHECK(dot_action(Perm::identity(3), W({3, 0, 4}), id21) == W({3, 0, 4}));
  CHECK_THROWS_AS(dot_action(P({1, 3, 2}), W({0, 0, 0}), id21),
                  std::invalid_argument);

  std::mt19937_64 rng(7);
  for (const Perm& w : all_words(3)) {
    RootSystem sys = root_system(d, w);
    for (int trial = 0; trial < 10; ++trial) {
      Weight lam = random_weight(rng, 3, -6, 6);
      for (const Perm& u : weyl_group(d)) {
        Weight moved = dot_action(u, lam, sys);
        CHECK(moved.is_integral());
        CHECK(dot_action(u.inverse(), moved, sys) == lam);
      }
    }
  }
}

TEST_CASE("odd reflection golden case and involution") {
  Superdim d(2, 1);
  RootSystem sys23 = root_system(d, P({1, 3, 2}));
  RootSystem refl = odd_reflect(sys23, Root(0, 2));
  CHECK(refl.w == P({3, 1, 2}));
  CHECK(refl.rho == sys23.rho + Root(0, 2).to_weight(3));
  RootSystem back = odd_reflect(refl, Root(2, 0));
  CHECK(back.w == sys23.w);

  CHECK_THROWS_AS(odd_reflect(sys23, Root(2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(odd_reflect(sys23, Root(0, 1)), std::invalid_argument);
}

TEST_CASE("odd reflections preserve the even positive roots") {
  Superdim d(2, 2);
  for (const Perm& w : all_words(4)) {
    RootSystem sys = root_system(d, w);
    for (const Root& a : sys.simple) {
      if (a.parity(d) != 1) continue;
      RootSystem refl = odd_reflect(sys, a);  // construction asserts Phi0+
      CHECK(refl.rho == sys.rho + a.to_weight(4));
    }
  }
}

TEST_CASE("walk to standard golden cases") {
  Superdim d(2, 1);
  WalkResult walk23 = walk_to_standard(root_system(d, P({1, 3, 2})));
  CHECK(walk23.t == 1);
  CHECK(walk23.steps == std::vector<Root>{Root(0, 2)});
  CHECK(walk23.end.w == P({3, 1, 2}));
  CHECK(walk23.delta_rho == W({1, 0, -1}));

  CHECK(walk_to_standard(root_system(d, P({3, 1, 2}))).t == 0);
  CHECK(walk_to_standard(root_system(d, Perm::identity(3))).t == 0);
}

TEST_CASE("walk invariants for every Borel with m+n <= 5") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; m + n <= 5; ++n) {
      Superdim d(m, n);
      for (const Perm& w : all_words(m + n)) {
        RootSystem sys = root_system(d, w);
        WalkResult walk = walk_to_standard(sys);
        CHECK(walk.end.standard);
        CHECK(walk.t == static_cast<int>(walk.steps.size()));
        CHECK(walk.delta_rho == walk.end.rho - sys.rho);
        // Odd reflections never touch the block-preserving part.
        CHECK(decompose(walk.end.w, d).w0 == decompose(w, d).w0);
        if (sys.standard) CHECK(walk.t == 0);
        Weight total(static_cast<std::size_t>(m + n));
        RootSystem cur = sys;
        for (const Root& a : walk.steps) {
          CHECK(a.parity(d) == 1);
          cur = odd_reflect(cur, a);
          total = total + a.to_weight(m + n);
        }
        CHECK(cur.w == walk.end.w);
        CHECK(total == walk.delta_rho);
      }
    }
  }
}

TEST_CASE("perm parsing and printing") {
  CHECK(Perm::parse("1,3,2"));
  CHECK(Perm::parse("1,3,2")->one_line() == "1,3,2");
  CHECK_FALSE(Perm::parse("1,3,3"));
  CHECK_FALSE(Perm::parse("0,1"));
  CHECK_FALSE(Perm::parse(""));
  CHECK_FALSE(Perm::parse("a,b"));
  CHECK(P({3, 1, 2}).inverse() == P({2, 3, 1}));
  CHECK(P({2, 1, 3}).sign() == -1);
}
