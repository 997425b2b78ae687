#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "superweyl/perm.hpp"
#include "superweyl/weight.hpp"

namespace superweyl {

// Root data of GL(m|n) for the Borel subgroup indexed by w: the positive
// roots are eps_{w(i)} - eps_{w(j)} for positions i < j, the simple ones are
// the consecutive differences. rho0/rho1 are the full sums of the even/odd
// positive roots and rho = (rho0 - rho1) / 2 (possibly half-integral).
struct RootSystem {
  Superdim dim;
  Perm w;
  std::vector<Root> phi_plus;   // position order: (i,j) lex over i < j
  std::vector<Root> phi0_plus;  // even subset, same order
  std::vector<Root> phi1_plus;  // odd subset, same order
  std::vector<Root> simple;     // simple[k] = eps_{w(k)} - eps_{w(k+1)}
  Weight rho0, rho1, rho;
  bool standard = false;  // exactly one odd simple root

  int total() const { return dim.total(); }
};

inline RootSystem root_system(const Superdim& d, const Perm& w) {
  check_input(w.size() == d.total(), "permutation size must equal m+n");
  RootSystem s;
  s.dim = d;
  s.w = w;
  int k = d.total();
  Weight r0(static_cast<std::size_t>(k)), r1(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Root a(w.apply(i), w.apply(j));
      s.phi_plus.push_back(a);
      if (a.parity(d) == 0) {
        s.phi0_plus.push_back(a);
        r0 = r0 + a.to_weight(k);
      } else {
        s.phi1_plus.push_back(a);
        r1 = r1 + a.to_weight(k);
      }
    }
  }
  for (int i = 0; i + 1 < k; ++i) s.simple.emplace_back(w.apply(i), w.apply(i + 1));
  s.rho0 = r0;
  s.rho1 = r1;
  s.rho = (r0 - r1).halved();
  check_internal(static_cast<int>(s.phi0_plus.size()) ==
                     d.m * (d.m - 1) / 2 + d.n * (d.n - 1) / 2,
                 "even positive root count");
  check_internal(static_cast<int>(s.phi1_plus.size()) == d.m * d.n,
                 "odd positive root count");
  int odd_simples = 0;
  for (const Root& a : s.simple) odd_simples += a.parity(d);
  check_internal(odd_simples >= 1, "every GL(m|n) Borel has an odd simple root");
  s.standard = odd_simples == 1;
  return s;
}

// u acting on weights by place permutation of epsilon coordinates:
// (u mu)_{u(i)} = mu_i.
inline Weight permute_weight(const Perm& u, const Weight& mu) {
  check_input(u.size() == static_cast<int>(mu.dim()),
              "permute_weight: dimension mismatch");
  std::vector<long long> out(mu.dim(), 0);
  for (int i = 0; i < u.size(); ++i)
    out[static_cast<std::size_t>(u.apply(i))] = mu.half(static_cast<std::size_t>(i));
  return Weight::halves(std::move(out));
}

// w = w0 ∘ w1 with w0 block preserving and w1^{-1} increasing on each block.
struct Decomposition {
  Perm w0, w1;
};

inline Decomposition decompose(const Perm& w, const Superdim& d) {
  check_input(w.size() == d.total(), "decompose: size mismatch");
  int k = d.total();
  std::vector<int> img(static_cast<std::size_t>(k), 0);
  int next1 = 0, next2 = d.m;
  // Positions holding first-block values get the first-block targets in
  // position order, so w1^{-1} lists those positions increasingly.
  for (int pos = 0; pos < k; ++pos) {
    if (w.apply(pos) < d.m)
      img[static_cast<std::size_t>(pos)] = next1++;
    else
      img[static_cast<std::size_t>(pos)] = next2++;
  }
  check_internal(next1 == d.m && next2 == k, "decompose: block counts");
  std::vector<int> one_based(img.begin(), img.end());
  for (auto& v : one_based) ++v;
  Decomposition dec;
  dec.w1 = Perm::from_one_line(one_based);
  dec.w0 = w.compose(dec.w1.inverse());
  check_internal(dec.w0.block_preserving(d.m), "decompose: w0 not block preserving");
  Perm w1inv = dec.w1.inverse();
  for (int i = 0; i + 1 < d.m; ++i)
    check_internal(w1inv.apply(i) < w1inv.apply(i + 1), "decompose: w1 not a shuffle");
  for (int i = d.m; i + 1 < k; ++i)
    check_internal(w1inv.apply(i) < w1inv.apply(i + 1), "decompose: w1 not a shuffle");
  check_internal(dec.w0.compose(dec.w1) == w, "decompose: product mismatch");
  return dec;
}

// The even Weyl group S_m x S_n as permutations of all m+n coordinates,
// enumerated in a fixed lexicographic order.
inline std::vector<Perm> weyl_group(const Superdim& d) {
  std::vector<int> b1(static_cast<std::size_t>(d.m));
  std::vector<int> b2(static_cast<std::size_t>(d.n));
  std::iota(b1.begin(), b1.end(), 1);
  std::iota(b2.begin(), b2.end(), d.m + 1);
  std::vector<Perm> out;
  std::sort(b1.begin(), b1.end());
  do {
    std::sort(b2.begin(), b2.end());
    do {
      std::vector<int> one;
      one.insert(one.end(), b1.begin(), b1.end());
      one.insert(one.end(), b2.begin(), b2.end());
      out.push_back(Perm::from_one_line(one));
    } while (std::next_permutation(b2.begin(), b2.end()));
  } while (std::next_permutation(b1.begin(), b1.end()));
  return out;
}

// Length of u relative to the system's even positive roots: the number of
// alpha in Phi0+ with u(alpha) negative. The sign (-1)^length equals det(u)
// regardless of which Borel's Phi0+ is used; that equality is asserted.
inline std::pair<int, int> length_and_sign(const Perm& u, const RootSystem& sys) {
  check_input(u.size() == sys.total() && u.block_preserving(sys.dim.m),
              "length_and_sign: u must lie in S_m x S_n");
  Perm pos_of = sys.w.inverse();
  int len = 0;
  for (const Root& a : sys.phi0_plus) {
    int ui = u.apply(a.i), uj = u.apply(a.j);
    if (pos_of.apply(ui) > pos_of.apply(uj)) ++len;
  }
  int sign = len % 2 == 0 ? 1 : -1;
  check_internal(sign == u.sign(), "length sign must match det(u)");
  return {len, sign};
}

// Dot action u ._w lambda = u(lambda + rho) - rho. Integral weights map to
// integral weights; that is asserted, not assumed.
inline Weight dot_action(const Perm& u, const Weight& lam, const RootSystem& sys) {
  check_input(lam.is_integral(), "dot_action requires an integral weight");
  check_input(u.size() == sys.total() && u.block_preserving(sys.dim.m),
              "dot_action: u must lie in S_m x S_n");
  Weight out = permute_weight(u, lam + sys.rho) - sys.rho;
  check_internal(out.is_integral(), "dot action broke integrality");
  return out;
}

// Odd reflection in an odd simple root: the Borel changes by swapping the two
// adjacent positions, Phi0+ is unchanged and rho gains alpha.
inline RootSystem odd_reflect(const RootSystem& sys, const Root& alpha) {
  check_input(alpha.parity(sys.dim) == 1, "odd_reflect requires an odd root");
  int k = -1;
  for (std::size_t t = 0; t < sys.simple.size(); ++t)
    if (sys.simple[t] == alpha) k = static_cast<int>(t);
  check_input(k >= 0, "odd_reflect: root is not simple for this Borel");
  Perm swapped = sys.w.compose(Perm::transposition(sys.total(), k, k + 1));
  RootSystem out = root_system(sys.dim, swapped);
  check_internal(out.rho == sys.rho + alpha.to_weight(sys.total()),
                 "odd reflection must shift rho by alpha");
  std::vector<Root> a = sys.phi0_plus, b = out.phi0_plus;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  check_internal(a == b, "odd reflection must preserve even positive roots");
  return out;
}

struct WalkResult {
  std::vector<Root> steps;  // odd simple roots in the order applied
  int t = 0;                // number of reflections, steps.size()
  Weight delta_rho;         // rho(end) - rho(start), the sum of the steps
  RootSystem end;
};

// Shortest chain of odd reflections from sys to a Borel with exactly one odd
// simple root. Breadth-first over Borel words; neighbors are explored in
// ascending simple-root position, so ties resolve to the lexicographically
// first shortest chain. Odd reflections preserve the block-preserving part
// w0, and the chain sorting the blocks to contiguity always exists.
inline WalkResult walk_to_standard(const RootSystem& sys) {
  WalkResult res;
  res.end = sys;
  res.delta_rho = Weight(static_cast<std::size_t>(sys.total()));
  if (sys.standard) return res;

  using Key = std::vector<int>;
  auto key_of = [](const Perm& p) {
    Key k(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) k[static_cast<std::size_t>(i)] = p.apply(i);
    return k;
  };
  std::map<Key, std::pair<Key, Root>> parent;
  std::set<Key> visited{key_of(sys.w)};
  std::deque<Perm> queue{sys.w};

  auto finish = [&](const Perm& goal) {
    std::vector<Root> steps;
    Key cur = key_of(goal);
    Key start = key_of(sys.w);
    while (cur != start) {
      auto it = parent.find(cur);
      check_internal(it != parent.end(), "walk: broken parent chain");
      steps.push_back(it->second.second);
      cur = it->second.first;
    }
    std::reverse(steps.begin(), steps.end());
    res.steps = steps;
    res.t = static_cast<int>(steps.size());
    res.end = root_system(sys.dim, goal);
    Weight delta(static_cast<std::size_t>(sys.total()));
    for (const Root& a : steps) delta = delta + a.to_weight(sys.total());
    res.delta_rho = delta;
    check_internal(res.delta_rho == res.end.rho - sys.rho,
                   "walk: step sum must equal the rho difference");
    return res;
  };

  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    RootSystem cur_sys = root_system(sys.dim, cur);
    for (int k = 0; k + 1 < sys.total(); ++k) {
      const Root& a = cur_sys.simple[static_cast<std::size_t>(k)];
      if (a.parity(sys.dim) != 1) continue;
      Perm next = cur.compose(Perm::transposition(sys.total(), k, k + 1));
      Key nk = key_of(next);
      if (visited.count(nk)) continue;
      visited.insert(nk);
      parent.emplace(nk, std::make_pair(key_of(cur), a));
      RootSystem next_sys = root_system(sys.dim, next);
      if (next_sys.standard) return finish(next);
      queue.push_back(next);
    }
  }
  fail_internal("walk: no standard Borel reachable");
}

}  // namespace superweyl
