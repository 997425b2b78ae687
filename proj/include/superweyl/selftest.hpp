#pragma once

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "superweyl/gl21.hpp"

namespace superweyl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace selftest_detail {

[[noreturn]] inline void reject(const std::string& msg) {
  throw std::runtime_error(msg);
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) reject(msg);
}

template <class F>
CriterionResult run_criterion(int id, const std::string& name, F&& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline Weight random_weight(std::mt19937_64& rng, int dim, long long lo,
                            long long hi) {
  std::uniform_int_distribution<long long> coord(lo, hi);
  std::vector<long long> c(static_cast<std::size_t>(dim));
  for (auto& x : c) x = coord(rng);
  return Weight::integral(std::move(c));
}

inline std::vector<Superdim> dims_up_to(int max_total) {
  std::vector<Superdim> out;
  for (int m = 1; m < max_total; ++m)
    for (int n = 1; m + n <= max_total; ++n) out.emplace_back(m, n);
  return out;
}

inline std::vector<Perm> all_words(int k) {
  std::vector<int> one(static_cast<std::size_t>(k));
  std::iota(one.begin(), one.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_one_line(one));
  } while (std::next_permutation(one.begin(), one.end()));
  return out;
}

inline std::string criterion_1() {
  int values = 0;
  auto expect = [&](bool ok, const std::string& what) {
    require(ok, "golden mismatch: " + what);
    ++values;
  };
  Superdim d21(2, 1);
  RootSystem sys23 = root_system(d21, Perm::from_one_line({1, 3, 2}));
  expect(sys23.rho == Weight::integral({0, 0, 0}), "rho of GL(2|1) 1,3,2");
  expect(!sys23.standard, "1,3,2 is not standard");
  expect(kempf_bounds(sys23).k == std::map<int, long long>{{1, 2}},
         "threshold of GL(2|1) 1,3,2");
  RootSystem sys132 = root_system(d21, Perm::from_one_line({3, 1, 2}));
  expect(sys132.standard, "3,1,2 is standard");
  expect(sys132.rho == Weight::integral({1, 0, -1}), "rho of GL(2|1) 3,1,2");
  expect(kempf_bounds(sys132).k == std::map<int, long long>{{1, 1}},
         "threshold of GL(2|1) 3,1,2");
  WalkResult w23 = walk_to_standard(sys23);
  expect(w23.t == 1 && w23.steps == std::vector<Root>{Root(0, 2)},
         "walk from 1,3,2 is one reflection through e1-e3");
  expect(w23.end.w == sys132.w, "walk from 1,3,2 ends at 3,1,2");
  expect(walk_to_standard(sys132).t == 0, "walk from 3,1,2 is empty");
  RootSystem id21 = root_system(d21, Perm::identity(3));
  expect(id21.rho0 == Weight::integral({1, -1, 0}), "rho0 of GL(2|1) id");
  expect(id21.rho1 == Weight::integral({1, 1, -2}), "rho1 of GL(2|1) id");
  expect(id21.rho == Weight::integral({0, -1, 1}), "rho of GL(2|1) id");
  RootSystem gl11 = root_system(Superdim(1, 1), Perm::identity(2));
  expect(gl11.rho == Weight::halves({-1, 1}), "rho of GL(1|1) id");
  Superdim d22(2, 2);
  RootSystem sys23_22 = root_system(d22, Perm::from_one_line({1, 3, 2, 4}));
  expect(sys23_22.rho1 == Weight::integral({2, 0, 0, -2}),
         "rho1 of GL(2|2) 1,3,2,4");
  RootSystem sys1342 = root_system(d22, Perm::from_one_line({3, 1, 4, 2}));
  int odd_simple = 0;
  for (const Root& a : sys1342.simple) odd_simple += a.parity(d22);
  expect(odd_simple == 3, "GL(2|2) 3,1,4,2 has three odd simple roots");
  expect(kempf_bounds(sys1342).k == std::map<int, long long>{{1, 3}, {3, 3}},
         "thresholds of GL(2|2) 3,1,4,2");
  RootSystem id22 = root_system(d22, Perm::identity(4));
  expect(id22.rho == Weight::halves({-1, -3, 3, 1}), "rho of GL(2|2) id");
  std::ostringstream os;
  os << values << " exact root-data values";
  return os.str();
}

inline std::string criterion_2() {
  int systems = 0;
  for (const Superdim& d : dims_up_to(6)) {
    for (const Perm& w : all_words(d.total())) {
      if (!decompose(w, d).w0.is_identity()) continue;
      kempf_bounds(root_system(d, w));  // asserts direct == closed form
      ++systems;
    }
  }
  require(systems == 114, "expected 114 shuffle Borels with m+n <= 6");
  return "direct lattice count == closed form on 114 shuffle Borels";
}

inline std::string criterion_3() {
  std::mt19937_64 rng(0xC3);
  int checks = 0;
  for (const Superdim& d :
       {Superdim(1, 1), Superdim(2, 1), Superdim(1, 2), Superdim(2, 2)}) {
    for (const Perm& w : all_words(d.total())) {
      RootSystem sys = root_system(d, w);
      for (int trial = 0; trial < 50; ++trial) {
        Weight lam = random_weight(rng, d.total(), -5, 5);
        EulerCharacter ec = chi_character(lam, sys);
        require(verify_clearing(ec), "clearing failed at " + lam.str() +
                                         " for w=" + w.one_line());
        ++checks;
      }
    }
  }
  require(checks == (2 + 6 + 6 + 24) * 50, "clearing coverage shrank");
  return "1900 cleared Euler characteristics across every Borel of "
         "GL(1|1), GL(2|1), GL(1|2), GL(2|2)";
}

inline std::string criterion_4() {
  std::mt19937_64 rng(0xC4);
  int checks = 0;
  for (const Superdim& d : dims_up_to(4)) {
    for (const Perm& w : all_words(d.total())) {
      RootSystem sys = root_system(d, w);
      for (const Root& a : sys.simple) {
        if (a.parity(d) != 1) continue;
        for (int trial = 0; trial < 25; ++trial) {
          Weight lam = random_weight(rng, d.total(), -5, 5);
          require(check_odd_invariance(lam, sys, a),
                  "odd invariance failed at " + lam.str() + " for w=" +
                      w.one_line() + " alpha=" + a.str());
          ++checks;
        }
      }
    }
  }
  require(checks > 0, "no odd simple roots visited");
  std::ostringstream os;
  os << checks << " invariance checks over every odd simple root, m+n <= 4";
  return os.str();
}

inline std::string criterion_5() {
  Superdim d(1, 1);
  Weight alpha = Root(0, 1).to_weight(2);
  int checks = 0;
  for (long long p : {0LL, 2LL, 3LL, 5LL}) {
    Characteristic ch(p);
    for (long long l1 = -5; l1 <= 5; ++l1) {
      for (long long l2 = -5; l2 <= 5; ++l2) {
        Weight lam = Weight::integral({l1, l2});
        bool simple_expected = p == 0 ? l1 + l2 != 0 : (l1 + l2) % p != 0;
        for (int eps : {0, 1}) {
          for (Gl11Side side : {Gl11Side::Minus, Gl11Side::Plus}) {
            Gl11Structure g = gl11_h0_structure(lam, eps, side, ch);
            Weight other =
                side == Gl11Side::Minus ? lam - alpha : lam + alpha;
            require(g.simple == simple_expected, "gl11 simplicity at " + lam.str());
            require(g.abs_lambda == l1 + l2, "gl11 |lambda|");
            require(g.weights[0].weight == lam && g.weights[0].parity == eps,
                    "gl11 base weight");
            require(g.weights[1].weight == other &&
                        g.weights[1].parity == 1 - eps,
                    "gl11 partner weight");
            require(g.character == LaurentPoly::monomial(lam) +
                                       LaurentPoly::monomial(other),
                    "gl11 character");
            if (g.simple) {
              require(!g.series, "simple gl11 module has no series");
              if (side == Gl11Side::Plus)
                require(g.iso_minus_target &&
                            g.iso_minus_target->weight == lam + alpha &&
                            g.iso_minus_target->parity == 1 - eps,
                        "gl11 plus-side isomorphism");
              else
                require(!g.iso_minus_target, "minus side records no iso");
            } else {
              require(g.series && (*g.series)[0].weight == other &&
                          (*g.series)[0].parity == 1 - eps &&
                          (*g.series)[1].weight == lam &&
                          (*g.series)[1].parity == eps,
                      "gl11 series layers");
            }
            Perm word = side == Gl11Side::Minus
                            ? Perm::identity(2)
                            : Perm::from_one_line({2, 1});
            RootSystem sys = root_system(d, word);
            require(g.character == chi_character(lam, sys).poly,
                    "gl11 character equals chi");
            ParabolicStructure ps = parabolic_ind_structure(
                lam, eps, sys.simple[0], sys, ch);
            require(ps.simple == g.simple, "parabolic simplicity matches");
            require(ps.weights[0].weight == lam &&
                        ps.weights[1].weight == other,
                    "parabolic weights match");
            if (!g.simple)
              require(ps.b_series && (*ps.b_series)[0].weight == other &&
                          (*ps.b_series)[1].weight == lam,
                      "parabolic series matches");
            require(one_dim_weight(lam, d, ch) == !g.simple,
                    "one-dimensionality matches simplicity");
            Verdict v = bbw_verdict(lam, eps, sys, ch);
            require(v.tag == VerdictTag::ConcentratedAt && v.degree == 0,
                    "GL(1|1) cohomology concentrates in degree 0");
            require(v.character && *v.character == g.character,
                    "GL(1|1) verdict character");
            ++checks;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << checks << " structure reports over the 11x11 box, p in {0,2,3,5}";
  return os.str();
}

inline std::string criterion_6() {
  int runs = 0;
  std::vector<std::string> bad;
  for (long long p : {0LL, 2LL, 3LL, 5LL}) {
    Characteristic ch(p);
    for (long long a = -4; a <= 4; ++a) {
      for (long long b = -4; b <= 4; ++b) {
        for (long long c = -4; c <= 4; ++c) {
          CrosscheckReport rep =
              crosscheck_engine(Weight::integral({a, b, c}), 0, ch);
          if (!rep.clean()) {
            for (const auto& side : {rep.side23, rep.side132})
              for (const std::string& s : side.contradictions)
                if (bad.size() < 3)
                  bad.push_back("p=" + std::to_string(p) + " w=" +
                                side.w.one_line() + ": " + s);
          }
          ++runs;
        }
      }
    }
  }
  if (!bad.empty()) {
    std::string msg = "contradictions:";
    for (const std::string& s : bad) msg += " [" + s + "]";
    reject(msg);
  }
  require(runs == 4 * 729, "crosscheck coverage shrank");
  return "0 contradictions in 2916 crosschecks (both Borels, p in {0,2,3,5})";
}

inline std::string criterion_7() {
  int family = 0, off_family = 0;
  for (long long p : {0LL, 3LL}) {
    Characteristic ch(p);
    for (long long a = -3; a <= 3; ++a) {
      for (long long t = -3; t <= 3; ++t) {
        Weight lam = Weight::integral({a, a, -a + p * t});
        Gl21Answer g = classify_23(lam, 0, ch);
        require(g.h0.kind == CohKind::OneDim && g.h1.kind == CohKind::OneDim,
                "family weight must give OneDim/OneDim at " + lam.str());
        require(g.h0.weight == lam && g.h1.weight == lam,
                "family cohomology weight is lambda itself");
        require(g.chi.is_zero(), "family chi vanishes");
        require(one_dim_weight(lam, Superdim(2, 1), ch),
                "family weight is one-dimensional");
        ++family;
      }
    }
    for (long long a = -6; a <= 6; ++a) {
      for (long long c = -6; c <= 6; ++c) {
        Weight lam = Weight::integral({a, a, c});
        if (one_dim_weight(lam, Superdim(2, 1), ch)) continue;
        Gl21Answer g = classify_23(lam, 0, ch);
        require(g.h0.kind == CohKind::Zero && g.h1.kind == CohKind::Zero,
                "typical wall weight must vanish at " + lam.str());
        require(g.chi.is_zero(), "wall chi vanishes");
        ++off_family;
      }
    }
  }
  std::ostringstream os;
  os << family << " one-dimensional family weights and " << off_family
     << " vanishing wall weights, p in {0,3}";
  return os.str();
}

inline std::string criterion_8() {
  std::mt19937_64 rng(0xC8);
  long long law_checks = 0;
  for (const Superdim& d : dims_up_to(4)) {
    std::vector<Perm> group = weyl_group(d);
    for (const Perm& w : all_words(d.total())) {
      RootSystem sys = root_system(d, w);
      for (int trial = 0; trial < 20; ++trial) {
        Weight lam = random_weight(rng, d.total(), -6, 6);
        require(dot_action(Perm::identity(d.total()), lam, sys) == lam,
                "identity dot action");
        for (const Perm& u : group) {
          Weight ul = dot_action(u, lam, sys);
          for (const Perm& v : group) {
            require(dot_action(v, ul, sys) ==
                        dot_action(v.compose(u), lam, sys),
                    "dot action group law at " + lam.str());
            ++law_checks;
          }
        }
      }
    }
  }

  long long concentrated = 0, shifts = 0;
  auto sweep = [&](const Superdim& d, long long radius) {
    std::vector<Weight> box;
    std::vector<long long> c(static_cast<std::size_t>(d.total()), -radius);
    while (true) {
      box.push_back(Weight::integral(c));
      int i = 0;
      for (; i < d.total(); ++i) {
        if (c[static_cast<std::size_t>(i)] < radius) {
          ++c[static_cast<std::size_t>(i)];
          break;
        }
        c[static_cast<std::size_t>(i)] = -radius;
      }
      if (i == d.total()) break;
    }
    for (const Perm& w : all_words(d.total())) {
      RootSystem sys = root_system(d, w);
      for (long long p : {0LL, 3LL, 5LL}) {
        Characteristic ch(p);
        for (const Weight& lam : box) {
          Verdict v = bbw_verdict(lam, 0, sys, ch);
          if (v.tag != VerdictTag::ConcentratedAt) continue;
          ++concentrated;
          for (const Root& a : sys.simple) {
            if (a.parity(d) != 0) continue;
            EvenStep step = even_reflection_step(lam, a, sys, ch);
            if (step.kind != EvenStepKind::DegreeShift) continue;
            Verdict v2 = bbw_verdict(*step.target, 0, sys, ch);
            require(v2.tag == VerdictTag::ConcentratedAt,
                    "licensed shift must stay concentrated at " + lam.str());
            require(v2.degree == v.degree + 1,
                    "licensed shift must move the degree by exactly one at " +
                        lam.str());
            ++shifts;
          }
        }
      }
    }
  };
  sweep(Superdim(2, 1), 3);
  sweep(Superdim(1, 2), 3);
  sweep(Superdim(2, 2), 2);
  require(concentrated > 0 && shifts >= 100,
          "degree bookkeeping sweep was vacuous");
  std::ostringstream os;
  os << law_checks << " group-law checks; " << shifts
     << " licensed degree shifts all moved by exactly one";
  return os.str();
}

}  // namespace selftest_detail

inline std::vector<CriterionResult> run_acceptance_criteria() {
  using namespace selftest_detail;
  std::vector<CriterionResult> out;
  out.push_back(run_criterion(1, "golden-root-data", criterion_1));
  out.push_back(run_criterion(2, "kempf-closed-form-equivalence", criterion_2));
  out.push_back(run_criterion(3, "euler-clearing-identity", criterion_3));
  out.push_back(run_criterion(4, "odd-reflection-invariance", criterion_4));
  out.push_back(run_criterion(5, "gl11-h0-structure", criterion_5));
  out.push_back(run_criterion(6, "gl21-crosscheck-consistency", criterion_6));
  out.push_back(run_criterion(7, "gl21-one-dimensional-family", criterion_7));
  out.push_back(run_criterion(8, "dot-action-and-degree-bookkeeping", criterion_8));
  return out;
}

// Prints one PASS/FAIL line per criterion; returns true iff all passed.
inline bool print_acceptance(std::ostream& os) {
  std::vector<CriterionResult> results = run_acceptance_criteria();
  bool all = true;
  int passed = 0;
  for (const CriterionResult& r : results) {
    all = all && r.pass;
    passed += r.pass ? 1 : 0;
    os << (r.pass ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << " ("
       << std::fixed << std::setprecision(2) << r.seconds << "s): " << r.detail
       << '\n';
  }
  os << "ACCEPTANCE: " << passed << '/' << results.size() << " criteria passed"
     << std::endl;
  return all;
}

}  // namespace superweyl
