#pragma once

#include <vector>

#include "superweyl/verdicts.hpp"

namespace superweyl {

enum class CohKind { Zero, Nonzero, OneDim };

inline const char* coh_kind_name(CohKind k) {
  switch (k) {
    case CohKind::Zero: return "Zero";
    case CohKind::Nonzero: return "Nonzero";
    case CohKind::OneDim: return "OneDim";
  }
  fail_internal("unreachable cohomology kind");
}

// One cohomology group of the GL(2|1) flag variety, up to the information
// the classification pins down: zero, nonzero with known character, or the
// one-dimensional representation of a recorded weight.
struct CohClass {
  CohKind kind = CohKind::Zero;
  std::optional<LaurentPoly> character;  // Nonzero
  std::optional<Weight> weight;          // OneDim

  LaurentPoly ch(int dim) const {
    switch (kind) {
      case CohKind::Zero: return LaurentPoly::zero(dim);
      case CohKind::Nonzero: return *character;
      case CohKind::OneDim: return LaurentPoly::monomial(*weight);
    }
    fail_internal("unreachable cohomology kind");
  }
};

// Full answer for GL(2|1): only H^0 and H^1 can be nonzero, and
// ch H^0 - ch H^1 = chi always (both facts asserted on construction).
struct Gl21Answer {
  static constexpr int max_degree = 1;  // H^k = 0 for all k >= 2

  CohClass h0, h1;
  long long regime = 0;  // (lambda, beta^vee) = lambda_1 - lambda_2
  bool atypical = false;
  LaurentPoly chi;
  std::string provenance;
};

namespace detail {

inline void check_gl21_books(const Gl21Answer& g) {
  check_internal(g.h0.ch(3) - g.h1.ch(3) == g.chi,
                 "gl21: ch H0 - ch H1 must equal chi");
}

inline Weight require_gl21_weight(const Weight& lam) {
  check_input(static_cast<int>(lam.dim()) == 3,
              "gl21 classification needs a 3-coordinate weight");
  check_input(lam.is_integral(), "gl21 classification needs an integral weight");
  return lam;
}

}  // namespace detail

// Cohomology of the Borel with simple roots e1-e3, e3-e2 (both odd), decided
// by the pairing v = lambda_1 - lambda_2 in every characteristic:
//   v >= 1: H^0 has character chi, H^1 = 0;
//   v == 0: both cohomologies are the one-dimensional module of weight
//           lambda when lambda is a one-dimensional weight (equivalently,
//           lambda is atypical here), and zero otherwise; chi = 0;
//   v <= -1: H^0 = 0, H^1 has character -chi.
inline Gl21Answer classify_23(const Weight& lam, int parity,
                              const Characteristic& ch) {
  detail::require_gl21_weight(lam);
  Superdim d(2, 1);
  RootSystem sys = root_system(d, Perm::from_one_line({1, 3, 2}));
  Gl21Answer out;
  out.provenance = provenance::gl21_borel_23;
  out.chi = chi_character(lam, sys, parity).poly;
  out.regime = lam.integer_coord(0) - lam.integer_coord(1);
  out.atypical = !is_typical(lam, sys, ch);
  if (out.regime >= 1) {
    check_internal(!out.chi.is_zero(), "gl21-23: chi must not vanish here");
    out.h0 = CohClass{CohKind::Nonzero, out.chi, std::nullopt};
  } else if (out.regime == 0) {
    check_internal(out.chi.is_zero(), "gl21-23: chi must vanish on the wall");
    bool od = one_dim_weight(lam, d, ch);
    check_internal(od == out.atypical,
                   "gl21-23: wall atypicality must match one-dim weights");
    if (od) {
      out.h0 = CohClass{CohKind::OneDim, std::nullopt, lam};
      out.h1 = CohClass{CohKind::OneDim, std::nullopt, lam};
    }
  } else {
    check_internal(!out.chi.is_zero(), "gl21-23: chi must not vanish here");
    out.h1 = CohClass{CohKind::Nonzero, -out.chi, std::nullopt};
  }
  detail::check_gl21_books(out);
  return out;
}

// Cohomology of the Borel with simple roots e3-e1 (odd), e1-e2 (even),
// decided by v = lambda_1 - lambda_2 in every characteristic:
//   v >= 0:  H^0 has character chi, H^1 = 0;
//   v == -1: everything vanishes (chi = 0);
//   v <= -2: H^0 = 0, H^1 has character -chi.
inline Gl21Answer classify_132(const Weight& lam, int parity,
                               const Characteristic& ch) {
  detail::require_gl21_weight(lam);
  Superdim d(2, 1);
  RootSystem sys = root_system(d, Perm::from_one_line({3, 1, 2}));
  Gl21Answer out;
  out.provenance = provenance::gl21_borel_132;
  out.chi = chi_character(lam, sys, parity).poly;
  out.regime = lam.integer_coord(0) - lam.integer_coord(1);
  out.atypical = !is_typical(lam, sys, ch);
  if (out.regime >= 0) {
    check_internal(!out.chi.is_zero(), "gl21-132: chi must not vanish here");
    out.h0 = CohClass{CohKind::Nonzero, out.chi, std::nullopt};
  } else if (out.regime == -1) {
    check_internal(out.chi.is_zero(), "gl21-132: chi must vanish here");
  } else {
    check_internal(!out.chi.is_zero(), "gl21-132: chi must not vanish here");
    out.h1 = CohClass{CohKind::Nonzero, -out.chi, std::nullopt};
  }
  detail::check_gl21_books(out);
  return out;
}

// The golden classification of one GL(2|1) Borel side by side with the
// generic engines, plus every contradiction found between them.
struct CrosscheckSide {
  Perm w;
  Gl21Answer golden;
  Verdict generic;        // bbw_verdict
  Verdict kempf;          // threshold vanishing
  Verdict kempf_typical;  // typical vanishing
  std::vector<std::string> contradictions;
};

struct CrosscheckReport {
  CrosscheckSide side23, side132;

  bool clean() const {
    return side23.contradictions.empty() && side132.contradictions.empty();
  }
};

namespace detail {

inline CrosscheckSide crosscheck_side(const Weight& lam, int parity,
                                      const Characteristic& ch,
                                      const std::vector<int>& word,
                                      bool use23) {
  Superdim d(2, 1);
  CrosscheckSide side;
  side.w = Perm::from_one_line(word);
  RootSystem sys = root_system(d, side.w);
  side.golden = use23 ? classify_23(lam, parity, ch)
                      : classify_132(lam, parity, ch);
  side.generic = bbw_verdict(lam, parity, sys, ch);
  side.kempf = kempf_verdict(lam, sys);
  side.kempf_typical = kempf_typical_verdict(lam, sys, ch);
  auto& bad = side.contradictions;
  const Gl21Answer& g = side.golden;

  if (side.generic.tag == VerdictTag::AllVanish) {
    if (g.h0.kind != CohKind::Zero || g.h1.kind != CohKind::Zero)
      bad.push_back("AllVanish against nonzero cohomology at " + lam.str());
  } else if (side.generic.tag == VerdictTag::ConcentratedAt) {
    int k = side.generic.degree;
    if (k > Gl21Answer::max_degree) {
      bad.push_back("concentration degree beyond 1 at " + lam.str());
    } else {
      const CohClass& there = k == 0 ? g.h0 : g.h1;
      const CohClass& other = k == 0 ? g.h1 : g.h0;
      if (there.kind == CohKind::Zero)
        bad.push_back("concentration in a vanishing degree at " + lam.str());
      if (other.kind != CohKind::Zero)
        bad.push_back("concentration misses a nonzero degree at " + lam.str());
      if (side.generic.character) {
        // The attached character is chi at the standard presentation of
        // mu = u^{-1} . lambda; alternation gives chi(mu) = (-1)^k
        // chi(lambda) = ch H^k(lambda), so it must match H^k exactly.
        if (*side.generic.character != there.ch(3))
          bad.push_back("transported character mismatch at " + lam.str());
      }
      if (side.generic.description) {
        RootSystem target = root_system(
            d, side.generic.description->w_prime);
        LaurentPoly moved =
            chi_character(side.generic.description->lambda_prime, target)
                .poly;
        LaurentPoly expected = k % 2 == 0 ? g.chi : -g.chi;
        if (moved != expected)
          bad.push_back("transport broke the Euler characteristic at " +
                        lam.str());
      }
    }
  }

  for (const Verdict* v : {&side.kempf, &side.kempf_typical}) {
    if (v->tag != VerdictTag::VanishAbovePositive) continue;
    if (g.h1.kind != CohKind::Zero)
      bad.push_back("positive-degree vanishing against nonzero H^1 at " +
                    lam.str());
    else if (v->character && *v->character != g.h0.ch(3))
      bad.push_back("vanishing-theorem character mismatch at " + lam.str());
  }
  return side;
}

}  // namespace detail

// Runs the golden GL(2|1) classifications against the generic machinery on
// both non-standard-order Borels and reports every inconsistency.
inline CrosscheckReport crosscheck_engine(const Weight& lam, int parity,
                                          const Characteristic& ch) {
  detail::require_gl21_weight(lam);
  CrosscheckReport rep;
  rep.side23 = detail::crosscheck_side(lam, parity, ch, {1, 3, 2}, true);
  rep.side132 = detail::crosscheck_side(lam, parity, ch, {3, 1, 2}, false);
  return rep;
}

}  // namespace superweyl
