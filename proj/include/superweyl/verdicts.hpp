#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <utility>

#include "superweyl/eulerchar.hpp"

namespace superweyl {

inline bool is_prime_ll(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Ground-field characteristic: zero or a prime (validated).
struct Characteristic {
  long long p = 0;

  Characteristic() = default;
  explicit Characteristic(long long v) : p(v) {
    check_input(v >= 0, "characteristic must be nonnegative");
    check_input(v <= 1000000000LL, "characteristic too large");
    check_input(v == 0 || is_prime_ll(v), "characteristic must be 0 or a prime");
  }

  bool positive() const { return p > 0; }
};

// p | a, with p = 0 meaning a == 0. Defined only for integers; a fractional
// argument is a caller error and reports the offending value.
inline bool divides(const Characteristic& ch, const Rat& a) {
  if (a.denominator() != 1) {
    std::ostringstream os;
    os << "divisibility asked of a non-integer: " << a.numerator() << '/'
       << a.denominator();
    fail_input(os.str());
  }
  if (!ch.positive()) return a.numerator() == 0;
  return a.numerator() % ch.p == 0;
}

// Typicality: p does not divide (lambda + rho, alpha) for any odd positive
// alpha. Those pairings are integers for integral lambda; a non-integral
// pairing is reported as an error naming the instance.
inline bool is_typical(const Weight& lam, const RootSystem& sys,
                       const Characteristic& ch) {
  check_input(lam.is_integral(), "is_typical requires an integral weight");
  Weight shifted = lam + sys.rho;
  for (const Root& a : sys.phi1_plus) {
    Rat v = pair_root(shifted, a, sys.dim);
    if (v.denominator() != 1)
      fail_input("non-integral odd pairing (" + shifted.str() + ", " +
                 a.str() + ")");
    if (divides(ch, v)) return false;
  }
  return true;
}

enum class Chamber { InteriorC, ClosureMinusC, Outside };

inline const char* chamber_name(Chamber c) {
  switch (c) {
    case Chamber::InteriorC: return "InteriorC";
    case Chamber::ClosureMinusC: return "ClosureMinusC";
    case Chamber::Outside: return "Outside";
  }
  fail_internal("unreachable chamber tag");
}

// Position of lambda relative to the dominant chamber of the even group,
// bounded above by p in positive characteristic:
//   InteriorC:      0 < (lambda + rho, alpha^vee) <= p for all even positive
//                   alpha (upper bound dropped when p = 0),
//   ClosureMinusC:  all pairings in [0, p] with at least one zero,
//   Outside:        anything else.
inline Chamber chamber(const Weight& lam, const RootSystem& sys,
                       const Characteristic& ch) {
  check_input(static_cast<int>(lam.dim()) == sys.total(),
              "chamber: dimension mismatch");
  Weight shifted = lam + sys.rho;
  bool wall = false;
  for (const Root& a : sys.phi0_plus) {
    long long v = pair_coroot_int(shifted, a);
    if (v < 0) return Chamber::Outside;
    if (ch.positive() && v > ch.p) return Chamber::Outside;
    if (v == 0) wall = true;
  }
  return wall ? Chamber::ClosureMinusC : Chamber::InteriorC;
}

enum class EvenStepKind { Vanishing, DegreeShift, NoRule };

struct EvenStep {
  EvenStepKind kind = EvenStepKind::NoRule;
  long long pairing = 0;            // (lambda, alpha^vee)
  std::optional<Weight> target;     // DegreeShift: s_alpha . lambda
};

// In characteristic p > 0 a pairing v >= 0 licenses the degree-shifting
// reflection only when v + 1 = s * p^M with 0 < s < p (M = 0 allowed); in
// characteristic zero every v >= 0 is licensed.
inline bool even_shift_licensed(long long v, const Characteristic& ch) {
  if (v < 0) return false;
  if (!ch.positive()) return true;
  long long x = v + 1;
  while (x % ch.p == 0) x /= ch.p;
  return x < ch.p;
}

// One even-simple-root step of the degree calculus at lambda:
//   pairing == -1        -> Vanishing (every cohomology degree vanishes),
//   licensed pairing >=0 -> DegreeShift: H^k at the target s_alpha . lambda
//                           matches H^{k+1}... bookkeeping one degree up,
//   otherwise            -> NoRule.
inline EvenStep even_reflection_step(const Weight& lam, const Root& alpha,
                                     const RootSystem& sys,
                                     const Characteristic& ch) {
  check_input(lam.is_integral(), "even_reflection_step: integral weight required");
  check_input(alpha.parity(sys.dim) == 0, "even_reflection_step: even root required");
  bool simple = false;
  for (const Root& a : sys.simple) simple = simple || a == alpha;
  check_input(simple, "even_reflection_step: root must be simple");
  EvenStep step;
  long long v = pair_coroot_int(lam, alpha);
  step.pairing = v;
  if (v == -1) {
    step.kind = EvenStepKind::Vanishing;
    return step;
  }
  if (!even_shift_licensed(v, ch)) {
    step.kind = EvenStepKind::NoRule;
    return step;
  }
  step.kind = EvenStepKind::DegreeShift;
  Weight target = lam - alpha.to_weight(sys.total()).scaled(v + 1);
  // s_alpha . lambda: even simple roots pair to 1 with rho, so the dot
  // reflection is s_alpha(lambda) - alpha.
  check_internal(target == reflect(alpha, lam, sys.dim) -
                               alpha.to_weight(sys.total()),
                 "even step target must be the dot reflection");
  step.target = target;
  return step;
}

struct OddStep {
  Weight lambda;
  int parity = 0;
  RootSystem sys;
};

// Transport across the odd reflection in an odd simple root alpha: the data
// (lambda, eps, B) and (lambda - alpha, eps + 1, r_alpha B) have the same
// cohomology. Refuses (nullopt) when p | (lambda, alpha); odd simple roots
// are isotropic with (rho, alpha) = 0, so this is the typicality pairing.
inline std::optional<OddStep> odd_adjacency_step(const Weight& lam, int parity,
                                                 const Root& alpha,
                                                 const RootSystem& sys,
                                                 const Characteristic& ch) {
  check_input(lam.is_integral(), "odd_adjacency_step: integral weight required");
  check_input(alpha.parity(sys.dim) == 1, "odd_adjacency_step: odd root required");
  bool simple = false;
  for (const Root& a : sys.simple) simple = simple || a == alpha;
  check_input(simple, "odd_adjacency_step: root must be simple");
  Rat v = pair_root(lam, alpha, sys.dim);
  check_internal(pair_root(sys.rho, alpha, sys.dim) == Rat(0),
                 "odd simple roots must pair to zero with rho");
  if (divides(ch, v)) return std::nullopt;
  OddStep out;
  out.lambda = lam - alpha.to_weight(sys.total());
  out.parity = (parity + 1) % 2;
  out.sys = odd_reflect(sys, alpha);
  return out;
}

namespace provenance {
inline constexpr const char* borel_bott_weil = "borel-bott-weil";
inline constexpr const char* penkov = "penkov-borel-bott-weil";
inline constexpr const char* kempf_typical = "kempf-typical";
inline constexpr const char* kempf_thresholds = "kempf-thresholds";
inline constexpr const char* gl21_borel_23 = "gl21-borel-23";
inline constexpr const char* gl21_borel_132 = "gl21-borel-132";
inline constexpr const char* none = "none";
}  // namespace provenance

enum class VerdictTag { AllVanish, ConcentratedAt, VanishAbovePositive, Undetermined };

inline const char* verdict_tag_name(VerdictTag t) {
  switch (t) {
    case VerdictTag::AllVanish: return "AllVanish";
    case VerdictTag::ConcentratedAt: return "ConcentratedAt";
    case VerdictTag::VanishAbovePositive: return "VanishAbovePositive";
    case VerdictTag::Undetermined: return "Undetermined";
  }
  fail_internal("unreachable verdict tag");
}

// Standard presentation of the input data: the walk-to-standard endpoint
// with the transported weight and parity label.
struct Transport {
  Perm w_prime;
  Weight lambda_prime;
  int parity = 0;
};

struct Verdict {
  VerdictTag tag = VerdictTag::Undetermined;
  int degree = -1;  // ConcentratedAt only
  std::string provenance = provenance::none;
  std::string reason;  // Undetermined only, machine readable
  std::optional<Transport> description;
  std::optional<LaurentPoly> character;
};

// Lattice thresholds k_i = #{gamma in Phi1+ : (gamma, beta_i^vee) = 1} for
// the even simple roots beta_i = eps_i - eps_{i+1}, i != m, defined for
// Borels whose block-preserving part is the identity. Computed by direct
// count and again by the closed form
//   i < m: k_i = n + #{second-block values positioned between i and i+1},
//   i > m: k_i = m + #{first-block values positioned between i and i+1},
// and the two must agree.
struct KempfBounds {
  std::map<int, long long> k;  // 1-based row index -> threshold
};

inline KempfBounds kempf_bounds(const RootSystem& sys) {
  check_input(decompose(sys.w, sys.dim).w0.is_identity(),
              "kempf_bounds requires identity block part");
  KempfBounds out;
  Perm pos = sys.w.inverse();
  int m = sys.dim.m, total = sys.total();
  for (int i = 1; i < total; ++i) {
    if (i == m) continue;
    Root beta(i - 1, i);
    check_internal(beta.parity(sys.dim) == 0, "threshold root must be even");
    long long direct = 0;
    Weight cov = beta.coroot(sys.dim);
    for (const Root& g : sys.phi1_plus)
      if (bilinear_form(g.to_weight(total), cov, sys.dim) == Rat(1)) ++direct;
    int p_lo = pos.apply(i - 1), p_hi = pos.apply(i);
    check_internal(p_lo < p_hi, "identity block part orders each block");
    long long between = 0;
    for (int q = p_lo + 1; q < p_hi; ++q) {
      int v = sys.w.apply(q);
      if ((i - 1 < m) ? (v >= m) : (v < m)) ++between;
    }
    long long closed = (i - 1 < m ? sys.dim.n : sys.dim.m) + between;
    check_internal(direct == closed, "kempf threshold closed form mismatch");
    out.k[i] = closed;
  }
  return out;
}

// Threshold vanishing: (lambda, beta_i^vee) >= k_i for all i forces
// H^k = 0 for k >= 1, in every characteristic, with chi = ch H^0.
inline Verdict kempf_verdict(const Weight& lam, const RootSystem& sys) {
  check_input(lam.is_integral(), "kempf_verdict requires an integral weight");
  KempfBounds kb = kempf_bounds(sys);
  bool ok = true;
  for (const auto& [i, ki] : kb.k) {
    long long v = pair_coroot_int(lam, Root(i - 1, i));
    ok = ok && v >= ki;
  }
  Verdict out;
  if (ok) {
    out.tag = VerdictTag::VanishAbovePositive;
    out.provenance = provenance::kempf_thresholds;
    out.character = chi_character(lam, sys).poly;
  } else {
    out.tag = VerdictTag::Undetermined;
    out.reason = "below-kempf-thresholds";
  }
  return out;
}

// Typical vanishing: typical lambda with (lambda + rho, beta^vee) >= 1 for
// every even positive beta forces H^k = 0 for k >= 1, with chi = ch H^0.
inline Verdict kempf_typical_verdict(const Weight& lam, const RootSystem& sys,
                                     const Characteristic& ch) {
  check_input(lam.is_integral(),
              "kempf_typical_verdict requires an integral weight");
  bool ok = is_typical(lam, sys, ch);
  Weight shifted = lam + sys.rho;
  for (const Root& a : sys.phi0_plus)
    ok = ok && pair_coroot_int(shifted, a) >= 1;
  Verdict out;
  if (ok) {
    out.tag = VerdictTag::VanishAbovePositive;
    out.provenance = provenance::kempf_typical;
    out.character = chi_character(lam, sys).poly;
  } else {
    out.tag = VerdictTag::Undetermined;
    out.reason = "kempf-typical-inapplicable";
  }
  return out;
}

// H^0 is simple iff lambda sits in the open chamber and is typical.
inline bool is_simple_h0(const Weight& lam, const RootSystem& sys,
                         const Characteristic& ch) {
  return chamber(lam, sys, ch) == Chamber::InteriorC && is_typical(lam, sys, ch);
}

// Weights of one-dimensional representations: block-constant (a,...,a |
// c,...,c) with p | a + c (a + c = 0 in characteristic zero).
inline bool one_dim_weight(const Weight& lam, const Superdim& d,
                           const Characteristic& ch) {
  check_input(static_cast<int>(lam.dim()) == d.total(),
              "one_dim_weight: dimension mismatch");
  check_input(lam.is_integral(), "one_dim_weight requires an integral weight");
  for (int i = 1; i < d.m; ++i)
    if (lam.half(static_cast<std::size_t>(i)) != lam.half(0)) return false;
  for (int i = d.m + 1; i < d.total(); ++i)
    if (lam.half(static_cast<std::size_t>(i)) !=
        lam.half(static_cast<std::size_t>(d.m)))
      return false;
  Rat a = lam.coord(0), c = lam.coord(static_cast<std::size_t>(d.m));
  return divides(ch, a + c);
}

// Decision for the full flag variety: search the even Weyl group for a dot
// presentation lambda = u ._w mu with mu in the (p-bounded) chamber closure.
// An interior mu concentrates cohomology in degree l(u); a wall mu kills all
// of it. At most one u can present lambda interiorly (mu + rho is then
// block-regular, so its decreasing arrangement is unique), and an interior
// presentation excludes wall presentations (they would force a repeated
// coordinate); both facts are asserted. Standard Borels need no typicality;
// non-standard ones require it, otherwise the verdict is Undetermined.
inline Verdict bbw_verdict(const Weight& lam, int parity, const RootSystem& sys,
                           const Characteristic& ch) {
  check_input(lam.is_integral(), "bbw_verdict requires an integral weight");
  check_input(static_cast<int>(lam.dim()) == sys.total(),
              "bbw_verdict: dimension mismatch");
  bool typical = is_typical(lam, sys, ch);
  Verdict out;
  if (!sys.standard && !typical) {
    out.tag = VerdictTag::Undetermined;
    out.reason = "atypical";
    return out;
  }
  std::optional<Perm> interior_u;
  Weight interior_mu;
  bool wall_seen = false;
  for (const Perm& u : weyl_group(sys.dim)) {
    Weight mu = dot_action(u.inverse(), lam, sys);
    Chamber c = chamber(mu, sys, ch);
    if (c == Chamber::InteriorC) {
      check_internal(!interior_u, "two interior presentations of one weight");
      interior_u = u;
      interior_mu = mu;
    } else if (c == Chamber::ClosureMinusC) {
      wall_seen = true;
    }
  }
  const char* prov =
      sys.standard ? provenance::borel_bott_weil : provenance::penkov;
  if (interior_u) {
    check_internal(!wall_seen,
                   "interior and wall presentations cannot coexist");
    WalkResult walk = walk_to_standard(sys);
    Weight lam_prime = interior_mu - walk.delta_rho;
    int parity_prime = (((parity + walk.t) % 2) + 2) % 2;
    out.tag = VerdictTag::ConcentratedAt;
    out.degree = length_and_sign(*interior_u, sys).first;
    out.provenance = prov;
    out.description = Transport{walk.end.w, lam_prime, parity_prime};
    Verdict cover = kempf_typical_verdict(lam_prime, walk.end, ch);
    if (cover.tag != VerdictTag::VanishAbovePositive &&
        decompose(walk.end.w, walk.end.dim).w0.is_identity())
      cover = kempf_verdict(lam_prime, walk.end);
    if (cover.tag == VerdictTag::VanishAbovePositive)
      out.character = chi_character(lam_prime, walk.end, parity_prime).poly;
    return out;
  }
  if (wall_seen) {
    out.tag = VerdictTag::AllVanish;
    out.provenance = prov;
    return out;
  }
  out.tag = VerdictTag::Undetermined;
  out.reason = "no-chamber-presentation";
  return out;
}

enum class Gl11Side { Minus, Plus };

struct SeriesLayer {
  Weight weight;
  int parity = 0;
};

// H^0 of the GL(1|1) point flag: two-dimensional with weights lambda and
// lambda -/+ alpha (alpha = eps1 - eps2; minus for the Borel whose positive
// root is alpha, plus for the opposite one). Simple iff p does not divide
// |lambda| = lambda_1 + lambda_2; otherwise uniserial with socle L(lambda).
// On the plus side the simple module is also reached by the minus-side
// induction from (lambda + alpha) with flipped parity.
struct Gl11Structure {
  bool simple = false;
  long long abs_lambda = 0;
  std::array<SeriesLayer, 2> weights;  // {lambda^eps, (lambda -/+ alpha)^{eps+1}}
  std::optional<SeriesLayer> iso_minus_target;          // simple plus side
  std::optional<std::array<SeriesLayer, 2>> series;     // {top, socle}
  LaurentPoly character;
};

inline Gl11Structure gl11_h0_structure(const Weight& lam, int parity,
                                       Gl11Side side,
                                       const Characteristic& ch) {
  Superdim d(1, 1);
  check_input(static_cast<int>(lam.dim()) == 2,
              "gl11_h0_structure is specific to GL(1|1)");
  check_input(lam.is_integral(), "gl11_h0_structure requires an integral weight");
  int eps = ((parity % 2) + 2) % 2;
  Weight alpha = Root(0, 1).to_weight(2);
  Weight other = side == Gl11Side::Minus ? lam - alpha : lam + alpha;
  Gl11Structure out;
  out.abs_lambda = lam.integer_coord(0) + lam.integer_coord(1);
  out.simple = !divides(ch, Rat(out.abs_lambda));
  out.weights = {SeriesLayer{lam, eps}, SeriesLayer{other, 1 - eps}};
  out.character = LaurentPoly::monomial(lam) + LaurentPoly::monomial(other);
  if (out.simple) {
    if (side == Gl11Side::Plus)
      out.iso_minus_target = SeriesLayer{lam + alpha, 1 - eps};
  } else {
    out.series = std::array<SeriesLayer, 2>{SeriesLayer{other, 1 - eps},
                                            SeriesLayer{lam, eps}};
  }
  return out;
}

// H^0 of the minimal parabolic flag P(alpha)/B for an odd simple root alpha:
// weights lambda and lambda - alpha. Simple iff p does not divide
// (lambda, alpha); then it matches the induction from the odd-reflected
// Borel at lambda - alpha with flipped parity. Otherwise both inductions are
// uniserial with socle L(lambda).
struct ParabolicStructure {
  Root alpha;
  Rat pairing;  // (lambda, alpha)
  bool simple = false;
  Perm w_prime;  // odd-reflected Borel word
  std::array<SeriesLayer, 2> weights;  // {lambda^eps, (lambda-alpha)^{eps+1}}
  std::optional<SeriesLayer> iso_target;  // simple: reflected-side weight
  std::optional<std::array<SeriesLayer, 2>> b_series;       // {top, socle}
  std::optional<std::array<SeriesLayer, 2>> bprime_series;  // {top, socle}
};

inline ParabolicStructure parabolic_ind_structure(const Weight& lam, int parity,
                                                  const Root& alpha,
                                                  const RootSystem& sys,
                                                  const Characteristic& ch) {
  check_input(lam.is_integral(),
              "parabolic_ind_structure requires an integral weight");
  check_input(alpha.parity(sys.dim) == 1,
              "parabolic_ind_structure: odd root required");
  bool simple_root = false;
  for (const Root& a : sys.simple) simple_root = simple_root || a == alpha;
  check_input(simple_root, "parabolic_ind_structure: root must be simple");
  int eps = ((parity % 2) + 2) % 2;
  Weight aw = alpha.to_weight(sys.total());
  ParabolicStructure out;
  out.alpha = alpha;
  out.pairing = pair_root(lam, alpha, sys.dim);
  out.simple = !divides(ch, out.pairing);
  out.w_prime = odd_reflect(sys, alpha).w;
  out.weights = {SeriesLayer{lam, eps}, SeriesLayer{lam - aw, 1 - eps}};
  if (out.simple) {
    out.iso_target = SeriesLayer{lam - aw, 1 - eps};
  } else {
    out.b_series = std::array<SeriesLayer, 2>{SeriesLayer{lam - aw, 1 - eps},
                                              SeriesLayer{lam, eps}};
    out.bprime_series = std::array<SeriesLayer, 2>{SeriesLayer{lam + aw, 1 - eps},
                                                   SeriesLayer{lam, eps}};
  }
  return out;
}

}  // namespace superweyl
