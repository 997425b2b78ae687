#pragma once

#include "superweyl/charring.hpp"

namespace superweyl {

// Euler characteristic chi(B, lambda) of the line bundle attached to the
// character lambda with parity label epsilon, as an element of the character
// ring. The parity label is bookkeeping for cohomology parities and does not
// enter the polynomial.
struct EulerCharacter {
  LaurentPoly poly;
  Weight lambda;
  int parity = 0;
  Superdim dim;
  Perm w;
};

// Defining identity, with the odd factors cleared of denominators:
// chi * prod_{Phi0+} (1 - e^{-a}) == prod_{Phi1+} (1 + e^{-a}) * e^{-rho} *
// A(lambda + rho).
inline bool verify_clearing(const EulerCharacter& ec) {
  RootSystem sys = root_system(ec.dim, ec.w);
  int k = sys.total();
  LaurentPoly even_den = LaurentPoly::unit(k);
  for (const Root& a : sys.phi0_plus) {
    LaurentPoly f = LaurentPoly::unit(k);
    f.add_term(-a.to_weight(k), -1);
    even_den = even_den * f;
  }
  LaurentPoly odd_num = LaurentPoly::unit(k);
  for (const Root& a : sys.phi1_plus) {
    LaurentPoly f = LaurentPoly::unit(k);
    f.add_term(-a.to_weight(k), 1);
    odd_num = odd_num * f;
  }
  LaurentPoly lhs = ec.poly * even_den;
  LaurentPoly rhs = odd_num * LaurentPoly::monomial(-sys.rho) *
                    antisymmetrize(ec.lambda + sys.rho, sys.dim);
  return lhs == rhs;
}

// chi(B, lambda) = prod_{Phi1+} (1 + e^{-a}) * weyl_character_even(lambda).
// The clearing identity is asserted before returning.
inline EulerCharacter chi_character(const Weight& lam, const RootSystem& sys,
                                    int parity = 0) {
  check_input(lam.is_integral(), "chi_character requires an integral weight");
  check_input(static_cast<int>(lam.dim()) == sys.total(),
              "chi_character: dimension mismatch");
  int k = sys.total();
  LaurentPoly odd = LaurentPoly::unit(k);
  for (const Root& a : sys.phi1_plus) {
    LaurentPoly f = LaurentPoly::unit(k);
    f.add_term(-a.to_weight(k), 1);
    odd = odd * f;
  }
  EulerCharacter ec;
  ec.poly = odd * weyl_character_even(lam, sys);
  ec.lambda = lam;
  ec.parity = ((parity % 2) + 2) % 2;
  ec.dim = sys.dim;
  ec.w = sys.w;
  check_internal(verify_clearing(ec), "chi_character: clearing identity failed");
  return ec;
}

// chi(B, lambda) == chi(B', lambda - alpha) for the odd reflection B -> B'
// through the odd simple root alpha. Holds for every integral lambda.
inline bool check_odd_invariance(const Weight& lam, const RootSystem& sys,
                                 const Root& alpha) {
  RootSystem refl = odd_reflect(sys, alpha);
  Weight shifted = lam - alpha.to_weight(sys.total());
  return chi_character(lam, sys).poly == chi_character(shifted, refl).poly;
}

}  // namespace superweyl
