#pragma once

#include "superweyl/laurent.hpp"
#include "superweyl/roots.hpp"

namespace superweyl {

// Alternating Weyl-group sum A(mu) = sum_{u in W} det(u) e^{u mu}. Vanishes
// exactly when mu has a repeated coordinate inside a block.
inline LaurentPoly antisymmetrize(const Weight& mu, const Superdim& d) {
  check_input(static_cast<int>(mu.dim()) == d.total(),
              "antisymmetrize: dimension mismatch");
  LaurentPoly out(d.total());
  for (const Perm& u : weyl_group(d))
    out.add_term(permute_weight(u, mu), u.sign());
  return out;
}

// Euler characteristic of the even-group line bundle, computed through this
// Borel's own rho: e^{-rho} A(lambda + rho) / prod_{Phi0+} (1 - e^{-alpha}).
// The division is exact in the Laurent ring; exactness is asserted. The
// result equals e^{rho1/2} times the classical GL(m) x GL(n) Weyl character
// of lambda - rho1/2, so it is W-symmetric only after multiplying by
// e^{rho - rho0/2} = e^{-rho1/2}.
inline LaurentPoly weyl_character_even(const Weight& lam, const RootSystem& sys) {
  check_input(static_cast<int>(lam.dim()) == sys.total(),
              "weyl_character_even: dimension mismatch");
  LaurentPoly alt = antisymmetrize(lam + sys.rho, sys.dim);
  if (alt.is_zero()) return LaurentPoly::zero(sys.total());
  LaurentPoly num = LaurentPoly::monomial(-sys.rho) * alt;
  LaurentPoly den = LaurentPoly::unit(sys.total());
  for (const Root& a : sys.phi0_plus) {
    LaurentPoly factor = LaurentPoly::unit(sys.total());
    factor.add_term(-a.to_weight(sys.total()), -1);
    den = den * factor;
  }
  auto q = exact_divide(num, den);
  check_internal(q.has_value(),
                 "weyl_character_even: alternant not divisible by the "
                 "denominator");
  return *q;
}

}  // namespace superweyl
