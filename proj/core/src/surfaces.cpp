#include "surfcoh/surfaces.hpp"

#include <stdexcept>

namespace surfcoh {

void SurfaceSpec::validate() const {
  if (twisted && (family != Family::Orientable || group != Group::SU2))
    throw std::invalid_argument("twisting is only defined for orientable SU(2) surfaces");
  if (family == Family::NonOrientable && group != Group::SU2)
    throw std::invalid_argument("non-orientable surfaces are only supported for SU(2)");
  if (family == Family::NonOrientable && genus_or_demigenus == 0)
    throw std::invalid_argument("demigenus must be at least 1");
}

LaurentPoly rep_poincare(unsigned g, const FunctorTables& tables) {
  return stalk_at_one(commutator_power_closed(g), tables);
}

LaurentPoly rep_poincare_closed(unsigned g) {
  if (g == 0) throw std::domain_error("closed sum requires genus >= 1");
  LaurentPoly p = LaurentPoly::monomial(binomial(2 * g, g), 3 * Degree(g));
  for (unsigned k = 1; k <= g; ++k) {
    const Int mult = binomial(2 * g, g - k);
    for (unsigned j = 0; j + 2 <= k; ++j)
      p += LaurentPoly::monomial(mult, 3 * Degree(g) + Degree(k) + 1 + 2 * Degree(j));
    for (unsigned j = 0; j <= k; ++j)
      p += LaurentPoly::monomial(mult, 3 * Degree(g - k) + 2 * Degree(j));
  }
  return p;
}

LaurentPoly twisted_rep_poincare(unsigned g, const FunctorTables& tables, bool allow_empty) {
  if (g == 0) {
    // The twist equation has no solutions on the sphere.
    if (allow_empty) return LaurentPoly::zero();
    throw std::domain_error("twist class has no solutions on the sphere");
  }
  return stalk_generic(commutator_power_closed(g), tables);
}

LaurentPoly twisted_rep_poincare_closed(unsigned g) {
  if (g == 0) throw std::domain_error("closed formula requires genus >= 1");
  // Work in u = t^(1/2); the formula is
  //   u^(6g-3) * sum_{k=1}^{g} binom(2g, g-k)
  //            * (u^(2k) - u^(-2k)) (u^(4k-1) + u^(-4k+1)) / (u^2 - u^(-2)).
  LaurentPoly numerator;
  for (unsigned k = 1; k <= g; ++k) {
    const Degree dk = Degree(k);
    const LaurentPoly a =
        LaurentPoly::monomial(1, 2 * dk) - LaurentPoly::monomial(1, -2 * dk);
    const LaurentPoly b =
        LaurentPoly::monomial(1, 4 * dk - 1) + LaurentPoly::monomial(1, -4 * dk + 1);
    numerator += (a * b).scaled(binomial(2 * g, g - k));
  }
  const LaurentPoly denominator = LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2);
  const LaurentPoly in_u = div_exact(numerator, denominator).shifted(6 * Degree(g) - 3);
  // All half powers of t cancel, i.e. every u-exponent is even.
  LaurentPoly result;
  for (const auto& [d, c] : in_u.terms()) {
    if (d % 2 != 0) throw std::logic_error("half-integer power survived in twisted formula");
    result += LaurentPoly::monomial(c, d / 2);
  }
  return result;
}

LaurentPoly nonorientable_rep_poincare(unsigned r, const FunctorTables& tables) {
  if (r == 0) throw std::domain_error("demigenus must be at least 1");
  const SheafObject s = squaring_power_closed(r);
  // Even demigenus lands on the identity fiber, odd demigenus on the fiber
  // over the central element -1, which is a generic point for the atoms.
  return (r % 2 == 0) ? stalk_at_one(s, tables) : stalk_generic(s, tables);
}

std::pair<LaurentPoly, LaurentPoly> so3_rep_poincare(unsigned g, const FunctorTables& tables) {
  if (g == 0) throw std::domain_error("the two-component description requires genus >= 1");
  return {rep_poincare(g, tables), twisted_rep_poincare(g, tables)};
}

LaurentPoly u2_rep_poincare(unsigned g, const FunctorTables& tables) {
  const LaurentPoly torus_factor =
      (LaurentPoly::one() + LaurentPoly::monomial(1, 1)).pow(2 * g);
  return rep_poincare(g, tables) * torus_factor;
}

}  // namespace surfcoh
