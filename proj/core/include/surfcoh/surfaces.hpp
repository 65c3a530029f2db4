#pragma once

#include <utility>

#include "surfcoh/conv.hpp"

namespace surfcoh {

// Surface pipelines: Poincaré polynomials of representation varieties of
// closed surfaces, for SU(2), SO(3) and U(2).  All results are exact.

enum class Family { Orientable, NonOrientable };
enum class Group { SU2, SO3, U2 };

struct SurfaceSpec {
  Family family = Family::Orientable;
  unsigned genus_or_demigenus = 0;
  Group group = Group::SU2;
  bool twisted = false;

  // Throws std::invalid_argument on unsupported combinations: twisting is
  // only defined for orientable SU(2), non-orientable surfaces only for
  // SU(2).
  void validate() const;
};

// P(Rep(Sigma_g, SU(2))): stalk at the identity of the genus-g commutator
// power.  g = 0 gives 1.
LaurentPoly rep_poincare(unsigned g, const FunctorTables& tables = {});

// The same polynomial as a direct binomial summation, with no convolution
// and no table lookups; the independent cross-check for rep_poincare.
// Requires g >= 1.
LaurentPoly rep_poincare_closed(unsigned g);

// Twisted variant: generic stalk of the commutator power (the fiber over
// any fixed element other than the identity).  Requires g >= 1; for g = 0
// the twisted variety is empty and this throws std::domain_error unless
// allow_empty is set, in which case it returns 0.
LaurentPoly twisted_rep_poincare(unsigned g, const FunctorTables& tables = {},
                                 bool allow_empty = false);

// Exact evaluation of the half-integer product formula for the twisted
// Poincaré polynomial, carried out in the variable u = t^(1/2) with exact
// division; all half powers cancel.  Independent of FunctorTables.
// Requires g >= 1.
LaurentPoly twisted_rep_poincare_closed(unsigned g);

// P(Rep(N_r, SU(2))) for the non-orientable surface of demigenus r >= 1:
// identity stalk of the squaring power for even r, generic stalk for odd r.
LaurentPoly nonorientable_rep_poincare(unsigned r, const FunctorTables& tables = {});

// The SO(3)-representation variety of Sigma_g (g >= 1) has two connected
// components whose Poincaré polynomials are the untwisted and the twisted
// SU(2) answers.
std::pair<LaurentPoly, LaurentPoly> so3_rep_poincare(unsigned g,
                                                     const FunctorTables& tables = {});

// P(Rep(Sigma_g, U(2))) = P(Rep(Sigma_g, SU(2))) * (1+t)^(2g): the extra
// factor is the cohomology of the 2g-torus of central characters.
LaurentPoly u2_rep_poincare(unsigned g, const FunctorTables& tables = {});

}  // namespace surfcoh
