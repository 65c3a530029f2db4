#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "surfcoh/bigint.hpp"

namespace surfcoh {

// Exact Laurent polynomial in one variable t with integer coefficients,
// stored sparsely as degree -> coefficient with no zero entries.
//
// Grading convention, fixed once for the whole project: a cohomology class
// in degree d contributes t^d, so a shift of a complex by [-s] multiplies
// its graded dimension by t^s.  Compact-support pushforwards over stacks
// produce classes in negative degrees, hence Laurent rather than ordinary
// polynomials.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly monomial(Int coefficient, Degree degree);
  // Terms may repeat; they are accumulated.
  static LaurentPoly from_terms(std::initializer_list<std::pair<Degree, Int>> terms);

  const std::map<Degree, Int>& terms() const { return coeffs_; }
  Int coeff(Degree d) const;
  bool is_zero() const { return coeffs_.empty(); }
  // Both require a nonzero polynomial.
  Degree min_degree() const;
  Degree max_degree() const;

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly& operator+=(const LaurentPoly& other);

  // Every degree translated by s (the image under t^s).
  LaurentPoly shifted(Degree s) const;
  LaurentPoly scaled(const Int& factor) const;
  LaurentPoly pow(unsigned n) const;

  // Exact alternating sum of coefficients (specialization t = -1); a ring
  // homomorphism to the integers.
  Int eval_at_minus_one() const;

  bool operator==(const LaurentPoly& other) const { return coeffs_ == other.coeffs_; }

  // Ascending-degree rendering with decimal coefficients, e.g.
  // "1 + t^2 + 4t^3" or "t^{-3} + t^{-7}".  Zero renders as "0".
  std::string str() const;

 private:
  std::map<Degree, Int> coeffs_;
};

// Half-integers, for symmetry centers: value = twice / 2.
struct HalfInteger {
  Degree twice = 0;
  bool operator==(const HalfInteger&) const = default;
  std::string str() const;
};

struct SymmetryCheck {
  bool symmetric = false;
  HalfInteger center;  // (min_degree + max_degree) / 2, meaningful either way
};

// Checks coeff(d) == coeff(min + max - d) for all d.  Throws
// std::domain_error on the zero polynomial (undefined symmetry).
SymmetryCheck check_palindromic(const LaurentPoly& p);

// Exact quotient a / b; throws std::domain_error if b is zero or does not
// divide a exactly over the integers.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace surfcoh
