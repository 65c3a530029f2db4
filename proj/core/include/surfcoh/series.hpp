#pragma once

#include <array>
#include <string>

#include "surfcoh/laurent.hpp"

namespace surfcoh {

// Graded dimension function that is finitely supported except for an
// eventually 4-periodic tail in one direction.  Period 4 is all that
// classifying-stack pushforwards of SU(2) produce (the polynomial
// generator of H^*(BSU(2)) sits in degree 4), so it is hardcoded.
//
// Data: a finite transient, a pattern of four nonnegative values indexed
// by residue mod 4, a direction (+1: tail toward +infinity, -1: toward
// -infinity) and the degree tail_start at which exact periodicity begins.
// The coefficient at degree d is pattern[d mod 4] for d in the tail region
// (direction * (d - tail_start) >= 0) and transient(d) outside it.
//
// Canonical form: the tail region is maximal, i.e. tail_start is pushed as
// far against the direction as the coefficient function allows, and the
// transient carries no support inside the region.  An all-zero pattern
// canonicalizes to a plain polynomial (direction +1, tail_start one past
// the transient's top degree).  Equality compares canonical forms, so two
// encodings of the same coefficient function always compare equal.
class PeriodicSeries {
 public:
  using Pattern = std::array<Int, 4>;

  PeriodicSeries();  // zero

  static PeriodicSeries polynomial(LaurentPoly p);
  // Pure tail: pattern values in the region, zero outside.
  static PeriodicSeries tail(Pattern pattern, int direction, Degree tail_start);
  // transient + pure tail, re-canonicalized; accepts transient support
  // anywhere (overlaps with the region shrink the region accordingly).
  static PeriodicSeries with_tail(LaurentPoly transient, Pattern pattern, int direction,
                                  Degree tail_start);

  Int coeff(Degree d) const;
  bool is_polynomial() const;
  const LaurentPoly& transient() const { return transient_; }
  const Pattern& pattern() const { return pattern_; }
  int direction() const { return direction_; }
  Degree tail_start() const { return tail_start_; }

  // Exact coefficientwise sum.  Throws std::invalid_argument when both
  // operands have genuinely opposite tail directions.
  PeriodicSeries operator+(const PeriodicSeries& other) const;

  // Multiplication by a finite Laurent polynomial.
  PeriodicSeries scaled_by(const LaurentPoly& p) const;
  PeriodicSeries shifted(Degree s) const;

  bool operator==(const PeriodicSeries& other) const;

  // The restriction of the coefficient function to [lo, hi] as a finite
  // polynomial; handy for window comparisons.
  LaurentPoly window(Degree lo, Degree hi) const;

  std::string str() const;

 private:
  PeriodicSeries(LaurentPoly transient, Pattern pattern, int direction, Degree tail_start);
  bool in_tail(Degree d) const;

  LaurentPoly transient_;
  Pattern pattern_{};
  int direction_ = +1;
  Degree tail_start_ = 0;
};

}  // namespace surfcoh
