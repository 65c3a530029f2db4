#include "surfcoh/series.hpp"

#include <sstream>
#include <stdexcept>

namespace surfcoh {

namespace {

int residue(Degree d) { return static_cast<int>(((d % 4) + 4) % 4); }

bool all_zero(const PeriodicSeries::Pattern& p) {
  return p[0] == 0 && p[1] == 0 && p[2] == 0 && p[3] == 0;
}

}  // namespace

PeriodicSeries::PeriodicSeries() : PeriodicSeries(LaurentPoly::zero(), Pattern{}, +1, 0) {}

PeriodicSeries::PeriodicSeries(LaurentPoly transient, Pattern pattern, int direction,
                               Degree tail_start)
    : transient_(std::move(transient)),
      pattern_(std::move(pattern)),
      direction_(direction),
      tail_start_(tail_start) {}

bool PeriodicSeries::in_tail(Degree d) const {
  if (all_zero(pattern_)) return false;
  return direction_ > 0 ? d >= tail_start_ : d <= tail_start_;
}

PeriodicSeries PeriodicSeries::polynomial(LaurentPoly p) {
  const Degree ts = p.is_zero() ? 0 : p.max_degree() + 1;
  return PeriodicSeries(std::move(p), Pattern{}, +1, ts);
}

PeriodicSeries PeriodicSeries::tail(Pattern pattern, int direction, Degree tail_start) {
  return with_tail(LaurentPoly::zero(), std::move(pattern), direction, tail_start);
}

PeriodicSeries PeriodicSeries::with_tail(LaurentPoly transient, Pattern pattern, int direction,
                                         Degree tail_start) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("series direction must be +1 or -1");
  for (const Int& v : pattern)
    if (v < 0) throw std::invalid_argument("periodic pattern values must be nonnegative");
  if (all_zero(pattern)) return polynomial(std::move(transient));

  // Semantics of the inputs: coefficient(d) = transient(d) + tail(d).
  // First retreat the region boundary past the transient's support in the
  // tail direction, materializing the pattern values passed over; then
  // advance it as far as the coefficients stay periodic.
  LaurentPoly merged = std::move(transient);
  Degree ts = tail_start;
  if (direction > 0) {
    if (!merged.is_zero() && merged.max_degree() >= ts) {
      const Degree top = merged.max_degree();
      for (Degree d = ts; d <= top; ++d)
        merged += LaurentPoly::monomial(pattern[residue(d)], d);
      ts = top + 1;
    }
    while (merged.coeff(ts - 1) == pattern[residue(ts - 1)]) {
      merged = merged - LaurentPoly::monomial(pattern[residue(ts - 1)], ts - 1);
      --ts;
    }
  } else {
    if (!merged.is_zero() && merged.min_degree() <= ts) {
      const Degree bottom = merged.min_degree();
      for (Degree d = bottom; d <= ts; ++d)
        merged += LaurentPoly::monomial(pattern[residue(d)], d);
      ts = bottom - 1;
    }
    while (merged.coeff(ts + 1) == pattern[residue(ts + 1)]) {
      merged = merged - LaurentPoly::monomial(pattern[residue(ts + 1)], ts + 1);
      ++ts;
    }
  }
  return PeriodicSeries(std::move(merged), std::move(pattern), direction, ts);
}

Int PeriodicSeries::coeff(Degree d) const {
  if (in_tail(d)) return pattern_[residue(d)];
  return transient_.coeff(d);
}

bool PeriodicSeries::is_polynomial() const { return all_zero(pattern_); }

PeriodicSeries PeriodicSeries::operator+(const PeriodicSeries& other) const {
  if (is_polynomial() && other.is_polynomial())
    return polynomial(transient_ + other.transient_);
  if (is_polynomial())
    return with_tail(transient_ + other.transient_, other.pattern_, other.direction_,
                     other.tail_start_);
  if (other.is_polynomial())
    return with_tail(transient_ + other.transient_, pattern_, direction_, tail_start_);
  if (direction_ != other.direction_)
    throw std::invalid_argument("cannot add series with opposite tail directions");

  Pattern sum_pattern;
  for (int r = 0; r < 4; ++r) sum_pattern[r] = pattern_[r] + other.pattern_[r];
  LaurentPoly merged = transient_ + other.transient_;
  // Common tail region = intersection; the part of either tail sticking
  // out of it is finite and moves into the transient.
  Degree common;
  if (direction_ > 0) {
    common = std::max(tail_start_, other.tail_start_);
    for (Degree d = tail_start_; d < common; ++d)
      merged += LaurentPoly::monomial(pattern_[residue(d)], d);
    for (Degree d = other.tail_start_; d < common; ++d)
      merged += LaurentPoly::monomial(other.pattern_[residue(d)], d);
  } else {
    common = std::min(tail_start_, other.tail_start_);
    for (Degree d = common + 1; d <= tail_start_; ++d)
      merged += LaurentPoly::monomial(pattern_[residue(d)], d);
    for (Degree d = common + 1; d <= other.tail_start_; ++d)
      merged += LaurentPoly::monomial(other.pattern_[residue(d)], d);
  }
  return with_tail(std::move(merged), std::move(sum_pattern), direction_, common);
}

PeriodicSeries PeriodicSeries::shifted(Degree s) const {
  if (is_polynomial()) return polynomial(transient_.shifted(s));
  Pattern rotated;
  for (int r = 0; r < 4; ++r) rotated[residue(r + s)] = pattern_[r];
  return with_tail(transient_.shifted(s), std::move(rotated), direction_, tail_start_ + s);
}

PeriodicSeries PeriodicSeries::scaled_by(const LaurentPoly& p) const {
  if (is_polynomial()) return polynomial(transient_ * p);
  PeriodicSeries result = polynomial(LaurentPoly::zero());
  for (const auto& [d, c] : p.terms()) {
    Pattern scaled;
    for (int r = 0; r < 4; ++r) scaled[residue(r + d)] = pattern_[r] * c;
    result = result + with_tail(transient_.shifted(d).scaled(c), std::move(scaled), direction_,
                                tail_start_ + d);
  }
  return result;
}

bool PeriodicSeries::operator==(const PeriodicSeries& other) const {
  return direction_ == other.direction_ && tail_start_ == other.tail_start_ &&
         pattern_ == other.pattern_ && transient_ == other.transient_;
}

LaurentPoly PeriodicSeries::window(Degree lo, Degree hi) const {
  LaurentPoly w;
  for (Degree d = lo; d <= hi; ++d) w += LaurentPoly::monomial(coeff(d), d);
  return w;
}

std::string PeriodicSeries::str() const {
  if (is_polynomial()) return transient_.str();
  std::ostringstream out;
  if (!transient_.is_zero()) out << transient_.str() << " + ";
  out << "tail{pattern (" << pattern_[0].str() << "," << pattern_[1].str() << ","
      << pattern_[2].str() << "," << pattern_[3].str() << ") from " << tail_start_ << " toward "
      << (direction_ > 0 ? "+inf" : "-inf") << "}";
  return out.str();
}

}  // namespace surfcoh
