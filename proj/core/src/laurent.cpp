#include "surfcoh/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace surfcoh {

LaurentPoly LaurentPoly::monomial(Int coefficient, Degree degree) {
  LaurentPoly p;
  if (coefficient != 0) p.coeffs_.emplace(degree, std::move(coefficient));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<Degree, Int>> terms) {
  LaurentPoly p;
  for (const auto& [d, c] : terms) {
    if (c == 0) continue;
    auto [it, fresh] = p.coeffs_.emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) p.coeffs_.erase(it);
    }
  }
  return p;
}

Int LaurentPoly::coeff(Degree d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Degree LaurentPoly::min_degree() const {
  if (is_zero()) throw std::domain_error("min_degree of zero polynomial");
  return coeffs_.begin()->first;
}

Degree LaurentPoly::max_degree() const {
  if (is_zero()) throw std::domain_error("max_degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [d, c] : other.coeffs_) {
    auto [it, fresh] = coeffs_.emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly r = *this;
  r += other;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  return *this + other.scaled(-1);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly r;
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : other.coeffs_) {
      auto [it, fresh] = r.coeffs_.emplace(d1 + d2, c1 * c2);
      if (!fresh) it->second += c1 * c2;
    }
  std::erase_if(r.coeffs_, [](const auto& e) { return e.second == 0; });
  return r;
}

LaurentPoly LaurentPoly::shifted(Degree s) const {
  if (s == 0) return *this;
  LaurentPoly r;
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d + s, c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& factor) const {
  if (factor == 0) return {};
  LaurentPoly r;
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, c * factor);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = one();
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

Int LaurentPoly::eval_at_minus_one() const {
  Int sum = 0;
  for (const auto& [d, c] : coeffs_) sum += parity_sign(d) * c;
  return sum;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const Int mag = abs(c);
    if (d == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      if (d < 0)
        out << "t^{" << d << "}";
      else
        out << "t^" << d;
    }
  }
  return out.str();
}

std::string HalfInteger::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

SymmetryCheck check_palindromic(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("undefined symmetry of the zero polynomial");
  const Degree lo = p.min_degree();
  const Degree hi = p.max_degree();
  SymmetryCheck result{true, HalfInteger{lo + hi}};
  for (const auto& [d, c] : p.terms()) {
    if (c != p.coeff(lo + hi - d)) {
      result.symmetric = false;
      break;
    }
  }
  return result;
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Long division from the top degree.  In an exact division the quotient
  // degrees are bounded below by min(a) - min(b); crossing that bound with
  // a nonzero remainder proves inexactness (and terminates the loop, which
  // otherwise would unwind into a power series in 1/t).
  LaurentPoly rem = a;
  LaurentPoly quot;
  const Degree btop = b.max_degree();
  const Int blead = b.coeff(btop);
  const Degree quot_min = a.min_degree() - b.min_degree();
  while (!rem.is_zero()) {
    const Degree rtop = rem.max_degree();
    const Int rlead = rem.coeff(rtop);
    if (rtop - btop < quot_min || rlead % blead != 0)
      throw std::domain_error("inexact polynomial division");
    const LaurentPoly piece = LaurentPoly::monomial(rlead / blead, rtop - btop);
    quot += piece;
    rem = rem - piece * b;
  }
  return quot;
}

}  // namespace surfcoh
