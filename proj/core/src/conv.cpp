#include "surfcoh/conv.hpp"

#include <sstream>
#include <stdexcept>

namespace surfcoh {

std::string Atom::str() const {
  switch (kind) {
    case AtomKind::Identity: return "I";
    case AtomKind::Constant: return "C";
    case AtomKind::U: return "U" + std::to_string(index);
    case AtomKind::E: return "E" + std::to_string(index);
  }
  return "?";
}

SheafObject SheafObject::term(Atom atom, Degree shift, Int multiplicity) {
  SheafObject o;
  o.add_term(atom, shift, multiplicity);
  return o;
}

void SheafObject::add_term(Atom atom, Degree shift, const Int& multiplicity) {
  if (multiplicity == 0) return;
  if (multiplicity < 0) throw std::invalid_argument("multiplicities must be positive");
  terms_[Key{atom, shift}] += multiplicity;
}

SheafObject& SheafObject::operator+=(const SheafObject& other) {
  for (const auto& [key, m] : other.terms_) terms_[key] += m;
  return *this;
}

SheafObject SheafObject::operator+(const SheafObject& other) const {
  SheafObject r = *this;
  r += other;
  return r;
}

SheafObject SheafObject::shifted(Degree s) const {
  SheafObject r;
  for (const auto& [key, m] : terms_) r.terms_.emplace(Key{key.atom, key.shift + s}, m);
  return r;
}

SheafObject SheafObject::scaled(const Int& m) const {
  if (m == 0) return {};
  if (m < 0) throw std::invalid_argument("multiplicities must be positive");
  SheafObject r;
  for (const auto& [key, mult] : terms_) r.terms_.emplace(key, mult * m);
  return r;
}

std::string SheafObject::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, m] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (m != 1) out << m.str() << "·";
    out << key.atom.str();
    if (key.shift != 0) out << "[" << key.shift << "]";
  }
  return out.str();
}

namespace {

// Product of two atoms, as an object with shift relative to the inputs.
SheafObject atom_convolve(Atom a, Atom b) {
  using K = AtomKind;
  if (a.kind == K::Identity) return SheafObject::term(b);
  if (b.kind == K::Identity) return SheafObject::term(a);
  if (a.kind == K::Constant && b.kind == K::Constant)
    return SheafObject::term(Atom::C()) + SheafObject::term(Atom::C(), -3);
  if (a.kind == K::Constant || b.kind == K::Constant) {
    const Atom other = (a.kind == K::Constant) ? b : a;
    if (other.kind == K::U) return SheafObject::term(Atom::C(), -3 * Degree(other.index));
    return SheafObject::term(Atom::C());  // E(n)
  }
  if (a.kind == b.kind) {
    const Atom sum = (a.kind == K::U) ? Atom::U(a.index + b.index) : Atom::E(a.index + b.index);
    return SheafObject::term(sum);
  }
  // E(m) * U(n): the pair annihilates min(m, n) steps at a cost of [-3]
  // each, leaving the excess factor.
  const unsigned m = (a.kind == K::E) ? a.index : b.index;
  const unsigned n = (a.kind == K::U) ? a.index : b.index;
  if (n > m) return SheafObject::term(Atom::U(n - m), -3 * Degree(m));
  if (m > n) return SheafObject::term(Atom::E(m - n), -3 * Degree(n));
  return SheafObject::term(Atom::I(), -3 * Degree(m));
}

}  // namespace

SheafObject convolve(const SheafObject& a, const SheafObject& b) {
  SheafObject r;
  for (const auto& [ka, ma] : a.terms())
    for (const auto& [kb, mb] : b.terms())
      r += atom_convolve(ka.atom, kb.atom).shifted(ka.shift + kb.shift).scaled(ma * mb);
  return r;
}

SheafObject power(const SheafObject& a, unsigned n) {
  SheafObject r = SheafObject::unit();
  for (unsigned i = 0; i < n; ++i) r = convolve(r, a);
  return r;
}

SheafObject commutator_pushforward() {
  SheafObject f = SheafObject::term(Atom::I(), -3, 2);
  f.add_term(Atom::U(1), -3, 1);
  f.add_term(Atom::E(1), 0, 1);
  return f;
}

SheafObject commutator_power_closed(unsigned n) {
  if (n == 0) return SheafObject::unit();
  SheafObject r = SheafObject::term(Atom::I(), -3 * Degree(n), binomial(2 * n, n));
  for (unsigned k = 1; k <= n; ++k) {
    const Int mult = binomial(2 * n, n - k);
    r.add_term(Atom::U(k), -3 * Degree(n), mult);
    r.add_term(Atom::E(k), -3 * Degree(n - k), mult);
  }
  return r;
}

SheafObject squaring_pushforward() {
  SheafObject s = SheafObject::term(Atom::U(1));
  s.add_term(Atom::E(1), 0, 1);
  return s;
}

SheafObject squaring_power_closed(unsigned n) {
  if (n == 0) return SheafObject::unit();
  SheafObject r;
  for (unsigned k = 0; 2 * k + 1 <= n; ++k)
    r.add_term(Atom::U(n - 2 * k), -3 * Degree(k), binomial(n, k));
  for (unsigned k = 0; 2 * k <= n; ++k)
    r.add_term(Atom::E(n - 2 * k), -3 * Degree(k), binomial(n, k));
  return r;
}

namespace {

LaurentPoly range_poly(int count, Degree base) {
  // sum_{k=0}^{count-1} t^(base + 2k); empty for count <= 0.
  LaurentPoly p;
  for (int k = 0; k < count; ++k) p += LaurentPoly::one().shifted(base + 2 * k);
  return p;
}

LaurentPoly stalk_at_one_atom(Atom a, const FunctorTables& t) {
  switch (a.kind) {
    case AtomKind::Identity:
    case AtomKind::Constant:
      return LaurentPoly::one();
    case AtomKind::U:
      return range_poly(int(a.index) - 1 + t.u_identity_extra_terms,
                        Degree(a.index) + 1 + t.u_identity_degree_offset);
    case AtomKind::E:
      return range_poly(int(a.index) + 1 + t.e_identity_extra_terms,
                        t.e_identity_degree_offset);
  }
  return {};
}

LaurentPoly stalk_generic_atom(Atom a, const FunctorTables& t) {
  switch (a.kind) {
    case AtomKind::Identity:
      return LaurentPoly::zero();
    case AtomKind::Constant:
      return LaurentPoly::one();
    case AtomKind::U:
      return range_poly(int(a.index) + t.u_generic_extra_terms,
                        Degree(a.index) - 1 + t.u_generic_degree_offset);
    case AtomKind::E:
      return range_poly(int(a.index) + t.e_generic_extra_terms, t.e_generic_degree_offset);
  }
  return {};
}

LaurentPoly pi_shriek_atom(Atom a, const FunctorTables& t) {
  switch (a.kind) {
    case AtomKind::Identity:
    case AtomKind::E:
      return LaurentPoly::one();
    case AtomKind::Constant:
      return LaurentPoly::one() + LaurentPoly::monomial(1, 3);
    case AtomKind::U:
      return LaurentPoly::monomial(1, 3 * Degree(a.index) + t.u_point_degree_offset);
  }
  return {};
}

template <typename AtomFunctor>
LaurentPoly apply_functor(const SheafObject& obj, AtomFunctor&& f) {
  LaurentPoly result;
  for (const auto& [key, m] : obj.terms())
    result += f(key.atom).shifted(-key.shift).scaled(m);
  return result;
}

}  // namespace

LaurentPoly stalk_at_one(const SheafObject& a, const FunctorTables& tables) {
  return apply_functor(a, [&](Atom at) { return stalk_at_one_atom(at, tables); });
}

LaurentPoly stalk_generic(const SheafObject& a, const FunctorTables& tables) {
  return apply_functor(a, [&](Atom at) { return stalk_generic_atom(at, tables); });
}

LaurentPoly pi_shriek(const SheafObject& a, const FunctorTables& tables) {
  return apply_functor(a, [&](Atom at) { return pi_shriek_atom(at, tables); });
}

K0Class K0Class::operator+(const K0Class& o) const {
  return {identity + o.identity, constant + o.constant, u1 + o.u1};
}

K0Class K0Class::scaled(const Int& m) const { return {identity * m, constant * m, u1 * m}; }

std::string K0Class::str() const {
  std::ostringstream out;
  out << identity.str() << "[I] + " << constant.str() << "[C] + " << u1.str() << "[U1]";
  return out.str();
}

namespace {

K0Class k0_atom(Atom a) {
  switch (a.kind) {
    case AtomKind::Identity: return {1, 0, 0};
    case AtomKind::Constant: return {0, 1, 0};
    case AtomKind::E:
      // [E_n] = [E_{n-1}] + [C], [E_0] = [I].
      return {1, Int(a.index), 0};
    case AtomKind::U: {
      // [U_n] = (-1)^(n+1) [C] - [U_{n-1}] down to the basis element [U_1].
      K0Class v{0, 0, 1};
      for (unsigned n = 2; n <= a.index; ++n) {
        const Int sign = (n % 2 == 0) ? -1 : 1;
        v = K0Class{0, sign, 0} + v.scaled(-1);
      }
      return v;
    }
  }
  return {};
}

}  // namespace

K0Class k0_reduce(const SheafObject& a) {
  K0Class total{0, 0, 0};
  for (const auto& [key, m] : a.terms())
    total = total + k0_atom(key.atom).scaled(m * parity_sign(key.shift));
  return total;
}

}  // namespace surfcoh
