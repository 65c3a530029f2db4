#include "surfcoh/stacks.hpp"

#include <array>
#include <sstream>

namespace surfcoh {

BGAtom BGAtom::G(unsigned n) {
  if (n == 0) throw std::invalid_argument("G(n) requires n >= 1");
  return {BGAtomKind::G, n};
}

std::string BGAtom::str() const {
  return kind == BGAtomKind::ConstantBG ? "Q" : "G" + std::to_string(index);
}

BGObject BGObject::term(BGAtom atom, Degree shift, Int multiplicity) {
  BGObject o;
  if (multiplicity == 0) return o;
  if (multiplicity < 0) throw std::invalid_argument("multiplicities must be positive");
  o.terms_.emplace(Key{atom, shift}, std::move(multiplicity));
  return o;
}

BGObject& BGObject::operator+=(const BGObject& other) {
  for (const auto& [key, m] : other.terms_) terms_[key] += m;
  return *this;
}

BGObject BGObject::operator+(const BGObject& other) const {
  BGObject r = *this;
  r += other;
  return r;
}

BGObject BGObject::shifted(Degree s) const {
  BGObject r;
  for (const auto& [key, m] : terms_) r.terms_.emplace(Key{key.atom, key.shift + s}, m);
  return r;
}

std::string BGObject::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, m] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (m != 1) out << m.str() << "*";
    out << key.atom.str();
    if (key.shift != 0) out << "[" << key.shift << "]";
  }
  return out.str();
}

LaurentPoly q_pullback(const BGObject& a) {
  LaurentPoly result;
  for (const auto& [key, m] : a.terms()) {
    LaurentPoly base = LaurentPoly::one();
    if (key.atom.kind == BGAtomKind::G)
      base += LaurentPoly::monomial(1, 4 * Degree(key.atom.index) - 1);
    result += base.shifted(-key.shift).scaled(m);
  }
  return result;
}

namespace {

// 1 + t^4 + ... + t^(4(n-1)), the pushforward of G(n).
LaurentPoly g_pushforward(unsigned n) {
  LaurentPoly p;
  for (unsigned k = 0; k < n; ++k) p += LaurentPoly::monomial(1, 4 * Degree(k));
  return p;
}

PeriodicSeries push_bg(const BGObject& a, CohomologyVariant variant) {
  PeriodicSeries result;
  for (const auto& [key, m] : a.terms()) {
    PeriodicSeries base;
    if (key.atom.kind == BGAtomKind::ConstantBG)
      base = tail_unit(variant);
    else
      base = PeriodicSeries::polynomial(g_pushforward(key.atom.index));
    result = result + base.shifted(-key.shift).scaled_by(LaurentPoly::monomial(m, 0));
  }
  return result;
}

}  // namespace

PeriodicSeries tail_unit(CohomologyVariant variant) {
  if (variant == CohomologyVariant::CompactSupport) {
    // sum_{k>=0} t^(-(4k+3)): residue 1 mod 4, toward -infinity.
    return PeriodicSeries::tail({Int(0), Int(1), Int(0), Int(0)}, -1, -3);
  }
  // sum_{k>=0} t^(4k): residue 0 mod 4, toward +infinity.
  return PeriodicSeries::tail({Int(1), Int(0), Int(0), Int(0)}, +1, 0);
}

PeriodicSeries pi_shriek_bg(const BGObject& a) {
  return push_bg(a, CohomologyVariant::CompactSupport);
}

PeriodicSeries pi_star_bg(const BGObject& a) { return push_bg(a, CohomologyVariant::Ordinary); }

namespace {

// Stalks of the equivariant commutator powers V_k, k = 0..3, at the
// identity and at -1.  V_0 is the unit.  The k = 3 stalk at -1 carries
// G1[-6] with multiplicity three (its atlas pullback has three classes in
// each of degrees 6 and 9, which a single copy cannot account for).
std::array<BGObject, 4> build_identity_tables() {
  const BGAtom Q = BGAtom::QBG();
  std::array<BGObject, 4> t;
  t[0] = BGObject::term(Q);
  t[1] = BGObject::term(Q) + BGObject::term(Q, -2);
  t[2] = BGObject::term(Q) + BGObject::term(Q, -2) + BGObject::term(Q, -4) +
         BGObject::term(Q, -6) + BGObject::term(BGAtom::G(1), -6);
  t[3] = BGObject::term(Q) + BGObject::term(Q, -2) + BGObject::term(Q, -4) +
         BGObject::term(Q, -6, 3) + BGObject::term(Q, -8, 2) +
         BGObject::term(BGAtom::G(2), -6) + BGObject::term(BGAtom::G(2), -8);
  return t;
}

std::array<BGObject, 4> build_minus_one_tables() {
  std::array<BGObject, 4> t;
  t[0] = BGObject::zero();
  t[1] = BGObject::term(BGAtom::G(1));
  t[2] = BGObject::term(BGAtom::G(2)) + BGObject::term(BGAtom::G(2), -2);
  t[3] = BGObject::term(BGAtom::G(1), -6, 3) + BGObject::term(BGAtom::G(3)) +
         BGObject::term(BGAtom::G(3), -2) + BGObject::term(BGAtom::G(3), -4);
  return t;
}

void require_table_genus(unsigned k) {
  if (k > kMaxStackGenus)
    throw UnsupportedGenus(
        "genus " + std::to_string(k) +
        " is not supported: no closed-form stalk tables are known for the equivariant "
        "convolution powers beyond genus 3");
}

}  // namespace

const BGObject& stack_stalk_identity(unsigned k) {
  static const std::array<BGObject, 4> tables = build_identity_tables();
  require_table_genus(k);
  return tables[k];
}

const BGObject& stack_stalk_minus_one(unsigned k) {
  static const std::array<BGObject, 4> tables = build_minus_one_tables();
  require_table_genus(k);
  return tables[k];
}

std::vector<StackExpansionTerm> stacky_commutator_expansion(unsigned g) {
  std::vector<StackExpansionTerm> terms;
  terms.reserve(g + 1);
  for (unsigned k = 0; k <= g; ++k)
    terms.push_back({binomial(g, k) * pow2(g - k), k, -3 * Degree(g - k)});
  return terms;
}

CharStackCohomology charstack_cohomology(unsigned g, bool twisted, CohomologyVariant variant) {
  require_table_genus(g);
  CharStackCohomology out;
  out.variant = variant;
  out.twisted = twisted;
  for (const StackExpansionTerm& term : stacky_commutator_expansion(g)) {
    const BGObject& table = twisted ? stack_stalk_minus_one(term.k) : stack_stalk_identity(term.k);
    for (const auto& [key, m] : table.terms()) {
      const Degree degree_shift = -(term.shift + key.shift);
      const Int mult = term.coefficient * m;
      if (key.atom.kind == BGAtomKind::ConstantBG)
        out.tail_prefactor += LaurentPoly::monomial(mult, degree_shift);
      else
        out.finite_part += g_pushforward(key.atom.index).shifted(degree_shift).scaled(mult);
    }
  }
  out.series = PeriodicSeries::polynomial(out.finite_part) +
               tail_unit(variant).scaled_by(out.tail_prefactor);
  return out;
}

}  // namespace surfcoh
