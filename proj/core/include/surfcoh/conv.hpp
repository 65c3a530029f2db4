#pragma once

#include <compare>
#include <map>
#include <string>

#include "surfcoh/laurent.hpp"

namespace surfcoh {

// The convolution algebra of atoms over SU(2).
//
// Objects of the bounded derived category of SU(2) that arise from surface
// pipelines decompose into shifted copies of four kinds of opaque atoms:
//
//   I     skyscraper at the identity (the unit for convolution)
//   C     constant sheaf on the group
//   U(n)  n-fold convolution of the extension by zero off the identity,
//         U(1) its generator
//   E(n)  n-fold convolution of the cone E(1) attached to the degree-3
//         class of the group
//
// Their images under the stalk and pushforward functors are fixed table
// data; no morphism-level information is represented.

enum class AtomKind : unsigned char { Identity, Constant, U, E };

struct Atom {
  AtomKind kind = AtomKind::Identity;
  unsigned index = 0;  // n for U/E (>= 1), 0 otherwise

  static Atom I() { return {AtomKind::Identity, 0}; }
  static Atom C() { return {AtomKind::Constant, 0}; }
  // U(0) and E(0) normalize to I at construction.
  static Atom U(unsigned n) { return n == 0 ? I() : Atom{AtomKind::U, n}; }
  static Atom E(unsigned n) { return n == 0 ? I() : Atom{AtomKind::E, n}; }

  friend auto operator<=>(const Atom&, const Atom&) = default;
  std::string str() const;  // "I", "C", "U3", "E2"
};

// Formal direct sum of shifted atoms with positive multiplicities.  The
// empty sum is the zero object.  Terms are kept in a canonical sorted
// order (atom kind, index, shift).
class SheafObject {
 public:
  struct Key {
    Atom atom;
    Degree shift = 0;  // bracket shift: the term is atom[shift]
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  SheafObject() = default;

  static SheafObject zero() { return {}; }
  // The monoidal unit I[0].
  static SheafObject unit() { return term(Atom::I()); }
  static SheafObject term(Atom atom, Degree shift = 0, Int multiplicity = 1);

  const std::map<Key, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Direct sum.
  SheafObject operator+(const SheafObject& other) const;
  SheafObject& operator+=(const SheafObject& other);
  SheafObject shifted(Degree s) const;
  SheafObject scaled(const Int& m) const;

  void add_term(Atom atom, Degree shift, const Int& multiplicity);

  bool operator==(const SheafObject& other) const { return terms_ == other.terms_; }

  // "6*I[-6] + 4*U1[-6] + U2[-6] + 4*E1[-3] + E2" style rendering.
  std::string str() const;

 private:
  std::map<Key, Int> terms_;
};

// Convolution product.  On atoms the table below extends the generator
// relations (unit law for I, the U/E recursions, E(1)*U(1) = I[-3], and
// multiplication by the constant sheaf) by associativity and
// commutativity; shifts add, multiplicities multiply:
//
//   I * X    = X
//   U(a)*U(b) = U(a+b)            E(a)*E(b) = E(a+b)
//   E(a)*U(b) = U(b-a)[-3a]  (b > a)
//             = E(a-b)[-3b]  (a > b)
//             = I[-3a]       (a = b)
//   C*I = C     C*U(n) = C[-3n]     C*E(n) = C     C*C = C + C[-3]
SheafObject convolve(const SheafObject& a, const SheafObject& b);

// n-fold convolution power (left fold); n = 0 gives the unit.
SheafObject power(const SheafObject& a, unsigned n);

// Pushforward of the commutator map G^2 -> G applied to the constant
// sheaf: 2*I[-3] + U1[-3] + E1.  Its n-th convolution power carries the
// cohomology of the genus-n orientable surface pipelines.
SheafObject commutator_pushforward();

// Closed form for the n-th power of commutator_pushforward(), as binomial
// multiples of I[-3n], U(k)[-3n] and E(k)[-3(n-k)].
SheafObject commutator_power_closed(unsigned n);

// Pushforward of A -> -A^2 applied to the constant sheaf: U1 + E1.  Its
// powers carry the non-orientable surface pipelines.
SheafObject squaring_pushforward();

// Closed form for the n-th power of squaring_pushforward(): binomial
// multiples of U(n-2k)[-3k] and E(n-2k)[-3k].
SheafObject squaring_power_closed(unsigned n);

// Graded-dimension tables of the stalk/pushforward functors, as small
// integer offsets so that single entries can be perturbed in
// fault-injection tests.  Default-constructed values are the proven
// tables; any nonzero field is a deliberate corruption.
struct FunctorTables {
  // stalk at the identity: U(n) -> sum_{k=0}^{n-2+du} t^(2k+n+1+eu)
  int u_identity_extra_terms = 0;   // du
  int u_identity_degree_offset = 0; // eu
  // stalk at the identity: E(n) -> sum_{k=0}^{n+de} t^(2k+ee)
  int e_identity_extra_terms = 0;
  int e_identity_degree_offset = 0;
  // generic stalk: U(n) -> sum_{k=0}^{n-1+du} t^(2k+n-1+eu)
  int u_generic_extra_terms = 0;
  int u_generic_degree_offset = 0;
  // generic stalk: E(n) -> sum_{k=0}^{n-1+de} t^(2k+ee)
  int e_generic_extra_terms = 0;
  int e_generic_degree_offset = 0;
  // pushforward to the point: U(n) -> t^(3n+eu)
  int u_point_degree_offset = 0;

  bool operator==(const FunctorTables&) const = default;
  bool is_reference() const { return *this == FunctorTables{}; }
};

// Stalk at the identity element: I -> 1, C -> 1, U and E per the table.
LaurentPoly stalk_at_one(const SheafObject& a, const FunctorTables& tables = {});

// Stalk at any point away from the identity (the atoms are constant along
// conjugation orbits, so one table serves all such points): I -> 0,
// C -> 1, U and E per the table.
LaurentPoly stalk_generic(const SheafObject& a, const FunctorTables& tables = {});

// Compact-support pushforward to the point (the group is compact, so this
// is also the plain pushforward): I -> 1, E -> 1, U(n) -> t^(3n),
// C -> 1 + t^3.
LaurentPoly pi_shriek(const SheafObject& a, const FunctorTables& tables = {});

// Class in the Grothendieck group, written in the ordered basis
// [I], [C], [U1].  Shifts alternate sign; U(n) and E(n) reduce through
// the recurrences [E_n] = [E_{n-1}] + [C] and
// [U_n] = (-1)^(n+1) [C] - [U_{n-1}]  (n >= 2).
struct K0Class {
  Int identity;
  Int constant;
  Int u1;

  K0Class operator+(const K0Class& o) const;
  K0Class scaled(const Int& m) const;
  bool operator==(const K0Class&) const = default;
  std::string str() const;  // "a[I] + b[C] + c[U1]"
};

K0Class k0_reduce(const SheafObject& a);

}  // namespace surfcoh
