#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfcoh/series.hpp"

namespace surfcoh {

// The equivariant calculus on the classifying stack BSU(2): atoms, their
// pullback/pushforward graded dimensions, the shipped stalk tables of the
// equivariant commutator powers for genus <= 3, and the character-stack
// cohomology series assembled from them.

enum class BGAtomKind : unsigned char { ConstantBG, G };

struct BGAtom {
  BGAtomKind kind = BGAtomKind::ConstantBG;
  unsigned index = 0;  // n >= 1 for G(n), 0 for the constant sheaf

  static BGAtom QBG() { return {BGAtomKind::ConstantBG, 0}; }
  static BGAtom G(unsigned n);  // requires n >= 1

  friend auto operator<=>(const BGAtom&, const BGAtom&) = default;
  std::string str() const;  // "Q", "G2"
};

// Formal direct sum of shifted BG atoms; empty sum = zero.
class BGObject {
 public:
  struct Key {
    BGAtom atom;
    Degree shift = 0;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  BGObject() = default;
  static BGObject zero() { return {}; }
  static BGObject term(BGAtom atom, Degree shift = 0, Int multiplicity = 1);

  const std::map<Key, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BGObject operator+(const BGObject& other) const;
  BGObject& operator+=(const BGObject& other);
  BGObject shifted(Degree s) const;

  bool operator==(const BGObject& other) const { return terms_ == other.terms_; }
  std::string str() const;

 private:
  std::map<Key, Int> terms_;
};

// Pullback along the atlas point -> BG:  Q -> 1,  G(n) -> 1 + t^(4n-1).
LaurentPoly q_pullback(const BGObject& a);

// Compact-support pushforward to the point:
//   Q    -> the 4-periodic tail 1/t^3 + 1/t^7 + ...  (direction -1)
//   G(n) -> 1 + t^4 + ... + t^(4(n-1))               (finite)
PeriodicSeries pi_shriek_bg(const BGObject& a);

// Plain pushforward: same as pi_shriek_bg except
//   Q -> 1 + t^4 + t^8 + ...  (direction +1).
PeriodicSeries pi_star_bg(const BGObject& a);

// Stalk tables of the equivariant commutator-power objects, k = 0..3:
// at the identity point and at the central element -1.  These are shipped
// as literal data (their derivation uses morphism-level arguments outside
// this calculus); q_pullback compatibility with the non-equivariant
// calculus guards them against transcription errors.
const BGObject& stack_stalk_identity(unsigned k);
const BGObject& stack_stalk_minus_one(unsigned k);

inline constexpr unsigned kMaxStackGenus = 3;

struct UnsupportedGenus : std::domain_error {
  using std::domain_error::domain_error;
};

// One term of the binomial expansion of the g-th equivariant commutator
// power: coefficient * (k-th convolution power)[shift].
struct StackExpansionTerm {
  Int coefficient;
  unsigned k = 0;
  Degree shift = 0;
};

// The equivariant commutator pushforward is 2*(unit)[-3] + V with V the
// interesting summand, so its g-th power expands binomially:
// sum_k binom(g,k) 2^(g-k) V_k[-3(g-k)].
std::vector<StackExpansionTerm> stacky_commutator_expansion(unsigned g);

enum class CohomologyVariant { CompactSupport, Ordinary };

// Cohomology of the SU(2)-character stack of the genus-g surface.  The
// series splits as finite_part + tail_prefactor * T with T the 4-periodic
// tail unit of the chosen variant; both factors are exposed for display
// and testing.  For twisted stacks the tail vanishes and the two variants
// agree.  Throws UnsupportedGenus for g > 3.
struct CharStackCohomology {
  PeriodicSeries series;
  LaurentPoly finite_part;
  LaurentPoly tail_prefactor;
  CohomologyVariant variant = CohomologyVariant::CompactSupport;
  bool twisted = false;
};

CharStackCohomology charstack_cohomology(unsigned g, bool twisted, CohomologyVariant variant);

// The tail unit T of a variant as a series: sum_{k>=0} 1/t^(4k+3) for
// compact support, sum_{k>=0} t^(4k) for ordinary cohomology.
PeriodicSeries tail_unit(CohomologyVariant variant);

}  // namespace surfcoh
