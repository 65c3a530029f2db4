#include <doctest.h>

#include <random>

#include "surfcoh/conv.hpp"

using namespace surfcoh;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<Degree, Int>> terms) {
  return LaurentPoly::from_terms(terms);
}

SheafObject obj(Atom a, Degree shift = 0, Int mult = 1) {
  return SheafObject::term(a, shift, std::move(mult));
}

SheafObject random_object(std::mt19937_64& rng) {
  SheafObject o;
  const unsigned terms = 1 + unsigned(rng() % 3);
  for (unsigned i = 0; i < terms; ++i) {
    Atom atom;
    switch (rng() % 4) {
      case 0: atom = Atom::I(); break;
      case 1: atom = Atom::C(); break;
      case 2: atom = Atom::U(1 + unsigned(rng() % 5)); break;
      default: atom = Atom::E(1 + unsigned(rng() % 5)); break;
    }
    o.add_term(atom, Degree(rng() % 13) - 6, Int(1 + rng() % 3));
  }
  return o;
}

}  // namespace

TEST_CASE("atoms with index zero collapse to the unit atom") {
  CHECK(Atom::U(0) == Atom::I());
  CHECK(Atom::E(0) == Atom::I());
  CHECK(obj(Atom::E(0), -3, 2) == obj(Atom::I(), -3, 2));
}

TEST_CASE("convolution of single atoms") {
  CHECK(convolve(SheafObject::unit(), obj(Atom::U(2))) == obj(Atom::U(2)));
  CHECK(convolve(obj(Atom::E(1)), obj(Atom::U(1))) == obj(Atom::I(), -3));
  CHECK(convolve(obj(Atom::E(2)), obj(Atom::U(1))) == obj(Atom::E(1), -3));
  CHECK(convolve(obj(Atom::E(1)), obj(Atom::U(2))) == obj(Atom::U(1), -3));
  CHECK(convolve(obj(Atom::U(2)), obj(Atom::U(3))) == obj(Atom::U(5)));
  CHECK(convolve(obj(Atom::E(2)), obj(Atom::E(3))) == obj(Atom::E(5)));
  CHECK(convolve(obj(Atom::C()), obj(Atom::U(1))) == obj(Atom::C(), -3));
  CHECK(convolve(obj(Atom::C()), obj(Atom::E(4))) == obj(Atom::C()));
  CHECK(convolve(obj(Atom::C()), obj(Atom::C())) == obj(Atom::C()) + obj(Atom::C(), -3));
  // Shifts add and multiplicities multiply.
  CHECK(convolve(obj(Atom::U(1), -2, 3), obj(Atom::U(1), -1, 2)) == obj(Atom::U(2), -3, 6));
  CHECK(convolve(SheafObject::zero(), obj(Atom::E(1))).is_zero());
}

TEST_CASE("commutator pushforward and its powers") {
  const SheafObject f = commutator_pushforward();
  CHECK(f.str() == "2·I[-3] + U1[-3] + E1");
  CHECK(power(f, 0) == SheafObject::unit());
  CHECK(power(f, 1) == f);

  SheafObject f2 = obj(Atom::I(), -6, 6);
  f2.add_term(Atom::U(1), -6, 1 + 3);
  f2.add_term(Atom::U(2), -6, 1);
  f2.add_term(Atom::E(1), -3, 4);
  f2.add_term(Atom::E(2), 0, 1);
  CHECK(power(f, 2) == f2);
  CHECK(commutator_power_closed(2) == f2);
  CHECK(commutator_power_closed(1) == f);
  CHECK(commutator_power_closed(3) == power(f, 3));
}

TEST_CASE("squaring pushforward and its powers") {
  const SheafObject s = squaring_pushforward();
  CHECK(s == obj(Atom::U(1)) + obj(Atom::E(1)));

  SheafObject s2 = obj(Atom::U(2));
  s2.add_term(Atom::I(), -3, 2);
  s2.add_term(Atom::E(2), 0, 1);
  CHECK(power(s, 2) == s2);
  CHECK(squaring_power_closed(2) == s2);
  CHECK(squaring_power_closed(4) == power(s, 4));
}

TEST_CASE("closed forms agree with folded powers up to n = 10") {
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(commutator_power_closed(n) == power(commutator_pushforward(), n));
    CHECK(squaring_power_closed(n) == power(squaring_pushforward(), n));
  }
}

TEST_CASE("stalk at the identity") {
  CHECK(stalk_at_one(commutator_power_closed(1)) == poly({{0, 1}, {2, 1}, {3, 2}}));
  CHECK(stalk_at_one(obj(Atom::U(1))).is_zero());
  CHECK(stalk_at_one(obj(Atom::E(2))) == poly({{0, 1}, {2, 1}, {4, 1}}));
  CHECK(stalk_at_one(obj(Atom::U(3))) == poly({{4, 1}, {6, 1}}));
  CHECK(stalk_at_one(obj(Atom::C())) == LaurentPoly::one());
  CHECK(stalk_at_one(SheafObject::zero()).is_zero());
  CHECK(stalk_at_one(obj(Atom::E(1), -3, 4)) == poly({{3, 4}, {5, 4}}));
}

TEST_CASE("generic stalk") {
  CHECK(stalk_generic(obj(Atom::U(1))) == LaurentPoly::one());
  CHECK(stalk_generic(obj(Atom::I())).is_zero());
  CHECK(stalk_generic(obj(Atom::U(2))) == poly({{1, 1}, {3, 1}}));
  CHECK(stalk_generic(obj(Atom::E(3))) == poly({{0, 1}, {2, 1}, {4, 1}}));
  CHECK(stalk_generic(commutator_power_closed(1)) == poly({{0, 1}, {3, 1}}));
  CHECK(stalk_generic(SheafObject::zero()).is_zero());
}

TEST_CASE("pushforward to the point") {
  const LaurentPoly sphere3 = poly({{0, 1}, {3, 1}});
  for (unsigned g = 0; g <= 8; ++g)
    CHECK(pi_shriek(commutator_power_closed(g)) == sphere3.pow(2 * g));
  CHECK(pi_shriek(obj(Atom::C())) == sphere3);
  CHECK(pi_shriek(obj(Atom::U(3), -2)) == poly({{11, 1}}));
  CHECK(pi_shriek(SheafObject::zero()).is_zero());
}

TEST_CASE("convolution laws on random objects") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    const SheafObject a = random_object(rng), b = random_object(rng), c = random_object(rng);
    CHECK(convolve(a, b) == convolve(b, a));
    CHECK(convolve(a, convolve(b, c)) == convolve(convolve(a, b), c));
    CHECK(convolve(SheafObject::unit(), a) == a);
    CHECK(pi_shriek(convolve(a, b)) == pi_shriek(a) * pi_shriek(b));
  }
}

TEST_CASE("Grothendieck-class reduction") {
  CHECK(k0_reduce(obj(Atom::E(1))) == K0Class{1, 1, 0});
  CHECK(k0_reduce(obj(Atom::U(2))) == K0Class{0, -1, -1});
  CHECK(k0_reduce(obj(Atom::I(), -1)) == K0Class{-1, 0, 0});
  CHECK(k0_reduce(obj(Atom::U(1))) == K0Class{0, 0, 1});
  CHECK(k0_reduce(obj(Atom::U(3))) == K0Class{0, 2, 1});
  CHECK(k0_reduce(obj(Atom::E(4), -2, 3)) == K0Class{3, 12, 0});
  CHECK(k0_reduce(SheafObject::zero()) == K0Class{0, 0, 0});

  // Reduction is linear and sends X[s] to (-1)^s X.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const SheafObject a = random_object(rng), b = random_object(rng);
    CHECK(k0_reduce(a + b) == k0_reduce(a) + k0_reduce(b));
    CHECK(k0_reduce(a.shifted(1)) == k0_reduce(a).scaled(-1));
    CHECK(k0_reduce(a.shifted(-2)) == k0_reduce(a));
  }
}

TEST_CASE("Euler characteristics of stalks follow the index recurrences") {
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(stalk_at_one(obj(Atom::E(n))).eval_at_minus_one() == Int(n + 1));
    CHECK(stalk_at_one(obj(Atom::U(n))).eval_at_minus_one() ==
          Int(n - 1) * ((n % 2 == 0) ? -1 : 1));
  }
}

TEST_CASE("object rendering") {
  CHECK(SheafObject::unit().str() == "I");
  CHECK(SheafObject::zero().str() == "0");
  CHECK(commutator_power_closed(2).str() ==
        "6·I[-6] + 4·U1[-6] + U2[-6] + 4·E1[-3] + E2");
  CHECK(squaring_power_closed(2).str() == "2·I[-3] + U2 + E2");
}

TEST_CASE("nonpositive multiplicities are rejected") {
  SheafObject o;
  CHECK_THROWS_AS(o.add_term(Atom::I(), 0, -1), std::invalid_argument);
  o.add_term(Atom::I(), 0, 0);
  CHECK(o.is_zero());
}
