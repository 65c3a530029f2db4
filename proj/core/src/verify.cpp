#include "surfcoh/verify.hpp"

#include <random>
#include <sstream>

#include "surfcoh/stacks.hpp"
#include "surfcoh/surfaces.hpp"

namespace surfcoh {

namespace {

LaurentPoly poly(std::initializer_list<std::pair<Degree, Int>> terms) {
  return LaurentPoly::from_terms(terms);
}

std::string poly_mismatch(const LaurentPoly& got, const LaurentPoly& want) {
  const LaurentPoly diff = got - want;
  if (diff.is_zero()) return "";
  const Degree d = diff.min_degree();
  std::ostringstream out;
  out << "first mismatch at degree " << d << ": got " << got.coeff(d).str() << ", want "
      << want.coeff(d).str();
  return out.str();
}

std::string series_mismatch(const PeriodicSeries& got, const PeriodicSeries& want, Degree lo,
                            Degree hi) {
  for (Degree d = lo; d <= hi; ++d)
    if (got.coeff(d) != want.coeff(d)) {
      std::ostringstream out;
      out << "first mismatch at degree " << d << ": got " << got.coeff(d).str() << ", want "
          << want.coeff(d).str();
      return out.str();
    }
  return "series disagree outside the inspected window [" + std::to_string(lo) + ", " +
         std::to_string(hi) + "]";
}

// Deterministic sampler for the property checks.  Bounded values come from
// plain modulo so that the stream is identical on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  SheafObject object() {
    SheafObject obj;
    const unsigned terms = 1 + unsigned(below(3));
    for (unsigned i = 0; i < terms; ++i) {
      Atom atom;
      switch (below(4)) {
        case 0: atom = Atom::I(); break;
        case 1: atom = Atom::C(); break;
        case 2: atom = Atom::U(1 + unsigned(below(5))); break;
        default: atom = Atom::E(1 + unsigned(below(5))); break;
      }
      const Degree shift = Degree(below(13)) - 6;
      obj.add_term(atom, shift, Int(1 + below(3)));
    }
    return obj;
  }

 private:
  std::mt19937_64 rng_;
};

struct Suite {
  std::vector<CheckReport> reports;

  // keep_detail retains the detail text on passing checks, for checks
  // whose whole point is the report.
  void check(std::string name, bool ok, std::string detail = "", bool keep_detail = false) {
    reports.push_back({std::move(name), ok, (ok && !keep_detail) ? "" : std::move(detail)});
  }

  void check_poly(std::string name, const LaurentPoly& got, const LaurentPoly& want) {
    const bool ok = got == want;
    reports.push_back({std::move(name), ok, ok ? "" : poly_mismatch(got, want)});
  }
};

// ----- reference values, frozen from independent computation -----

const LaurentPoly& rep_reference(unsigned g) {
  static const LaurentPoly table[3] = {
      poly({{0, 1}}),
      poly({{0, 1}, {2, 1}, {3, 2}}),
      poly({{0, 1}, {2, 1}, {3, 4}, {4, 1}, {5, 4}, {6, 6}, {9, 1}}),
  };
  return table[g];
}

LaurentPoly qcompat_identity_reference(unsigned k) {
  switch (k) {
    case 1: return poly({{0, 1}, {2, 1}});
    case 2: return poly({{0, 1}, {2, 1}, {4, 1}, {6, 2}, {9, 1}});
    default: return poly({{0, 1}, {2, 1}, {4, 1}, {6, 4}, {8, 3}, {13, 1}, {15, 1}});
  }
}

LaurentPoly qcompat_minus_one_reference(unsigned k) {
  switch (k) {
    case 1: return poly({{0, 1}, {3, 1}});
    case 2: return poly({{0, 1}, {2, 1}, {7, 1}, {9, 1}});
    default: return poly({{0, 1}, {2, 1}, {4, 1}, {6, 3}, {9, 3}, {11, 1}, {13, 1}, {15, 1}});
  }
}

LaurentPoly charstack_prefactor_reference(unsigned g) {
  switch (g) {
    case 0: return poly({{0, 1}});
    case 1: return poly({{0, 1}, {2, 1}, {3, 2}});
    case 2: return poly({{0, 1}, {2, 1}, {3, 4}, {4, 1}, {5, 4}, {6, 5}});
    default:
      return poly({{0, 1}, {2, 1}, {3, 6}, {4, 1}, {5, 6}, {6, 15}, {7, 6}, {8, 14}, {9, 14}});
  }
}

LaurentPoly charstack_finite_reference(unsigned g) {
  switch (g) {
    case 2: return poly({{6, 1}});
    case 3: return poly({{6, 1}, {8, 1}, {9, 6}, {10, 1}, {12, 1}});
    default: return LaurentPoly::zero();
  }
}

LaurentPoly twisted_charstack_reference(unsigned g) {
  switch (g) {
    case 0: return LaurentPoly::zero();
    case 1: return poly({{0, 1}});
    case 2: return poly({{0, 1}, {2, 1}, {3, 4}, {4, 1}, {6, 1}});
    default:
      return poly({{0, 1},
                   {2, 1},
                   {3, 6},
                   {4, 2},
                   {5, 6},
                   {6, 16},
                   {7, 6},
                   {8, 2},
                   {9, 6},
                   {10, 1},
                   {12, 1}});
  }
}

// The genus-3 series as displayed in the source reference, taken literally
// (it lists two degree-6 groups of ranks 15 and 14 and no degree-8 group).
LaurentPoly charstack_g3_displayed_prefactor() {
  return poly({{0, 1}, {2, 1}, {3, 6}, {4, 1}, {5, 6}, {6, 29}, {7, 6}, {9, 14}});
}

// ----- check groups -----

void run_rep_checks(Suite& suite, const SuiteOptions& options) {
  for (unsigned n = 0; n <= 10; ++n) {
    {
      const SheafObject closed = commutator_power_closed(n);
      const SheafObject folded = power(commutator_pushforward(), n);
      suite.check("commutator power " + std::to_string(n) + ": closed form = convolution fold",
                  closed == folded, "closed " + closed.str() + " vs fold " + folded.str());
    }
    {
      const SheafObject closed = squaring_power_closed(n);
      const SheafObject folded = power(squaring_pushforward(), n);
      suite.check("squaring power " + std::to_string(n) + ": closed form = convolution fold",
                  closed == folded, "closed " + closed.str() + " vs fold " + folded.str());
    }
  }

  const LaurentPoly kunneth_factor = poly({{0, 1}, {3, 1}});
  for (unsigned g = 0; g <= 8; ++g)
    suite.check_poly("point pushforward of commutator power " + std::to_string(g) +
                         " = (1+t^3)^" + std::to_string(2 * g),
                     pi_shriek(commutator_power_closed(g), options.tables),
                     kunneth_factor.pow(2 * g));

  for (unsigned g = 0; g <= 2; ++g)
    suite.check_poly("representation variety genus " + std::to_string(g) + " reference value",
                     rep_poincare(g, options.tables), rep_reference(g));

  for (unsigned g = 1; g <= 10; ++g)
    suite.check_poly("representation variety genus " + std::to_string(g) + ": closed sum = engine",
                     rep_poincare_closed(g), rep_poincare(g, options.tables));

  for (unsigned g = 1; g <= 10; ++g)
    suite.check_poly("twisted variety genus " + std::to_string(g) + ": closed formula = engine",
                     twisted_rep_poincare_closed(g), twisted_rep_poincare(g, options.tables));

  for (unsigned g = 1; g <= 8; ++g) {
    const LaurentPoly p = twisted_rep_poincare(g, options.tables);
    std::string detail = "polynomial " + p.str();
    bool ok = false;
    if (!p.is_zero()) {
      const SymmetryCheck sym = check_palindromic(p);
      ok = sym.symmetric && sym.center.twice == 6 * Degree(g) - 3;
      detail += sym.symmetric ? " has center " + sym.center.str() : " is not symmetric";
    }
    suite.check("twisted variety genus " + std::to_string(g) + " is symmetric about (6g-3)/2",
                ok, detail);
  }

  for (unsigned g = 2; g <= 10; ++g) {
    const LaurentPoly p = rep_poincare(g, options.tables);
    const bool ok = !p.is_zero() && p.max_degree() == 6 * Degree(g) - 3 &&
                    p.coeff(p.max_degree()) == 1 && p.coeff(0) == 1;
    suite.check("representation variety genus " + std::to_string(g) +
                    ": top degree 6g-3 with coefficient 1, constant coefficient 1",
                ok, "polynomial " + p.str());
  }

  suite.check_poly("non-orientable demigenus 1 reference value (two points)",
                   nonorientable_rep_poincare(1, options.tables), poly({{0, 2}}));
  suite.check_poly("non-orientable demigenus 2 reference value",
                   nonorientable_rep_poincare(2, options.tables),
                   poly({{0, 1}, {2, 1}, {3, 3}, {4, 1}}));

  {
    const auto [untwisted, twisted] = so3_rep_poincare(1, options.tables);
    suite.check("SO(3) genus 1 components are the untwisted and twisted answers",
                untwisted == rep_reference(1) && twisted == poly({{0, 1}, {3, 1}}),
                untwisted.str() + " / " + twisted.str());
  }
  suite.check_poly("U(2) genus 1 value",
                   u2_rep_poincare(1, options.tables),
                   poly({{0, 1}, {1, 2}, {2, 2}, {3, 4}, {4, 5}, {5, 2}}));

  // Seeded property samples over small random objects.
  Sampler sampler(options.seed);
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 200 && ok; ++i) {
      const SheafObject a = sampler.object(), b = sampler.object(), c = sampler.object();
      ok = convolve(a, convolve(b, c)) == convolve(convolve(a, b), c);
      if (!ok) detail = "a=" + a.str() + " b=" + b.str() + " c=" + c.str();
    }
    suite.check("convolution associativity on 200 random triples", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 200 && ok; ++i) {
      const SheafObject a = sampler.object(), b = sampler.object();
      ok = convolve(a, b) == convolve(b, a);
      if (!ok) detail = "a=" + a.str() + " b=" + b.str();
    }
    suite.check("convolution commutativity on 200 random pairs", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 200 && ok; ++i) {
      const SheafObject a = sampler.object();
      ok = convolve(SheafObject::unit(), a) == a;
      if (!ok) detail = "a=" + a.str();
    }
    suite.check("unit law on 200 random objects", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 200 && ok; ++i) {
      const SheafObject a = sampler.object(), b = sampler.object();
      ok = pi_shriek(convolve(a, b), options.tables) ==
           pi_shriek(a, options.tables) * pi_shriek(b, options.tables);
      if (!ok) detail = "a=" + a.str() + " b=" + b.str();
    }
    suite.check("point pushforward is multiplicative on 200 random pairs", ok, detail);
  }
}

void run_stack_checks(Suite& suite, const SuiteOptions& options) {
  const SheafObject v_nonequivariant =
      SheafObject::term(Atom::U(1), -3) + SheafObject::term(Atom::E(1));
  for (unsigned k = 1; k <= 3; ++k) {
    const SheafObject vk = power(v_nonequivariant, k);
    suite.check_poly("atlas pullback of identity stalk table k=" + std::to_string(k) +
                         " = identity stalk of V^" + std::to_string(k),
                     q_pullback(stack_stalk_identity(k)), stalk_at_one(vk, options.tables));
    suite.check_poly("atlas pullback of identity stalk table k=" + std::to_string(k) +
                         " reference value",
                     q_pullback(stack_stalk_identity(k)), qcompat_identity_reference(k));
    suite.check_poly("atlas pullback of -1 stalk table k=" + std::to_string(k) +
                         " = generic stalk of V^" + std::to_string(k),
                     q_pullback(stack_stalk_minus_one(k)), stalk_generic(vk, options.tables));
    suite.check_poly("atlas pullback of -1 stalk table k=" + std::to_string(k) +
                         " reference value",
                     q_pullback(stack_stalk_minus_one(k)), qcompat_minus_one_reference(k));
  }

  for (unsigned g = 0; g <= 3; ++g) {
    const CharStackCohomology compact =
        charstack_cohomology(g, false, CohomologyVariant::CompactSupport);
    const CharStackCohomology ordinary =
        charstack_cohomology(g, false, CohomologyVariant::Ordinary);

    suite.check_poly("character stack genus " + std::to_string(g) + " tail prefactor",
                     compact.tail_prefactor, charstack_prefactor_reference(g));
    suite.check_poly("character stack genus " + std::to_string(g) + " finite part",
                     compact.finite_part, charstack_finite_reference(g));

    const PeriodicSeries golden =
        PeriodicSeries::polynomial(charstack_finite_reference(g)) +
        tail_unit(CohomologyVariant::CompactSupport).scaled_by(charstack_prefactor_reference(g));
    suite.check("character stack genus " + std::to_string(g) +
                    " compact-support series over window [-30, 15]",
                compact.series == golden && compact.series.window(-30, 15) == golden.window(-30, 15),
                series_mismatch(compact.series, golden, -30, 15));

    const PeriodicSeries replaced =
        PeriodicSeries::polynomial(compact.finite_part) +
        tail_unit(CohomologyVariant::Ordinary).scaled_by(compact.tail_prefactor);
    suite.check("character stack genus " + std::to_string(g) +
                    " ordinary variant replaces the tail and keeps both factors",
                ordinary.series == replaced && ordinary.finite_part == compact.finite_part &&
                    ordinary.tail_prefactor == compact.tail_prefactor,
                series_mismatch(ordinary.series, replaced, -15, 30));
  }

  // The genus-3 untwisted display in the reference lists a second
  // degree-6 group where the engine derives a degree-8 group.  The engine
  // series is ground truth here; the deviation is reported, not hidden.
  {
    const CharStackCohomology engine =
        charstack_cohomology(3, false, CohomologyVariant::CompactSupport);
    const LaurentPoly displayed = charstack_g3_displayed_prefactor();
    std::ostringstream detail;
    detail << "engine tail prefactor " << engine.tail_prefactor.str() << ";";
    const LaurentPoly diff = engine.tail_prefactor - displayed;
    if (diff.is_zero()) {
      detail << " no deviation from the displayed series";
    } else {
      detail << " deviations from the displayed series:";
      for (const auto& [d, c] : diff.terms())
        detail << " degree " << d << " (engine " << engine.tail_prefactor.coeff(d).str()
               << ", displayed " << displayed.coeff(d).str() << ")";
    }
    const bool engine_consistent = engine.tail_prefactor == charstack_prefactor_reference(3) &&
                                   engine.finite_part == charstack_finite_reference(3);
    suite.check("character stack genus 3 vs displayed series (deviations reported)",
                engine_consistent, detail.str(), /*keep_detail=*/true);
  }

  for (unsigned g = 0; g <= 3; ++g) {
    const CharStackCohomology compact =
        charstack_cohomology(g, true, CohomologyVariant::CompactSupport);
    const CharStackCohomology ordinary = charstack_cohomology(g, true, CohomologyVariant::Ordinary);
    const bool finite = compact.series.is_polynomial() && compact.tail_prefactor.is_zero();
    suite.check("twisted character stack genus " + std::to_string(g) +
                    " is a finite polynomial with compact = ordinary",
                finite && compact.series == ordinary.series,
                "series " + compact.series.str());
    suite.check_poly("twisted character stack genus " + std::to_string(g) + " reference value",
                     compact.finite_part, twisted_charstack_reference(g));
  }
}

void run_k0_checks(Suite& suite, const SuiteOptions& options) {
  {
    bool ok = true;
    std::string detail;
    for (unsigned n = 1; n <= 12 && ok; ++n) {
      const K0Class u_n = k0_reduce(SheafObject::term(Atom::U(n)));
      const K0Class u_prev = k0_reduce(SheafObject::term(Atom::U(n - 1)));
      const K0Class e_n = k0_reduce(SheafObject::term(Atom::E(n)));
      const K0Class e_prev = k0_reduce(SheafObject::term(Atom::E(n - 1)));
      const Int sign = (n % 2 == 0) ? -1 : 1;
      const K0Class u_expect = K0Class{0, sign, 0} + u_prev.scaled(-1);
      const K0Class e_expect = e_prev + K0Class{0, 1, 0};
      ok = (n == 1 || u_n == u_expect) && e_n == e_expect;
      if (!ok)
        detail = "n=" + std::to_string(n) + ": [U_n]=" + u_n.str() + ", [E_n]=" + e_n.str();
    }
    suite.check("Grothendieck-class recurrences for U(n), E(n), n <= 12", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (unsigned n = 1; n <= 12 && ok; ++n) {
      const Int chi_e = stalk_at_one(SheafObject::term(Atom::E(n))).eval_at_minus_one();
      const Int chi_u = stalk_at_one(SheafObject::term(Atom::U(n))).eval_at_minus_one();
      const Int expect_u = Int(n - 1) * ((n % 2 == 0) ? -1 : 1);
      ok = chi_e == Int(n + 1) && chi_u == expect_u;
      if (!ok)
        detail = "n=" + std::to_string(n) + ": chi(i*E)=" + chi_e.str() +
                 ", chi(i*U)=" + chi_u.str();
    }
    suite.check("stalk Euler characteristics: chi(i*E(n)) = n+1, chi(i*U(n)) = (n-1)(-1)^(n+1)",
                ok, detail);
  }

  {
    // The three Euler characteristics seen through the reference tables are
    // linear in the Grothendieck class:
    //   identity stalk   <-> [I] + [C]
    //   generic stalk    <-> [C] + [U1]
    //   point pushforward<-> [I] - [U1]
    Sampler sampler(options.seed + 1);
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 120 && ok; ++i) {
      const SheafObject a = sampler.object();
      const K0Class k = k0_reduce(a);
      ok = stalk_at_one(a).eval_at_minus_one() == k.identity + k.constant &&
           stalk_generic(a).eval_at_minus_one() == k.constant + k.u1 &&
           pi_shriek(a).eval_at_minus_one() == k.identity - k.u1;
      if (!ok) detail = "object " + a.str() + " with class " + k.str();
    }
    suite.check("Euler characteristics factor through the Grothendieck class on 120 samples", ok,
                detail);
  }
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
  Suite suite;
  const Selection s = options.selection;
  if (s == Selection::All || s == Selection::Rep) run_rep_checks(suite, options);
  if (s == Selection::All || s == Selection::Stack) run_stack_checks(suite, options);
  if (s == Selection::All || s == Selection::K0) run_k0_checks(suite, options);
  return suite.reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (!r.passed) return false;
  return true;
}

std::string selection_name(Selection s) {
  switch (s) {
    case Selection::All: return "all";
    case Selection::Rep: return "rep";
    case Selection::Stack: return "stack";
    case Selection::K0: return "k0";
  }
  return "?";
}

}  // namespace surfcoh
