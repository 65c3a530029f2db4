#include "json_io.hpp"

#include <stdexcept>

namespace surfcoh::jsonio {

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [d, c] : p.terms()) terms.push_back(Json::array({d, c.str()}));
  return terms;
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& term : j)
    p += LaurentPoly::monomial(Int(term.at(1).get<std::string>()), term.at(0).get<Degree>());
  return p;
}

Json series_to_json(const PeriodicSeries& s) {
  Json j;
  j["transient"] = poly_to_json(s.transient());
  Json pattern = Json::array();
  for (const Int& v : s.pattern()) pattern.push_back(v.str());
  j["pattern"] = pattern;
  j["direction"] = s.direction();
  j["tail_start"] = s.tail_start();
  return j;
}

PeriodicSeries series_from_json(const Json& j) {
  PeriodicSeries::Pattern pattern;
  const Json& jp = j.at("pattern");
  if (jp.size() != 4) throw std::invalid_argument("periodic pattern must have four entries");
  for (int r = 0; r < 4; ++r) pattern[r] = Int(jp.at(r).get<std::string>());
  return PeriodicSeries::with_tail(poly_from_json(j.at("transient")), std::move(pattern),
                                   j.at("direction").get<int>(),
                                   j.at("tail_start").get<Degree>());
}

namespace {

std::string atom_tag(Atom a) {
  switch (a.kind) {
    case AtomKind::Identity: return "I";
    case AtomKind::Constant: return "C";
    case AtomKind::U: return "U";
    case AtomKind::E: return "E";
  }
  return "?";
}

Atom atom_from_tag(const std::string& tag, unsigned index) {
  if (tag == "I") return Atom::I();
  if (tag == "C") return Atom::C();
  if (tag == "U") return Atom::U(index);
  if (tag == "E") return Atom::E(index);
  throw std::invalid_argument("unknown atom tag: " + tag);
}

}  // namespace

Json object_to_json(const SheafObject& o) {
  Json terms = Json::array();
  for (const auto& [key, m] : o.terms())
    terms.push_back(Json::array({atom_tag(key.atom), key.atom.index, key.shift, m.str()}));
  return terms;
}

SheafObject object_from_json(const Json& j) {
  SheafObject o;
  for (const auto& term : j)
    o.add_term(atom_from_tag(term.at(0).get<std::string>(), term.at(1).get<unsigned>()),
               term.at(2).get<Degree>(), Int(term.at(3).get<std::string>()));
  return o;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = r.passed ? "pass" : "fail";
  j["detail"] = r.detail;
  return j;
}

}  // namespace surfcoh::jsonio
