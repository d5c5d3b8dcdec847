#include "hsa/json_io.hpp"

namespace hsa {

json free_element_to_json(const FreeElement& f) {
  json out = json::array();
  for (const auto& [w, c] : f.terms())
    out.push_back({{"word", w.str()}, {"coeff", rat_str_frac(c)}});
  return out;
}

FreeElement free_element_from_json(const json& j) {
  FreeElement f;
  for (const auto& item : j)
    f.add_term(Word::parse(item.at("word").get<std::string>()),
               rat_parse(item.at("coeff").get<std::string>()));
  return f;
}

json tree_to_json(const Tree& t) {
  if (t.is_leaf()) return json{{"leaf", t.letter()}};
  return json{{"node", json::array({tree_to_json(t.left()), tree_to_json(t.right())})}};
}

Tree tree_from_json(const json& j) {
  if (j.contains("leaf")) return Tree::leaf(j.at("leaf").get<unsigned>());
  const auto& pair = j.at("node");
  return Tree::node(tree_from_json(pair.at(0)), tree_from_json(pair.at(1)));
}

json hall_poly_to_json(const HallPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms) {
    json factors = json::array();
    for (const auto& [t, k] : m.factors)
      factors.push_back({{"tree", t.str()}, {"power", k}});
    out.push_back({{"coeff", rat_str_frac(c)}, {"factors", std::move(factors)}});
  }
  return out;
}

json area_poly_to_json(const AreaPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms) {
    json factors = json::array();
    for (const auto& t : m.factors)
      factors.push_back({{"tree", t.str()}, {"power", 1}});
    out.push_back({{"coeff", rat_str_frac(c)}, {"factors", std::move(factors)}});
  }
  return out;
}

json series_in_c_to_json(const SeriesInC& s) {
  json coeffs = json::array();
  for (const auto& z : s.z) coeffs.push_back(free_element_to_json(z));
  json slots = json::array();
  for (const auto& v : s.scalar_slots) slots.push_back(rat_str_frac(v));
  return json{{"c", s.c}, {"coefficients", std::move(coeffs)}, {"scalar_slots", std::move(slots)}};
}

json rank_report_to_json(const std::vector<DegreeRankReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json relations = json::array();
    for (const auto& rel : r.relations) {
      json combo = json::array();
      for (const auto& [w, c] : rel)
        combo.push_back({{"word", w.str()}, {"coeff", rat_str_frac(c)}});
      relations.push_back(std::move(combo));
    }
    out.push_back({{"degree", r.degree},
                   {"dimension", r.dimension},
                   {"rank", r.rank},
                   {"relations", std::move(relations)}});
  }
  return out;
}

}  // namespace hsa
