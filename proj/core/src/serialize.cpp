#include "circlab/serialize.hpp"

#include <stdexcept>

namespace circlab {

Json to_json(const Rational& value) {
  return Json{{"num", value.numerator()}, {"den", value.denominator()}};
}

Rational rational_from_json(const Json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

Json to_json(const NatOrInf& value) {
  if (value.is_infinite()) return "inf";
  return value.value();
}

Json to_json(const HomWitness& witness) { return Json(witness.mapping); }

Json to_json(const Coloring& coloring) {
  return Json{{"k", coloring.k}, {"color", coloring.color}};
}

Json to_json(const VertexSet& set) { return Json(set.members()); }

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const FreeColoring& coloring) {
  Json classes = Json::array();
  for (const auto& c : coloring.classes) classes.push_back(to_json(c));
  Json edges = Json::array();
  for (const auto& e : coloring.support_edges) edges.push_back(to_json(e));
  Json out{{"classes", classes}, {"support_edges", edges}, {"a", coloring.a}};
  out["b"] = coloring.b == kUnboundedCap ? Json(nullptr) : Json(coloring.b);
  return out;
}

FreeColoring free_coloring_from_json(const Json& j, std::size_t order) {
  FreeColoring out;
  for (const auto& cls : j.at("classes")) {
    VertexSet set(order);
    for (const auto& v : cls) {
      const auto id = v.get<std::size_t>();
      if (id >= order) throw std::out_of_range("free coloring vertex out of range");
      set.insert(id);
    }
    out.classes.push_back(std::move(set));
  }
  for (const auto& e : j.at("support_edges")) {
    out.support_edges.push_back(Edge::make(e.at(0).get<Vertex>(), e.at(1).get<Vertex>()));
  }
  out.a = j.value("a", std::size_t{0});
  const Json& b = j.contains("b") ? j.at("b") : Json(nullptr);
  out.b = b.is_null() ? kUnboundedCap : b.get<std::size_t>();
  return out;
}

Json to_json(const FamilySpec& spec) {
  Json out{{"family", std::string(family_keyword(spec.family))}, {"params", spec.params}};
  if (!spec.operands.empty()) {
    Json ops = Json::array();
    for (const auto& op : spec.operands) ops.push_back(to_json(op));
    out["operands"] = ops;
  }
  return out;
}

FamilySpec family_spec_from_json(const Json& j) {
  FamilySpec spec;
  const auto keyword = j.at("family").get<std::string>();
  const auto family = parse_family_keyword(keyword);
  if (!family) throw std::invalid_argument("unknown family '" + keyword + "'");
  spec.family = *family;
  spec.params = j.at("params").get<std::vector<long long>>();
  if (j.contains("operands")) {
    for (const auto& op : j.at("operands")) spec.operands.push_back(family_spec_from_json(op));
  }
  return spec;
}

}  // namespace circlab
