#include "rbrack/io.hpp"

#include <fstream>
#include <stdexcept>

namespace rbrack {

json table_to_json(const CayleyTable& t, const std::string& kind) {
  json rows = json::array();
  for (Elt x = 0; x < t.n; ++x) {
    json row = json::array();
    for (Elt y = 0; y < t.n; ++y) row.push_back(t.op(x, y));
    rows.push_back(std::move(row));
  }
  return json{{"kind", kind}, {"n", t.n}, {"table", std::move(rows)}};
}

CayleyTable table_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("table"))
    throw std::runtime_error("table json: missing \"n\" or \"table\"");
  int n = j.at("n").get<int>();
  std::vector<Elt> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : j.at("table"))
    for (const auto& v : row) cells.push_back(v.get<Elt>());
  return CayleyTable(n, std::move(cells));
}

std::string table_kind(const nlohmann::json& j) {
  return j.value("kind", std::string("raw"));
}

json operator_to_json(const OperatorMap& b) { return json{{"map", b.map}}; }

OperatorMap operator_from_json(const nlohmann::json& j) {
  if (j.is_array()) return OperatorMap{j.get<std::vector<Elt>>()};
  return OperatorMap{j.at("map").get<std::vector<Elt>>()};
}

json phi_to_json(const PhiAction& phi) {
  json perms = json::array();
  for (const Perm& p : phi.perms) perms.push_back(p.images);
  return json{{"perms", std::move(perms)}};
}

PhiAction phi_from_json(const nlohmann::json& j) {
  PhiAction phi;
  for (const auto& p : j.at("perms"))
    phi.perms.emplace_back(p.get<std::vector<Elt>>());
  return phi;
}

json union_spec_to_json(const UnionSpec& spec) {
  json sigma = json::array(), tau = json::array();
  for (const Perm& p : spec.sigma) sigma.push_back(p.images);
  for (const Perm& p : spec.tau) tau.push_back(p.images);
  return json{{"sigma", std::move(sigma)}, {"tau", std::move(tau)}};
}

UnionSpec union_spec_from_json(const nlohmann::json& j) {
  UnionSpec spec;
  for (const auto& p : j.at("sigma")) spec.sigma.emplace_back(p.get<std::vector<Elt>>());
  for (const auto& p : j.at("tau")) spec.tau.emplace_back(p.get<std::vector<Elt>>());
  return spec;
}

json report_to_json(const StructureReport& r) {
  return json{{"Q1", r.q1},
              {"Q2", r.q2},
              {"Q3", r.q3},
              {"LQ2", r.lq2},
              {"LQ3", r.lq3},
              {"is_rack", r.is_rack},
              {"is_quandle", r.is_quandle},
              {"is_left_rack", r.is_left_rack},
              {"commutative", r.commutative},
              {"involutary", r.involutary},
              {"connected", r.connected},
              {"orbits", r.orbits}};
}

json census_summary_json(const OperatorCensus& c) {
  return json{{"structure", c.structure_hash},
              {"kind", kind_name(c.kind)},
              {"count", c.operators.size()},
              {"space", c.space_size}};
}

json algebra_element_to_json(const AlgebraElement& e) {
  json terms = json::array();
  for (const auto& [idx, c] : e.terms)
    terms.push_back(json::array({idx, fld_to_string(e.field, c)}));
  json out;
  out["field"] = e.field.kind == Field::Kind::Q ? "Q" : "Fp";
  if (e.field.kind == Field::Kind::Fp) out["p"] = e.field.p;
  out["terms"] = std::move(terms);
  return out;
}

AlgebraElement algebra_element_from_json(const nlohmann::json& j) {
  Field f = j.at("field").get<std::string>() == "Q"
                ? Field::rationals()
                : Field::prime(j.at("p").get<std::int64_t>());
  AlgebraElement out = AlgebraElement::zero(f);
  for (const auto& term : j.at("terms")) {
    Elt idx = term.at(0).get<Elt>();
    Scalar c = term.at(1).is_string() ? fld_parse(f, term.at(1).get<std::string>())
                                      : fld_from_int(f, term.at(1).get<std::int64_t>());
    out = elem_add(out, AlgebraElement{f, {{idx, c}}});
  }
  return out;
}

json monomial_to_json(const MonomialOperator& m) {
  return json{{"targets", m.targets}, {"weights", m.weights}};
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

void save_census_jsonl(const OperatorCensus& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const OperatorMap& b : c.operators) out << operator_to_json(b).dump() << '\n';
  out << census_summary_json(c).dump() << '\n';
}

}  // namespace rbrack
