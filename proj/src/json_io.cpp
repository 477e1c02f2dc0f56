#include "ut/json_io.hpp"

#include <stdexcept>

namespace ut {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

RationalMatrix matrix_with_kind(const json& j, const char* kind) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != kind)
    bad(std::string("expected kind '") + kind + "'");
  return matrix_from_json(j);
}

std::vector<Rational> rational_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(rational_from_json(e));
  return out;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational must be a \"p/q\" string or an integer");
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j2 = 0; j2 < m.cols(); ++j2) row.push_back(m.at(i, j2).str());
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RationalMatrix matrix_from_json(const json& j) {
  const std::size_t rows = size_field(j, "rows"), cols = size_field(j, "cols");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) bad("entries must hold one array per row");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) bad("row length does not match cols");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(row[c]);
  }
  return m;
}

json to_json(const GroupElement& g) {
  json j = to_json(g.mat());
  j["kind"] = "group";
  return j;
}

json to_json(const AlgebraElement& x) {
  json j = to_json(x.mat());
  j["kind"] = "algebra";
  return j;
}

json to_json(const CoadjointElement& f) {
  json j = to_json(f.mat());
  j["kind"] = "coadjoint";
  return j;
}

GroupElement group_from_json(const json& j) { return GroupElement(matrix_with_kind(j, "group")); }

AlgebraElement algebra_from_json(const json& j) {
  return AlgebraElement(matrix_with_kind(j, "algebra"));
}

CoadjointElement coadjoint_from_json(const json& j) {
  return CoadjointElement(matrix_with_kind(j, "coadjoint"));
}

json to_json(const BlockPartition& p) {
  json sizes = json::array();
  for (std::size_t b = 1; b <= p.count(); ++b) sizes.push_back(p.size(b));
  return json{{"sizes", std::move(sizes)}};
}

BlockPartition partition_from_json(const json& j) {
  const json& sizes = field(j, "sizes");
  if (!sizes.is_array() || sizes.empty()) bad("sizes must be a non-empty array");
  std::vector<std::size_t> out;
  for (const json& e : sizes) {
    if (!e.is_number_unsigned()) bad("sizes must hold non-negative integers");
    out.push_back(e.get<std::size_t>());
  }
  return BlockPartition(out);
}

std::string variant_name(OrbitVariant v) {
  switch (v) {
    case OrbitVariant::RegularEven: return "regular-even";
    case OrbitVariant::RegularOdd: return "regular-odd";
    case OrbitVariant::SubregularEven: return "subregular-even";
    case OrbitVariant::SubregularOdd: return "subregular-odd";
  }
  bad("unknown variant");
}

OrbitVariant variant_from_name(const std::string& name) {
  if (name == "regular-even") return OrbitVariant::RegularEven;
  if (name == "regular-odd") return OrbitVariant::RegularOdd;
  if (name == "subregular-even") return OrbitVariant::SubregularEven;
  if (name == "subregular-odd") return OrbitVariant::SubregularOdd;
  bad("variant must be one of regular-even, regular-odd, subregular-even, subregular-odd");
}

json to_json(const OrbitParams& p) {
  json j{{"variant", variant_name(p.variant)}, {"k", p.k}, {"m", p.m}};
  json ls = json::array();
  for (const Rational& l : p.lambdas) ls.push_back(l.str());
  j["lambdas"] = std::move(ls);
  if (is_subregular(p.variant)) {
    json l1 = json::array();
    for (const Rational& l : p.lambdas1) l1.push_back(l.str());
    j["lambdas1"] = std::move(l1);
    j["gammas"] = json::array({p.gammas[0].str(), p.gammas[1].str(), p.gammas[2].str()});
  }
  return j;
}

OrbitParams params_from_json(const json& j) {
  OrbitParams p;
  const json& v = field(j, "variant");
  if (!v.is_string()) bad("variant must be a string");
  p.variant = variant_from_name(v.get<std::string>());
  p.k = size_field(j, "k");
  p.m = is_subregular(p.variant) ? size_field(j, "m") : 0;
  p.lambdas = rational_list(j, "lambdas");
  if (is_subregular(p.variant)) {
    p.lambdas1 = rational_list(j, "lambdas1");
    std::vector<Rational> gs = rational_list(j, "gammas");
    if (gs.size() != 3) bad("gammas must hold exactly three entries");
    p.gammas = {gs[0], gs[1], gs[2]};
  }
  p.validate();
  return p;
}

json to_json(const CharacterValue& v, bool exact) {
  json j{{"on_support", v.on_support},
         {"singular", v.singular},
         {"outside_localization", v.outside_localization}};
  if (exact) {
    j["modulus"] = v.modulus.str();
    j["phase"] = v.phase.str();
  } else {
    j["modulus"] = v.modulus.to_double();
    j["phase"] = v.phase.to_double();
  }
  return j;
}

json to_json(const MCEstimate& e) {
  json j{{"estimate", json::array({e.value.real(), e.value.imag()})},
         {"std_error", e.std_error},
         {"samples", e.samples},
         {"seed", e.seed}};
  if (!e.windows.empty()) {
    json ws = json::array();
    for (const WindowEstimate& w : e.windows)
      ws.push_back(json{{"width", w.width},
                        {"estimate", json::array({w.value.real(), w.value.imag()})},
                        {"std_error", w.std_error}});
    j["windows"] = std::move(ws);
  }
  return j;
}

json to_json(const DeltaReport& r) {
  return json{{"lambda", r.lambda},
              {"window", r.window},
              {"estimate", json::array({r.estimate.real(), r.estimate.imag()})},
              {"reference", r.reference},
              {"rel_error", r.rel_error}};
}

}  // namespace ut
