#include "ratslice/io.hpp"

#include <fstream>
#include <sstream>

#include "ratslice/error.hpp"

namespace ratslice::io {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) throw InputError(field + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(field + "." + key + ": missing");
  return *it;
}

std::string string_from(const Json& j, const std::string& field) {
  if (!j.is_string()) throw InputError(field + ": expected a string");
  return j.get<std::string>();
}

long long int_from(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw InputError(field + ": expected an integer");
  return j.get<long long>();
}

bool bool_from(const Json& j, const std::string& field) {
  if (!j.is_boolean()) throw InputError(field + ": expected a boolean");
  return j.get<bool>();
}

Json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Json out = Json::object();
  for (const auto& [k, v] : pairs) out[k] = v;
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError(field + ": expected a rational string \"a/b\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
}

Json complex_to_json(const FilteredComplex& c) {
  Json gens = Json::array();
  Json diff = Json::object();
  for (Index i = 0; i < c.size(); ++i) {
    const auto& g = c.generator(i);
    gens.push_back({{"id", g.id},
                    {"maslov", rational_to_json(g.maslov)},
                    {"alexander", rational_to_json(g.alexander)},
                    {"spinc", g.spinc}});
    Json targets = Json::array();
    for (Index t : c.differential().column(i)) targets.push_back(c.generator(t).id);
    diff[g.id] = std::move(targets);
  }
  return {{"generators", std::move(gens)}, {"differential", std::move(diff)}};
}

FilteredComplex complex_from_json(const Json& j) {
  const Json& gens_json = require(j, "generators", "complex");
  if (!gens_json.is_array()) throw InputError("complex.generators: expected an array");
  std::vector<Generator> gens;
  std::map<std::string, Index> lookup;
  for (std::size_t i = 0; i < gens_json.size(); ++i) {
    const std::string field = "generators[" + std::to_string(i) + "]";
    const Json& g = gens_json[i];
    Generator gen;
    gen.id = string_from(require(g, "id", field), field + ".id");
    gen.maslov = rational_from_json(require(g, "maslov", field), field + ".maslov");
    gen.alexander = rational_from_json(require(g, "alexander", field), field + ".alexander");
    gen.spinc = g.contains("spinc") ? string_from(g["spinc"], field + ".spinc") : std::string("0");
    if (!lookup.emplace(gen.id, static_cast<Index>(i)).second) {
      throw InputError(field + ".id: duplicate id '" + gen.id + "'");
    }
    gens.push_back(std::move(gen));
  }
  std::vector<std::vector<Index>> diff(gens.size());
  if (j.contains("differential")) {
    const Json& d = j["differential"];
    if (!d.is_object()) throw InputError("differential: expected an object");
    for (const auto& [src, targets] : d.items()) {
      const std::string field = "differential." + src;
      auto s = lookup.find(src);
      if (s == lookup.end()) throw InputError(field + ": unknown generator id");
      if (!targets.is_array()) throw InputError(field + ": expected an array of ids");
      for (const auto& t : targets) {
        std::string tid = string_from(t, field);
        auto ti = lookup.find(tid);
        if (ti == lookup.end()) throw InputError(field + ": unknown target id '" + tid + "'");
        diff[s->second].push_back(ti->second);
      }
      auto& col = diff[s->second];
      std::sort(col.begin(), col.end());
      if (std::adjacent_find(col.begin(), col.end()) != col.end()) {
        throw InputError(field + ": target listed twice");
      }
    }
  }
  FilteredComplex c(std::move(gens), std::move(diff));
  auto report = validate(c);
  if (!report.ok()) throw InputError("invalid complex: " + report.summary());
  return c;
}

Json spectrum_to_json(const TauSpectrum& s) {
  Json taus = Json::object();
  for (const auto& [id, t] : s.taus) taus[id] = rational_to_json(t);
  return {{"taus", std::move(taus)},
          {"tau_max", rational_to_json(s.tau_max)},
          {"tau_min", rational_to_json(s.tau_min)},
          {"breadth", rational_to_json(s.breadth())},
          {"enumeration_complete", s.enumeration_complete}};
}

TauSpectrum spectrum_from_json(const Json& j, const std::string& field) {
  TauSpectrum s;
  const Json& taus = require(j, "taus", field);
  if (!taus.is_object()) throw InputError(field + ".taus: expected an object");
  for (const auto& [id, t] : taus.items()) {
    s.taus[id] = rational_from_json(t, field + ".taus." + id);
  }
  s.tau_max = rational_from_json(require(j, "tau_max", field), field + ".tau_max");
  s.tau_min = rational_from_json(require(j, "tau_min", field), field + ".tau_min");
  s.enumeration_complete =
      bool_from(require(j, "enumeration_complete", field), field + ".enumeration_complete");
  if (j.contains("breadth") &&
      rational_from_json(j["breadth"], field + ".breadth") != s.breadth()) {
    throw InputError(field + ".breadth: differs from tau_max - tau_min");
  }
  try {
    validate_spectrum(s);
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
  return s;
}

Json framed_to_json(const FramedKnotData& k) {
  Json j = {{"order", k.order},
            {"slope", k.slope},
            {"lk", rational_to_json(k.lk)},
            {"tau_spectrum", spectrum_to_json(k.tau_spectrum)}};
  if (k.d_invariants) {
    Json d = Json::object();
    for (const auto& [s, v] : *k.d_invariants) d[s] = rational_to_json(v);
    j["d_invariants"] = std::move(d);
  }
  if (k.linking_form) {
    Json f = Json::array();
    for (const auto& v : *k.linking_form) f.push_back(rational_to_json(v));
    j["linking_form"] = std::move(f);
  }
  if (k.floer_simple) j["floer_simple"] = *k.floer_simple;
  return j;
}

FramedKnotData framed_from_json(const Json& j) {
  FramedKnotData k;
  k.order = int_from(require(j, "order", "framed"), "order");
  k.slope = int_from(require(j, "slope", "framed"), "slope");
  k.lk = rational_from_json(require(j, "lk", "framed"), "lk");
  k.tau_spectrum = spectrum_from_json(require(j, "tau_spectrum", "framed"));
  if (j.contains("d_invariants")) {
    const Json& d = j["d_invariants"];
    if (!d.is_object()) throw InputError("d_invariants: expected an object");
    std::map<std::string, Rational> table;
    for (const auto& [s, v] : d.items()) table[s] = rational_from_json(v, "d_invariants." + s);
    k.d_invariants = std::move(table);
  }
  if (j.contains("linking_form")) {
    const Json& f = j["linking_form"];
    if (!f.is_array()) throw InputError("linking_form: expected an array");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < f.size(); ++i) {
      values.push_back(rational_from_json(f[i], "linking_form[" + std::to_string(i) + "]"));
    }
    k.linking_form = std::move(values);
  }
  if (j.contains("floer_simple")) k.floer_simple = bool_from(j["floer_simple"], "floer_simple");
  validate(k);
  return k;
}

Json poincare_to_json(const PoincarePolynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms) {
    terms.push_back({{"maslov", rational_to_json(t.maslov)},
                     {"alexander", rational_to_json(t.alexander)},
                     {"rank", t.rank}});
  }
  return {{"spinc", p.spinc}, {"terms", std::move(terms)}};
}

PoincarePolynomial poincare_from_json(const Json& j, const std::string& field) {
  PoincarePolynomial p;
  p.spinc = string_from(require(j, "spinc", field), field + ".spinc");
  const Json& terms = require(j, "terms", field);
  if (!terms.is_array()) throw InputError(field + ".terms: expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tf = field + ".terms[" + std::to_string(i) + "]";
    PoincareTerm t;
    t.maslov = rational_from_json(require(terms[i], "maslov", tf), tf + ".maslov");
    t.alexander = rational_from_json(require(terms[i], "alexander", tf), tf + ".alexander");
    long long r = int_from(require(terms[i], "rank", tf), tf + ".rank");
    if (r < 1) throw InputError(tf + ".rank: must be positive");
    t.rank = static_cast<std::size_t>(r);
    p.terms.push_back(t);
  }
  try {
    validate(p);
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
  return p;
}

Json family_to_json(const PoincareFamily& f) {
  Json arr = Json::array();
  for (const auto& p : f) arr.push_back(poincare_to_json(p));
  return {{"polynomials", std::move(arr)}};
}

PoincareFamily family_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (j.contains("polynomials")) {
      arr = &j["polynomials"];
    } else {
      return {poincare_from_json(j)};
    }
  }
  if (!arr->is_array()) throw InputError("polynomials: expected an array");
  PoincareFamily f;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    f.push_back(poincare_from_json((*arr)[i], "polynomials[" + std::to_string(i) + "]"));
  }
  return f;
}

Json builtin_to_json(const Builtin& b) {
  if (const auto* k = std::get_if<FramedKnotData>(&b)) return framed_to_json(*k);
  return family_to_json(std::get<PoincareFamily>(b));
}

Json report_to_json(const BoundReport& r) {
  Json j = {{"name", r.name},
            {"bound_value", rational_to_json(r.bound_value)},
            {"direction", to_string(r.direction)},
            {"inputs", pairs_to_json(r.inputs)},
            {"citation", r.citation}};
  if (r.clamped) j["clamped"] = rational_to_json(*r.clamped);
  if (!r.derived.empty()) j["derived"] = pairs_to_json(r.derived);
  if (r.satisfied) j["satisfied"] = *r.satisfied;
  j["flags"] = r.flags;
  return j;
}

Json interval_to_json(const Interval& iv) {
  return {{"lo", rational_to_json(iv.lo)}, {"hi", rational_to_json(iv.hi)}};
}

Json verdict_to_json(const DeepSliceVerdict& v) {
  Json taus = Json::array();
  for (const auto& t : v.possible_tau) taus.push_back(rational_to_json(t));
  return {{"possible_tau", std::move(taus)}, {"deep_slice", v.deep_slice}, {"citation", v.citation}};
}

Json validation_to_json(const ValidationReport& r) {
  Json arr = Json::array();
  for (const auto& v : r.violations) {
    arr.push_back({{"kind", to_string(v.kind)},
                   {"source", v.source},
                   {"target", v.target},
                   {"detail", v.detail}});
  }
  return {{"valid", r.ok()}, {"violations", std::move(arr)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ratslice::io
