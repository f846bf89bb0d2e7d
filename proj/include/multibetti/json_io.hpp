#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "multibetti/alexander.hpp"
#include "multibetti/bounds.hpp"
#include "multibetti/field.hpp"
#include "multibetti/koszul.hpp"
#include "multibetti/presentation.hpp"
#include "multibetti/version.hpp"

namespace multibetti {

using Json = nlohmann::ordered_json;

using AnyPresentation =
    std::variant<Presentation<RationalField>, Presentation<PrimeField>>;

inline void stamp(Json& j) {
  j["version"] = kVersion;
  j["format"] = kFormatVersion;
}

inline Json degree_to_json(const DegreeVector& d) {
  Json out = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) out.push_back(d[i]);
  return out;
}

inline DegreeVector degree_from_json(const Json& j, std::size_t vars) {
  if (!j.is_array() || j.size() != vars)
    throw Error("degree must be an integer array of length " + std::to_string(vars));
  std::vector<int> coords;
  coords.reserve(vars);
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw Error("degree entries must be integers");
    coords.push_back(c.get<int>());
  }
  return DegreeVector(std::move(coords));
}

inline Json subset_to_json(SubsetMask s) {
  Json out = Json::array();
  for (std::size_t i : s.indices()) out.push_back(i);
  return out;
}

inline Json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return v.convert_to<std::int64_t>();
  if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min()))
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline Json field_to_json(const RationalField&) { return Json("q"); }
inline Json field_to_json(const PrimeField& f) {
  Json out;
  out["fp"] = f.modulus();
  return out;
}

template <Field F>
Json presentation_to_json(const Presentation<F>& p) {
  Json out;
  stamp(out);
  out["field"] = field_to_json(p.field());
  out["vars"] = p.vars();
  Json rows = Json::array();
  for (std::size_t t = 0; t < p.rows(); ++t)
    rows.push_back(Json{{"degree", degree_to_json(p.row_degrees()[t])}});
  out["rows"] = std::move(rows);
  Json cols = Json::array();
  for (std::size_t j = 0; j < p.cols(); ++j)
    cols.push_back(Json{{"degree", degree_to_json(p.col_degrees()[j])}});
  out["cols"] = std::move(cols);
  Json coeffs = Json::array();
  for (std::size_t t = 0; t < p.rows(); ++t) {
    Json row = Json::array();
    for (std::size_t j = 0; j < p.cols(); ++j)
      row.push_back(p.field().to_string(p.coeffs().at(t, j)));
    coeffs.push_back(std::move(row));
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

inline Json presentation_to_json(const AnyPresentation& p) {
  return std::visit([](const auto& q) { return presentation_to_json(q); }, p);
}

namespace detail {

template <Field F>
typename F::Elem coeff_from_json(const F& field, const Json& j) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  throw Error("coefficients must be strings or integers");
}

inline std::vector<DegreeVector> gens_from_json(const Json& j, std::size_t vars) {
  if (!j.is_array()) throw Error("gens must be an array of degree arrays");
  std::vector<DegreeVector> gens;
  gens.reserve(j.size());
  for (const auto& g : j) gens.push_back(degree_from_json(g, vars));
  return gens;
}

template <Field F>
Presentation<F> presentation_from_json_with(const F& field, const Json& j) {
  if (j.contains("monomial_ideal")) {
    const Json& mi = j.at("monomial_ideal");
    const std::size_t vars = mi.at("vars").get<std::size_t>();
    return from_monomial_ideal(field, vars,
                                          gens_from_json(mi.at("gens"), vars));
  }
  const std::size_t vars = j.at("vars").get<std::size_t>();
  const Json& rows = j.at("rows");
  const Json& cols = j.at("cols");
  if (!rows.is_array() || !cols.is_array())
    throw Error("rows and cols must be arrays of {\"degree\": [...]} objects");
  std::vector<DegreeVector> row_degrees, col_degrees;
  row_degrees.reserve(rows.size());
  for (const auto& r : rows) row_degrees.push_back(degree_from_json(r.at("degree"), vars));
  col_degrees.reserve(cols.size());
  for (const auto& c : cols) col_degrees.push_back(degree_from_json(c.at("degree"), vars));

  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != row_degrees.size())
    throw Error("coeffs must have one row per generator");
  ExactMatrix<F> grid(field, row_degrees.size(), col_degrees.size());
  for (std::size_t t = 0; t < row_degrees.size(); ++t) {
    const Json& row = coeffs.at(t);
    if (!row.is_array() || row.size() != col_degrees.size())
      throw Error("coeff row " + std::to_string(t) + " must have one entry per column");
    for (std::size_t c = 0; c < col_degrees.size(); ++c)
      grid.at(t, c) = coeff_from_json(field, row.at(c));
  }
  return Presentation<F>(vars, std::move(row_degrees), std::move(col_degrees),
                         std::move(grid));
}

}  // namespace detail

// "q" picks exact rationals; {"fp":p} picks the prime field. The tag may be
// absent (rationals) or overridden by the caller (CLI --field).
inline AnyPresentation presentation_from_json(const Json& j,
                                              const std::string& field_override = "") {
  std::string tag = "q";
  std::uint64_t p = 0;
  if (!field_override.empty()) {
    if (field_override == "q") {
      tag = "q";
    } else {
      tag = "fp";
      p = detail::parse_bigint(field_override).convert_to<std::uint64_t>();
    }
  } else if (j.contains("field")) {
    const Json& f = j.at("field");
    if (f.is_string()) {
      tag = f.get<std::string>();
      if (tag != "q") throw Error("unknown field tag \"" + tag + "\"");
    } else if (f.is_object() && f.contains("fp")) {
      tag = "fp";
      p = f.at("fp").get<std::uint64_t>();
    } else {
      throw Error("field must be \"q\" or {\"fp\": p}");
    }
  }
  if (tag == "q")
    return detail::presentation_from_json_with(RationalField{}, j);
  if (!is_prime(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
  return detail::presentation_from_json_with(PrimeField{p}, j);
}

inline Json monomial_ideal_to_json(const MonomialIdeal& ideal) {
  Json out;
  stamp(out);
  out["kind"] = "monomial_ideal";
  out["vars"] = ideal.vars();
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(degree_to_json(g));
  out["gens"] = std::move(gens);
  return out;
}

inline MonomialIdeal monomial_ideal_from_json(const Json& j) {
  const Json& src = j.contains("monomial_ideal") ? j.at("monomial_ideal") : j;
  const std::size_t vars = src.at("vars").get<std::size_t>();
  return MonomialIdeal(vars, detail::gens_from_json(src.at("gens"), vars));
}

namespace detail {

inline Json index_maps_to_json(const std::vector<std::map<DegreeVector, std::size_t>>& by_index) {
  Json arr = Json::array();
  for (const auto& level : by_index) {
    Json obj = Json::object();
    for (const auto& [deg, count] : level) obj[deg.to_string()] = count;
    arr.push_back(std::move(obj));
  }
  return arr;
}

}  // namespace detail

inline Json betti_table_to_json(const BettiTable& t) {
  Json out;
  stamp(out);
  out["kind"] = "betti";
  out["by_index"] = detail::index_maps_to_json(t.by_index);
  out["totals"] = t.totals();
  return out;
}

inline Json bass_table_to_json(const BassTable& t) {
  Json out;
  stamp(out);
  out["kind"] = "bass";
  out["prime"] = subset_to_json(t.prime);
  out["by_index"] = detail::index_maps_to_json(t.by_index);
  out["totals"] = t.totals();
  return out;
}

inline Json verification_report_to_json(const VerificationReport& r) {
  Json out;
  stamp(out);
  out["kind"] = r.kind;
  Json profile;
  profile["beta0"] = r.profile.beta0;
  profile["beta1"] = r.profile.beta1;
  profile["rank"] = r.profile.rank;
  profile["rbar"] = r.profile.rbar();
  profile["lambda"] = r.profile.lambda();
  out["profile"] = std::move(profile);
  out["computed"] = r.computed;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry;
    entry["i"] = c.index;
    entry["computed"] = c.computed;
    entry["bound"] = bigint_to_json(c.bound);
    entry["slack"] = bigint_to_json(c.slack);
    entry["pass"] = c.pass;
    entry["equality"] = c.equality;
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  out["sizes_ok"] = r.sizes_ok;
  out["pass"] = r.pass;
  return out;
}

inline Json probe_report_to_json(const ProbeReport& r) {
  Json out;
  stamp(out);
  out["kind"] = "probe";
  out["a"] = degree_to_json(r.a);
  out["degrees_checked"] = r.degrees_checked;
  Json mism = Json::array();
  for (const auto& m : r.mismatches) {
    Json entry;
    entry["i"] = m.index;
    entry["b"] = degree_to_json(m.degree);
    entry["betti"] = m.betti;
    entry["bass_degree"] = degree_to_json(m.bass_degree);
    entry["bass"] = m.bass;
    mism.push_back(std::move(entry));
  }
  out["mismatches"] = std::move(mism);
  out["betti_totals"] = r.betti_totals;
  out["bass_totals"] = r.bass_totals;
  out["totals_match"] = r.totals_match;
  out["pass"] = r.pass;
  return out;
}

inline Json validation_report_to_json(const ValidationReport& r) {
  Json out;
  stamp(out);
  out["kind"] = "validate";
  out["ok"] = r.ok();
  Json v = Json::array();
  for (const auto& violation : r.violations) v.push_back(violation.to_string());
  out["violations"] = std::move(v);
  return out;
}

}  // namespace multibetti
