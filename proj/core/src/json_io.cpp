#include "syz/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace syz {

namespace {

using nlohmann::json;

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

json rational_json(const Rational& x) { return to_pq_string(x); }

json exponents_json(const Monomial& m) { return json(m.exponents()); }

} // namespace

std::string set_to_json(const MonomialSet& s, int indent) {
  json j;
  j["n"] = s.n();
  auto d = s.uniform_degree();
  if (d)
    j["d"] = *d;
  else
    j["d"] = nullptr;
  json rows = json::array();
  for (const auto& m : s.monomials()) rows.push_back(exponents_json(m));
  j["monomials"] = rows;
  return dump(j, indent);
}

MonomialSet set_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("monomial set JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("monomials"))
    throw std::invalid_argument("monomial set JSON: need object with n and monomials");
  if (!j["n"].is_number_unsigned() && !j["n"].is_number_integer())
    throw std::invalid_argument("monomial set JSON: n must be an integer");
  const std::int64_t n = j["n"].get<std::int64_t>();
  if (n < 0) throw std::invalid_argument("monomial set JSON: n must be >= 0");
  if (!j["monomials"].is_array())
    throw std::invalid_argument("monomial set JSON: monomials must be an array");
  std::vector<Monomial> ms;
  for (const auto& row : j["monomials"]) {
    if (!row.is_array()) throw std::invalid_argument("monomial set JSON: ragged monomials");
    std::vector<std::int64_t> exps;
    for (const auto& e : row) {
      if (!e.is_number_integer() && !e.is_number_unsigned())
        throw std::invalid_argument("monomial set JSON: exponents must be integers");
      exps.push_back(e.get<std::int64_t>());
    }
    ms.emplace_back(std::move(exps));
  }
  MonomialSet s(static_cast<std::size_t>(n), std::move(ms));
  if (j.contains("d") && !j["d"].is_null()) {
    const std::int64_t d = j["d"].get<std::int64_t>();
    if (s.uniform_degree() != d)
      throw std::invalid_argument("monomial set JSON: d does not match the member degrees");
  }
  return s;
}

std::string profile_to_json(const SlopeProfile& p, int indent) {
  json j;
  j["n"] = p.n;
  if (p.d)
    j["d"] = *p.d;
  else
    j["d"] = nullptr;
  j["mu_max"] = rational_json(p.mu_max);
  j["mu_max_witness"] = {{"r", p.mu_max_r}, {"gcd", exponents_json(p.mu_max_witness_gcd())}};
  auto proper = p.mu_max_proper();
  if (proper)
    j["mu_max_proper"] = rational_json(*proper);
  else
    j["mu_max_proper"] = nullptr;
  json rows = json::array();
  for (const auto& [r, entry] : p.per_size) {
    json row;
    row["r"] = r;
    row["r_prime"] = r - 1;
    row["best_dJ"] = entry.best_dJ;
    row["value"] = rational_json(entry.value);
    row["witness_gcd"] = exponents_json(entry.witness_gcd);
    rows.push_back(row);
  }
  j["per_size"] = rows;
  return dump(j, indent);
}

std::string certificate_to_json(const StabilityCertificate& c, int indent) {
  json j;
  j["n"] = c.n;
  j["a"] = c.a;
  j["b"] = c.b;
  if (c.d)
    j["d"] = *c.d;
  else
    j["d"] = nullptr;
  j["covered"] = c.covered;
  j["m"] = c.dec.m;
  j["j"] = c.dec.j;
  if (c.dec.s)
    j["s"] = *c.dec.s;
  else
    j["s"] = nullptr;
  if (c.dec.l)
    j["l"] = *c.dec.l;
  else
    j["l"] = nullptr;
  j["mu"] = rational_json(c.mu_coef);
  j["B_coef"] = rational_json(c.B_coef);
  j["B_const"] = rational_json(c.B_const);
  std::optional<std::int64_t> b_at = c.d ? c.d : c.d0;
  if (b_at)
    j["B"] = rational_json(c.B_coef * *b_at + c.B_const);
  else
    j["B"] = nullptr;
  if (c.d0)
    j["d0"] = *c.d0;
  else
    j["d0"] = nullptr;
  switch (c.verdict) {
    case CertVerdict::NotCovered: j["verdict"] = "not_covered"; break;
    case CertVerdict::SemistableForDGeq: j["verdict"] = "semistable_for_d_geq"; break;
    case CertVerdict::CoveredDirectSum: j["verdict"] = "covered_direct_sum"; break;
    case CertVerdict::CoveredNoThreshold: j["verdict"] = "covered_no_threshold"; break;
  }
  if (c.margin) {
    j["margin_alpha"] = rational_json(c.margin->alpha);
    j["margin_beta"] = rational_json(c.margin->beta);
  } else {
    j["margin_alpha"] = nullptr;
    j["margin_beta"] = nullptr;
  }
  if (c.margin_displayed) {
    j["margin_displayed_alpha"] = rational_json(c.margin_displayed->alpha);
    j["margin_displayed_beta"] = rational_json(c.margin_displayed->beta);
  } else {
    j["margin_displayed_alpha"] = nullptr;
    j["margin_displayed_beta"] = nullptr;
  }
  if (c.covered) {
    if (c.thm4.printed)
      j["thm4_printed"] = rational_json(*c.thm4.printed);
    else
      j["thm4_printed"] = nullptr;
    j["thm4_denominator_sign"] = c.thm4.denominator_sign;
  }
  if (c.certified_at_d)
    j["certified_at_d"] = *c.certified_at_d;
  j["warnings"] = c.warnings;
  return dump(j, indent);
}

} // namespace syz
