#pragma once

#include <json.hpp>

#include <string>

#include "knorm/k_theory.hpp"

namespace knorm::io {

using nlohmann::json;

// Strict record parsing: unknown or missing keys, wrong JSON types and bad
// rational strings all raise malformed_input naming the offending record
// and field.  Mathematical rejections (non-monic, reducible, zero symbol
// entries, ...) surface as precondition_error from the owning module.

json load_json_file(const std::string& path);

Rational parse_rational(const json& j, const std::string& ctx);
Polynomial<Rational> parse_poly_form(const json& j, const std::string& ctx);
FieldElement parse_element_form(const json& j, const NumberField& F, const std::string& ctx);

// { "name": string, "var": string, "min_poly": [rational strings ascending] }
NumberField parse_field_record(const json& j, const std::string& ctx = "field record");

// { "base": field record, "var": string,
//   "min_poly_over_base": [element forms ascending] }
RelativeExtension parse_extension_record(const json& j,
                                         const std::string& ctx = "extension record");

// [ { "f": element form, "g": element form, "e": integer }, ... ]
SymbolProduct parse_symbols_record(const json& j, const NumberField& base,
                                   const std::string& ctx = "symbols record");

// Canonical emitted forms: lowest-terms rationals, polynomials trimmed,
// element forms padded to the field degree.  serialize(parse(x)) is
// byte-identical on canonical input when dumped compactly.
json rational_to_json(const Rational& r);
json poly_to_json(const Polynomial<Rational>& p);
json element_to_json(const FieldElement& a);
json interval_to_json(const IsolatingInterval& box);
json field_to_json(const NumberField& F);
json extension_to_json(const RelativeExtension& ext);
json symbols_to_json(const SymbolProduct& x);

json verdict_to_json(const NormVerdict& v, const RelativeExtension& ext);

} // namespace knorm::io
