#include "knorm/interchange.hpp"

#include <fstream>
#include <initializer_list>

namespace knorm::io {

namespace {

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const std::string& ctx) {
    if (!j.is_object()) throw malformed_input(ctx + ": expected an object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || item.key() == k;
        if (!known) throw malformed_input(ctx + ": unknown key \"" + item.key() + "\"");
    }
    for (const char* k : keys)
        if (!j.contains(k)) throw malformed_input(ctx + ": missing key \"" + std::string(k) + "\"");
}

std::string parse_string(const json& j, const std::string& ctx) {
    if (!j.is_string()) throw malformed_input(ctx + ": expected a string");
    return j.get<std::string>();
}

} // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw malformed_input("cannot open input file \"" + path + "\"");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw malformed_input("file \"" + path + "\": " + e.what());
    }
    return j;
}

Rational parse_rational(const json& j, const std::string& ctx) {
    if (!j.is_string())
        throw malformed_input(ctx + ": rationals must be strings, e.g. \"-7/3\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const malformed_input& e) {
        throw malformed_input(ctx + ": " + e.what());
    }
}

Polynomial<Rational> parse_poly_form(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw malformed_input(ctx + ": expected an array of rational strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(parse_rational(j[i], ctx + "[" + std::to_string(i) + "]"));
    return Polynomial<Rational>(std::move(coeffs));
}

FieldElement parse_element_form(const json& j, const NumberField& F, const std::string& ctx) {
    if (!j.is_array()) throw malformed_input(ctx + ": expected an array of rational strings");
    if (j.size() > F.degree())
        throw malformed_input(ctx + ": element form longer than the field degree " +
                              std::to_string(F.degree()));
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(parse_rational(j[i], ctx + "[" + std::to_string(i) + "]"));
    return F.element(std::move(coeffs));
}

NumberField parse_field_record(const json& j, const std::string& ctx) {
    require_keys(j, {"name", "var", "min_poly"}, ctx);
    std::string name = parse_string(j["name"], ctx + ": name");
    std::string var = parse_string(j["var"], ctx + ": var");
    if (var.empty()) throw malformed_input(ctx + ": var must be nonempty");
    auto poly = parse_poly_form(j["min_poly"], ctx + ": min_poly");
    return make_number_field(poly, std::move(name), std::move(var));
}

RelativeExtension parse_extension_record(const json& j, const std::string& ctx) {
    require_keys(j, {"base", "var", "min_poly_over_base"}, ctx);
    NumberField base = parse_field_record(j["base"], ctx + ": base");
    std::string var = parse_string(j["var"], ctx + ": var");
    if (var.empty()) throw malformed_input(ctx + ": var must be nonempty");
    const json& mp = j["min_poly_over_base"];
    if (!mp.is_array())
        throw malformed_input(ctx + ": min_poly_over_base: expected an array of element forms");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(mp.size());
    for (std::size_t i = 0; i < mp.size(); ++i)
        coeffs.push_back(parse_element_form(
            mp[i], base, ctx + ": min_poly_over_base[" + std::to_string(i) + "]"));
    return make_relative_extension(base, Polynomial<FieldElement>(std::move(coeffs)),
                                   std::move(var));
}

SymbolProduct parse_symbols_record(const json& j, const NumberField& base,
                                   const std::string& ctx) {
    if (!j.is_array()) throw malformed_input(ctx + ": expected an array of symbol records");
    std::vector<SymbolFactor> factors;
    factors.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string sctx = ctx + "[" + std::to_string(i) + "]";
        require_keys(j[i], {"f", "g", "e"}, sctx);
        if (!j[i]["e"].is_number_integer())
            throw malformed_input(sctx + ": e: expected an integer exponent");
        FieldElement f = parse_element_form(j[i]["f"], base, sctx + ": f");
        FieldElement g = parse_element_form(j[i]["g"], base, sctx + ": g");
        factors.push_back(
            SymbolFactor{SteinbergSymbol(std::move(f), std::move(g)), j[i]["e"].get<long>()});
    }
    return SymbolProduct(std::move(factors));
}

json rational_to_json(const Rational& r) { return r.to_string(); }

json poly_to_json(const Polynomial<Rational>& p) {
    json out = json::array();
    for (const Rational& c : p.coeffs()) out.push_back(rational_to_json(c));
    return out;
}

json element_to_json(const FieldElement& a) {
    json out = json::array();
    for (const Rational& c : a.coeffs()) out.push_back(rational_to_json(c));
    return out;
}

json interval_to_json(const IsolatingInterval& box) {
    return json::array({rational_to_json(box.low), rational_to_json(box.high)});
}

json field_to_json(const NumberField& F) {
    return json{{"name", F.name()}, {"var", F.var()}, {"min_poly", poly_to_json(F.min_poly())}};
}

json extension_to_json(const RelativeExtension& ext) {
    json mp = json::array();
    for (const FieldElement& c : ext.min_poly_over_base().coeffs())
        mp.push_back(element_to_json(c));
    return json{{"base", field_to_json(ext.base())},
                {"var", ext.var()},
                {"min_poly_over_base", mp}};
}

json symbols_to_json(const SymbolProduct& x) {
    json out = json::array();
    for (const SymbolFactor& f : x.factors())
        out.push_back(json{{"f", element_to_json(f.symbol.f())},
                           {"g", element_to_json(f.symbol.g())},
                           {"e", f.exponent}});
    return out;
}

json verdict_to_json(const NormVerdict& v, const RelativeExtension& ext) {
    json parity = nullptr;
    if (v.parity) {
        parity = json::array();
        for (int b : v.parity->bits) parity.push_back(b);
    }
    json failing = json::array();
    for (const RealPlace& w : v.failing_places) failing.push_back(w.index);
    json sr = json::array();
    for (const RealPlace& w : ramified_real_places(ext)) sr.push_back(w.index);
    return json{{"is_norm", v.is_norm},
                {"n", v.n},
                {"convention", std::string(kRamifiedConvention)},
                {"Sr", sr},
                {"parity", parity},
                {"failing_places", failing},
                {"reason", std::string(to_string(v.reason))},
                {"caveat", v.caveat}};
}

} // namespace knorm::io
