#include "knorm/cli.hpp"

#include <CLI11.hpp>

#include <exception>
#include <optional>

#include "knorm/interchange.hpp"

namespace knorm::cli {

namespace {

using io::json;

void warn_if_asserted(const NumberField& F, std::ostream& err) {
    if (F.status() == IrreducibilityStatus::asserted) err << "warning: " << F.warning() << "\n";
}

NumberField load_field(const std::string& path, std::ostream& err) {
    NumberField F = io::parse_field_record(io::load_json_file(path), "field record " + path);
    warn_if_asserted(F, err);
    return F;
}

RelativeExtension load_extension(const std::string& path, std::ostream& err) {
    RelativeExtension ext =
        io::parse_extension_record(io::load_json_file(path), "extension record " + path);
    warn_if_asserted(ext.base(), err);
    return ext;
}

std::string interval_str(const IsolatingInterval& box) {
    return "[" + box.low.to_string() + ", " + box.high.to_string() + "]";
}

int cmd_places(const std::string& field_path, bool as_json, std::ostream& out,
               std::ostream& err) {
    NumberField F = load_field(field_path, err);
    const auto places = real_places(F);
    const auto [r1, r2] = signature(F);
    if (as_json) {
        json jplaces = json::array();
        for (const auto& v : places) jplaces.push_back(io::interval_to_json(v.box));
        out << json{{"name", F.name()}, {"r1", r1}, {"r2", r2}, {"places", jplaces}}.dump()
            << "\n";
        return 0;
    }
    out << "field " << F.name() << ": " << F.min_poly().to_string(F.var()) << ", degree "
        << F.degree() << "\n";
    out << "signature: r1 = " << r1 << ", r2 = " << r2 << "\n";
    for (const auto& v : places)
        out << "place " << v.index << ": root of " << F.var() << " in " << interval_str(v.box)
            << "\n";
    return 0;
}

int cmd_signature(const std::string& field_path, bool as_json, std::ostream& out,
                  std::ostream& err) {
    NumberField F = load_field(field_path, err);
    const auto [r1, r2] = signature(F);
    if (as_json)
        out << json{{"r1", r1}, {"r2", r2}}.dump() << "\n";
    else
        out << "r1 = " << r1 << ", r2 = " << r2 << "\n";
    return 0;
}

int cmd_sign(const std::string& field_path, const std::string& element_text, std::size_t place,
             bool as_json, std::ostream& out, std::ostream& err) {
    NumberField F = load_field(field_path, err);
    json je;
    try {
        je = json::parse(element_text);
    } catch (const json::parse_error& e) {
        throw malformed_input(std::string("--element: ") + e.what());
    }
    FieldElement a = io::parse_element_form(je, F, "--element");
    const auto places = real_places(F);
    if (place >= places.size())
        throw precondition_error("place index " + std::to_string(place) +
                                 " out of range (field has " + std::to_string(places.size()) +
                                 " real places)");
    const int s = sign_at_place(a, places[place]);
    if (as_json)
        out << json{{"sign", s}}.dump() << "\n";
    else
        out << (s > 0 ? "+1" : s < 0 ? "-1" : "0") << "\n";
    return 0;
}

int cmd_ramified(const std::string& ext_path, bool as_json, std::ostream& out,
                 std::ostream& err) {
    RelativeExtension ext = load_extension(ext_path, err);
    const auto fib = fibers(ext);
    json sr = json::array();
    for (const auto& f : fib)
        if (f.ramified) sr.push_back(f.place.index);
    if (as_json) {
        json jf = json::array();
        for (const auto& f : fib)
            jf.push_back(json{{"index", f.place.index},
                              {"interval", io::interval_to_json(f.place.box)},
                              {"real_above", f.real_above},
                              {"complex_pairs_above", f.complex_pairs_above},
                              {"ramified", f.ramified}});
        out << json{{"convention", std::string(kRamifiedConvention)}, {"fibers", jf}, {"Sr", sr}}
                   .dump()
            << "\n";
        return 0;
    }
    out << "extension of " << ext.base().name() << " by "
        << ext.min_poly_over_base().to_string(ext.var()) << ", relative degree "
        << ext.rel_degree() << "\n";
    out << "convention: " << kRamifiedConvention << "\n";
    for (const auto& f : fib)
        out << "place " << f.place.index << " " << interval_str(f.place.box)
            << ": real above = " << f.real_above
            << ", complex pairs above = " << f.complex_pairs_above
            << ", ramified = " << (f.ramified ? "yes" : "no") << "\n";
    out << "S_r = " << sr.dump() << "\n";
    return 0;
}

int cmd_is_norm(const std::string& ext_path, const std::string& symbols_path, long n,
                bool as_json, std::ostream& out, std::ostream& err) {
    RelativeExtension ext = load_extension(ext_path, err);
    SymbolProduct x = io::parse_symbols_record(io::load_json_file(symbols_path), ext.base(),
                                               "symbols record " + symbols_path);
    const NormVerdict v = is_norm(ext, x, n);
    if (as_json) {
        out << io::verdict_to_json(v, ext).dump() << "\n";
    } else {
        out << "is_norm: " << (v.is_norm ? "true" : "false") << "\n";
        out << "reason: " << to_string(v.reason) << "\n";
        out << "n = " << v.n << "\n";
        out << "convention: " << kRamifiedConvention << "\n";
        if (v.parity) {
            out << "parity over S_r:";
            for (int b : v.parity->bits) out << " " << b;
            out << "\n";
        }
        if (!v.failing_places.empty()) {
            out << "failing places:";
            for (const auto& w : v.failing_places) out << " " << w.index;
            out << "\n";
        }
        if (v.caveat)
            out << "caveat: for n > 1 the sign criterion is applied to the symbolic input"
                << "\n";
    }
    return v.is_norm ? 0 : kExitNotNorm;
}

int cmd_obstruction(const std::string& ext_path, long n, bool as_json, std::ostream& out,
                    std::ostream& err) {
    RelativeExtension ext = load_extension(ext_path, err);
    const ObstructionGroup g = obstruction_group(ext, n);
    json places = json::array();
    for (const auto& v : g.places) places.push_back(v.index);
    if (as_json) {
        out << json{{"n", g.n}, {"rank", g.rank}, {"group", g.to_string()}, {"places", places}}
                   .dump()
            << "\n";
        return 0;
    }
    out << "coker(N_{L/F}) on K_" << 2 * g.n << ": " << g.to_string();
    if (g.rank > 0) out << " indexed by places " << places.dump();
    out << "\n";
    return 0;
}

int cmd_witness(const std::string& ext_path, std::size_t place, std::ostream& out,
                std::ostream& err) {
    RelativeExtension ext = load_extension(ext_path, err);
    const auto places = real_places(ext.base());
    if (place >= places.size())
        throw precondition_error("place index " + std::to_string(place) +
                                 " out of range (base field has " +
                                 std::to_string(places.size()) + " real places)");
    SymbolProduct w = witness_non_norm(ext, places[place]);
    out << io::symbols_to_json(w).dump() << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact decision procedure for norms of even K-groups of number fields"};
    app.require_subcommand(1);

    std::string field_path, ext_path, symbols_path, element_text;
    std::size_t place = 0;
    long n = 1;
    bool as_json = false;

    auto* places_cmd = app.add_subcommand("places", "List the real places of a number field");
    places_cmd->add_option("field", field_path, "field record file")->required();
    places_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* signature_cmd = app.add_subcommand("signature", "Print (r1, r2) of a number field");
    signature_cmd->add_option("field", field_path, "field record file")->required();
    signature_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* sign_cmd =
        app.add_subcommand("sign", "Exact sign of an element at one real place");
    sign_cmd->add_option("field", field_path, "field record file")->required();
    sign_cmd->add_option("--element", element_text, "inline element form, e.g. '[\"0\",\"1\"]'")
        ->required();
    sign_cmd->add_option("--place", place, "real place index")->required();
    sign_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* ramified_cmd =
        app.add_subcommand("ramified", "Fibers over the real places and the set S_r");
    ramified_cmd->add_option("ext", ext_path, "extension record file")->required();
    ramified_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* is_norm_cmd = app.add_subcommand(
        "is-norm", "Decide whether a symbol product is a norm from the extension");
    is_norm_cmd->add_option("ext", ext_path, "extension record file")->required();
    is_norm_cmd->add_option("symbols", symbols_path, "symbols record file")->required();
    is_norm_cmd->add_option("--n", n, "the K-group index parameter (K_2n)")->required();
    is_norm_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* obstruction_cmd =
        app.add_subcommand("obstruction", "The obstruction group coker(N_{L/F})");
    obstruction_cmd->add_option("ext", ext_path, "extension record file")->required();
    obstruction_cmd->add_option("--n", n, "the K-group index parameter (K_2n)")->required();
    obstruction_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* witness_cmd = app.add_subcommand(
        "witness", "Emit a symbol product that is a non-norm at exactly one place");
    witness_cmd->add_option("ext", ext_path, "extension record file")->required();
    witness_cmd->add_option("--place", place, "ramified real place index")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    }

    try {
        if (places_cmd->parsed()) return cmd_places(field_path, as_json, out, err);
        if (signature_cmd->parsed()) return cmd_signature(field_path, as_json, out, err);
        if (sign_cmd->parsed())
            return cmd_sign(field_path, element_text, place, as_json, out, err);
        if (ramified_cmd->parsed()) return cmd_ramified(ext_path, as_json, out, err);
        if (is_norm_cmd->parsed())
            return cmd_is_norm(ext_path, symbols_path, n, as_json, out, err);
        if (obstruction_cmd->parsed()) return cmd_obstruction(ext_path, n, as_json, out, err);
        if (witness_cmd->parsed()) return cmd_witness(ext_path, place, out, err);
        err << "error: no command given\n";
        return kExitMalformed;
    } catch (const malformed_input& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const inconsistency_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace knorm::cli
