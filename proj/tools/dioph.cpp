#include <chrono>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dioph/apery.hpp"
#include "dioph/carry_monoid.hpp"
#include "dioph/class_groups.hpp"
#include "dioph/decompose.hpp"
#include "dioph/equation.hpp"
#include "dioph/error.hpp"
#include "dioph/hilbert.hpp"
#include "dioph/oracle.hpp"

namespace {

using dioph::i64;
using nlohmann::json;

std::vector<i64> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<i64> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = std::min(text.find(',', pos), text.size());
        const std::string tok = text.substr(pos, comma - pos);
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "'" + tok + "' is not an integer");
        }
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

json points_json(const std::vector<dioph::LatticePoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(p);
    return arr;
}

json group_json(const dioph::FiniteAbelianGroup& g) {
    return json{{"invariant_factors", g.invariant_factors},
                {"order", g.order()},
                {"description", g.to_string()}};
}

json pairs_json(const std::vector<std::pair<i64, i64>>& pairs) {
    json arr = json::array();
    for (const auto& [m, n] : pairs) arr.push_back(json::array({m, n}));
    return arr;
}

// Plain-text rendering of the JSON document: scalars inline, arrays of
// scalars on one line, point lists one point per line.
void print_text(const json& j, int indent, std::ostream& os) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && !v[0].is_primitive())) {
                os << pad << k << ":\n";
                print_text(v, indent + 2, os);
            } else if (v.is_array()) {
                os << pad << k << ": " << v.dump() << "\n";
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_array()) {
                os << pad << dioph::point_to_string(v.get<std::vector<i64>>()) << "\n";
            } else if (v.is_object()) {
                print_text(v, indent, os);
                os << "\n";
            } else {
                os << pad << v.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

struct CommandContext {
    dioph::EquationSpec eq;
    i64 guard;
};

json run_apery(const CommandContext& ctx, const std::string& method) {
    json result;
    result["method"] = method;
    if (method == "box") {
        const auto t = dioph::apery_box(ctx.eq, ctx.guard);
        result["elements"] = points_json(t.elements);
        result["count"] = t.size();
    } else if (method == "closed") {
        const auto t = dioph::apery_closed_form(ctx.eq, ctx.guard);
        result["elements"] = points_json(t.elements);
        result["count"] = t.size();
    } else {
        const auto box = dioph::apery_box(ctx.eq, ctx.guard);
        const auto closed = dioph::apery_closed_form(ctx.eq, ctx.guard);
        if (box.elements != closed.elements)
            dioph::fail(dioph::ErrorCode::MethodMismatch,
                        "box and closed-form Apery sets disagree");
        result["elements"] = points_json(box.elements);
        result["count"] = box.size();
        result["match"] = true;
    }
    return result;
}

json run_hilbert(const CommandContext& ctx) {
    const auto hb = dioph::hilbert_basis(ctx.eq, ctx.guard);
    return json{{"rays", points_json(hb.rays)},
                {"extras", points_json(hb.extras)},
                {"basis", points_json(hb.all())}};
}

json run_decompose(const CommandContext& ctx, const dioph::LatticePoint& x) {
    const auto d = dioph::decompose(ctx.eq, x);
    return json{{"point", x}, {"apery_part", d.apery_part}, {"ray_mults", d.ray_mults}};
}

json run_lift(const CommandContext& ctx, const dioph::LatticePoint& x) {
    return json{{"point", x}, {"lifted", dioph::lift(ctx.eq, x)}};
}

json run_elliott(const CommandContext& ctx, const std::optional<dioph::LatticePoint>& x) {
    const auto scheme = dioph::elliott_scheme(ctx.eq, ctx.guard);
    json result;
    result["u"] = scheme.u ? json(*scheme.u) : json(nullptr);
    result["v"] = scheme.v ? json(*scheme.v) : json(nullptr);
    result["admissible"] = pairs_json(scheme.admissible);
    if (x) {
        const auto rep = dioph::elliott_decompose(scheme, *x);
        result["point"] = *x;
        result["ray_mults"] = rep.ray_mults;
        result["m"] = rep.m;
        result["n"] = rep.n;
    }
    return result;
}

json run_verify(const CommandContext& ctx, int sweep_c) {
    json result;
    bool ok = true;

    const auto product = dioph::verify_product_identity(ctx.eq, ctx.guard);
    result["product_identity"] =
        json{{"lhs", product.lhs}, {"rhs", product.rhs}, {"holds", product.holds}};
    ok = ok && product.holds;

    const auto box = dioph::apery_box(ctx.eq, ctx.guard);
    const bool brute_match = dioph::brute_apery(ctx.eq, ctx.guard) == box.elements;
    result["apery_definition_match"] = brute_match;
    ok = ok && brute_match;

    const auto inner = dioph::inner_class_group(ctx.eq, ctx.guard);
    const i64 ap_count = static_cast<i64>(box.size());
    if (ap_count <= 2000) {
        dioph::CayleyTable cayley;
        cayley.n = box.size();
        cayley.identity = 0;
        cayley.op.resize(box.size() * box.size());
        for (size_t i = 0; i < box.size(); ++i)
            for (size_t j = 0; j < box.size(); ++j)
                cayley.op[i * box.size() + j] =
                    *box.index_of(dioph::oplus(box, box.elements[i], box.elements[j]));
        const bool cayley_match = dioph::brute_group_structure(cayley) == inner;
        result["cayley_group_match"] = cayley_match;
        ok = ok && cayley_match;
    } else {
        result["cayley_group_match"] = "skipped";
    }

    if (ctx.eq.r() == 3 && ctx.eq.coeffs[0] != 0 && ctx.eq.coeffs[1] != 0) {
        const bool closed_match =
            dioph::apery_closed_form(ctx.eq, ctx.guard).elements == box.elements;
        const auto cyclic = dioph::two_dim_closed_form(ctx.eq.coeffs[0], ctx.eq.coeffs[1],
                                                       ctx.eq.modulus);
        const bool group_match =
            dioph::class_group(ctx.eq, ctx.guard) == cyclic && inner == cyclic;
        result["closed_form"] = json{{"applicable", true},
                                     {"apery_match", closed_match},
                                     {"group_match", group_match}};
        ok = ok && closed_match && group_match;
    } else {
        result["closed_form"] = json{{"applicable", false}};
    }

    if (sweep_c >= 2) {
        i64 instances = 0;
        bool sweep_ok = true;
        std::string first_failure;
        for (i64 c = 2; c <= sweep_c && sweep_ok; ++c)
            for (i64 a = 1; a < c && sweep_ok; ++a)
                for (i64 b = 1; b < c && sweep_ok; ++b) {
                    if (std::gcd(std::gcd(a, b), c) != 1) continue;
                    ++instances;
                    const auto eq = dioph::normalize_equation({a, b, c});
                    const auto bx = dioph::apery_box(eq, ctx.guard);
                    const auto cyc = dioph::two_dim_closed_form(a, b, c);
                    if (dioph::apery_closed_form(eq, ctx.guard).elements != bx.elements ||
                        dioph::brute_apery(eq, ctx.guard) != bx.elements ||
                        dioph::class_group(eq, ctx.guard) != cyc ||
                        dioph::inner_class_group(eq, ctx.guard) != cyc ||
                        !dioph::verify_product_identity(eq, ctx.guard).holds) {
                        sweep_ok = false;
                        first_failure = std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c);
                    }
                }
        json sweep{{"max_c", sweep_c}, {"instances", instances}, {"ok", sweep_ok}};
        if (!sweep_ok) sweep["first_failure"] = first_failure;
        result["sweep"] = sweep;
        ok = ok && sweep_ok;
    }

    result["ok"] = ok;
    return result;
}

json run_carry(const CommandContext& ctx, const std::string& mode, i64 depth, i64 bound) {
    const auto canonical = dioph::canonical_spec(ctx.eq, ctx.guard);
    if (mode == "export") {
        return json::parse(dioph::carry_spec_to_json(canonical.spec));
    }
    if (mode == "check") {
        const i64 n = depth > 0 ? depth : 2 * canonical.spec.group.exponent();
        const i64 b = bound > 0 ? bound : 3;
        const auto report = dioph::check_axioms(canonical.spec, n, b);
        json axioms = json::array();
        for (const auto& entry : report.entries) {
            json e{{"axiom", entry.axiom}, {"passed", entry.passed}};
            if (!entry.passed) e["counterexample"] = entry.counterexample;
            axioms.push_back(e);
        }
        return json{{"axioms", axioms},
                    {"depth_bound", n},
                    {"coord_bound", b},
                    {"all_passed", report.all_passed()}};
    }
    const i64 b = bound > 0 ? bound : 2;
    return json{{"holds", dioph::verify_isomorphism(ctx.eq, canonical, b, ctx.guard)},
                {"coord_bound", b}};
}

int emit_and_exit(const json& doc, const std::string& format, bool failure) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else if (doc.contains("error")) {
        std::cerr << "error[" << doc["error"]["code"].get<std::string>()
                  << "]: " << doc["error"]["message"].get<std::string>() << "\n";
    } else {
        print_text(doc, 0, std::cout);
    }
    return failure ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Apery sets, Hilbert bases and class groups of Diophantine monoids"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string eq_str;
    std::string format = "text";
    i64 guard = dioph::kDefaultGuard;
    app.add_option("--eq", eq_str, "equation entries a1,...,ar (positive integers)")
        ->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--guard", guard, "max lattice points any enumeration may visit");

    auto* cmd_apery = app.add_subcommand("apery", "Apery set of the monoid");
    std::string method = "box";
    cmd_apery->add_option("--method", method, "box | closed | both")
        ->check(CLI::IsMember({"box", "closed", "both"}));

    app.add_subcommand("hilbert", "Hilbert basis (rays and non-ray atoms)");

    auto* cmd_decompose = app.add_subcommand("decompose", "split a point against the rays");
    std::string point_str;
    cmd_decompose->add_option("--point", point_str, "point x1,...,x_{r-1}")->required();

    auto* cmd_elliott = app.add_subcommand("elliott", "admissible exponent scheme");
    std::string elliott_point;
    cmd_elliott->add_option("--point", elliott_point, "also represent this point");

    app.add_subcommand("classgroup", "class group invariant factors");
    app.add_subcommand("innerclass", "inner class group invariant factors");

    auto* cmd_verify = app.add_subcommand("verify", "cross-check the closed forms");
    int sweep_c = 0;
    cmd_verify->add_option("--sweep-c", sweep_c, "also sweep all r=3 equations up to this modulus");

    auto* cmd_lift = app.add_subcommand("lift", "lift a point to the inhomogeneous solution");
    std::string lift_point;
    cmd_lift->add_option("--point", lift_point, "point x1,...,x_{r-1}")->required();

    auto* cmd_carry = app.add_subcommand("carry", "carry-monoid model of the monoid");
    std::string carry_mode;
    cmd_carry->add_option("mode", carry_mode, "export | check | iso")
        ->required()
        ->check(CLI::IsMember({"export", "check", "iso"}));
    i64 carry_depth = 0;
    i64 carry_bound = 0;
    cmd_carry->add_option("--depth", carry_depth, "axiom 5 depth bound (default 2*exponent)");
    cmd_carry->add_option("--bound", carry_bound, "coordinate bound (default 3 check, 2 iso)");

    std::vector<i64> raw;
    try {
        app.parse(argc, argv);
        raw = parse_int_list(eq_str, "--eq");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name() +
                                (carry_mode.empty() ? "" : " " + carry_mode);
    const auto started = std::chrono::steady_clock::now();
    json doc;
    doc["command"] = command;
    doc["equation"] = raw;

    try {
        CommandContext ctx{dioph::normalize_equation(raw), guard};
        doc["normalized"] = json{{"coeffs", ctx.eq.coeffs},
                                 {"modulus", ctx.eq.modulus},
                                 {"gcds", ctx.eq.gcds},
                                 {"widths", ctx.eq.widths}};

        json result;
        bool failed_checks = false;
        if (cmd_apery->parsed()) {
            result = run_apery(ctx, method);
        } else if (app.get_subcommand("hilbert")->parsed()) {
            result = run_hilbert(ctx);
        } else if (cmd_decompose->parsed()) {
            result = run_decompose(ctx, parse_int_list(point_str, "--point"));
        } else if (cmd_elliott->parsed()) {
            std::optional<dioph::LatticePoint> p;
            if (!elliott_point.empty()) p = parse_int_list(elliott_point, "--point");
            result = run_elliott(ctx, p);
        } else if (app.get_subcommand("classgroup")->parsed()) {
            result = group_json(dioph::class_group(ctx.eq, ctx.guard));
        } else if (app.get_subcommand("innerclass")->parsed()) {
            result = group_json(dioph::inner_class_group(ctx.eq, ctx.guard));
        } else if (cmd_verify->parsed()) {
            result = run_verify(ctx, sweep_c);
            failed_checks = !result["ok"].get<bool>();
        } else if (cmd_lift->parsed()) {
            result = run_lift(ctx, parse_int_list(lift_point, "--point"));
        } else {
            result = run_carry(ctx, carry_mode, carry_depth, carry_bound);
            if (carry_mode == "check") failed_checks = !result["all_passed"].get<bool>();
            if (carry_mode == "iso") failed_checks = !result["holds"].get<bool>();
        }

        doc["result"] = result;
        const auto elapsed = std::chrono::steady_clock::now() - started;
        doc["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        return emit_and_exit(doc, format, failed_checks);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const dioph::Error& e) {
        doc.erase("normalized");
        doc["error"] = json{{"code", std::string(dioph::error_code_name(e.code()))},
                            {"message", e.message()}};
        emit_and_exit(doc, format, true);
        return 1;
    }
}
