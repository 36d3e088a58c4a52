#include <charconv>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "guts/construction.hpp"
#include "guts/errors.hpp"
#include "guts/json_io.hpp"
#include "guts/nearly_fibered.hpp"
#include "guts/sutured.hpp"

namespace {

using nlohmann::json;

long long parse_ll(const std::string& text, const char* what) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw guts::SchemaError(std::string("malformed ") + what + ": '" + text + "'");
    return value;
}

guts::TorusBoundaryManifold parse_manifold(const std::string& text) {
    if (text == "solid-torus") return guts::SolidTorus{};
    if (text.rfind("torus-knot:", 0) == 0) {
        const std::string params = text.substr(11);
        const size_t comma = params.find(',');
        if (comma == std::string::npos)
            throw guts::SchemaError("torus-knot manifold needs two parameters: torus-knot:p,q");
        guts::TorusKnotExterior tk;
        tk.p = parse_ll(params.substr(0, comma), "torus-knot parameter p");
        tk.q = parse_ll(params.substr(comma + 1), "torus-knot parameter q");
        return tk;
    }
    if (text.rfind("knot:", 0) == 0) {
        guts::GenericKnotExterior generic;
        generic.name = text.substr(5);
        if (generic.name.empty()) throw guts::SchemaError("knot:<name> needs a nonempty name");
        return generic;
    }
    throw guts::SchemaError("unknown manifold syntax '" + text +
                            "' (expected solid-torus, torus-knot:p,q, or knot:<name>)");
}

const char* guts_type_code(guts::GutsType t) {
    switch (t) {
        case guts::GutsType::Product: return "product";
        case guts::GutsType::TypeI: return "I";
        case guts::GutsType::TypeII: return "II";
        case guts::GutsType::TypeIII: return "III";
        case guts::GutsType::NotReduced: return "not-reduced";
    }
    return "?";
}

const char* fibered_code(guts::FiberedClass c) {
    switch (c) {
        case guts::FiberedClass::Fibered: return "fibered";
        case guts::FiberedClass::NearlyFibered: return "nearly-fibered";
        case guts::FiberedClass::Other: return "other";
    }
    return "?";
}

void print_rules(const std::vector<std::string>& rules) {
    std::cout << "rules:";
    for (const std::string& rule : rules) std::cout << " " << rule;
    std::cout << "\n";
}

struct ClassifyArgs {
    std::string manifold;
    std::string slope;
    long long n = 1;
};

int run_classify(const ClassifyArgs& args, bool json_out) {
    const guts::TorusBoundaryManifold manifold = parse_manifold(args.manifold);
    const guts::SuturedStructure sutures =
        guts::AnnularSutures{guts::parse_slope(args.slope), args.n};
    const guts::GutsClass cls = guts::classify_guts(manifold, sutures);

    if (cls.type == guts::GutsType::Product || cls.type == guts::GutsType::NotReduced) {
        if (json_out) {
            json out;
            out["guts_type"] = guts_type_code(cls.type);
            if (!cls.reason.empty()) out["reason"] = cls.reason;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "guts: " << guts::to_string(cls.type);
            if (!cls.reason.empty()) std::cout << " (" << cls.reason << ")";
            std::cout << "\n";
        }
        return 0;
    }

    const guts::GutsVerdict verdict = guts::guts_properties(manifold, sutures);
    if (json_out) {
        json out;
        out["guts_type"] = guts_type_code(verdict.cls.type);
        out["ihp"] = guts::to_string(verdict.ihp);
        out["isolating"] = guts::to_string(verdict.isolating);
        out["handle"] = guts::interval_to_json(verdict.handle);
        out["rules"] = verdict.handle.provenance;
        out["seifert"] = guts::to_string(verdict.unique_seifert);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "guts: " << guts::to_string(verdict.cls.type) << "\n"
                  << "ihp: " << guts::to_string(verdict.ihp) << "\n"
                  << "isolating: " << guts::to_string(verdict.isolating) << "\n"
                  << "handle number: " << guts::interval_to_text(verdict.handle) << "\n"
                  << "Seifert surface: " << guts::to_string(verdict.unique_seifert) << "\n";
    }
    return 0;
}

struct HandleArgs {
    std::string manifold;
    std::string slope;
    long long n = 1;
    std::string facts_path;
};

int run_handle(const HandleArgs& args, bool json_out) {
    const guts::TorusBoundaryManifold manifold = parse_manifold(args.manifold);
    const guts::Slope sigma = guts::parse_slope(args.slope);

    guts::HandleInterval interval;
    if (std::holds_alternative<guts::SolidTorus>(manifold)) {
        interval = guts::solid_torus_handle(sigma, args.n);
    } else if (const auto* tk = std::get_if<guts::TorusKnotExterior>(&manifold)) {
        interval = guts::torus_knot_handle(tk->p, tk->q, sigma, args.n);
    } else {
        if (args.facts_path.empty())
            throw guts::SchemaError("knot:<name> handle queries require --facts <file>");
        const guts::FactBase facts = guts::load_fact_base(args.facts_path);
        interval = guts::propagate(facts, args.n).at(args.n);
    }

    if (json_out) {
        json out;
        out["handle"] = guts::interval_to_json(interval);
        out["rules"] = interval.provenance;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "handle number: " << guts::interval_to_text(interval) << "\n";
        print_rules(interval.provenance);
    }
    return 0;
}

int run_propagate(const std::string& facts_path, long long n_max, bool json_out) {
    const guts::FactBase facts = guts::load_fact_base(facts_path);
    const guts::PropagationResult result = guts::propagate(facts, n_max);
    if (json_out) {
        std::cout << guts::propagation_to_json(result, n_max).dump() << "\n";
    } else {
        for (long long n = 1; n <= n_max; ++n) {
            const guts::HandleInterval& iv = result.at(n);
            std::cout << "h_" << n << " = " << guts::interval_to_text(iv) << "  ";
            print_rules(iv.provenance);
        }
        std::cout << "h_+ = " << guts::interval_to_text(result.h_plus) << "  ";
        print_rules(result.h_plus.provenance);
    }
    return 0;
}

int run_whitehead(long long p, long long q, long long n, bool json_out) {
    const guts::WhiteheadVerdict verdict = guts::whitehead_double_verdict(p, q, n);
    if (json_out) {
        json out;
        out["guts_type"] = guts_type_code(verdict.guts.cls.type);
        out["handle_number"] = verdict.handle_number;
        out["seifert"] = guts::to_string(verdict.seifert);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "guts: " << guts::to_string(verdict.guts.cls.type) << " (torus-knot exterior ("
                  << p << "," << q << "), two sutures of slope " << n << ")\n"
                  << "handle number: " << verdict.handle_number << "\n"
                  << "Seifert surface: " << guts::to_string(verdict.seifert) << "\n";
    }
    return 0;
}

int run_nearly_fibered(const std::string& model_text, bool isolating, bool json_out) {
    guts::GutsModel model;
    if (model_text == "M1")
        model = guts::GutsModel::M1;
    else if (model_text == "M2")
        model = guts::GutsModel::M2;
    else if (model_text == "M3")
        model = guts::GutsModel::M3;
    else
        throw guts::SchemaError("unknown guts model '" + model_text + "' (expected M1, M2, or M3)");

    const guts::NfVerdict verdict = guts::nearly_fibered_verdict(model, isolating);
    if (json_out) {
        json out;
        out["handle_number"] = verdict.handle_number;
        out["seifert"] = guts::to_string(verdict.seifert_surfaces);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "handle number: " << verdict.handle_number << "\n"
                  << "Seifert surfaces: "
                  << (verdict.seifert_surfaces == guts::SeifertCount::Unique
                          ? "unique"
                          : "an extra incompressible Seifert surface exists")
                  << "\n";
    }
    return 0;
}

int run_hfk(const std::string& table_path, bool json_out) {
    const guts::HfkTable table = guts::load_hfk_table(table_path);
    const guts::HfkClassification result = guts::hfk_classify(table);
    if (json_out) {
        json out;
        out["classification"] = fibered_code(result.cls);
        out["top_alexander"] = result.top_alexander;
        out["top_rank"] = result.top_rank;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "classification: " << guts::to_string(result.cls) << "\n"
                  << "top Alexander grading: " << result.top_alexander << " (total rank "
                  << result.top_rank << ")\n";
    }
    return 0;
}

int run_construct(long long chi013, long long chi2, bool json_out) {
    const guts::SurfaceAccounting out = guts::euler_accounting(guts::EulerData{chi013, chi2});
    if (json_out) {
        json j;
        j["chi_f"] = out.chi_f;
        j["chi_s"] = out.chi_s;
        j["genus_f"] = out.genus_f;
        j["genus_s"] = out.genus_s;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "chi(F) = " << out.chi_f << ", genus(F) = " << out.genus_f << "\n"
                  << "chi(S) = " << out.chi_s << ", genus(S) = " << out.genus_s << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"guts classification and handle-number calculator for sutured manifolds "
                 "with torus boundary"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit a single JSON object instead of text");

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand("classify", "classify the guts of 2n annular sutures");
    classify->add_option("--manifold", classify_args.manifold,
                         "solid-torus | torus-knot:p,q | knot:<name>")->required();
    classify->add_option("--slope", classify_args.slope, "suture slope: p/q, p, or inf")->required();
    classify->add_option("--n", classify_args.n, "number of suture pairs")->required();
    classify->add_flag("--json", json_out, "emit JSON");

    HandleArgs handle_args;
    CLI::App* handle = app.add_subcommand("handle", "handle number of 2n annular sutures");
    handle->add_option("--manifold", handle_args.manifold,
                       "solid-torus | torus-knot:p,q | knot:<name>")->required();
    handle->add_option("--slope", handle_args.slope, "suture slope: p/q, p, or inf")->required();
    handle->add_option("--n", handle_args.n, "number of suture pairs")->required();
    handle->add_option("--facts", handle_args.facts_path, "fact base JSON (for knot:<name>)");
    handle->add_flag("--json", json_out, "emit JSON");

    std::string facts_path;
    long long n_max = 1;
    CLI::App* propagate = app.add_subcommand("propagate", "propagate handle bounds from a fact base");
    propagate->add_option("--facts", facts_path, "fact base JSON file")->required();
    propagate->add_option("--n-max", n_max, "largest suture-pair count to report")->required();
    propagate->add_flag("--json", json_out, "emit JSON");

    long long wh_p = 2, wh_q = 3, wh_n = 0;
    CLI::App* whitehead = app.add_subcommand("whitehead", "classify a twisted Whitehead double "
                                                          "of a torus knot");
    whitehead->add_option("--p", wh_p, "companion torus-knot parameter p")->required();
    whitehead->add_option("--q", wh_q, "companion torus-knot parameter q")->required();
    whitehead->add_option("--n", wh_n, "twist parameter")->required();
    whitehead->add_flag("--json", json_out, "emit JSON");

    std::string model_text;
    bool isolating = false;
    CLI::App* nearly = app.add_subcommand("nearly-fibered", "verdict for a nearly fibered knot "
                                                            "with guts of a given model");
    nearly->add_option("--model", model_text, "guts model: M1, M2, or M3")->required();
    nearly->add_flag("--isolating", isolating, "assert that the guts are isolating");
    nearly->add_flag("--json", json_out, "emit JSON");

    std::string table_path;
    CLI::App* hfk = app.add_subcommand("hfk", "classify a knot Floer homology rank table");
    hfk->add_option("--table", table_path, "HFK table JSON file")->required();
    hfk->add_flag("--json", json_out, "emit JSON");

    long long chi013 = 0, chi2 = -1;
    CLI::App* construct = app.add_subcommand("construct", "Euler accounting for the assembled "
                                                          "Seifert surfaces");
    construct->add_option("--chi013", chi013, "characteristic of the pieces used once")->required();
    construct->add_option("--chi2", chi2, "characteristic of the tripled piece")->required();
    construct->add_flag("--json", json_out, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(classify)) return run_classify(classify_args, json_out);
        if (app.got_subcommand(handle)) return run_handle(handle_args, json_out);
        if (app.got_subcommand(propagate)) return run_propagate(facts_path, n_max, json_out);
        if (app.got_subcommand(whitehead)) return run_whitehead(wh_p, wh_q, wh_n, json_out);
        if (app.got_subcommand(nearly)) return run_nearly_fibered(model_text, isolating, json_out);
        if (app.got_subcommand(hfk)) return run_hfk(table_path, json_out);
        if (app.got_subcommand(construct)) return run_construct(chi013, chi2, json_out);
    } catch (const guts::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const guts::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
