#include "snchodge/golden.hpp"
#include "snchodge/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace snchodge;

constexpr int kExitOk = 0;
constexpr int kExitSchema = 2;
constexpr int kExitValidation = 3;
constexpr int kExitGolden = 4;

std::map<std::string, long> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, long> out;
    for (const auto& kv : raw) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param expects key=value, got " + kv);
        out[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
    }
    return out;
}

// Inputs are either a file path or "scenario:<id>".
InputModel load_input(const std::string& spec, const std::map<std::string, long>& params) {
    if (spec.rfind("scenario:", 0) == 0)
        return model_of(build_scenario(spec.substr(9), params));
    return parse_model_file(spec);
}

void enforce_cap(const InputModel& m) {
    long cap = 512;
    if (const char* env = std::getenv("SNC_HODGE_MAX_DIM")) {
        long v = std::atol(env);
        if (v > 0) cap = v;
    }
    auto check = [&](const CohomologyPackage& p) {
        for (int l = 0; l <= 2 * p.n; ++l)
            if (p.explicit_dim(l) > cap)
                throw SchemaError(p.name + ": coordinate dimension exceeds the configured cap");
    };
    for (const auto& c : m.variety.components) check(c);
    for (const auto& d : m.variety.loci) check(d);
}

int emit(const nlohmann::json& report, const std::string& format, const std::string& out_path) {
    std::string text = (format == "json") ? report.dump(2) + "\n" : render_text(report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitSchema;
        }
        out << text;
    }
    return report.value("blocking", false) ? kExitValidation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight-graded analysis of normal crossing degenerations"};
    app.require_subcommand(1);

    std::string input, format = "text", out_path, bundle_name, mode = "auto", scenario_id;
    std::vector<std::string> raw_params;
    int degree = -1;
    bool fiber = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--param", raw_params, "scenario parameter key=value")->take_all();
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out_path, "write the report to a file");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full per-degree analysis");
    analyze->add_option("input", input, "input file or scenario:<id>")->required();
    analyze->add_option("--degree", degree, "restrict to one degree");
    analyze->add_option("--mode", mode, "condition (*) mode: exact, sufficient or auto")
        ->check(CLI::IsMember({"exact", "sufficient", "auto"}));
    add_common(analyze);

    CLI::App* bundle = app.add_subcommand("bundle", "line bundle checks");
    bundle->add_option("name", bundle_name, "bundle name in the input")->required();
    bundle->add_option("input", input, "input file or scenario:<id>")->required();
    bundle->add_flag("--fiber", fiber, "include the fiber-level suite");
    add_common(bundle);

    CLI::App* star = app.add_subcommand("condition-star", "condition (*) verdicts");
    star->add_option("input", input, "input file or scenario:<id>")->required();
    star->add_option("--mode", mode, "exact, sufficient or auto")
        ->check(CLI::IsMember({"exact", "sufficient", "auto"}));
    add_common(star);

    CLI::App* repro = app.add_subcommand("reproduce", "compare against stored exact values");
    repro->add_option("scenario", scenario_id, "built-in scenario id")->required();
    repro->add_option("--param", raw_params, "scenario parameter key=value")->take_all();

    CLI::App* dump = app.add_subcommand("dump", "write a scenario as an input file");
    dump->add_option("scenario", scenario_id, "built-in scenario id")->required();
    dump->add_option("--param", raw_params, "scenario parameter key=value")->take_all();
    dump->add_option("--out", out_path, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        std::map<std::string, long> params = parse_params(raw_params);

        if (repro->parsed()) {
            bool ok = reproduce_scenario(scenario_id, params, std::cout);
            std::cout << (ok ? "PASS" : "FAIL") << " " << scenario_id << "\n";
            return ok ? kExitOk : kExitGolden;
        }
        if (dump->parsed()) {
            InputModel m = model_of(build_scenario(scenario_id, params));
            std::string text = serialize_model(m);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                out << text;
            }
            return kExitOk;
        }

        InputModel m = load_input(input, params);
        enforce_cap(m);
        ReportOptions opt;
        if (mode == "exact") opt.star_mode = StarMode::exact;
        if (mode == "sufficient") opt.star_mode = StarMode::sufficient;
        if (analyze->parsed()) {
            if (degree >= 0) opt.degree = degree;
        } else if (bundle->parsed()) {
            opt.only_bundle = bundle_name;
            opt.skip_degrees = true;
            opt.bundle_fiber = fiber;
            if (!m.bundles.count(bundle_name)) {
                std::cerr << "unknown bundle: " << bundle_name << "\n";
                return kExitSchema;
            }
        } else if (star->parsed()) {
            opt.skip_degrees = true;
            opt.run_bundles = false;
        }
        nlohmann::json rep = build_report(m, opt);
        return emit(rep, format, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    }
}
