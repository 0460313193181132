// holecov: generate / detect / plan / verify / render.
//
// Every failure prints exactly one line to stderr,
//   error: <code>: <message>
// and exits nonzero (2 for command-line usage, 1 otherwise).

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "holecov/holecov.hpp"

namespace {

using namespace holecov;

std::string one_line(std::string text)
{
    for (char& ch : text) {
        if (ch == '\n' || ch == '\r') {
            ch = ' ';
        }
    }
    return text;
}

// Prefixes load errors with the offending file.
template <typename Fn>
auto load(const std::string& path, Fn parse)
{
    const std::string text = read_text_file(path);
    try {
        return parse(text);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

ScenarioFile load_scenario(const std::string& path) { return load(path, parse_scenario); }
ReportFile load_report(const std::string& path) { return load(path, parse_report); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coverage hole detection and healing for sensor fields"};
    app.require_subcommand(1);

    GenerateParams gen;
    std::string out_path;
    auto* generate = app.add_subcommand("generate", "Write a random scenario");
    generate->add_option("--width", gen.width)->required();
    generate->add_option("--height", gen.height)->required();
    generate->add_option("--n-stationary", gen.n_stationary)->required();
    generate->add_option("--n-mobile", gen.n_mobile)->required();
    generate->add_option("--radius", gen.radius)->required();
    generate->add_option("--mobile-radius", gen.mobile_radius)->required();
    generate->add_option("--seed", gen.seed)->required();
    generate->add_option("--out", out_path)->required();

    std::string scenario_path;
    std::string method_name = "auto";
    std::optional<double> epsilon;
    auto* detect = app.add_subcommand("detect", "Triangulate and measure holes");
    detect->add_option("--scenario", scenario_path)->required();
    detect->add_option("--method", method_name)->required()->check(CLI::IsMember({"auto", "case", "exact"}));
    detect->add_option("--epsilon", epsilon);
    detect->add_option("--out", out_path)->required();

    std::string report_path;
    double mobile_radius = 0.0;
    auto* plan = app.add_subcommand("plan", "Assign mobile sensors to holes");
    plan->add_option("--scenario", scenario_path)->required();
    plan->add_option("--report", report_path)->required();
    plan->add_option("--mobile-radius", mobile_radius)->required();
    plan->add_option("--out", out_path)->required();

    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "Monte-Carlo coverage before and after the plan");
    verify->add_option("--scenario", scenario_path)->required();
    verify->add_option("--report", report_path);
    verify->add_option("--samples", samples)->required();
    verify->add_option("--seed", seed)->required();
    verify->add_option("--out", out_path)->required();

    auto* render = app.add_subcommand("render", "Draw the scenario as SVG");
    render->add_option("--scenario", scenario_path)->required();
    render->add_option("--report", report_path);
    render->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << one_line(e.what()) << "\n";
        return 2;
    }

    try {
        if (generate->parsed()) {
            write_text_file(out_path, serialize_scenario(generate_scenario(gen)));
        } else if (detect->parsed()) {
            const auto scenario = load_scenario(scenario_path);
            DetectOptions options;
            options.method = *parse_method_option(method_name);
            options.epsilon = epsilon;
            write_text_file(out_path, serialize_report(run_detect(scenario, options)));
        } else if (plan->parsed()) {
            const auto scenario = load_scenario(scenario_path);
            const auto report = load_report(report_path);
            write_text_file(out_path, serialize_report(run_plan(scenario, report, mobile_radius)));
        } else if (verify->parsed()) {
            const auto scenario = load_scenario(scenario_path);
            std::optional<ReportFile> report;
            if (!report_path.empty()) {
                report = load_report(report_path);
            }
            write_text_file(out_path, serialize_report(run_verify(scenario, report, samples, seed)));
        } else if (render->parsed()) {
            const auto scenario = load_scenario(scenario_path);
            std::optional<ReportFile> report;
            if (!report_path.empty()) {
                report = load_report(report_path);
            }
            write_text_file(out_path, render_svg(scenario, report));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << one_line(e.what()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << one_line(e.what()) << "\n";
        return 1;
    }
    return 0;
}
