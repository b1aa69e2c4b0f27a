#include "icis/error.hpp"
#include "icis/problem.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::vector<icis::Rational> parse_samples(const std::string& text) {
    std::vector<icis::Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const icis::Rational r = icis::parse_rational(item);
        if (r == 0) throw icis::Error(icis::ErrorCode::InvalidInput, "sample values must be nonzero");
        out.push_back(r);
    }
    if (out.empty()) throw icis::Error(icis::ErrorCode::InvalidInput, "empty sample list");
    return out;
}

void print_error(const icis::Error& e) {
    std::cerr << "error " << icis::code_name(e.code());
    if (const auto* pe = dynamic_cast<const icis::ParseError*>(&e)) std::cerr << " at " << pe->line() << ":" << pe->column();
    std::cerr << ": " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Milnor numbers, discriminants and deformation checks for isolated complete intersection singularities"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    std::string json_file;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget;
    std::string samples;

    CLI::App* run = app.add_subcommand("run", "Solve a problem file and print a report");
    run->add_option("file", file, "problem file")->required();
    run->add_flag("--json", json, "print the report as JSON instead of text");
    run->add_option("--json-file", json_file, "also write the JSON report to this path");
    run->add_option("--seed", seed, "seed for recombinations and probe generation");
    run->add_option("--samples", samples, "comma-separated nonzero parameter values, e.g. 1,1/2");
    run->add_option("--budget", budget, "reduction step budget per basis computation")->check(CLI::PositiveNumber);

    CLI::App* check = app.add_subcommand("check", "Parse and validate a problem file");
    check->add_option("file", file, "problem file")->required();

    CLI11_PARSE(app, argc, argv);

    icis::ProblemFile problem;
    try {
        problem = icis::parse_problem(icis::read_problem_text(file));
        if (run->parsed()) {
            icis::RunOverrides overrides{seed, std::nullopt, budget};
            if (!samples.empty()) overrides.samples = parse_samples(samples);
            icis::apply_overrides(problem, overrides);
        }
    } catch (const icis::Error& e) {
        print_error(e);
        if (run->parsed() && json) std::cout << icis::render_json(icis::error_report(e));
        return icis::exit_status_for(e.code());
    }

    if (check->parsed()) {
        std::cout << "ok: kind " << icis::kind_name(problem.kind) << ", " << problem.ring->size() << " variables, "
                  << problem.bindings.size() << " bindings\n";
        return icis::kExitComputed;
    }

    const icis::Report report = icis::run(problem);
    std::cout << (json ? icis::render_json(report) : icis::render_text(report));
    if (!json_file.empty()) {
        std::ofstream out(json_file, std::ios::binary);
        if (!out) {
            std::cerr << "error E_IO: cannot write '" << json_file << "'\n";
            return icis::kExitInputError;
        }
        out << icis::render_json(report);
    }
    return report.exit_status;
}
