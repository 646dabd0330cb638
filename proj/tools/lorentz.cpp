// lorentz: JSON front end for the stability and Lorentzian checks.
//
//   lorentz unipoly [FILE]            polynomial {"coeffs": [...]}
//   lorentz form [FILE] [--cone C]    form descriptor, orthant by default
//   lorentz matrix [FILE] [--cone C]  LTI report, or cone report with --cone
//   lorentz restrict [FILE]           {"form": ..., "x": [...], "v": [...]}
//
// Exit codes: 0 completed, 2 input error, 3 internal failure.

#include "lorentz/errors.hpp"
#include "lorentz/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using lorentz::io::Json;

std::string read_all(std::istream& in)
{
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lorentz::InputError("cannot read '" + path + "'");
    return read_all(in);
}

Json error_json(const std::string& kind, const std::string& message)
{
    Json e;
    e["error"] = kind;
    e["message"] = message;
    return e;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stability and Lorentzian checks on polynomials, forms and matrices"};
    app.require_subcommand(1);

    lorentz::io::RunConfig cfg;
    std::string mode = "auto";
    std::string cone_file, out_file, input_file;
    app.add_option("--tol-abs", cfg.tol.abs, "absolute tolerance")->capture_default_str();
    app.add_option("--tol-rel", cfg.tol.rel, "relative tolerance")->capture_default_str();
    app.add_option("--trials", cfg.trials, "sampled trials per check")->capture_default_str();
    app.add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
    app.add_option("--mode", mode, "exact | float | auto")->check(CLI::IsMember({"exact", "float", "auto"}))->capture_default_str();
    app.add_option("--out", out_file, "write the report here instead of stdout");

    auto* unipoly = app.add_subcommand("unipoly", "univariate stability and log-concavity report");
    auto* form = app.add_subcommand("form", "sampled checks of a homogeneous form over a cone");
    auto* matrix = app.add_subcommand("matrix", "LTI report, or cone report with --cone");
    auto* restrict = app.add_subcommand("restrict", "coefficients of f(x + t v)");
    for (auto* sub : {unipoly, form, matrix, restrict}) {
        sub->add_option("input", input_file, "input JSON file (stdin when omitted)");
        sub->fallthrough();
    }
    form->add_option("--cone", cone_file, "cone descriptor JSON file");
    matrix->add_option("--cone", cone_file, "cone descriptor JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.mode = lorentz::io::parse_mode(mode);
        const std::string text = input_file.empty() ? read_all(std::cin) : read_file(input_file);
        const Json input = lorentz::io::parse_json(text);
        std::optional<Json> cone;
        if (!cone_file.empty()) cone = lorentz::io::parse_json(read_file(cone_file));

        Json report;
        if (unipoly->parsed()) report = lorentz::io::cmd_unipoly(input, cfg);
        else if (form->parsed()) report = lorentz::io::cmd_form(input, cone, cfg);
        else if (matrix->parsed()) report = lorentz::io::cmd_matrix(input, cone, cfg);
        else report = lorentz::io::cmd_restrict(input, cfg);

        const std::string rendered = lorentz::io::render(report);
        if (out_file.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream out(out_file, std::ios::binary);
            if (!out) throw lorentz::InputError("cannot write '" + out_file + "'");
            out << rendered;
        }
        return 0;
    } catch (const lorentz::InputError& e) {
        std::cerr << lorentz::io::render(error_json("input", e.what()));
        return 2;
    } catch (const std::exception& e) {
        std::cerr << lorentz::io::render(error_json("internal", e.what()));
        return 3;
    }
}
