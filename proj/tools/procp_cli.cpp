// procp: analyze pro-p group presentations and finite-field symbol algebras.
//
//   procp analyze <file> [--truncation N] [--format json|text]
//   procp milnor Fq:<q> --p <p> [--n N] [--format json|text]
//   procp fixtures [--format json|text]
//
// exit codes: 0 analysis ran (verdicts live in the report), 2 bad input,
// 3 resource cap, 4 missing root of unity, 1 internal failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "procp/report.hpp"

namespace {

int exit_code(procp::errc c) {
    switch (c) {
        case procp::errc::no_root_of_unity: return 4;
        case procp::errc::resource_cap: return 3;
        case procp::errc::syntax_error:
        case procp::errc::unknown_generator:
        case procp::errc::non_prime_p:
        case procp::errc::truncation_too_small:
        case procp::errc::bad_field:
        case procp::errc::identity_relator:
        case procp::errc::io_error: return 2;
        default: return 1;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) procp::fail(procp::errc::io_error, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_analyze(const std::string& path, int truncation, const std::string& format) {
    std::string doc = slurp(path);
    if (truncation > 0) {
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(doc);
        } catch (const nlohmann::json::exception& e) {
            procp::fail(procp::errc::syntax_error, e.what());
        }
        j["truncation"] = truncation;
        doc = j.dump();
    }
    procp::Presentation pr = procp::parse_presentation(doc);
    procp::AnalysisReport rep = procp::analyze_presentation(pr);
    if (format == "json")
        std::cout << procp::analysis_json(rep).dump(2) << "\n";
    else
        std::cout << procp::analysis_text(rep);
    return 0;
}

int run_milnor(const std::string& spec, procp::i64 p, int n, const std::string& format) {
    if (spec.rfind("Fq:", 0) != 0)
        procp::fail(procp::errc::syntax_error, "field spec must look like Fq:<q>, got " + spec);
    procp::i64 q = 0;
    try {
        std::size_t used = 0;
        q = std::stoll(spec.substr(3), &used);
        if (used != spec.size() - 3) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
        procp::fail(procp::errc::syntax_error, "field spec must look like Fq:<q>, got " + spec);
    }
    procp::FieldAdapter f = procp::FieldAdapter::make(q, p);
    procp::MilnorReport rep = procp::milnor_report(f, n);
    if (format == "json")
        std::cout << procp::milnor_json(rep).dump(2) << "\n";
    else
        std::cout << procp::milnor_text(rep);
    return 0;
}

int run_fixtures(const std::string& format) {
    if (format == "json") {
        std::cout << procp::fixture_reports_json().dump(2) << "\n";
        return 0;
    }
    for (const procp::Fixture& fx : procp::builtin_fixtures()) {
        procp::Presentation pr = procp::parse_presentation(fx.text);
        std::cout << "== " << fx.name << " ==\n"
                  << procp::analysis_text(procp::analyze_presentation(pr)) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pro-p presentation and symbol-algebra analyzer"};
    app.require_subcommand(0, 1);

    std::string path;
    int truncation = 0;
    std::string a_format = "text";
    CLI::App* analyze = app.add_subcommand("analyze", "run the full pipeline on a presentation");
    analyze->add_option("file", path, "presentation document (JSON)")->required();
    analyze->add_option("--truncation", truncation, "override the document's truncation degree")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--format", a_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string field_spec;
    procp::i64 p = 0;
    int n = 2;
    std::string m_format = "text";
    CLI::App* milnor = app.add_subcommand("milnor", "symbol quotient of a finite field");
    milnor->add_option("field", field_spec, "finite field, e.g. Fq:7")->required();
    milnor->add_option("--p", p, "prime for the coefficient ring")->required();
    milnor->add_option("--n", n, "largest symbol degree");
    milnor->add_option("--format", m_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string f_format = "text";
    CLI::App* fixtures = app.add_subcommand("fixtures", "analyze the built-in fixtures");
    fixtures->add_option("--format", f_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    bool fixtures_flag = false;
    app.add_flag("--fixtures", fixtures_flag, "same as the fixtures subcommand");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(path, truncation, a_format);
        if (milnor->parsed()) return run_milnor(field_spec, p, n, m_format);
        if (fixtures->parsed() || fixtures_flag) return run_fixtures(f_format);
    } catch (const procp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << app.help();
    return 2;
}
