// plumbcert: analyze weighted dual graphs of normal surface singularities
// and emit / re-check plumbing certificates.
//
// Exit codes: 0 success; 1 certificate re-verification failed; 2 parse or
// parameter error; 3 analysis precondition failed (graph not negative
// definite or not connected); 4 certification failed.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plumbcert/certificate.hpp"
#include "plumbcert/classify.hpp"
#include "plumbcert/generate.hpp"
#include "plumbcert/report.hpp"

namespace {

using namespace plumbcert;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCertifyFailed = 4;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError("'" + path + "': " + ex.what());
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw BadParams("cannot write '" + path + "'");
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
}

int run_analyze(const std::string& input, const std::string& output) {
    const WeightedDualGraph g = graph_from_json(load_json(input));
    const nlohmann::json rep = analyze_graph(g);
    write_output(output, rep.dump(2));
    if (!rep["connected"].get<bool>()) {
        std::cerr << "analyze: graph is not connected\n";
        return kExitPrecondition;
    }
    if (!rep["negative_definite"].get<bool>()) {
        std::cerr << "analyze: intersection form is not negative definite\n";
        return kExitPrecondition;
    }
    return kExitOk;
}

int run_certify(const std::string& input, const std::string& output) {
    const WeightedDualGraph g = graph_from_json(load_json(input));
    if (!g.connected()) {
        std::cerr << "certify: graph is not connected\n";
        return kExitPrecondition;
    }
    if (!is_negative_definite_minors(intersection_matrix(g))) {
        std::cerr << "certify: intersection form is not negative definite\n";
        return kExitPrecondition;
    }
    const CanonicalCycle z = canonical_cycle(g);
    const CertifyOutcome outcome = build_certificate(g, z);
    write_output(output, outcome_to_json(outcome).dump(2));
    if (const auto* failure = std::get_if<CertifyFailure>(&outcome)) {
        std::cerr << "certify: " << failure->kind << ": " << failure->message << "\n";
        return kExitCertifyFailed;
    }
    return kExitOk;
}

int run_verify(const std::string& input) {
    const nlohmann::json j = load_json(input);
    if (j.contains("outcome") && j["outcome"] != "certificate") {
        // Re-checking a bypass is vacuous: nothing was constructed.
        std::cout << "verify: outcome '" << j["outcome"].get<std::string>()
                  << "' carries no certificate; nothing to check\n";
        return kExitOk;
    }
    const PlumbingCertificate cert = certificate_from_json(j);
    const auto transcript = verify_certificate(cert);
    bool ok = all_pass(transcript);
    for (const TranscriptEntry& t : transcript)
        if (!t.pass) std::cout << "FAIL " << t.check << "\n";
    std::cout << (ok ? "verify: all checks passed (" : "verify: FAILED (")
              << transcript.size() << " checks)\n";
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_dot(const std::string& input, const std::string& output) {
    const WeightedDualGraph g = graph_from_json(load_json(input));
    const CanonicalCycle* cycle_ptr = nullptr;
    CanonicalCycle z;
    if (g.connected() && is_negative_definite_minors(intersection_matrix(g))) {
        z = canonical_cycle(g);
        cycle_ptr = &z;
    }
    write_output(output, to_dot(g, cycle_ptr));
    return kExitOk;
}

struct GenOptions {
    std::string kind;
    std::string type = "A";
    int n = 1;
    int len = 3;
    int euler = 3;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string output;
    std::string format = "json";
};

int run_gen(const GenOptions& opt) {
    std::vector<WeightedDualGraph> graphs;
    if (opt.kind == "ade") {
        if (opt.type.size() != 1) throw BadParams("gen ade: --type must be A, D or E");
        graphs.push_back(make_ade(opt.type[0], opt.n));
    } else if (opt.kind == "cusp") {
        graphs.push_back(make_cusp_cycle(opt.len, opt.euler));
    } else if (opt.kind == "elliptic") {
        graphs.push_back(make_simple_elliptic(opt.euler));
    } else if (opt.kind == "random-nd") {
        graphs = make_random_batch(opt.seed, opt.count);
    } else {
        throw BadParams("gen: kind must be one of ade, cusp, elliptic, random-nd");
    }

    auto render = [&opt](const WeightedDualGraph& g) {
        return opt.format == "dot" ? to_dot(g) : graph_to_json(g).dump(2);
    };
    if (opt.format != "json" && opt.format != "dot")
        throw BadParams("gen: --format must be json or dot");

    if (graphs.size() == 1) {
        write_output(opt.output, render(graphs.front()));
        return kExitOk;
    }
    // Multiple graphs: --output names a directory.
    if (opt.output.empty()) {
        for (std::size_t i = 0; i < graphs.size(); ++i) write_output("", render(graphs[i]));
        return kExitOk;
    }
    std::filesystem::create_directories(opt.output);
    const std::string ext = opt.format == "dot" ? ".dot" : ".json";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::ostringstream name;
        name << opt.output << "/graph_" << std::setw(4) << std::setfill('0') << i << ext;
        write_output(name.str(), render(graphs[i]));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analysis and plumbing certificates for weighted dual graphs of normal "
                 "surface singularities"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a config file (same keys as the flags)");
    app.footer("Exit codes: 0 success, 1 certificate re-verification failed, 2 parse/parameter "
               "error,\n3 analysis precondition failed (not negative definite / not connected), "
               "4 certification failed.");

    std::string input, output;

    auto* analyze = app.add_subcommand(
        "analyze", "Discrepancies, topological index, classification and structure checks");
    analyze->add_option("--input", input, "Graph JSON file")->required();
    analyze->add_option("--output", output, "Report destination (default: stdout)");

    auto* certify = app.add_subcommand("certify", "Build a verified plumbing certificate");
    certify->add_option("--input", input, "Graph JSON file")->required();
    certify->add_option("--output", output, "Certificate destination (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Re-verify a serialized certificate");
    verify->add_option("--input", input, "Certificate JSON file")->required();

    auto* dot = app.add_subcommand("dot", "DOT export of a graph (with discrepancies when defined)");
    dot->add_option("--input", input, "Graph JSON file")->required();
    dot->add_option("--output", output, "DOT destination (default: stdout)");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "Generate example graphs");
    gen->add_option("--kind", gen_opt.kind, "ade | cusp | elliptic | random-nd")->required();
    gen->add_option("--type", gen_opt.type, "ADE family: A, D or E");
    gen->add_option("--n", gen_opt.n, "ADE subscript");
    gen->add_option("--len", gen_opt.len, "Cusp cycle length (>= 2)");
    gen->add_option("--e", gen_opt.euler, "Euler weight (cusp >= 3, elliptic >= 1)");
    gen->add_option("--seed", gen_opt.seed, "random-nd seed");
    gen->add_option("--count", gen_opt.count, "random-nd batch size");
    gen->add_option("--format", gen_opt.format, "json | dot");
    gen->add_option("--output", gen_opt.output,
                    "File for a single graph, directory for a batch (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(input, output);
        if (*certify) return run_certify(input, output);
        if (*verify) return run_verify(input);
        if (*dot) return run_dot(input, output);
        if (*gen) return run_gen(gen_opt);
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParseError;
    } catch (const BadParams& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParseError;
    } catch (const NotNegativeDefinite& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitPrecondition;
    } catch (const Disconnected& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParseError;
    }
    return kExitOk;
}
