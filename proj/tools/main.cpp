#include "finstoch/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr const char* kFooter = R"(File formats (all JSON, rationals as "num/den" strings, integers allowed):
  space   {"carrier": ["a","b"], "atoms": [[0],[1]]}
  kernel  {"dom": <space>, "cod": <space>, "rows": [["1/2","1/2"]]}
  system  {"space": <space>, "generators": {"t": <kernel> | {"map": {"a":"b"}}}}
  measure <kernel with one-point dom> | ["1/4","1/4","1/2","0"]

Exit codes:
  0  analysis ran and every verdict is true
  1  analysis ran and some verdict is false
  2  parse error (malformed JSON, bad rational, non-stochastic row, usage)
  3  space mismatch between the supplied objects
  4  measure is not invariant where invariance is required
  5  generator set unsupported by the requested operation
  6  operation requires a deterministic system
  7  a point set or map is not measurable
  8  other domain error
  9  internal error
)";

int write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return finstoch::kExitParseError;
    }
    out << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of finite dynamical systems: invariant sigma-algebras, "
                 "ergodicity tests, Bayesian inversion and ergodic decomposition, all in "
                 "rational arithmetic."};
    app.require_subcommand(1);
    app.footer(kFooter);

    finstoch::AnalysisRequest req;
    std::string format = "json";

    const auto add_common = [&](CLI::App* cmd, bool system_is_kernel, bool needs_measure,
                                bool has_seed) {
        cmd->add_option("--system", req.system_path,
                        system_is_kernel ? "kernel JSON file to invert" : "system JSON file")
            ->required();
        auto* measure = cmd->add_option("--measure", req.measure_path, "measure JSON file");
        if (needs_measure)
            measure->required();
        cmd->add_option("--output", req.output_path, "output path (default: stdout)");
        cmd->add_option("--format", format, "output format: json|text|dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        if (has_seed)
            cmd->add_option("--seed", req.seed, "seed for random law instances (default 0)");
    };

    using finstoch::Command;
    struct Entry {
        Command command;
        const char* name;
        const char* help;
        bool system_is_kernel;
        bool needs_measure;
        bool has_seed;
    };
    const Entry entries[] = {
        {Command::InvSigma, "inv-sigma",
         "compute the invariant sigma-algebra and its universal cocone", false, false, false},
        {Command::Quotient, "quotient", "emit the quotient atoms and cocone kernel", false, false,
         false},
        {Command::CheckErgodic, "check-ergodic", "test a measure for ergodicity", false, true,
         false},
        {Command::Decompose, "decompose",
         "decompose an invariant measure into ergodic components", false, true, false},
        {Command::EnumerateErgodic, "enumerate-ergodic",
         "list the ergodic measures (single-function or permutation systems)", false, false, false},
        {Command::CheckAxioms, "check-axioms",
         "run the structural law suite against the loaded objects", false, false, true},
        {Command::Invert, "invert", "Bayes-invert a kernel with respect to a measure", true, true,
         false},
    };
    for (const auto& e : entries) {
        CLI::App* cmd = app.add_subcommand(e.name, e.help);
        add_common(cmd, e.system_is_kernel, e.needs_measure, e.has_seed);
        cmd->callback([&req, &e] { req.command = e.command; });
    }

    CLI11_PARSE(app, argc, argv);

    req.format = format == "dot" ? finstoch::Format::Dot
                 : format == "text" ? finstoch::Format::Text
                                    : finstoch::Format::Json;
    try {
        const finstoch::AnalysisReport rep = finstoch::run(req);
        const std::string text = finstoch::render(rep, req.format);
        if (const int rc = write_output(req.output_path, text))
            return rc;
        return rep.all_true() ? 0 : finstoch::kExitVerdictFalse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return finstoch::exit_code_for(e);
    }
}
