#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "workbench/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for depth-zero endoscopy on root data"};
    app.require_subcommand(1);

    workbench::RunOptions opts;
    if (const char* env = std::getenv("WORKBENCH_THREADS"))
        opts.threads = std::max(1, std::atoi(env));

    std::string problem_path;
    std::string normalization = "per-w";
    CLI::App* run = app.add_subcommand("run", "run a problem file");
    run->add_option("file", problem_path, "problem file (JSON)")
        ->required();
    run->add_option("--threads", opts.threads,
                    "parallel task fan-out (default: WORKBENCH_THREADS)");
    run->add_option("--nu-box", opts.nu_box, "dominant box radius");
    run->add_option("--normalization", normalization,
                    "trace prefactor mode: verbatim | per-w")
        ->check(CLI::IsMember({"verbatim", "per-w"}));
    run->add_flag("--no-timestamp", opts.no_timestamp,
                  "suppress timestamp and timings for reproducible output");

    CLI::App* presets =
        app.add_subcommand("presets", "list built-in root data");
    CLI::App* schema =
        app.add_subcommand("schema", "describe the problem/report format");

    CLI11_PARSE(app, argc, argv);

    if (presets->parsed()) {
        for (const std::string& n : workbench::preset_names())
            std::cout << n << "\n";
        return 0;
    }
    if (schema->parsed()) {
        std::cout << workbench::schema_text();
        return 0;
    }

    opts.normalization = normalization == "verbatim"
                             ? workbench::Normalization::verbatim
                             : workbench::Normalization::per_w;
    std::ifstream in(problem_path);
    if (!in) {
        std::cerr << "cannot open " << problem_path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    workbench::RunResult result =
        workbench::run_problem(buf.str(), opts);
    std::cout << result.report;
    return result.exit_code;
}
