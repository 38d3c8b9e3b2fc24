#include "hesslab/error.hpp"
#include "hesslab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace hesslab;

namespace {

constexpr int kUsage = 2;

int emit(const CommandResult& result, OutputFormat format, const std::string& out_path) {
    const std::string text = render(result.report, format);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "hesslab: cannot write " << out_path << '\n';
            return kUsage;
        }
        out << text;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hesslab: dot-action characters and Kahler package checks for Hessenberg varieties"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    CommonOptions common;
    std::string out_path;
    OutputFormat format = OutputFormat::json;
    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"table", OutputFormat::table}};

    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--seed", common.seed, "seed for sampling and the Morse covector");
        sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--out", out_path, "write the report to a file");
        sub->add_option("--format", format, "json, csv or table")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--cache-dir", common.cache_dir, "cache directory")->envname("HESSLAB_CACHE");
        sub->add_flag("--force", common.force, "lift size guards");
        sub->add_flag("--timing", common.timing, "include wall time in the report");
        if (sub->get_name() != "kahler")
            sub->add_flag("--certify", common.certify, "confirm lambda_H by the chain-partition computation");
    };

    std::string h_text;
    std::string J_text;
    std::string lambda_text;
    bool gkm = false;
    int n = 0;
    bool indecomposable = false;
    int gkm_max_n = 0;

    auto* analyze = app.add_subcommand("analyze", "character, Betti numbers and support check for one h");
    analyze->add_option("--h", h_text, "Hessenberg function, e.g. 2,3,3")->required();
    analyze->add_flag("--gkm", gkm, "cross-check against the moment graph (n <= 5)");
    analyze->add_flag("--convention-control", common.convention_control, "use the direct Springer labelling");
    add_common(analyze);

    auto* verify = app.add_subcommand("verify", "sweep every Hessenberg function of size n");
    verify->add_option("--n", n, "size")->required();
    verify->add_flag("--indecomposable", indecomposable, "only indecomposable h");
    verify->add_option("--gkm-max-n", gkm_max_n, "compare Morse counts for n up to this bound");
    verify->add_flag("--convention-control", common.convention_control, "use the direct Springer labelling");
    add_common(verify);

    auto* kahler = app.add_subcommand("kahler", "Poincare duality, hard Lefschetz and Hodge-Riemann on W_J-invariants");
    kahler->add_option("--h", h_text, "Hessenberg function")->required();
    kahler->add_option("--J", J_text, "simple reflections, e.g. 1,2 (empty for none)");
    kahler->add_option("--lambda", lambda_text, "strictly decreasing weight of length n");
    add_common(kahler);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        CommandResult result;
        if (analyze->parsed()) {
            result = cmd_analyze(HessenbergFunction::parse(h_text), AnalyzeOptions{common, gkm});
        } else if (verify->parsed()) {
            result = cmd_verify(n, VerifyOptions{common, indecomposable, gkm_max_n});
        } else {
            KahlerOptions options{common, parse_int_list(J_text), std::nullopt};
            if (!lambda_text.empty()) options.lambda = parse_long_list(lambda_text);
            result = cmd_kahler(HessenbergFunction::parse(h_text), options);
        }
        return emit(result, format, out_path);
    } catch (const BoundedInputError& e) {
        std::cerr << "hesslab: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hesslab: " << e.what() << '\n';
        return kUsage;
    } catch (const ConsistencyError& e) {
        std::cerr << "hesslab: internal consistency failure: " << e.what() << '\n';
        return 1;
    }
}
