// Command line front end: instance generation, pipeline runs with
// verification, JSON/text reports, SVG rendering.
//
// Exit codes: 0 success and verified, 1 verification failure,
// 2 degenerate or invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "udgsep/errors.hpp"
#include "udgsep/report.hpp"
#include "udgsep/svg.hpp"

namespace {

using namespace udgsep;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

struct GenCli {
    std::string kind = "uniform";
    int n = 50;
    std::uint64_t seed = 1;
    double degree = 8.0;
    int clusters = 4;
    double cluster_radius = 1.25;
    std::string output;
};

Instance make_instance(const GenCli& gc) {
    GenParams params;
    params.avg_degree = gc.degree;
    params.clusters = gc.clusters;
    params.cluster_radius = gc.cluster_radius;
    return generate_instance(gen_kind_from_string(gc.kind), gc.n, params, gc.seed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortest-path 1-neighborhood separators for unit disk graphs"};
    app.require_subcommand(1);

    GenCli gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a point instance");
    cmd_gen->add_option("--kind", gen.kind,
                        "uniform | grid_jitter | clusters | clique | line_jitter");
    cmd_gen->add_option("--n", gen.n, "number of points")->check(CLI::PositiveNumber);
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("--degree", gen.degree, "target average degree");
    cmd_gen->add_option("--clusters", gen.clusters, "cluster count");
    cmd_gen->add_option("--cluster-radius", gen.cluster_radius, "cluster radius");
    cmd_gen->add_option("-o,--output", gen.output, "output file (default stdout)");

    GenCli run_gen;
    std::string run_input, run_svg, run_format = "text", run_verify = "fast";
    std::optional<int> run_source;
    bool run_strict = false;
    CLI::App* cmd_run = app.add_subcommand("run", "run the separator pipeline");
    cmd_run->add_option("input", run_input, "point file (omit to generate)");
    cmd_run->add_option("--kind", run_gen.kind, "generator kind when no input file");
    cmd_run->add_option("--n", run_gen.n, "points when generating");
    cmd_run->add_option("--seed", run_gen.seed, "generator seed");
    cmd_run->add_option("--degree", run_gen.degree, "target average degree");
    cmd_run->add_option("--clusters", run_gen.clusters, "cluster count");
    cmd_run->add_option("--cluster-radius", run_gen.cluster_radius, "cluster radius");
    cmd_run->add_option("--source", [&run_source](const std::vector<std::string>& v) {
        run_source = std::stoi(v.at(0));
        return true;
    }, "source vertex (default: first vertex of the big component)");
    cmd_run->add_flag("--strict-threshold", run_strict, "adjacency |p-q| < 1 instead of <= 1");
    cmd_run->add_option("--verify", run_verify, "fast | full")
        ->check(CLI::IsMember({"fast", "full"}));
    cmd_run->add_option("--format", run_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_run->add_option("--svg", run_svg, "write an SVG rendering to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gen->parsed()) {
            Instance inst = make_instance(gen);
            std::string text = "# " + inst.generator + " seed=" + std::to_string(inst.seed) +
                               "\n" + write_points(inst.points);
            if (gen.output.empty())
                std::cout << text;
            else
                spit(gen.output, text);
            return 0;
        }

        Instance inst;
        if (!run_input.empty()) {
            inst.points = read_points(slurp(run_input));
            inst.generator = "file:" + run_input;
            inst.digest = instance_digest(inst.points);
        } else {
            inst = make_instance(run_gen);
        }

        RunFlags flags;
        flags.strict_threshold = run_strict;
        flags.verify = run_verify == "full" ? VerifyLevel::Full : VerifyLevel::Fast;
        flags.source = run_source;

        RunReport rep = run_pipeline(inst, flags);

        if (run_format == "json")
            std::cout << report_to_json(rep) << "\n";
        else
            std::cout << report_to_text(rep);

        if (!run_svg.empty()) spit(run_svg, render_svg(rep, inst.points));

        return rep.success ? 0 : 1;
    } catch (const udgsep::degenerate_error& e) {
        std::cerr << "degenerate instance: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const udgsep::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
