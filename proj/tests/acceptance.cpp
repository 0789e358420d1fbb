// Acceptance suite: one line per gate criterion, every tolerance pinned in
// code. Exit status is nonzero when any hard criterion fails; the scaling
// report (criterion 10) is informational.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "udgsep/errors.hpp"
#include "udgsep/instance.hpp"
#include "udgsep/oracle.hpp"
#include "udgsep/report.hpp"

using namespace udgsep;

namespace {

struct Gate {
    long long violations = 0;
    long long instances = 0;
    std::string note;

    void merge(const VerificationReport& rep) {
        ++instances;
        if (!rep.pass) {
            ++violations;
            if (note.empty() && !rep.witnesses.empty()) note = rep.witnesses.front();
        }
    }
};

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

const VerificationReport* find_check(const RunReport& rep, const std::string& name) {
    for (const auto& c : rep.checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool print_gate(int id, const std::string& label, const Gate& g, bool hard = true) {
    bool pass = g.violations == 0;
    std::printf("[%s] criterion %d: %s — %lld violation(s) over %lld checks%s%s\n",
                pass ? "PASS" : "FAIL", id, label.c_str(), g.violations, g.instances,
                g.note.empty() ? "" : " | ", g.note.c_str());
    std::fflush(stdout);
    return pass || !hard;
}

}  // namespace

int main() {
    const std::vector<GenKind> kinds{GenKind::Uniform, GenKind::GridJitter, GenKind::Clusters};
    const std::vector<int> sizes{20, 50, 100, 200, 300};
    const std::vector<double> degrees{4, 8, 16, 30};
    const std::vector<std::uint64_t> seeds{1, 2, 3, 4};

    bool all_pass = true;

    // ------------------------------------------------------------------
    // Criteria 1, 2, 4, 6, 7 share the main instance matrix.
    // ------------------------------------------------------------------
    Gate balance, structure, dd, pseudo, perturbed;
    double worst_big_ms = 0;
    long long matrix_count = 0;
    for (GenKind kind : kinds) {
        for (int n : sizes) {
            for (double deg : degrees) {
                for (std::uint64_t s : seeds) {
                    GenParams params;
                    params.avg_degree = deg;
                    // seed folds the degree index in so the sweep varies
                    // generators that ignore the degree knob
                    std::uint64_t seed = s * 1000 + static_cast<std::uint64_t>(deg);
                    Instance inst = generate_instance(kind, n, params, seed);
                    ++matrix_count;

                    double t0 = now_ms();
                    RunFlags flags;  // fast level: the criterion checks below
                    RunReport rep = run_pipeline(inst, flags);
                    double elapsed = now_ms() - t0;
                    if (n == 300) worst_big_ms = std::max(worst_big_ms, elapsed);

                    if (const auto* c = find_check(rep, "separator_balance")) balance.merge(*c);
                    if (const auto* c = find_check(rep, "separator_structure"))
                        structure.merge(*c);
                    if (const auto* c = find_check(rep, "crossing_kill")) {
                        // fold into the balance criterion: a crossing edge
                        // would join two components
                        if (!c->pass) {
                            ++balance.violations;
                            if (balance.note.empty()) balance.note = c->witnesses.front();
                        }
                    }
                    if (const auto* c = find_check(rep, "delaunay_path_properties_all"))
                        dd.merge(*c);
                    if (const auto* c = find_check(rep, "pseudo_shortest_all")) pseudo.merge(*c);
                    if (const auto* c = find_check(rep, "perturbed_certificate"))
                        perturbed.merge(*c);
                    if (const auto* c = find_check(rep, "path_system")) {
                        if (!c->pass) {
                            ++pseudo.violations;
                            if (pseudo.note.empty()) pseudo.note = c->witnesses.front();
                        }
                    }
                }
            }
        }
    }
    {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%lld instances, slowest n=300 run %.0f ms",
                      matrix_count, worst_big_ms);
        if (balance.note.empty()) balance.note = buf;
        if (worst_big_ms > 10000) {
            ++balance.violations;
            balance.note = "n=300 instance exceeded the 10 s budget";
        }
    }
    all_pass &= print_gate(1, "balance <= floor(2n/3) and true separation", balance);
    all_pass &= print_gate(2, "separator = N1 of two certified shortest paths + apex", structure);

    // ------------------------------------------------------------------
    // Criterion 3: cross-domination of every Delaunay edge.
    // ------------------------------------------------------------------
    Gate cromT;
    double worst_crom_ms = 0;
    for (int n : {30, 60, 90, 120}) {
        for (double deg : degrees) {
            for (std::uint64_t s : {1, 2, 3, 4, 5, 6, 7}) {
                GenParams params;
                params.avg_degree = deg;
                Instance inst = generate_instance(GenKind::Uniform, n,
                                                  params, 5000 + s * 100 + n);
                double t0 = now_ms();
                cromT.merge(check_crominating_all(inst.points));
                worst_crom_ms = std::max(worst_crom_ms, now_ms() - t0);
            }
        }
    }
    if (worst_crom_ms > 5000) {
        ++cromT.violations;
        cromT.note = "an instance exceeded the 5 s budget";
    }
    all_pass &= print_gate(3, "cross-domination over all edge pairs", cromT);

    // ------------------------------------------------------------------
    // Criterion 4 and 6 are accumulated above.
    // ------------------------------------------------------------------
    all_pass &= print_gate(4, "delaunay path properties for every segment", dd);

    // ------------------------------------------------------------------
    // Criterion 5: pairwise non-crossing of segments and full paths.
    // ------------------------------------------------------------------
    Gate noncross;
    {
        struct Combo {
            GenKind kind;
            int n;
            double deg;
            std::uint64_t seed;
        };
        std::vector<Combo> combos;
        for (GenKind kind : kinds)
            for (int n : {20, 50, 100})
                for (double deg : {8.0, 16.0}) combos.push_back({kind, n, deg, 11});
        for (double deg : degrees)
            combos.push_back({GenKind::Uniform, 120, deg, 12});
        for (const Combo& c : combos) {
            GenParams params;
            params.avg_degree = c.deg;
            Instance inst = generate_instance(c.kind, c.n, params, c.seed);
            PipelineArtifacts art;
            RunFlags flags;
            SeparatorOptions opts;
            compute_separator(inst.points, std::nullopt, opts, &art);
            if (!art.ran) {
                ++noncross.instances;
                continue;
            }
            noncross.merge(check_noncrossing_system(art.ps, art.local_graph));
            std::vector<std::vector<Point>> segs;
            for (const auto& rec : art.ps.records) {
                if (!rec.segment || rec.segment->vertices.size() < 2) continue;
                std::vector<Point> chain;
                for (int v : rec.segment->vertices) chain.push_back(art.local_graph.point(v));
                segs.push_back(std::move(chain));
            }
            noncross.merge(check_noncrossing_chains(segs));
        }
    }
    all_pass &= print_gate(5, "no pair of segments or paths crosses", noncross);

    all_pass &= print_gate(6, "every path is pseudo-shortest", pseudo);
    all_pass &= print_gate(7, "perturbed graph certificate", perturbed);

    // ------------------------------------------------------------------
    // Criterion 8: dual-subtree weights equal flood fill on every edge.
    // ------------------------------------------------------------------
    Gate lt;
    for (GenKind kind : {GenKind::Uniform, GenKind::GridJitter}) {
        for (int n : {12, 25, 40, 50}) {
            for (std::uint64_t s : {1, 2}) {
                Instance inst = generate_instance(kind, n, {}, 900 + s);
                PipelineArtifacts art;
                SeparatorOptions opts;
                SeparatorResult res = compute_separator(inst.points, std::nullopt, opts, &art);
                if (!art.ran) {
                    ++lt.instances;
                    continue;
                }
                lt.merge(check_cycle_weight_equivalence(art.pg));
                long long w = art.pg.total_weight;
                if (!(3 * art.cycle.inside_weight <= 2 * w &&
                      3 * art.cycle.outside_weight <= 2 * w)) {
                    ++lt.violations;
                    lt.note = "selected apex exceeds the 2W/3 bound";
                }
            }
        }
    }
    all_pass &= print_gate(8, "cycle weights: accumulation equals flood fill", lt);

    // ------------------------------------------------------------------
    // Criterion 9: degenerate fixtures.
    // ------------------------------------------------------------------
    Gate degen;
    {
        for (int n : {3, 10, 40}) {
            ++degen.instances;
            Instance inst = generate_instance(GenKind::Clique, n, {}, 77);
            SeparatorResult r = compute_separator(inst.points);
            if (static_cast<int>(r.separator_set.size()) != n || !r.components.empty()) {
                ++degen.violations;
                degen.note = "clique n=" + std::to_string(n) + " not fully separated";
            }
        }
        ++degen.instances;
        SeparatorResult one = compute_separator({{0, 0}});
        if (one.separator_set != std::vector<int>{0} || !one.components.empty())
            ++degen.violations;
        ++degen.instances;
        SeparatorResult two = compute_separator({{0, 0}, {Rat(1, 2), 0}});
        if (two.separator_set != std::vector<int>{0, 1}) ++degen.violations;
        ++degen.instances;
        try {
            compute_separator({{0, 0}, {0, 0}, {1, 0}});
            ++degen.violations;
            degen.note = "duplicate points were not rejected";
        } catch (const degenerate_error& e) {
            if (e.which() != degenerate_error::kind::duplicate_points) {
                ++degen.violations;
                degen.note = "duplicate points raised the wrong kind";
            }
        }
    }
    all_pass &= print_gate(9, "degenerate fixtures behave as specified", degen);

    // ------------------------------------------------------------------
    // Criterion 10: soft scaling report (informational).
    // ------------------------------------------------------------------
    {
        std::vector<int> ns{50, 100, 200, 400, 800};
        std::vector<double> xs, ys;
        for (int n : ns) {
            GenParams params;
            params.avg_degree = 8;
            Instance inst = generate_instance(GenKind::Uniform, n, params, 5);
            double t0 = now_ms();
            compute_separator(inst.points);
            double dt = std::max(0.01, now_ms() - t0);
            xs.push_back(std::log(static_cast<double>(n)));
            ys.push_back(std::log(dt));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = static_cast<double>(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        std::printf("[PASS] criterion 10: scaling report — log-log slope %.2f over n=50..800%s\n",
                    slope, slope <= 2.8 ? "" : " (flag: above 2.8)");
    }

    if (!all_pass) {
        std::printf("ACCEPTANCE: FAIL\n");
        return 1;
    }
    std::printf("ACCEPTANCE: PASS\n");
    return 0;
}
