#include "udgsep/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "json.hpp"

namespace udgsep {

namespace {

using nlohmann::json;

// Aggregate per-path checks into one report so the suite stays readable.
VerificationReport merge_reports(std::string name, std::vector<VerificationReport> parts) {
    VerificationReport out;
    out.name = std::move(name);
    long long ran = 0;
    for (auto& p : parts) {
        ++ran;
        if (!p.pass) {
            for (auto& w : p.witnesses) out.fail(std::move(w));
        }
    }
    out.counts.emplace_back("instances", ran);
    return out;
}

std::string iso_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

RunReport run_pipeline(const Instance& inst, const RunFlags& flags) {
    RunReport rep;
    rep.digest = inst.digest;
    rep.n = static_cast<int>(inst.points.size());
    rep.generator = inst.generator;
    rep.seed = inst.seed;
    rep.flags = flags;

    SeparatorOptions opts;
    opts.strict_threshold = flags.strict_threshold;
    rep.result = compute_separator(inst.points, flags.source, opts, &rep.artifacts);

    UnitDiskGraph g = UnitDiskGraph::build(inst.points, flags.strict_threshold);

    rep.checks.push_back(check_separator_balance(g, rep.result.separator_set));
    rep.checks.push_back(check_separator_structure(g, rep.result));
    rep.checks.push_back(check_crossing_kill(g, rep.result));

    if (rep.artifacts.ran) {
        const auto& art = rep.artifacts;
        const auto& lg = art.local_graph;
        int ls = art.ps.source;

        std::vector<VerificationReport> pseudo, dd;
        for (int u = 0; u < lg.size(); ++u) {
            std::vector<int> mat = materialize_path(art.ps, u);
            pseudo.push_back(
                check_pseudo_shortest(lg, mat, art.ps.records[static_cast<std::size_t>(u)].anchors, ls));
            const auto& seg = art.ps.records[static_cast<std::size_t>(u)].segment;
            if (seg) dd.push_back(check_dd_properties(*seg, lg.points()));
        }
        rep.checks.push_back(merge_reports("pseudo_shortest_all", std::move(pseudo)));
        rep.checks.push_back(merge_reports("delaunay_path_properties_all", std::move(dd)));
        rep.checks.push_back(check_path_system(art.ps, lg, art.tri));
        rep.checks.push_back(check_perturbed_certificate(art.pg, art.at));

        if (flags.verify == VerifyLevel::Full) {
            rep.checks.push_back(check_noncrossing_system(art.ps, lg));
            rep.checks.push_back(check_crominating_all(lg.points(), flags.strict_threshold));
            rep.checks.push_back(check_cycle_weight_equivalence(art.pg));
        }
    }

    rep.success = true;
    for (const auto& c : rep.checks)
        if (!c.pass) rep.success = false;
    return rep;
}

std::string report_to_json(const RunReport& rep, bool include_volatile) {
    json j;
    j["instance"] = {{"digest", rep.digest},
                     {"n", rep.n},
                     {"generator", rep.generator},
                     {"seed", rep.seed}};
    j["flags"] = {{"strict_threshold", rep.flags.strict_threshold},
                  {"verify", rep.flags.verify == VerifyLevel::Full ? "full" : "fast"}};

    const SeparatorResult& r = rep.result;
    const char* mode = r.mode == SeparatorResult::Mode::Pipeline        ? "pipeline"
                       : r.mode == SeparatorResult::Mode::TrivialSmall ? "trivial_small"
                                                                        : "no_big_component";
    j["mode"] = mode;
    j["source"] = r.source;
    if (r.apex_kind) {
        const char* kind = *r.apex_kind == ApexKind::DelaunayEdge ? "delaunay_edge"
                           : *r.apex_kind == ApexKind::SameVertex ? "same_vertex"
                                                                   : "outer_edge";
        j["apex"] = {{"kind", kind}, {"u", r.apex_u}, {"v", r.apex_v}};
    } else {
        j["apex"] = nullptr;
    }
    j["sp_u"] = r.sp_u;
    j["sp_v"] = r.sp_v;
    j["suffix_u"] = r.suffix_u;
    j["suffix_v"] = r.suffix_v;
    j["separator"] = r.separator_set;
    std::vector<std::size_t> sizes;
    for (const auto& c : r.components) sizes.push_back(c.size());
    j["component_sizes"] = sizes;
    j["balance"] = r.balance;
    j["success"] = rep.success;

    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["witnesses"] = c.witnesses;
        json counts;
        for (const auto& [k, v] : c.counts) counts[k] = v;
        jc["counts"] = counts;
        checks.push_back(jc);
    }
    j["verification"] = checks;

    if (include_volatile) {
        j["timing_ms"] = {{"udg", r.timings.udg_ms},         {"delaunay", r.timings.delaunay_ms},
                          {"pathsys", r.timings.pathsys_ms}, {"perturb", r.timings.perturb_ms},
                          {"cycle", r.timings.cycle_ms},     {"closure", r.timings.closure_ms},
                          {"total", r.timings.total_ms}};
        j["timestamp"] = iso_timestamp();
    }
    return j.dump(2);
}

std::string report_to_text(const RunReport& rep) {
    std::ostringstream os;
    const SeparatorResult& r = rep.result;
    os << "instance: " << rep.generator << " digest=" << std::hex << rep.digest << std::dec
       << "\n";
    os << "n=" << rep.n << " source=" << r.source << " mode="
       << (r.mode == SeparatorResult::Mode::Pipeline        ? "pipeline"
           : r.mode == SeparatorResult::Mode::TrivialSmall ? "trivial_small"
                                                            : "no_big_component")
       << "\n";
    if (r.apex_kind) {
        os << "apex: "
           << (*r.apex_kind == ApexKind::DelaunayEdge ? "delaunay_edge"
               : *r.apex_kind == ApexKind::SameVertex ? "same_vertex"
                                                       : "outer_edge")
           << " (" << r.apex_u << ", " << r.apex_v << ")\n";
        os << "sp_u: " << r.sp_u.size() << " vertices, sp_v: " << r.sp_v.size() << " vertices\n";
    }
    os << "separator: " << r.separator_set.size() << " vertices\n";
    os << "components:";
    for (const auto& c : r.components) os << " " << c.size();
    os << "\nbalance: " << r.balance << "\n";
    for (const auto& c : rep.checks) {
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        for (const auto& [k, v] : c.counts) os << " " << k << "=" << v;
        os << "\n";
        for (const auto& w : c.witnesses) os << "    " << w << "\n";
    }
    os << (rep.success ? "OK" : "VERIFICATION FAILED") << "\n";
    return os.str();
}

}  // namespace udgsep
