#pragma once

// Pipeline driver: runs the separator computation plus the verification
// suite over one instance and renders the result as JSON or text. A run is
// successful only when every executed check passes.

#include <optional>
#include <string>

#include "udgsep/instance.hpp"
#include "udgsep/oracle.hpp"
#include "udgsep/separator.hpp"

namespace udgsep {

enum class VerifyLevel { Fast, Full };

struct RunFlags {
    bool strict_threshold = false;
    VerifyLevel verify = VerifyLevel::Fast;
    std::optional<int> source;
};

struct RunReport {
    std::uint64_t digest = 0;
    int n = 0;
    std::string generator;
    std::uint64_t seed = 0;
    RunFlags flags;
    SeparatorResult result;
    std::vector<VerificationReport> checks;
    bool success = false;

    // kept for rendering and deeper inspection; not serialized
    PipelineArtifacts artifacts;
};

/// Degenerate inputs propagate as degenerate_error; the CLI maps them to
/// exit code 2.
RunReport run_pipeline(const Instance& inst, const RunFlags& flags);

/// Stable except for the volatile fields (timings, timestamp), which can be
/// omitted to compare runs byte for byte.
std::string report_to_json(const RunReport& rep, bool include_volatile = true);
std::string report_to_text(const RunReport& rep);

}  // namespace udgsep
