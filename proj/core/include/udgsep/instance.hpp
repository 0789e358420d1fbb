#pragma once

// Deterministic instance generation and the point file format. Coordinates
// are produced on a 1e-6 grid so every generated instance is exact.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "udgsep/geom.hpp"

namespace udgsep {

enum class GenKind { Uniform, GridJitter, Clusters, Clique, LineJitter };

std::string to_string(GenKind k);
GenKind gen_kind_from_string(std::string_view s);

struct GenParams {
    double avg_degree = 8.0;     // density target for uniform and clusters
    int clusters = 4;            // clusters generator
    double cluster_radius = 1.25;
};

struct Instance {
    std::vector<Point> points;
    std::uint64_t seed = 0;
    std::string generator;   // kind plus parameters, for the report
    std::uint64_t digest = 0;
};

/// Deterministic for a given (kind, n, params, seed); points are distinct.
Instance generate_instance(GenKind kind, int n, const GenParams& params, std::uint64_t seed);

/// FNV-1a over the canonical rational serialization of the points.
std::uint64_t instance_digest(const std::vector<Point>& points);

/// Point file: first line the count, then one "x y" pair of decimal
/// literals per line; lines starting with '#' are comments.
std::string write_points(const std::vector<Point>& points);
std::vector<Point> read_points(std::string_view text);

/// Minimal deterministic generator (splitmix64).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// uniform in [0, m)
    std::uint64_t below(std::uint64_t m) { return m == 0 ? 0 : next() % m; }

private:
    std::uint64_t state_;
};

}  // namespace udgsep
