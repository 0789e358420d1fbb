#include "udgsep/instance.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "udgsep/errors.hpp"

namespace udgsep {

std::string to_string(GenKind k) {
    switch (k) {
        case GenKind::Uniform: return "uniform";
        case GenKind::GridJitter: return "grid_jitter";
        case GenKind::Clusters: return "clusters";
        case GenKind::Clique: return "clique";
        case GenKind::LineJitter: return "line_jitter";
    }
    return "?";
}

GenKind gen_kind_from_string(std::string_view s) {
    if (s == "uniform") return GenKind::Uniform;
    if (s == "grid_jitter") return GenKind::GridJitter;
    if (s == "clusters") return GenKind::Clusters;
    if (s == "clique") return GenKind::Clique;
    if (s == "line_jitter") return GenKind::LineJitter;
    throw std::invalid_argument("unknown generator kind: " + std::string(s));
}

namespace {

constexpr long long kMicro = 1000000;      // coordinate grid: 1e-6
constexpr long long kSpacingMicro = 900000;  // grid/line spacing 0.9
constexpr long long kJitterMicro = 1000;     // jitter amplitude 1e-3

Point micro_point(long long x, long long y) {
    Rat rx(static_cast<long>(x), static_cast<long>(kMicro));
    Rat ry(static_cast<long>(y), static_cast<long>(kMicro));
    rx.canonicalize();
    ry.canonicalize();
    return Point(rx, ry);
}

long long jitter(Rng& rng) {
    return static_cast<long long>(rng.below(2 * kJitterMicro + 1)) - kJitterMicro;
}

}  // namespace

Instance generate_instance(GenKind kind, int n, const GenParams& params, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_instance: n must be positive");
    Rng rng(seed ^ 0x5851f42d4c957f2dULL);
    std::set<std::pair<long long, long long>> used;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));

    auto push_unique = [&](auto&& make) {
        for (int attempts = 0; attempts < 100000; ++attempts) {
            auto [x, y] = make();
            if (used.insert({x, y}).second) {
                pts.push_back(micro_point(x, y));
                return;
            }
        }
        throw internal_error("generator failed to find a fresh point");
    };

    std::ostringstream label;
    label << to_string(kind) << " n=" << n;

    switch (kind) {
        case GenKind::Uniform: {
            double side = std::sqrt(M_PI * n / std::max(0.1, params.avg_degree));
            long long span = std::max<long long>(1, std::llround(side * kMicro));
            label << " degree=" << params.avg_degree;
            for (int i = 0; i < n; ++i)
                push_unique([&]() -> std::pair<long long, long long> {
                    return {static_cast<long long>(rng.below(static_cast<std::uint64_t>(span + 1))),
                            static_cast<long long>(rng.below(static_cast<std::uint64_t>(span + 1)))};
                });
            break;
        }
        case GenKind::GridJitter: {
            int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
            label << " spacing=0.9 jitter=1e-3";
            for (int i = 0; i < n; ++i) {
                long long gx = (i % side) * kSpacingMicro;
                long long gy = (i / side) * kSpacingMicro;
                push_unique([&]() -> std::pair<long long, long long> {
                    return {gx + jitter(rng), gy + jitter(rng)};
                });
            }
            break;
        }
        case GenKind::Clusters: {
            int c = std::max(1, params.clusters);
            double side = std::sqrt(M_PI * n / std::max(0.1, params.avg_degree));
            long long span = std::max<long long>(1, std::llround(side * kMicro));
            long long rad = std::max<long long>(1, std::llround(params.cluster_radius * kMicro));
            label << " clusters=" << c << " radius=" << params.cluster_radius
                  << " degree=" << params.avg_degree;
            std::vector<std::pair<long long, long long>> centers;
            for (int i = 0; i < c; ++i)
                centers.push_back(
                    {static_cast<long long>(rng.below(static_cast<std::uint64_t>(span + 1))),
                     static_cast<long long>(rng.below(static_cast<std::uint64_t>(span + 1)))});
            for (int i = 0; i < n; ++i) {
                const auto& ctr = centers[static_cast<std::size_t>(i % c)];
                push_unique([&]() -> std::pair<long long, long long> {
                    for (;;) {
                        long long dx = static_cast<long long>(
                                           rng.below(static_cast<std::uint64_t>(2 * rad + 1))) -
                                       rad;
                        long long dy = static_cast<long long>(
                                           rng.below(static_cast<std::uint64_t>(2 * rad + 1))) -
                                       rad;
                        if (dx * dx + dy * dy <= rad * rad)
                            return {ctr.first + dx, ctr.second + dy};
                    }
                });
            }
            break;
        }
        case GenKind::Clique: {
            // inside a disk of diameter 1, so all pairs are adjacent
            const long long r = kMicro / 2;
            label << " diameter=1";
            for (int i = 0; i < n; ++i)
                push_unique([&]() -> std::pair<long long, long long> {
                    for (;;) {
                        long long x = static_cast<long long>(
                                          rng.below(static_cast<std::uint64_t>(2 * r + 1))) -
                                      r;
                        long long y = static_cast<long long>(
                                          rng.below(static_cast<std::uint64_t>(2 * r + 1))) -
                                      r;
                        if (x * x + y * y <= r * r) return {x, y};
                    }
                });
            break;
        }
        case GenKind::LineJitter: {
            label << " spacing=0.9 jitter=1e-3";
            for (int i = 0; i < n; ++i) {
                long long gx = i * kSpacingMicro;
                push_unique([&]() -> std::pair<long long, long long> {
                    return {gx + jitter(rng), jitter(rng)};
                });
            }
            break;
        }
    }

    Instance inst;
    inst.points = std::move(pts);
    inst.seed = seed;
    inst.generator = label.str();
    inst.digest = instance_digest(inst.points);
    return inst;
}

std::uint64_t instance_digest(const std::vector<Point>& points) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](const std::string& s) {
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
    };
    mix(std::to_string(points.size()));
    for (const auto& p : points) {
        mix(";");
        mix(rat_canonical(p.x));
        mix(",");
        mix(rat_canonical(p.y));
    }
    return h;
}

std::string write_points(const std::vector<Point>& points) {
    std::ostringstream os;
    os << points.size() << "\n";
    for (const auto& p : points)
        os << rat_to_decimal(p.x) << " " << rat_to_decimal(p.y) << "\n";
    return os.str();
}

std::vector<Point> read_points(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            line = line.substr(i);
            return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("point file: missing count line");
    long n = std::stol(line);
    if (n < 0) throw std::invalid_argument("point file: negative count");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        if (!next_line()) throw std::invalid_argument("point file: too few points");
        std::istringstream ls(line);
        std::string xs, ys;
        if (!(ls >> xs >> ys)) throw std::invalid_argument("point file: bad point line");
        pts.emplace_back(rat_from_decimal(xs), rat_from_decimal(ys));
    }
    return pts;
}

}  // namespace udgsep
