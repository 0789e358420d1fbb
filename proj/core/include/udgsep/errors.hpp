#pragma once

#include <stdexcept>
#include <string>

namespace udgsep {

/// Input that the pipeline cannot process (too few points, all collinear, ...).
/// Callers such as the CLI map this to exit code 2.
class degenerate_error : public std::runtime_error {
public:
    enum class kind { duplicate_points, collinear, too_few_points };

    degenerate_error(kind k, const std::string& msg)
        : std::runtime_error(msg), kind_(k) {}

    kind which() const { return kind_; }

private:
    kind kind_;
};

/// A structural invariant that the construction guarantees was violated.
/// Reaching this always indicates a bug, never bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace udgsep
