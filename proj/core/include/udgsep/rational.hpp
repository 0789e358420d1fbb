#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace udgsep {

// All coordinates and derived quantities are exact rationals. Predicates
// never see floating point, so sign decisions are never wrong.
using Rat = mpq_class;

/// Parse a decimal literal ("-1.25", "3", "7.5e-3") into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rat rat_from_decimal(std::string_view text);

/// Canonical "p/q" form (lowest terms, q > 0). Stable across runs; used for
/// instance digests.
std::string rat_canonical(const Rat& r);

/// Decimal rendering. Exact when the denominator is of the form 2^a 5^b,
/// otherwise falls back to the canonical fraction.
std::string rat_to_decimal(const Rat& r);

/// Rendering for display/SVG only (never used in predicates).
double rat_to_double(const Rat& r);

/// Largest rational of the form k/2^30 with square <= r. Requires r >= 0.
/// Used to derive drawing offsets bounded by exact feature distances.
Rat rat_sqrt_lower(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace udgsep
