#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace charnum::planar {

/// Counted invariants of degree-d plane curves through generic points:
/// A1 = one node, A1L = node on a fixed line, A2 = one cusp,
/// T1 = tangent to a fixed line, T1Pt = tangent to a fixed line at a fixed
/// point, T2 = second-order tangent, Smooth = smooth through a full point set.
enum class Invariant { A1, A1L, A2, T1, T1Pt, T2, Smooth };

std::optional<Invariant> invariant_from_string(std::string_view name);
std::string_view invariant_name(Invariant kind);

/// Dimension of the space of degree-d plane curves: d(d+3)/2.
std::int64_t delta(int d);

/// Exact count for the invariant at degree d (1 <= d <= 64). Memoized.
std::int64_t count(Invariant kind, int d);

/// Count with k of the point conditions placed on a fixed line (k <= d).
/// Placing up to d-1 points on the line leaves the count unchanged; at k = d
/// the degenerate line-component configurations split off.
std::int64_t count_with_line_points(Invariant kind, int d, int k);

}  // namespace charnum::planar
