#pragma once

#include <cstdint>
#include <limits>

namespace tempsep {

/// Dense vertex index in [0, n). Identity is stable across views of the
/// same graph: removing vertices keeps ids, it never compacts them.
using VertexId = std::int32_t;

/// Discrete time label. Labels of stored time-edges are in [1, tau].
using TimeLabel = std::int64_t;

inline constexpr TimeLabel kInfiniteTime = std::numeric_limits<TimeLabel>::max();

/// Hop-count distances and separator budgets.
using Length = std::int64_t;

inline constexpr Length kUnreachable = std::numeric_limits<Length>::max();

/// The two temporal path models: non-strict paths have non-decreasing
/// labels, strict paths (journeys) have strictly increasing labels.
enum class PathModel { Strict, NonStrict };

inline const char* to_string(PathModel m) {
  return m == PathModel::Strict ? "strict" : "nonstrict";
}

}  // namespace tempsep
