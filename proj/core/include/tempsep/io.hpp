#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tempsep/static_graph.hpp"
#include "tempsep/temporal_graph.hpp"
#include "tempsep/types.hpp"

namespace tempsep {

/// Parse failure with the physical 1-based line number of the offense.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Optional query line `q s z k` of a temporal instance file.
struct Query {
  VertexId s = 0;
  VertexId z = 0;
  Length k = 0;
};

struct TemporalInstanceFile {
  TemporalGraph graph;
  std::optional<Query> query;
};

// Temporal instance text format:
//   line 1:        n m tau
//   optional next: q s z k
//   m edge lines:  u v t      with 0 <= u,v < n, u != v, 1 <= t <= tau
// Lines starting with '#' and blank lines are ignored everywhere.
TemporalInstanceFile parse_temporal_instance(std::istream& in);
TemporalGraph load_temporal_graph(std::istream& in);

/// Canonical serialization: header, optional query line, edges in sorted
/// order, no comments.
void serialize_temporal(std::ostream& out, const TemporalGraph& g,
                        const std::optional<Query>& query = std::nullopt);
std::string serialize_temporal(const TemporalGraph& g,
                               const std::optional<Query>& query = std::nullopt);

/// Optional query line `q s z k l` of a static instance file (l < 0 when
/// the field is absent).
struct StaticQuery {
  VertexId s = 0;
  VertexId z = 0;
  Length k = 0;
  Length l = -1;
};

struct StaticInstanceFile {
  StaticGraph graph;
  std::optional<StaticQuery> query;
};

// Static graph text format: `n m` header, optional `q s z k [l]` line,
// then m lines `u v`.
StaticInstanceFile parse_static_instance(std::istream& in);
void serialize_static(std::ostream& out, const StaticGraph& g,
                      const std::optional<StaticQuery>& query = std::nullopt);

struct DirectedTimeArc {
  VertexId from = 0;
  VertexId to = 0;
  TimeLabel t = 1;
  TimeLabel traversal = 1;
};

/// Directed temporal graph with per-arc traversal times, the input model
/// of the traversal-time shortest path routine. Arcs are kept sorted by
/// ascending label; traversal times must be positive.
struct DirectedTemporalGraph {
  VertexId n = 0;
  std::vector<DirectedTimeArc> arcs;
  TimeLabel tau = 0;

  DirectedTemporalGraph() = default;
  DirectedTemporalGraph(VertexId n_, std::vector<DirectedTimeArc> arcs_, TimeLabel tau_);
};

// Directed traversal format: `n m tau` header then m lines `u v t phi`
// for an arc u -> v departing at t with traversal time phi >= 1.
DirectedTemporalGraph parse_directed_traversal(std::istream& in);

/// Planar Length-Bounded Cut source instance: planar graph with edge
/// costs in {1, k+1}, terminal degrees three, maximum degree six, and a
/// rotation system giving each edge a position in [1,6] at each endpoint.
struct PlanarLbcEdge {
  VertexId u = 0;
  VertexId v = 0;
  Length cost = 1;
  int pos_u = 1;  // position of the edge at u, clockwise index in [1,6]
  int pos_v = 1;
};

struct PlanarLbcInstance {
  VertexId n = 0;
  std::vector<PlanarLbcEdge> edges;
  VertexId s = 0;
  VertexId z = 0;
  Length k = 0;
  Length l = 0;

  /// Checks k even and >= 2, costs two-valued, degree bounds, terminal
  /// degrees, and position consistency. Throws on violation.
  void validate() const;
};

// Planar LBC format: `n m` header, `q s z k l` line, then m lines
// `u v cost pos_u pos_v`.
PlanarLbcInstance parse_planar_lbc(std::istream& in);

}  // namespace tempsep
