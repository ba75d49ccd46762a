#include "tempsep/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace tempsep {

namespace {

// Reads the next significant line (skipping blanks and '#' comments),
// tracking the physical line number. Returns false at end of input.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::int64_t parse_int(const std::string& tok, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
  return value;
}

void expect_tokens(const std::vector<std::string>& toks, std::size_t want,
                   std::size_t line, const char* what) {
  if (toks.size() != want) {
    throw ParseError(line, std::string("expected ") + what);
  }
}

}  // namespace

TemporalInstanceFile parse_temporal_instance(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> toks;
  if (!reader.next(toks)) throw ParseError(reader.line() + 1, "missing header");
  expect_tokens(toks, 3, reader.line(), "header 'n m tau'");
  std::int64_t n = parse_int(toks[0], reader.line());
  std::int64_t m = parse_int(toks[1], reader.line());
  std::int64_t tau = parse_int(toks[2], reader.line());
  if (n < 0 || m < 0 || tau < 0) throw ParseError(reader.line(), "negative header field");
  if (tau > (std::int64_t{1} << 32)) {
    throw ParseError(reader.line(), "tau exceeds 2^32");
  }

  TemporalInstanceFile result;
  std::vector<TimeEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  bool header_done = false;
  for (std::int64_t i = 0; i < m; ++i) {
    if (!reader.next(toks)) {
      throw ParseError(reader.line() + 1, "unexpected end of input, expected edge line");
    }
    if (!header_done && !toks.empty() && toks[0] == "q") {
      header_done = true;
      expect_tokens(toks, 4, reader.line(), "query line 'q s z k'");
      Query q;
      q.s = static_cast<VertexId>(parse_int(toks[1], reader.line()));
      q.z = static_cast<VertexId>(parse_int(toks[2], reader.line()));
      q.k = parse_int(toks[3], reader.line());
      if (q.s < 0 || q.z < 0 || q.s >= n || q.z >= n) {
        throw ParseError(reader.line(), "query terminal out of range");
      }
      if (q.s == q.z) throw ParseError(reader.line(), "query terminals must be distinct");
      if (q.k < 0) throw ParseError(reader.line(), "negative query budget");
      result.query = q;
      --i;
      continue;
    }
    header_done = true;
    expect_tokens(toks, 3, reader.line(), "edge line 'u v t'");
    std::int64_t u = parse_int(toks[0], reader.line());
    std::int64_t v = parse_int(toks[1], reader.line());
    std::int64_t t = parse_int(toks[2], reader.line());
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(reader.line(), "vertex index out of range");
    }
    if (u == v) throw ParseError(reader.line(), "self-loop");
    if (t < 1 || t > tau) {
      throw ParseError(reader.line(), "label outside [1, " + std::to_string(tau) + "]");
    }
    edges.push_back(TimeEdge{static_cast<VertexId>(u), static_cast<VertexId>(v), t});
  }
  if (m == 0 && !result.query) {
    // An edgeless instance may still carry its query line.
    if (reader.next(toks)) {
      if (toks[0] != "q") throw ParseError(reader.line(), "unexpected trailing line");
      expect_tokens(toks, 4, reader.line(), "query line 'q s z k'");
      Query q;
      q.s = static_cast<VertexId>(parse_int(toks[1], reader.line()));
      q.z = static_cast<VertexId>(parse_int(toks[2], reader.line()));
      q.k = parse_int(toks[3], reader.line());
      if (q.s < 0 || q.z < 0 || q.s >= n || q.z >= n || q.s == q.z || q.k < 0) {
        throw ParseError(reader.line(), "invalid query line");
      }
      result.query = q;
    }
  }
  result.graph = TemporalGraph(static_cast<VertexId>(n), std::move(edges), tau);
  return result;
}

TemporalGraph load_temporal_graph(std::istream& in) {
  return parse_temporal_instance(in).graph;
}

void serialize_temporal(std::ostream& out, const TemporalGraph& g,
                        const std::optional<Query>& query) {
  out << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.tau() << '\n';
  if (query) {
    out << "q " << query->s << ' ' << query->z << ' ' << query->k << '\n';
  }
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.t << '\n';
  }
}

std::string serialize_temporal(const TemporalGraph& g, const std::optional<Query>& query) {
  std::ostringstream out;
  serialize_temporal(out, g, query);
  return out.str();
}

StaticInstanceFile parse_static_instance(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> toks;
  if (!reader.next(toks)) throw ParseError(reader.line() + 1, "missing header");
  expect_tokens(toks, 2, reader.line(), "header 'n m'");
  std::int64_t n = parse_int(toks[0], reader.line());
  std::int64_t m = parse_int(toks[1], reader.line());
  if (n < 0 || m < 0) throw ParseError(reader.line(), "negative header field");

  StaticInstanceFile result;
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  bool saw_query = false;
  for (std::int64_t i = 0; i < m; ++i) {
    if (!reader.next(toks)) {
      throw ParseError(reader.line() + 1, "unexpected end of input, expected edge line");
    }
    if (!saw_query && !toks.empty() && toks[0] == "q") {
      saw_query = true;
      if (toks.size() != 4 && toks.size() != 5) {
        throw ParseError(reader.line(), "expected query line 'q s z k [l]'");
      }
      StaticQuery q;
      q.s = static_cast<VertexId>(parse_int(toks[1], reader.line()));
      q.z = static_cast<VertexId>(parse_int(toks[2], reader.line()));
      q.k = parse_int(toks[3], reader.line());
      if (toks.size() == 5) q.l = parse_int(toks[4], reader.line());
      if (q.s < 0 || q.z < 0 || q.s >= n || q.z >= n || q.s == q.z || q.k < 0) {
        throw ParseError(reader.line(), "invalid query line");
      }
      result.query = q;
      --i;
      continue;
    }
    expect_tokens(toks, 2, reader.line(), "edge line 'u v'");
    std::int64_t u = parse_int(toks[0], reader.line());
    std::int64_t v = parse_int(toks[1], reader.line());
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(reader.line(), "vertex index out of range");
    }
    if (u == v) throw ParseError(reader.line(), "self-loop");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (m == 0 && !result.query && reader.next(toks)) {
    if (toks[0] != "q" || (toks.size() != 4 && toks.size() != 5)) {
      throw ParseError(reader.line(), "unexpected trailing line");
    }
    StaticQuery q;
    q.s = static_cast<VertexId>(parse_int(toks[1], reader.line()));
    q.z = static_cast<VertexId>(parse_int(toks[2], reader.line()));
    q.k = parse_int(toks[3], reader.line());
    if (toks.size() == 5) q.l = parse_int(toks[4], reader.line());
    if (q.s < 0 || q.z < 0 || q.s >= n || q.z >= n || q.s == q.z || q.k < 0) {
      throw ParseError(reader.line(), "invalid query line");
    }
    result.query = q;
  }
  result.graph = StaticGraph(static_cast<VertexId>(n), edges);
  return result;
}

void serialize_static(std::ostream& out, const StaticGraph& g,
                      const std::optional<StaticQuery>& query) {
  auto edges = g.edge_list();
  out << g.num_vertices() << ' ' << edges.size() << '\n';
  if (query) {
    out << "q " << query->s << ' ' << query->z << ' ' << query->k;
    if (query->l >= 0) out << ' ' << query->l;
    out << '\n';
  }
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

DirectedTemporalGraph::DirectedTemporalGraph(VertexId n_, std::vector<DirectedTimeArc> arcs_,
                                             TimeLabel tau_)
    : n(n_), arcs(std::move(arcs_)), tau(tau_) {
  for (const auto& a : arcs) {
    if (a.from < 0 || a.to < 0 || a.from >= n || a.to >= n) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (a.from == a.to) throw std::invalid_argument("self-loop arc");
    if (a.t < 1 || a.t > tau) throw std::invalid_argument("arc label outside [1, tau]");
    if (a.traversal < 1) {
      throw std::invalid_argument("traversal time must be positive");
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const DirectedTimeArc& a, const DirectedTimeArc& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.traversal < b.traversal;
  });
}

DirectedTemporalGraph parse_directed_traversal(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> toks;
  if (!reader.next(toks)) throw ParseError(reader.line() + 1, "missing header");
  expect_tokens(toks, 3, reader.line(), "header 'n m tau'");
  std::int64_t n = parse_int(toks[0], reader.line());
  std::int64_t m = parse_int(toks[1], reader.line());
  std::int64_t tau = parse_int(toks[2], reader.line());
  if (n < 0 || m < 0 || tau < 0) throw ParseError(reader.line(), "negative header field");

  std::vector<DirectedTimeArc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!reader.next(toks)) {
      throw ParseError(reader.line() + 1, "unexpected end of input, expected arc line");
    }
    expect_tokens(toks, 4, reader.line(), "arc line 'u v t phi'");
    DirectedTimeArc a;
    a.from = static_cast<VertexId>(parse_int(toks[0], reader.line()));
    a.to = static_cast<VertexId>(parse_int(toks[1], reader.line()));
    a.t = parse_int(toks[2], reader.line());
    a.traversal = parse_int(toks[3], reader.line());
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw ParseError(reader.line(), "vertex index out of range");
    }
    if (a.from == a.to) throw ParseError(reader.line(), "self-loop");
    if (a.t < 1 || a.t > tau) throw ParseError(reader.line(), "label outside [1, tau]");
    if (a.traversal < 1) throw ParseError(reader.line(), "traversal time must be >= 1");
    arcs.push_back(a);
  }
  return DirectedTemporalGraph(static_cast<VertexId>(n), std::move(arcs), tau);
}

void PlanarLbcInstance::validate() const {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("budget k must be even and >= 2");
  if (l < 1) throw std::invalid_argument("length bound l must be >= 1");
  if (s == z || s < 0 || z < 0 || s >= n || z >= n) {
    throw std::invalid_argument("invalid terminals");
  }
  std::vector<std::vector<int>> used(static_cast<std::size_t>(n));
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      throw std::invalid_argument("invalid edge endpoints");
    }
    if (e.cost != 1 && e.cost != k + 1) {
      throw std::invalid_argument("edge cost must be 1 or k+1");
    }
    if (e.pos_u < 1 || e.pos_u > 6 || e.pos_v < 1 || e.pos_v > 6) {
      throw std::invalid_argument("edge position outside [1,6]");
    }
    used[static_cast<std::size_t>(e.u)].push_back(e.pos_u);
    used[static_cast<std::size_t>(e.v)].push_back(e.pos_v);
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& ps = used[static_cast<std::size_t>(v)];
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) {
      throw std::invalid_argument("duplicate edge position at vertex " + std::to_string(v));
    }
    if (degree[static_cast<std::size_t>(v)] > 6) {
      throw std::invalid_argument("degree above six at vertex " + std::to_string(v));
    }
  }
  if (degree[static_cast<std::size_t>(s)] != 3 || degree[static_cast<std::size_t>(z)] != 3) {
    throw std::invalid_argument("terminals must have degree exactly three");
  }
}

PlanarLbcInstance parse_planar_lbc(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> toks;
  if (!reader.next(toks)) throw ParseError(reader.line() + 1, "missing header");
  expect_tokens(toks, 2, reader.line(), "header 'n m'");
  std::int64_t n = parse_int(toks[0], reader.line());
  std::int64_t m = parse_int(toks[1], reader.line());
  if (!reader.next(toks) || toks.size() != 5 || toks[0] != "q") {
    throw ParseError(reader.line(), "expected query line 'q s z k l'");
  }
  PlanarLbcInstance inst;
  inst.n = static_cast<VertexId>(n);
  inst.s = static_cast<VertexId>(parse_int(toks[1], reader.line()));
  inst.z = static_cast<VertexId>(parse_int(toks[2], reader.line()));
  inst.k = parse_int(toks[3], reader.line());
  inst.l = parse_int(toks[4], reader.line());
  for (std::int64_t i = 0; i < m; ++i) {
    if (!reader.next(toks)) {
      throw ParseError(reader.line() + 1, "unexpected end of input, expected edge line");
    }
    expect_tokens(toks, 5, reader.line(), "edge line 'u v cost pos_u pos_v'");
    PlanarLbcEdge e;
    e.u = static_cast<VertexId>(parse_int(toks[0], reader.line()));
    e.v = static_cast<VertexId>(parse_int(toks[1], reader.line()));
    e.cost = parse_int(toks[2], reader.line());
    e.pos_u = static_cast<int>(parse_int(toks[3], reader.line()));
    e.pos_v = static_cast<int>(parse_int(toks[4], reader.line()));
    inst.edges.push_back(e);
  }
  inst.validate();
  return inst;
}

}  // namespace tempsep
