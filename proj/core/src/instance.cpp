#include "tempsep/instance.hpp"

#include <stdexcept>
#include <string>

namespace tempsep {

SeparatorInstance::SeparatorInstance(TemporalGraph g, VertexId s_, VertexId z_,
                                     Length k_, PathModel m)
    : graph(std::move(g)), s(s_), z(z_), k(k_), model(m) {
  if (s < 0 || z < 0 || s >= graph.num_vertices() || z >= graph.num_vertices()) {
    throw std::invalid_argument("terminal out of range: s=" + std::to_string(s) +
                                " z=" + std::to_string(z));
  }
  if (s == z) throw std::invalid_argument("terminals must be distinct");
  if (k < 0) throw std::invalid_argument("negative budget");
}

}  // namespace tempsep
