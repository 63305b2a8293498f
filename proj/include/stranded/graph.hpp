#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stranded/model.hpp"

namespace stranded {

using VertexId = uint32_t;

struct Port {
  VertexId vertex = 0;
  int corner = 0;
  bool operator==(const Port&) const = default;
  auto operator<=>(const Port&) const = default;
};

struct Edge {
  int id = 0;  // holonomy symbol is h<id+1>
  Port from;   // "+" corner for mo models
  Port to;     // "-" corner for mo models
  std::optional<int> color;  // colored3d only
};

struct ExternalLeg {
  Port port;
  std::vector<std::string> strand_labels;  // one per slot, slot 1 first
};

struct VertexDecl {
  VertexId id = 0;
  VertexKind kind = VertexKind::A;
};

// Immutable after build_graph; all operations are pure functions of it.
struct StrandedGraph {
  ModelSpec model;
  std::vector<VertexDecl> vertices;             // index == VertexId
  std::vector<Edge> edges;
  std::vector<ExternalLeg> externals;

  int dimension() const { return model.dimension; }
  int corners() const { return model.corners_per_vertex; }
  VertexKind kind_of(VertexId v) const { return vertices[v].kind; }
  bool vacuum() const { return externals.empty(); }

  // -1: external leg index ~(i); >=0: edge index; INT32_MIN: unused
  // (filled by build_graph; port_use[v][c])
  std::vector<std::vector<int32_t>> port_use;
  static constexpr int32_t kUnused = INT32_MIN;
  bool port_is_external(const Port& p) const {
    int32_t u = port_use[p.vertex][p.corner];
    return u != kUnused && u < 0;
  }
  int leg_index_at(const Port& p) const { return ~port_use[p.vertex][p.corner]; }
};

// Inputs for graph construction; external legs may give a base label from
// which per-slot strand labels are derived (label + slot number), or the
// full per-slot list.
struct ExternalSpec {
  Port port;
  std::vector<std::string> labels;  // size 1 (base) or D (per slot)
};

StrandedGraph build_graph(const ModelSpec& model,
                          const std::vector<VertexDecl>& vertices,
                          const std::vector<Edge>& edges,
                          const std::vector<ExternalSpec>& externals);

struct ConnectivityReport {
  bool connected = false;
  bool one_particle_irreducible = false;
};

ConnectivityReport connectivity_report(const StrandedGraph& g);

}  // namespace stranded
