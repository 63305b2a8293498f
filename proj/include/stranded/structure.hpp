#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stranded/faces.hpp"

namespace stranded {

// Witness that a 3D graph admits alternating corner signs with every edge
// running + -> -.  vertex_phase 0 keeps even corners "+"; phase 1 flips.
struct OrientationAssignment {
  std::map<VertexId, int> vertex_phase;
  std::map<int, bool> edge_forward;  // edge index -> stored from-port is the "+" end

  int corner_sign(VertexId v, int corner) const {
    return (corner + vertex_phase.at(v)) % 2 == 0 ? +1 : -1;
  }
};

struct ColoringAssignment {
  std::map<VertexId, VertexKind> vertex_kind;  // A = phi, B = phi-bar
  std::map<VertexId, int> rotation;            // color(c) = (c+r)%4 at phi, (r-c)%4 at phi-bar
  std::map<int, int> edge_color;

  int color_at(VertexId v, int corner) const {
    int r = rotation.at(v);
    return vertex_kind.at(v) == VertexKind::A ? (corner + r) % 4 : (((r - corner) % 4) + 4) % 4;
  }
};

// Parity propagation over the constraint graph: an edge joining corners
// c1,c2 forces phase(v1)+phase(v2)+c1+c2 to be odd; returns an assignment
// iff no parity cycle is inconsistent.  Input signs/colors are ignored.
std::optional<OrientationAssignment> check_multi_orientable(const StrandedGraph& g);

// Backtracking over vertex kinds and rotations in ascending id order;
// deterministic first-found witness.
std::optional<ColoringAssignment> check_colorable(const StrandedGraph& g);

struct TadfaceWitness {
  int face = 0;  // index into FaceSet.faces
  int edge = 0;
  int passes = 0;
};

std::vector<TadfaceWitness> detect_tadfaces(const StrandedGraph& g, const FaceSet& faces);

enum class TadpolePlanarity { planar, nonplanar, irregular_other };

struct TadpoleWitness {
  int edge = 0;          // the self-loop
  bool adjacent_corners = false;
  TadpolePlanarity planarity = TadpolePlanarity::planar;
};

// Self-loop edges with the planarity class of the one-vertex subgraph they
// form (cutting every other edge at that vertex).
std::vector<TadpoleWitness> detect_tadpoles(const StrandedGraph& g);

struct GeneralizedTadpoleWitness {
  std::vector<VertexId> vertices;  // the subgraph
  VertexId external_vertex = 0;    // all outside connections attach here
  std::vector<int> cut_edges;      // edges to the rest of the graph
  int external_count = 0;          // cut edges + original legs on the subgraph
  int B = 0;
  TadpolePlanarity planarity = TadpolePlanarity::planar;
};

// Connected induced subgraphs whose outside connections (cut edges and
// original legs) all attach at one vertex; classified by the jacket B of
// the subgraph with cut stubs treated as external legs.
std::vector<GeneralizedTadpoleWitness> detect_generalized_tadpoles(const StrandedGraph& g);

struct StructureReport {
  std::optional<OrientationAssignment> multi_orientable;
  std::optional<ColoringAssignment> colorable;
  std::vector<TadpoleWitness> tadpoles;
  std::vector<GeneralizedTadpoleWitness> generalized_tadpoles;
  std::vector<TadfaceWitness> tadfaces;
  int B = 0;  // 0 when the graph has no external legs
  bool irregular = false;
};

StructureReport structure_report(const StrandedGraph& g, const FaceSet& faces);

}  // namespace stranded
