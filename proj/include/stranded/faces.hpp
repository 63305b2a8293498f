#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stranded/graph.hpp"

namespace stranded {

// Address of one strand end: slot `slot` (1..D) of corner `corner` of
// vertex `vertex`.
struct StrandAddress {
  VertexId vertex = 0;
  int corner = 0;
  int slot = 0;
  bool operator==(const StrandAddress&) const = default;
  auto operator<=>(const StrandAddress&) const = default;
};

enum class SegmentKind : uint8_t { vertex_segment, edge_segment };

struct StrandSegment {
  SegmentKind kind;
  StrandAddress a, b;
  int owner;  // vertex id or edge index
};

struct EdgePass {
  int edge = 0;       // edge index
  int direction = 0;  // +1 traversed from->to
};

struct Face {
  bool closed = false;
  SlotClass slot_class = SlotClass::outer;
  std::vector<StrandSegment> traversal;   // alternating vertex/edge segments
  std::vector<EdgePass> edge_passes;
  // open faces only:
  StrandAddress entry{}, exit{};
  std::string entry_symbol, exit_symbol;
};

struct FaceSet {
  std::vector<Face> faces;
  int internal_count = 0;  // closed faces
  int open_count = 0;
};

// Total on valid graphs; deterministic: open faces in order of their
// smallest boundary address, closed faces in order of their smallest
// contained vertex-segment address.
FaceSet trace_faces(const StrandedGraph& g);

// Jacket: the ribbon graph left after deleting every middle strand (3D
// only).  For vacuum graphs the genus is the sum over connected
// components of (2 - V + E - F_outer)/2; open graphs report no genus.
struct JacketReport {
  int vertices = 0;
  int edges = 0;
  int closed_outer_faces = 0;
  std::optional<int> genus;  // vacuum graphs only
};

JacketReport jacket(const StrandedGraph& g, const FaceSet& faces);

// A broken face of the jacket: one boundary circuit passing through
// external legs.  Open outer strand-faces chain through each leg (the two
// outer slots of a leg are consecutive on the boundary).
struct BrokenFace {
  std::vector<int> strand_faces;  // indices into FaceSet.faces
  std::vector<int> legs;          // external leg indices, in traversal order
};

struct BrokenFaceReport {
  int B = 0;
  std::vector<BrokenFace> broken;
  bool irregular = false;  // B > 1
};

BrokenFaceReport broken_face_count(const StrandedGraph& g, const FaceSet& faces);

struct IrregularityReport {
  int B = 0;
  std::vector<int> breaking_leg_counts;        // per broken face
  std::vector<int> single_leg_break_witnesses; // broken-face indices with exactly one leg
};

IrregularityReport irregularity_report(const StrandedGraph& g, const FaceSet& faces);

}  // namespace stranded
