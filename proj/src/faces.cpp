#include "stranded/faces.hpp"

#include <algorithm>
#include <map>

namespace stranded {

namespace {

struct Wiring {
  // partner address through the vertex kernel
  std::map<StrandAddress, StrandAddress> vertex_partner;
  // partner through an edge, with edge index and direction when leaving here
  struct EdgeHop {
    StrandAddress to;
    int edge;
    int direction;
  };
  std::map<StrandAddress, EdgeHop> edge_partner;
};

Wiring wire(const StrandedGraph& g) {
  Wiring w;
  auto pairs = vertex_strand_pairs(g.dimension());
  for (VertexId v = 0; v < g.vertices.size(); ++v) {
    for (const auto& [a, b] : pairs) {
      StrandAddress pa{v, a.corner, a.slot}, pb{v, b.corner, b.slot};
      w.vertex_partner[pa] = pb;
      w.vertex_partner[pb] = pa;
    }
  }
  int D = g.dimension();
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    for (int s = 1; s <= D; ++s) {
      StrandAddress a{e.from.vertex, e.from.corner, s};
      StrandAddress b{e.to.vertex, e.to.corner, D + 1 - s};
      w.edge_partner[a] = {b, static_cast<int>(i), +1};
      w.edge_partner[b] = {a, static_cast<int>(i), -1};
    }
  }
  return w;
}

}  // namespace

FaceSet trace_faces(const StrandedGraph& g) {
  Wiring w = wire(g);
  FaceSet out;
  std::map<StrandAddress, bool> visited;  // vertex-segment endpoints seen
  auto mark = [&](const StrandAddress& a) {
    visited[a] = true;
    visited[w.vertex_partner.at(a)] = true;
  };

  // external boundary addresses, in address order
  std::vector<std::pair<StrandAddress, std::string>> boundary;
  for (const ExternalLeg& leg : g.externals)
    for (int s = 1; s <= g.dimension(); ++s)
      boundary.push_back({{leg.port.vertex, leg.port.corner, s}, leg.strand_labels[s - 1]});
  std::sort(boundary.begin(), boundary.end());

  auto symbol_at = [&](const StrandAddress& a) -> std::string {
    const ExternalLeg& leg = g.externals[g.leg_index_at({a.vertex, a.corner})];
    return leg.strand_labels[a.slot - 1];
  };

  for (const auto& [start, sym] : boundary) {
    if (visited.count(start)) continue;
    Face f;
    f.closed = false;
    f.entry = start;
    f.entry_symbol = sym;
    f.slot_class = slot_class(g.dimension(), start.slot);
    StrandAddress a = start;
    while (true) {
      mark(a);
      StrandAddress b = w.vertex_partner.at(a);
      f.traversal.push_back({SegmentKind::vertex_segment, a, b, static_cast<int>(a.vertex)});
      if (g.port_is_external({b.vertex, b.corner})) {
        f.exit = b;
        f.exit_symbol = symbol_at(b);
        break;
      }
      const auto& hop = w.edge_partner.at(b);
      f.traversal.push_back({SegmentKind::edge_segment, b, hop.to, hop.edge});
      f.edge_passes.push_back({hop.edge, hop.direction});
      a = hop.to;
    }
    out.faces.push_back(std::move(f));
    ++out.open_count;
  }

  // closed faces, scanning vertex pairs in address order
  for (const auto& [a0, unused] : w.vertex_partner) {
    (void)unused;
    if (visited.count(a0)) continue;
    Face f;
    f.closed = true;
    f.slot_class = slot_class(g.dimension(), a0.slot);
    StrandAddress a = a0;
    while (true) {
      mark(a);
      StrandAddress b = w.vertex_partner.at(a);
      f.traversal.push_back({SegmentKind::vertex_segment, a, b, static_cast<int>(a.vertex)});
      const auto& hop = w.edge_partner.at(b);  // closed faces never hit a leg
      f.traversal.push_back({SegmentKind::edge_segment, b, hop.to, hop.edge});
      f.edge_passes.push_back({hop.edge, hop.direction});
      a = hop.to;
      if (a == a0) break;
    }
    out.faces.push_back(std::move(f));
    ++out.internal_count;
  }
  return out;
}

JacketReport jacket(const StrandedGraph& g, const FaceSet& faces) {
  if (g.dimension() != 3)
    throw Error(ErrorCode::UnsupportedDimension, "jackets are defined for 3D graphs only");
  JacketReport r;
  r.vertices = static_cast<int>(g.vertices.size());
  r.edges = static_cast<int>(g.edges.size());
  for (const Face& f : faces.faces)
    if (f.closed && f.slot_class == SlotClass::outer) ++r.closed_outer_faces;

  if (!g.vacuum()) return r;  // genus undefined for open graphs

  // per-component Euler characteristic; isolated vertices count as spheres
  size_t nv = g.vertices.size();
  std::vector<int> comp(nv, -1);
  int ncomp = 0;
  for (VertexId s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const Edge& e : g.edges) {
        for (VertexId y : {e.from.vertex, e.to.vertex}) {
          VertexId o = (y == e.from.vertex) ? e.to.vertex : e.from.vertex;
          if (y == x && comp[o] < 0) { comp[o] = ncomp; stack.push_back(o); }
        }
      }
    }
    ++ncomp;
  }
  std::vector<int> V(ncomp, 0), E(ncomp, 0), F(ncomp, 0);
  for (VertexId v = 0; v < nv; ++v) ++V[comp[v]];
  for (const Edge& e : g.edges) ++E[comp[e.from.vertex]];
  for (const Face& f : faces.faces)
    if (f.closed && f.slot_class == SlotClass::outer)
      ++F[comp[f.traversal.front().a.vertex]];
  int genus = 0;
  for (int c = 0; c < ncomp; ++c) {
    int chi = V[c] - E[c] + F[c];
    if (chi > 2 || (2 - chi) % 2 != 0)
      throw Error(ErrorCode::SemanticError, "jacket Euler characteristic out of range");
    genus += (2 - chi) / 2;
  }
  r.genus = genus;
  return r;
}

BrokenFaceReport broken_face_count(const StrandedGraph& g, const FaceSet& faces) {
  if (g.externals.empty())
    throw Error(ErrorCode::NoExternalLegs, "broken_face_count needs external legs");
  BrokenFaceReport rep;

  // open outer strand-faces chain around each leg: the face ending at one
  // outer slot of a leg continues at the leg's other outer slot.
  std::vector<int> open_outer;
  std::map<StrandAddress, int> face_at_entry, face_at_exit;
  for (size_t i = 0; i < faces.faces.size(); ++i) {
    const Face& f = faces.faces[i];
    if (f.closed || f.slot_class != SlotClass::outer) continue;
    open_outer.push_back(static_cast<int>(i));
    face_at_entry[f.entry] = static_cast<int>(i);
    face_at_exit[f.exit] = static_cast<int>(i);
  }
  int D = g.dimension();
  auto other_outer = [&](const StrandAddress& a) {
    // the other outer slot at the same leg (3D: 1<->3; 4D: 1<->4)
    int o = a.slot == 1 ? D : 1;
    return StrandAddress{a.vertex, a.corner, o};
  };

  std::vector<bool> used(faces.faces.size(), false);
  for (int fi : open_outer) {
    if (used[fi]) continue;
    BrokenFace bf;
    StrandAddress start = faces.faces[fi].entry;
    StrandAddress a = start;
    while (true) {
      int f;
      StrandAddress leave;
      if (auto it = face_at_entry.find(a); it != face_at_entry.end()) {
        f = it->second;
        leave = faces.faces[f].exit;
      } else {
        f = face_at_exit.at(a);
        leave = faces.faces[f].entry;
      }
      used[f] = true;
      bf.strand_faces.push_back(f);
      bf.legs.push_back(g.leg_index_at({leave.vertex, leave.corner}));
      a = other_outer(leave);  // U-turn around the leg
      if (a == start) break;
    }
    rep.broken.push_back(std::move(bf));
  }
  rep.B = static_cast<int>(rep.broken.size());
  rep.irregular = rep.B > 1;
  return rep;
}

IrregularityReport irregularity_report(const StrandedGraph& g, const FaceSet& faces) {
  BrokenFaceReport rep = broken_face_count(g, faces);
  IrregularityReport ir;
  ir.B = rep.B;
  for (size_t i = 0; i < rep.broken.size(); ++i) {
    int n = static_cast<int>(rep.broken[i].legs.size());
    ir.breaking_leg_counts.push_back(n);
    if (n == 1) ir.single_leg_break_witnesses.push_back(static_cast<int>(i));
  }
  return ir;
}

}  // namespace stranded
