#include "stranded/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace stranded {

std::optional<OrientationAssignment> check_multi_orientable(const StrandedGraph& g) {
  if (g.dimension() != 3)
    throw Error(ErrorCode::UnsupportedDimension, "multi-orientability check is 3D");
  OrientationAssignment a;
  size_t nv = g.vertices.size();
  std::vector<int> phase(nv, -1);

  // adjacency with parity demand: phase(v)+phase(w) == c1+c2+1 (mod 2)
  std::vector<std::vector<std::pair<VertexId, int>>> adj(nv);
  for (const Edge& e : g.edges) {
    int need = (e.from.corner + e.to.corner + 1) % 2;
    if (e.from.vertex == e.to.vertex) {
      if (need != 0) return std::nullopt;  // opposite corners on one vertex
      continue;
    }
    adj[e.from.vertex].push_back({e.to.vertex, need});
    adj[e.to.vertex].push_back({e.from.vertex, need});
  }
  for (VertexId s = 0; s < nv; ++s) {
    if (phase[s] >= 0) continue;
    phase[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (auto [y, need] : adj[x]) {
        int want = (phase[x] + need) % 2;
        if (phase[y] < 0) {
          phase[y] = want;
          stack.push_back(y);
        } else if (phase[y] != want) {
          return std::nullopt;
        }
      }
    }
  }
  for (VertexId v = 0; v < nv; ++v) a.vertex_phase[v] = phase[v];
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    a.edge_forward[static_cast<int>(i)] = a.corner_sign(e.from.vertex, e.from.corner) == +1;
  }
  return a;
}

std::optional<ColoringAssignment> check_colorable(const StrandedGraph& g) {
  if (g.dimension() != 3)
    throw Error(ErrorCode::UnsupportedDimension, "colorability check is 3D");
  size_t nv = g.vertices.size();
  std::vector<int> kind(nv, -1), rot(nv, -1);

  // incident edges per vertex for pruning
  std::vector<std::vector<int>> inc(nv);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    inc[g.edges[i].from.vertex].push_back(static_cast<int>(i));
    if (g.edges[i].to.vertex != g.edges[i].from.vertex)
      inc[g.edges[i].to.vertex].push_back(static_cast<int>(i));
  }
  auto color_at = [&](VertexId v, int corner) {
    return kind[v] == 0 ? (corner + rot[v]) % 4 : (((rot[v] - corner) % 4) + 4) % 4;
  };
  auto edge_ok = [&](int ei) {
    const Edge& e = g.edges[ei];
    VertexId a = e.from.vertex, b = e.to.vertex;
    if (kind[a] < 0 || kind[b] < 0) return true;  // not decided yet
    if (a == b) return false;                     // bipartite excludes loops
    if (kind[a] == kind[b]) return false;
    return color_at(a, e.from.corner) == color_at(b, e.to.corner);
  };

  std::function<bool(VertexId)> go = [&](VertexId v) -> bool {
    if (v == nv) return true;
    for (int k = 0; k < 2; ++k) {
      for (int r = 0; r < 4; ++r) {
        kind[v] = k;
        rot[v] = r;
        bool ok = std::all_of(inc[v].begin(), inc[v].end(), edge_ok);
        if (ok && go(v + 1)) return true;
      }
    }
    kind[v] = rot[v] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;

  ColoringAssignment c;
  for (VertexId v = 0; v < nv; ++v) {
    c.vertex_kind[v] = kind[v] == 0 ? VertexKind::A : VertexKind::B;
    c.rotation[v] = rot[v];
  }
  for (size_t i = 0; i < g.edges.size(); ++i)
    c.edge_color[static_cast<int>(i)] = color_at(g.edges[i].from.vertex, g.edges[i].from.corner);
  return c;
}

std::vector<TadfaceWitness> detect_tadfaces(const StrandedGraph& g, const FaceSet& faces) {
  std::vector<TadfaceWitness> out;
  for (size_t i = 0; i < faces.faces.size(); ++i) {
    std::map<int, int> cnt;
    for (const EdgePass& p : faces.faces[i].edge_passes) ++cnt[p.edge];
    for (auto [e, c] : cnt)
      if (c >= 2) out.push_back({static_cast<int>(i), e, c});
  }
  return out;
}

namespace {

// B of the induced subgraph on `verts` with the given internal edges; the
// remaining ports become external legs.
int subgraph_B(const StrandedGraph& g, const std::vector<VertexId>& verts,
               const std::vector<int>& internal_edges) {
  std::map<VertexId, VertexId> remap;
  std::vector<VertexDecl> vd;
  for (VertexId v : verts) {
    remap[v] = static_cast<VertexId>(vd.size());
    vd.push_back({static_cast<VertexId>(vd.size()), VertexKind::A});
  }
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, int>> used;
  for (int ei : internal_edges) {
    Edge e = g.edges[ei];
    e.from.vertex = remap.at(e.from.vertex);
    e.to.vertex = remap.at(e.to.vertex);
    e.color.reset();
    edges.push_back(e);
    used.insert({e.from.vertex, e.from.corner});
    used.insert({e.to.vertex, e.to.corner});
  }
  std::vector<ExternalSpec> ext;
  int k = 0;
  for (VertexId v = 0; v < vd.size(); ++v)
    for (int c = 0; c < g.corners(); ++c)
      if (!used.count({v, c})) ext.push_back({{v, c}, {"x" + std::to_string(k++) + "_"}});
  const ModelSpec& model =
      ModelSpec::get(g.dimension() == 3 ? ModelName::boulatov3d : ModelName::mo4d);
  // mo4d sign rules would reject arbitrary stubs; build an unsigned clone
  ModelSpec m = model;
  m.signed_corners = false;
  m.two_vertex_kinds = false;
  StrandedGraph sub = build_graph(m, vd, edges, ext);
  FaceSet fs = trace_faces(sub);
  return broken_face_count(sub, fs).B;
}

TadpolePlanarity classify(int B, int external_count) {
  if (B == 1) return TadpolePlanarity::planar;
  if (B == 2 && external_count == 2) return TadpolePlanarity::nonplanar;
  return TadpolePlanarity::irregular_other;
}

}  // namespace

std::vector<TadpoleWitness> detect_tadpoles(const StrandedGraph& g) {
  std::vector<TadpoleWitness> out;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.from.vertex != e.to.vertex) continue;
    TadpoleWitness w;
    w.edge = static_cast<int>(i);
    int d = std::abs(e.from.corner - e.to.corner);
    w.adjacent_corners = (d == 1 || d == g.corners() - 1);
    int B = subgraph_B(g, {e.from.vertex}, {static_cast<int>(i)});
    w.planarity = classify(B, g.corners() - 2);
    out.push_back(w);
  }
  return out;
}

std::vector<GeneralizedTadpoleWitness> detect_generalized_tadpoles(const StrandedGraph& g) {
  std::vector<GeneralizedTadpoleWitness> out;
  size_t nv = g.vertices.size();
  if (nv == 0 || nv > 20) return out;
  for (uint32_t mask = 1; mask < (1u << nv); ++mask) {
    std::vector<VertexId> verts;
    for (VertexId v = 0; v < nv; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    auto in = [&](VertexId v) { return (mask & (1u << v)) != 0; };

    std::vector<int> internal, cut;
    for (size_t i = 0; i < g.edges.size(); ++i) {
      bool a = in(g.edges[i].from.vertex), b = in(g.edges[i].to.vertex);
      if (a && b) internal.push_back(static_cast<int>(i));
      else if (a || b) cut.push_back(static_cast<int>(i));
    }
    if (internal.empty()) continue;

    // external attachment ports: cut-edge stubs and original legs
    std::set<VertexId> attach;
    int external_count = 0;
    for (int ei : cut) {
      const Edge& e = g.edges[ei];
      attach.insert(in(e.from.vertex) ? e.from.vertex : e.to.vertex);
      ++external_count;
    }
    for (const ExternalLeg& leg : g.externals)
      if (in(leg.port.vertex)) {
        attach.insert(leg.port.vertex);
        ++external_count;
      }
    if (attach.size() != 1 || external_count == 0) continue;

    // connectivity of the induced subgraph
    std::set<VertexId> seen{verts[0]};
    std::vector<VertexId> stack{verts[0]};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (int ei : internal)
        for (VertexId y : {g.edges[ei].from.vertex, g.edges[ei].to.vertex}) {
          VertexId o = y == g.edges[ei].from.vertex ? g.edges[ei].to.vertex
                                                    : g.edges[ei].from.vertex;
          if (y == x && !seen.count(o)) {
            seen.insert(o);
            stack.push_back(o);
          }
        }
    }
    if (seen.size() != verts.size()) continue;

    GeneralizedTadpoleWitness w;
    w.vertices = verts;
    w.external_vertex = *attach.begin();
    w.cut_edges = cut;
    w.external_count = external_count;
    w.B = subgraph_B(g, verts, internal);
    w.planarity = classify(w.B, external_count);
    out.push_back(std::move(w));
  }
  return out;
}

StructureReport structure_report(const StrandedGraph& g, const FaceSet& faces) {
  StructureReport r;
  if (g.dimension() == 3) {
    r.multi_orientable = check_multi_orientable(g);
    r.colorable = check_colorable(g);
  }
  r.tadpoles = detect_tadpoles(g);
  r.generalized_tadpoles = detect_generalized_tadpoles(g);
  r.tadfaces = detect_tadfaces(g, faces);
  if (!g.externals.empty()) {
    BrokenFaceReport b = broken_face_count(g, faces);
    r.B = b.B;
    r.irregular = b.irregular;
  }
  return r;
}

}  // namespace stranded
