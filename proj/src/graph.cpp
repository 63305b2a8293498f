#include "stranded/graph.hpp"

#include <algorithm>
#include <set>

namespace stranded {

namespace {

void check_port(const ModelSpec& model, size_t nv, const Port& p) {
  if (p.vertex >= nv)
    throw Error(ErrorCode::BadVertexId, "unknown vertex " + std::to_string(p.vertex));
  if (p.corner < 0 || p.corner >= model.corners_per_vertex)
    throw Error(ErrorCode::BadCornerIndex,
                "corner " + std::to_string(p.corner) + " out of range for D=" +
                    std::to_string(model.dimension));
}

std::string port_str(const Port& p) {
  return std::to_string(p.vertex) + "." + std::to_string(p.corner);
}

}  // namespace

StrandedGraph build_graph(const ModelSpec& model,
                          const std::vector<VertexDecl>& vertices,
                          const std::vector<Edge>& edges,
                          const std::vector<ExternalSpec>& externals) {
  StrandedGraph g;
  g.model = model;
  g.vertices = vertices;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id != i)
      throw Error(ErrorCode::BadVertexId, "vertex ids must be dense and ordered");
    if (!model.two_vertex_kinds && vertices[i].kind != VertexKind::A)
      throw Error(ErrorCode::SemanticError,
                  std::string(model_to_string(model.name)) + " has a single vertex kind");
  }

  g.port_use.assign(vertices.size(),
                    std::vector<int32_t>(model.corners_per_vertex, StrandedGraph::kUnused));
  auto claim = [&](const Port& p, int32_t use) {
    check_port(model, vertices.size(), p);
    int32_t& slot = g.port_use[p.vertex][p.corner];
    if (slot != StrandedGraph::kUnused)
      throw Error(ErrorCode::PortReused, "port " + port_str(p) + " used twice");
    slot = use;
  };

  for (size_t i = 0; i < edges.size(); ++i) {
    Edge e = edges[i];
    e.id = static_cast<int>(i);
    check_port(model, vertices.size(), e.from);
    check_port(model, vertices.size(), e.to);
    if (e.from == e.to)
      throw Error(ErrorCode::PortReused, "edge joins a corner to itself at " + port_str(e.from));

    if (model.signed_corners) {
      int sf = corner_sign(model, vertices[e.from.vertex].kind, e.from.corner);
      int st = corner_sign(model, vertices[e.to.vertex].kind, e.to.corner);
      if (sf == -1 && st == +1) std::swap(e.from, e.to);  // normalize direction
      else if (!(sf == +1 && st == -1))
        throw Error(ErrorCode::SignMismatch,
                    "edge " + port_str(e.from) + " -> " + port_str(e.to) +
                        " does not join a + corner to a - corner");
    }
    if (model.colored) {
      if (vertices[e.from.vertex].kind == vertices[e.to.vertex].kind)
        throw Error(ErrorCode::ColorViolation,
                    "colored edge must join a phi vertex to a phi-bar vertex");
      if (!e.color)
        throw Error(ErrorCode::ColorViolation, "colored3d edge missing a color");
      if (*e.color < 0 || *e.color > 3)
        throw Error(ErrorCode::ColorViolation, "color out of range [0,3]");
    } else if (e.color) {
      throw Error(ErrorCode::ColorViolation,
                  std::string(model_to_string(model.name)) + " edges carry no color");
    }
    claim(e.from, static_cast<int32_t>(i));
    claim(e.to, static_cast<int32_t>(i));
    g.edges.push_back(e);
  }

  std::set<std::string> label_set;
  for (size_t i = 0; i < externals.size(); ++i) {
    const ExternalSpec& s = externals[i];
    ExternalLeg leg;
    leg.port = s.port;
    if (s.labels.size() == 1) {
      for (int sl = 1; sl <= model.slots_per_edge; ++sl)
        leg.strand_labels.push_back(s.labels[0] + std::to_string(sl));
    } else if (static_cast<int>(s.labels.size()) == model.slots_per_edge) {
      leg.strand_labels = s.labels;
    } else {
      throw Error(ErrorCode::SemanticError,
                  "external leg needs 1 base label or D strand labels");
    }
    for (const auto& l : leg.strand_labels)
      if (!label_set.insert(l).second)
        throw Error(ErrorCode::SemanticError, "duplicate external strand label '" + l + "'");
    claim(leg.port, ~static_cast<int32_t>(i));
    g.externals.push_back(std::move(leg));
  }

  for (VertexId v = 0; v < g.port_use.size(); ++v)
    for (int c = 0; c < model.corners_per_vertex; ++c)
      if (g.port_use[v][c] == StrandedGraph::kUnused)
        throw Error(ErrorCode::DanglingCorner,
                    "corner " + port_str({v, c}) + " is neither wired nor external");

  // colored3d: at each vertex the incident colors must fit one cyclic
  // rotation: color(c) = (c+r) mod 4 at phi vertices, (r-c) mod 4 at
  // phi-bar vertices.
  if (model.colored) {
    for (VertexId v = 0; v < g.vertices.size(); ++v) {
      std::optional<int> rot;
      for (const Edge& e : g.edges) {
        for (const Port& p : {e.from, e.to}) {
          if (p.vertex != v) continue;
          bool phi = g.vertices[v].kind == VertexKind::A;
          int r = phi ? (((*e.color - p.corner) % 4) + 4) % 4
                      : ((*e.color + p.corner) % 4);
          if (rot && *rot != r)
            throw Error(ErrorCode::ColorViolation,
                        "colors at vertex " + std::to_string(v) +
                            " violate the cyclic color order");
          rot = r;
        }
      }
    }
  }
  return g;
}

ConnectivityReport connectivity_report(const StrandedGraph& g) {
  ConnectivityReport r;
  size_t nv = g.vertices.size();
  if (nv == 0) return {true, true};

  auto component_count = [&](int skip_edge) {
    std::vector<int> comp(nv, -1);
    int ncomp = 0;
    for (VertexId s = 0; s < nv; ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = ncomp;
      std::vector<VertexId> stack{s};
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (size_t i = 0; i < g.edges.size(); ++i) {
          if (static_cast<int>(i) == skip_edge) continue;
          const Edge& e = g.edges[i];
          VertexId a = e.from.vertex, b = e.to.vertex;
          if (a == x && comp[b] < 0) { comp[b] = ncomp; stack.push_back(b); }
          if (b == x && comp[a] < 0) { comp[a] = ncomp; stack.push_back(a); }
        }
      }
      ++ncomp;
    }
    return ncomp;
  };

  r.connected = component_count(-1) == 1;
  r.one_particle_irreducible = r.connected;
  for (size_t i = 0; i < g.edges.size() && r.one_particle_irreducible; ++i) {
    if (g.edges[i].from.vertex == g.edges[i].to.vertex) continue;  // loops are never bridges
    if (component_count(static_cast<int>(i)) > 1) r.one_particle_irreducible = false;
  }
  return r;
}

}  // namespace stranded
