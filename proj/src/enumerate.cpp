#include "stranded/enumerate.hpp"

#include <algorithm>
#include <map>

#include "stranded/structure.hpp"

namespace stranded {

namespace {

struct PortRef {
  VertexId v;
  int c;
};

// color of corner c under kind/rotation, colored3d
int col_at(VertexKind k, int rot, int c) {
  return k == VertexKind::A ? (c + rot) % 4 : (((rot - c) % 4) + 4) % 4;
}

std::string encode(const StrandedGraph& g, const std::vector<VertexId>& perm,
                   const std::vector<int>& rot) {
  // perm maps old vertex -> new id; rot[v] rotates corners of old vertex v
  int nc = g.corners();
  auto tr = [&](const Port& p) {
    return std::pair<VertexId, int>(perm[p.vertex], (p.corner + rot[p.vertex]) % nc);
  };
  std::vector<std::string> edges;
  for (const Edge& e : g.edges) {
    auto a = tr(e.from), b = tr(e.to);
    if (b < a) std::swap(a, b);
    std::string s = std::to_string(a.first) + "." + std::to_string(a.second) + "-" +
                    std::to_string(b.first) + "." + std::to_string(b.second);
    if (e.color) s += "c" + std::to_string(*e.color);
    edges.push_back(std::move(s));
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::string> exts;
  for (const ExternalLeg& l : g.externals) {
    auto a = tr(l.port);
    exts.push_back(std::to_string(a.first) + "." + std::to_string(a.second));
  }
  std::sort(exts.begin(), exts.end());
  std::vector<char> kinds(g.vertices.size());
  for (VertexId v = 0; v < g.vertices.size(); ++v)
    kinds[perm[v]] = g.vertices[v].kind == VertexKind::A ? 'A' : 'B';

  std::string out = model_to_string(g.model.name);
  out += "|";
  out.append(kinds.begin(), kinds.end());
  out += "|";
  for (const auto& e : edges) {
    out += e;
    out += ";";
  }
  out += "|";
  for (const auto& e : exts) {
    out += e;
    out += ";";
  }
  return out;
}

}  // namespace

std::string canonical_form(const StrandedGraph& g) {
  size_t nv = g.vertices.size();
  if (nv > 8)
    throw Error(ErrorCode::BudgetExceeded, "canonical_form is exhaustive; max 8 vertices");
  int nc = g.corners();
  bool rotations = g.model.name != ModelName::mo4d;

  std::vector<VertexId> perm(nv);
  for (VertexId v = 0; v < nv; ++v) perm[v] = v;
  std::string best;
  bool have = false;
  std::vector<VertexId> inv(nv);
  do {
    // perm here: position i holds old vertex placed at new id i; build map
    for (VertexId i = 0; i < nv; ++i) inv[perm[i]] = i;
    std::vector<int> rot(nv, 0);
    while (true) {
      std::string s = encode(g, inv, rot);
      if (!have || s < best) {
        best = std::move(s);
        have = true;
      }
      if (!rotations || nv == 0) break;
      size_t i = 0;
      while (i < nv && ++rot[i] == nc) rot[i++] = 0;
      if (i == nv) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!have) best = encode(g, {}, {});
  return best;
}

long long labeled_pairing_count(int n_vertices, int n_external) {
  int ports = 4 * n_vertices;
  int matched = ports - n_external;
  if (matched < 0 || matched % 2 != 0) return 0;
  // C(ports, n_external) * (matched-1)!!
  long long c = 1;
  for (int i = 0; i < n_external; ++i) c = c * (ports - i) / (i + 1);
  long long d = 1;
  for (int k = matched - 1; k >= 1; k -= 2) d *= k;
  return c * d;
}

long long enumerate_graphs(const EnumerationRequest& req,
                           const std::function<void(const StrandedGraph&)>& fn) {
  const ModelSpec& model = ModelSpec::get(req.model);
  if (req.n_vertices > req.max_vertices_budget)
    throw Error(ErrorCode::BudgetExceeded,
                "enumeration budget is " + std::to_string(req.max_vertices_budget) +
                    " vertices (raise explicitly to go further)");
  int nc = model.corners_per_vertex;
  int ports = nc * req.n_vertices;
  int matched = ports - req.n_external;
  if (matched < 0 || matched % 2 != 0)
    throw Error(ErrorCode::Unpairable, "(D+1)*V - legs must be even and non-negative");

  std::vector<PortRef> refs;
  for (VertexId v = 0; v < static_cast<VertexId>(req.n_vertices); ++v)
    for (int c = 0; c < nc; ++c) refs.push_back({v, c});

  long long count = 0;
  std::set<std::string> seen;

  // kind assignments: single-kind models use all-A
  std::vector<std::vector<VertexKind>> kindsets;
  if (model.two_vertex_kinds) {
    for (uint32_t m = 0; m < (1u << req.n_vertices); ++m) {
      std::vector<VertexKind> ks(req.n_vertices);
      for (int v = 0; v < req.n_vertices; ++v)
        ks[v] = (m >> v) & 1 ? VertexKind::B : VertexKind::A;
      kindsets.push_back(std::move(ks));
    }
  } else {
    kindsets.push_back(std::vector<VertexKind>(req.n_vertices, VertexKind::A));
  }

  for (const auto& kinds : kindsets) {
    std::vector<VertexDecl> decls;
    for (int v = 0; v < req.n_vertices; ++v)
      decls.push_back({static_cast<VertexId>(v), kinds[v]});

    auto sign_of = [&](const PortRef& p) {
      return corner_sign(model, kinds[p.v], p.c);
    };
    auto pair_allowed = [&](const PortRef& a, const PortRef& b) {
      if (a.v == b.v && a.c == b.c) return false;
      if (model.signed_corners) return sign_of(a) + sign_of(b) == 0;
      if (model.colored) return kinds[a.v] != kinds[b.v];
      return true;
    };

    std::vector<int> mate(ports, -1);  // -2 external
    std::vector<std::pair<int, int>> pairs;

    std::function<void(int, int)> rec = [&](int idx, int ext_left) {
      while (idx < ports && mate[idx] != -1) ++idx;
      if (idx == ports) {
        if (ext_left != 0) return;
        // assemble graph(s)
        std::vector<Edge> edges;
        for (auto [a, b] : pairs) {
          Edge e;
          e.from = {refs[a].v, refs[a].c};
          e.to = {refs[b].v, refs[b].c};
          if (model.signed_corners && sign_of(refs[a]) < 0) std::swap(e.from, e.to);
          edges.push_back(e);
        }
        std::vector<ExternalSpec> ext;
        int k = 0;
        for (int i = 0; i < ports; ++i)
          if (mate[i] == -2)
            ext.push_back({{refs[i].v, refs[i].c}, {"x" + std::to_string(k++) + "_"}});

        // colored3d: every distinct edge-color vector from per-vertex rotations
        std::vector<std::vector<int>> colorings;
        if (model.colored) {
          std::set<std::vector<int>> cs;
          std::vector<int> rotv(req.n_vertices, 0);
          while (true) {
            std::vector<int> colors;
            bool ok = true;
            for (const Edge& e : edges) {
              int ca = col_at(kinds[e.from.vertex], rotv[e.from.vertex], e.from.corner);
              int cb = col_at(kinds[e.to.vertex], rotv[e.to.vertex], e.to.corner);
              if (ca != cb) {
                ok = false;
                break;
              }
              colors.push_back(ca);
            }
            if (ok) cs.insert(colors);
            size_t i = 0;
            while (i < rotv.size() && ++rotv[i] == 4) rotv[i++] = 0;
            if (i == rotv.size() || rotv.empty()) break;
          }
          colorings.assign(cs.begin(), cs.end());
        } else {
          colorings.push_back({});
        }

        for (const auto& colors : colorings) {
          std::vector<Edge> es = edges;
          if (model.colored)
            for (size_t i = 0; i < es.size(); ++i) es[i].color = colors[i];
          StrandedGraph g;
          try {
            g = build_graph(model, decls, es, ext);
          } catch (const Error&) {
            continue;  // model rules reject this pairing
          }
          if (req.connected || req.one_pi) {
            ConnectivityReport c = connectivity_report(g);
            if (req.connected && !c.connected) continue;
            if (req.one_pi && !c.one_particle_irreducible) continue;
          }
          if (req.dedupe && !seen.insert(canonical_form(g)).second) continue;
          ++count;
          if (fn) fn(g);
        }
        return;
      }
      if (ext_left > 0) {
        mate[idx] = -2;
        rec(idx + 1, ext_left - 1);
        mate[idx] = -1;
      }
      for (int j = idx + 1; j < ports; ++j) {
        if (mate[j] != -1) continue;
        if (!pair_allowed(refs[idx], refs[j])) continue;
        mate[idx] = j;
        mate[j] = idx;
        pairs.push_back({idx, j});
        rec(idx + 1, ext_left);
        pairs.pop_back();
        mate[idx] = -1;
        mate[j] = -1;
      }
    };
    rec(0, req.n_external);
  }
  return count;
}

CensusTable census(ModelName model, int max_vertices, int legs, int budget_vertices) {
  const ModelSpec& spec = ModelSpec::get(model);
  if (spec.dimension != 3)
    throw Error(ErrorCode::UnsupportedDimension, "census classifies 3D models only");
  if (max_vertices > budget_vertices)
    throw Error(ErrorCode::BudgetExceeded, "census budget exceeded");
  CensusTable t;
  t.model = model;
  t.legs = legs;
  for (int n = 1; n <= max_vertices; ++n) {
    if ((4 * n - legs) % 2 != 0 || 4 * n < legs) continue;
    CensusRow row;
    row.order = n;
    EnumerationRequest labeled{model, n, legs, false, false, false, budget_vertices};
    row.labeled = enumerate_graphs(labeled, nullptr);
    EnumerationRequest dedup{model, n, legs, false, false, true, budget_vertices};
    row.deduped = enumerate_graphs(dedup, [&](const StrandedGraph& g) {
      bool mo = check_multi_orientable(g).has_value();
      bool col = check_colorable(g).has_value();
      if (col) ++row.colorable;
      else if (mo) ++row.mo_only;
      else ++row.neither;
    });
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace stranded
