#include "stranded/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "stranded/enumerate.hpp"
#include "stranded/faces.hpp"
#include "stranded/structure.hpp"

namespace stranded {

std::vector<std::string> verify_suite_names() {
  return {"inclusion",         "no_tadface_mo",     "no_tadface_colored", "no_nonplanar_gt",
          "single_edge_break", "broken_face_parity", "vertex_function_types"};
}

GraphDocument graph_to_document(const StrandedGraph& g) {
  GraphDocument doc;
  doc.model = g.model.name;
  for (const VertexDecl& v : g.vertices) doc.vertex_stmts.push_back({v.id, v.kind, 0});
  for (const Edge& e : g.edges)
    doc.edge_stmts.push_back({e.from.vertex, e.from.corner, e.to.vertex, e.to.corner, e.color, 0});
  for (size_t i = 0; i < g.externals.size(); ++i)
    doc.ext_stmts.push_back({g.externals[i].port.vertex, g.externals[i].port.corner,
                             "x" + std::to_string(i) + "_", 0});
  return doc;
}

namespace {

using PropertyFn = std::function<bool(const StrandedGraph&)>;  // true = property holds

struct SuiteDef {
  std::vector<int> default_legs;
  PropertyFn holds;
};

std::map<std::string, SuiteDef> suite_defs() {
  auto mo = [](const StrandedGraph& g) { return check_multi_orientable(g); };

  std::map<std::string, SuiteDef> defs;
  defs["inclusion"] = {{0, 2, 4}, [](const StrandedGraph& g) {
                         if (!check_colorable(g)) return true;
                         return check_multi_orientable(g).has_value();
                       }};
  defs["no_tadface_mo"] = {{0, 2, 4}, [mo](const StrandedGraph& g) {
                             if (!mo(g)) return true;
                             FaceSet fs = trace_faces(g);
                             return detect_tadfaces(g, fs).empty();
                           }};
  defs["no_tadface_colored"] = {{0, 2, 4}, [](const StrandedGraph& g) {
                                  if (!check_colorable(g)) return true;
                                  FaceSet fs = trace_faces(g);
                                  return detect_tadfaces(g, fs).empty();
                                }};
  defs["no_nonplanar_gt"] = {{0, 2, 4}, [mo](const StrandedGraph& g) {
                               if (!mo(g)) return true;
                               for (const auto& w : detect_generalized_tadpoles(g))
                                 if (w.planarity == TadpolePlanarity::nonplanar) return false;
                               return true;
                             }};
  defs["single_edge_break"] = {{2, 4}, [mo](const StrandedGraph& g) {
                                 if (g.externals.empty() || !mo(g)) return true;
                                 FaceSet fs = trace_faces(g);
                                 return irregularity_report(g, fs)
                                     .single_leg_break_witnesses.empty();
                               }};
  defs["broken_face_parity"] = {{2, 4}, [mo](const StrandedGraph& g) {
                                  if (g.externals.empty() || !mo(g)) return true;
                                  FaceSet fs = trace_faces(g);
                                  for (int n : irregularity_report(g, fs).breaking_leg_counts)
                                    if (n % 2 != 0) return false;
                                  return true;
                                }};
  defs["vertex_function_types"] = {{2, 4}, [](const StrandedGraph& g) {
                                     size_t legs = g.externals.size();
                                     if (legs != 2 && legs != 4) return true;
                                     auto a = check_multi_orientable(g);
                                     if (!a) return true;
                                     int plus = 0, minus = 0;
                                     for (const ExternalLeg& l : g.externals)
                                       (a->corner_sign(l.port.vertex, l.port.corner) > 0 ? plus
                                                                                         : minus)++;
                                     return plus == minus;
                                   }};
  return defs;
}

}  // namespace

VerifyReport run_verify(const std::string& suite, int max_vertices, std::vector<int> leg_counts,
                        int budget_vertices) {
  auto defs = suite_defs();
  auto it = defs.find(suite);
  if (it == defs.end()) throw Error(ErrorCode::SyntaxError, "unknown verify suite '" + suite + "'");
  if (max_vertices > budget_vertices)
    throw Error(ErrorCode::BudgetExceeded, "verify budget exceeded");

  VerifyReport rep;
  rep.suite = suite;
  rep.max_vertices = max_vertices;
  rep.leg_counts = leg_counts.empty() ? it->second.default_legs : leg_counts;

  auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= max_vertices; ++n) {
    for (int legs : rep.leg_counts) {
      if ((4 * n - legs) % 2 != 0 || 4 * n < legs) continue;
      EnumerationRequest req{ModelName::boulatov3d, n, legs, false, false, true, budget_vertices};
      enumerate_graphs(req, [&](const StrandedGraph& g) {
        ++rep.examined;
        if (!it->second.holds(g))
          rep.counterexamples.push_back(serialize_graph_dsl(graph_to_document(g)));
      });
    }
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace stranded
