#include "stranded/json_report.hpp"

namespace stranded {

namespace {

std::string port_str(const Port& p) {
  return std::to_string(p.vertex) + "." + std::to_string(p.corner);
}

json delta_list(const std::vector<Delta>& ds) {
  json out = json::array();
  for (const Delta& d : ds) out.push_back(word_to_string(d.word));
  return out;
}

}  // namespace

json graph_json(const StrandedGraph& g) {
  json j;
  j["model"] = model_to_string(g.model.name);
  json vs = json::array();
  for (const VertexDecl& v : g.vertices) {
    json e;
    e["id"] = v.id;
    if (g.model.two_vertex_kinds) e["kind"] = v.kind == VertexKind::A ? "A" : "B";
    vs.push_back(e);
  }
  j["vertices"] = vs;
  json es = json::array();
  for (const Edge& e : g.edges) {
    json x;
    x["id"] = e.id;
    x["from"] = port_str(e.from);
    x["to"] = port_str(e.to);
    x["holonomy"] = "h" + std::to_string(e.id + 1);
    if (e.color) x["color"] = *e.color;
    es.push_back(x);
  }
  j["edges"] = es;
  json xs = json::array();
  for (const ExternalLeg& l : g.externals) {
    json x;
    x["port"] = port_str(l.port);
    x["labels"] = l.strand_labels;
    xs.push_back(x);
  }
  j["externals"] = xs;
  return j;
}

json faces_json(const StrandedGraph& g, const FaceSet& fs) {
  json out = json::array();
  for (const Face& f : fs.faces) {
    json x;
    x["closed"] = f.closed;
    x["slot_class"] = f.slot_class == SlotClass::middle ? "middle" : "outer";
    GroupWord w;
    if (!f.closed) w.letters.push_back({external_symbol(f.entry_symbol), +1});
    for (const EdgePass& p : f.edge_passes) w.letters.push_back({holonomy_symbol(p.edge), p.direction});
    if (!f.closed) w.letters.push_back({external_symbol(f.exit_symbol), -1});
    x["word"] = word_to_string(canonicalize_word(w));
    json legs = json::array();
    if (!f.closed) {
      legs.push_back(g.leg_index_at({f.entry.vertex, f.entry.corner}));
      legs.push_back(g.leg_index_at({f.exit.vertex, f.exit.corner}));
    }
    x["breaking_legs"] = legs;
    out.push_back(x);
  }
  return out;
}

json checks_json(const StructureReport& r) {
  json j;
  j["multi_orientable"] = r.multi_orientable.has_value();
  j["colorable"] = r.colorable.has_value();
  json tf = json::array();
  for (const TadfaceWitness& w : r.tadfaces) {
    json x;
    x["face"] = w.face;
    x["edge"] = w.edge;
    x["passes"] = w.passes;
    tf.push_back(x);
  }
  j["tadfaces"] = tf;
  json gt = json::array();
  for (const GeneralizedTadpoleWitness& w : r.generalized_tadpoles) {
    json x;
    x["vertices"] = w.vertices;
    x["external_vertex"] = w.external_vertex;
    x["external_count"] = w.external_count;
    x["B"] = w.B;
    x["planarity"] = w.planarity == TadpolePlanarity::planar      ? "planar"
                     : w.planarity == TadpolePlanarity::nonplanar ? "nonplanar"
                                                                  : "irregular_other";
    gt.push_back(x);
  }
  j["generalized_tadpoles"] = gt;
  j["B"] = r.B;
  j["irregular"] = r.irregular;
  return j;
}

json amplitude_json(const AmplitudeResult& r) {
  json j;
  j["degree"] = r.divergence_degree;
  j["residual"] = delta_list(r.residual_external);
  if (r.stuck_kernel)
    j["stuck"] = delta_list(r.stuck_kernel->deltas);
  else
    j["stuck"] = nullptr;
  json log = json::array();
  for (const EliminationStep& s : r.elimination_log) {
    json x;
    x["symbol"] = s.solved.name;
    x["word"] = word_to_string(s.solution);
    log.push_back(x);
  }
  j["log"] = log;
  json freed = json::array();
  for (int e : r.free_holonomies) freed.push_back("h" + std::to_string(e + 1));
  j["free_holonomies"] = freed;
  return j;
}

json verify_json(const VerifyReport& r) {
  json j;
  j["suite"] = r.suite;
  j["examined"] = r.examined;
  j["counterexamples"] = r.counterexamples;
  return j;
}

json census_json(const CensusTable& t) {
  json j;
  j["model"] = model_to_string(t.model);
  j["legs"] = t.legs;
  json rows = json::array();
  for (const CensusRow& r : t.rows) {
    json x;
    x["order"] = r.order;
    x["labeled"] = r.labeled;
    x["deduped"] = r.deduped;
    x["colorable"] = r.colorable;
    x["mo_only"] = r.mo_only;
    x["neither"] = r.neither;
    rows.push_back(x);
  }
  j["rows"] = rows;
  return j;
}

}  // namespace stranded
