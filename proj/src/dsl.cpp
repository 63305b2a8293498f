#include "stranded/dsl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stranded {

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !isspace(static_cast<unsigned char>(line[j])) && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i + 1)});
    i = j;
  }
  return out;
}

long parse_int(const Token& t, int line, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(t.text, &pos);
    if (pos != t.text.size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line, t.col, std::string("expected ") + what + ", got '" + t.text + "'");
  }
}

std::pair<long, long> parse_port(const Token& t, int line) {
  auto dot = t.text.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == t.text.size())
    throw ParseError(line, t.col, "expected <vertex>.<corner>, got '" + t.text + "'");
  Token a{t.text.substr(0, dot), t.col};
  Token b{t.text.substr(dot + 1), t.col + static_cast<int>(dot) + 1};
  return {parse_int(a, line, "vertex id"), parse_int(b, line, "corner")};
}

}  // namespace

bool GraphDocument::operator==(const GraphDocument& o) const {
  auto vs = [](const VertexStmt& a) { return std::tuple(a.id, a.kind); };
  auto es = [](const EdgeStmt& a) { return std::tuple(a.v, a.c, a.w, a.d, a.color); };
  auto xs = [](const ExtStmt& a) { return std::tuple(a.v, a.c, a.label); };
  if (model != o.model || vertex_stmts.size() != o.vertex_stmts.size() ||
      edge_stmts.size() != o.edge_stmts.size() || ext_stmts.size() != o.ext_stmts.size())
    return false;
  for (size_t i = 0; i < vertex_stmts.size(); ++i)
    if (vs(vertex_stmts[i]) != vs(o.vertex_stmts[i])) return false;
  for (size_t i = 0; i < edge_stmts.size(); ++i)
    if (es(edge_stmts[i]) != es(o.edge_stmts[i])) return false;
  for (size_t i = 0; i < ext_stmts.size(); ++i)
    if (xs(ext_stmts[i]) != xs(o.ext_stmts[i])) return false;
  return true;
}

GraphDocument parse_graph_dsl(const std::string& text) {
  GraphDocument doc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_model = false;
  const ModelSpec* spec = nullptr;
  std::map<long, int> vertex_seen;  // id -> line

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0].text;

    if (kw == "model") {
      if (have_model) throw ParseError(lineno, tok[0].col, "duplicate model line");
      if (tok.size() != 2) throw ParseError(lineno, tok[0].col, "usage: model <name>");
      try {
        doc.model = model_from_string(tok[1].text);
      } catch (const Error&) {
        throw ParseError(lineno, tok[1].col, "unknown model '" + tok[1].text + "'");
      }
      spec = &ModelSpec::get(doc.model);
      have_model = true;
      continue;
    }
    if (!have_model)
      throw ParseError(lineno, tok[0].col, "the model line must come first");

    if (kw == "vertex") {
      if (tok.size() != 2 && tok.size() != 4)
        throw ParseError(lineno, tok[0].col, "usage: vertex <id> [kind <A|B>]");
      long id = parse_int(tok[1], lineno, "vertex id");
      if (vertex_seen.count(id))
        throw ParseError(lineno, tok[1].col,
                         "duplicate vertex id " + std::to_string(id) + " (first at line " +
                             std::to_string(vertex_seen[id]) + ")");
      vertex_seen[id] = lineno;
      VertexKind kind = VertexKind::A;
      if (tok.size() == 4) {
        if (tok[2].text != "kind")
          throw ParseError(lineno, tok[2].col, "expected 'kind', got '" + tok[2].text + "'");
        if (!spec->two_vertex_kinds)
          throw ParseError(lineno, tok[2].col,
                           std::string(model_to_string(doc.model)) + " has no vertex kinds");
        if (tok[3].text == "A") kind = VertexKind::A;
        else if (tok[3].text == "B") kind = VertexKind::B;
        else throw ParseError(lineno, tok[3].col, "kind must be A or B");
      } else if (spec->two_vertex_kinds) {
        throw ParseError(lineno, tok[0].col,
                         std::string(model_to_string(doc.model)) + " requires 'kind <A|B>'");
      }
      doc.vertex_stmts.push_back({id, kind, lineno});
      continue;
    }
    if (kw == "edge") {
      if (tok.size() != 3 && tok.size() != 5)
        throw ParseError(lineno, tok[0].col, "usage: edge <v>.<c> <w>.<d> [color <0-3>]");
      auto [v, c] = parse_port(tok[1], lineno);
      auto [w, d] = parse_port(tok[2], lineno);
      std::optional<int> color;
      if (tok.size() == 5) {
        if (tok[3].text != "color")
          throw ParseError(lineno, tok[3].col, "expected 'color', got '" + tok[3].text + "'");
        if (doc.model != ModelName::colored3d)
          throw ParseError(lineno, tok[3].col,
                           std::string(model_to_string(doc.model)) + " edges carry no color");
        long col = parse_int(tok[4], lineno, "color 0-3");
        if (col > 3) throw ParseError(lineno, tok[4].col, "color must be 0-3");
        color = static_cast<int>(col);
      }
      for (auto [t, corner] : {std::pair(tok[1], c), std::pair(tok[2], d)})
        if (corner >= spec->corners_per_vertex)
          throw ParseError(lineno, t.col,
                           "corner " + std::to_string(corner) + " out of range 0.." +
                               std::to_string(spec->corners_per_vertex - 1));
      doc.edge_stmts.push_back({v, c, w, d, color, lineno});
      continue;
    }
    if (kw == "ext") {
      if (tok.size() != 3)
        throw ParseError(lineno, tok[0].col, "usage: ext <v>.<c> <label>");
      auto [v, c] = parse_port(tok[1], lineno);
      if (c >= spec->corners_per_vertex)
        throw ParseError(lineno, tok[1].col,
                         "corner " + std::to_string(c) + " out of range 0.." +
                             std::to_string(spec->corners_per_vertex - 1));
      doc.ext_stmts.push_back({v, c, tok[2].text, lineno});
      continue;
    }
    throw ParseError(lineno, tok[0].col, "unknown keyword '" + kw + "'");
  }
  if (!have_model) throw ParseError(lineno + 1, 1, "missing model line");

  // undeclared vertex references are parse-level errors with positions
  for (const auto& e : doc.edge_stmts)
    for (long v : {e.v, e.w})
      if (!vertex_seen.count(v))
        throw ParseError(e.line, 1, "edge references undeclared vertex " + std::to_string(v));
  for (const auto& x : doc.ext_stmts)
    if (!vertex_seen.count(x.v))
      throw ParseError(x.line, 1, "ext references undeclared vertex " + std::to_string(x.v));
  return doc;
}

StrandedGraph GraphDocument::to_graph() const {
  const ModelSpec& spec = ModelSpec::get(model);
  std::map<long, VertexId> remap;
  std::vector<VertexDecl> decls;
  for (const auto& v : vertex_stmts) {
    remap[v.id] = static_cast<VertexId>(decls.size());
    decls.push_back({static_cast<VertexId>(decls.size()), v.kind});
  }
  std::vector<Edge> edges;
  for (const auto& e : edge_stmts) {
    Edge ed;
    ed.from = {remap.at(e.v), static_cast<int>(e.c)};
    ed.to = {remap.at(e.w), static_cast<int>(e.d)};
    ed.color = e.color;
    edges.push_back(ed);
  }
  std::vector<ExternalSpec> ext;
  for (const auto& x : ext_stmts) ext.push_back({{remap.at(x.v), static_cast<int>(x.c)}, {x.label}});
  return build_graph(spec, decls, edges, ext);
}

std::string serialize_graph_dsl(const GraphDocument& doc) {
  std::ostringstream out;
  out << "model " << model_to_string(doc.model) << "\n";
  const ModelSpec& spec = ModelSpec::get(doc.model);
  for (const auto& v : doc.vertex_stmts) {
    out << "vertex " << v.id;
    if (spec.two_vertex_kinds) out << " kind " << (v.kind == VertexKind::A ? "A" : "B");
    out << "\n";
  }
  for (const auto& e : doc.edge_stmts) {
    out << "edge " << e.v << "." << e.c << " " << e.w << "." << e.d;
    if (e.color) out << " color " << *e.color;
    out << "\n";
  }
  for (const auto& x : doc.ext_stmts) out << "ext " << x.v << "." << x.c << " " << x.label << "\n";
  return out.str();
}

}  // namespace stranded
