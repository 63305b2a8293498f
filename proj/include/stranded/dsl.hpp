#pragma once

#include <string>
#include <vector>

#include "stranded/graph.hpp"

namespace stranded {

struct ParseError : Error {
  ParseError(int line, int col, const std::string& msg)
      : Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

// Line-oriented graph description:
//   model <boulatov3d|mo3d|colored3d|mo4d>
//   vertex <id> [kind <A|B>]
//   edge <v>.<c> <w>.<d> [color <0-3>]
//   ext <v>.<c> <label>
// '#' starts a comment; corners are 0..D counterclockwise.
struct GraphDocument {
  ModelName model = ModelName::boulatov3d;

  struct VertexStmt {
    long id;
    VertexKind kind;
    int line;
  };
  struct EdgeStmt {
    long v, c, w, d;
    std::optional<int> color;
    int line;
  };
  struct ExtStmt {
    long v, c;
    std::string label;
    int line;
  };
  std::vector<VertexStmt> vertex_stmts;
  std::vector<EdgeStmt> edge_stmts;
  std::vector<ExtStmt> ext_stmts;

  bool operator==(const GraphDocument& o) const;

  // builds the validated graph; semantic failures rethrow as Error with
  // the offending statement's line recorded in the message
  StrandedGraph to_graph() const;
};

GraphDocument parse_graph_dsl(const std::string& text);
std::string serialize_graph_dsl(const GraphDocument& doc);

}  // namespace stranded
