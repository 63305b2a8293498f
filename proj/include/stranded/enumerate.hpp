#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "stranded/graph.hpp"

namespace stranded {

struct EnumerationRequest {
  ModelName model = ModelName::boulatov3d;
  int n_vertices = 0;
  int n_external = 0;
  bool connected = false;
  bool one_pi = false;
  bool dedupe = false;
  // desk-scale guard; raise explicitly (or via STRANDED_BUDGET in the CLI)
  int max_vertices_budget = 3;
};

// Canonical byte string identifying a graph up to vertex relabeling
// composed with per-vertex cyclic corner rotations (identity only for
// mo4d, whose sign pattern admits no non-trivial rotation).  Colors are
// fixed labels; external legs enter by port only.
std::string canonical_form(const StrandedGraph& g);

// Emits every labeled corner pairing (plus kind/color assignments where
// the model has them) passing the model rules and filters, in a fixed
// deterministic order.  Returns the number of graphs emitted.
long long enumerate_graphs(const EnumerationRequest& req,
                           const std::function<void(const StrandedGraph&)>& fn);

// Labeled pairing count with no model filter applied (boulatov3d); for
// vacuum order n this is (4n-1)!!.
long long labeled_pairing_count(int n_vertices, int n_external);

struct CensusRow {
  int order = 0;
  long long labeled = 0;
  long long deduped = 0;
  long long colorable = 0;
  long long mo_only = 0;
  long long neither = 0;
};

struct CensusTable {
  ModelName model;
  int legs = 0;
  std::vector<CensusRow> rows;
};

// Exhaustive classification by order; 3D models only.
CensusTable census(ModelName model, int max_vertices, int legs, int budget_vertices = 3);

}  // namespace stranded
