#pragma once

#include <string>
#include <vector>

#include "stranded/dsl.hpp"
#include "stranded/graph.hpp"

namespace stranded {

// Exhaustive small-order re-proof of the combinatorial theorems, over the
// boulatov3d enumeration (the superclass of all 3D stranded graphs).
//
// suites:
//   inclusion            colorable graphs are multi-orientable
//   no_tadface_mo        no tadface in any multi-orientable graph
//   no_tadface_colored   no tadface in any colorable graph
//   no_nonplanar_gt      no "non-planar" generalized tadpole in any mo graph
//   single_edge_break    no broken face of an mo graph broken by one leg
//   broken_face_parity   broken faces of mo graphs have even leg counts
//   vertex_function_types  mo 2-point functions have external signs {+,-};
//                          mo 4-point functions have two of each sign
struct VerifyReport {
  std::string suite;
  int max_vertices = 0;
  std::vector<int> leg_counts;
  long long examined = 0;
  std::vector<std::string> counterexamples;  // DSL documents
  double wall_seconds = 0;
  bool passed() const { return counterexamples.empty(); }
};

std::vector<std::string> verify_suite_names();

VerifyReport run_verify(const std::string& suite, int max_vertices,
                        std::vector<int> leg_counts = {}, int budget_vertices = 3);

// DSL document reconstruction (used for counterexample emission)
GraphDocument graph_to_document(const StrandedGraph& g);

}  // namespace stranded
