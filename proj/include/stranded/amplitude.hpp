#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stranded/faces.hpp"
#include "stranded/word.hpp"

namespace stranded {

// One group delta; the word is kept in canonical form (D13): cyclically
// reduced, lexicographically minimal over rotations of w and w^-1.
struct Delta {
  GroupWord word;
  bool from_open_face = false;  // carries external boundary symbols
};

struct DeltaKernel {
  std::vector<Delta> deltas;        // sorted by canonical word
  std::vector<int> holonomies;      // edge indices present
  int source_faces = 0;             // deltas at construction (= F in the measure identity)
};

DeltaKernel kernel_from_graph(const StrandedGraph& g, const FaceSet& faces);
// kernel from explicit words (for kernel-level golden cases and tools)
DeltaKernel make_kernel(std::vector<GroupWord> words);

struct EliminationStep {
  GroupSymbol solved;
  GroupWord solution;
};

struct AmplitudeResult {
  std::vector<Delta> residual_external;  // holonomy-free deltas, canonical
  int divergence_degree = 0;             // count of deltas reduced to the empty word
  std::optional<DeltaKernel> stuck_kernel;
  std::vector<EliminationStep> elimination_log;
  // holonomies never solved: absent from every delta at termination
  // (a cyclic rotation can cancel a conjugated holonomy without a step)
  std::vector<int> free_holonomies;
};

// Repeatedly solves the lowest-indexed holonomy that occurs exactly once
// in some delta, preferring the shortest such delta (ties: canonically
// least word, then position).  Substitutes with free and cyclic reduction.
AmplitudeResult eliminate(const DeltaKernel& kernel);

// Step selector for order-independence experiments: given the candidate
// (holonomy, delta-index) pairs, returns the index of the pair to use.
using StepChooser =
    std::function<size_t(const std::vector<std::pair<int, size_t>>&, const std::vector<Delta>&)>;
AmplitudeResult eliminate_with_chooser(const DeltaKernel& kernel, const StepChooser& choose);

// Solves delta's word for sym (which must occur exactly once):
// returns w with sym = w making the delta trivially satisfied.
GroupWord solve_delta_for(const Delta& delta, const GroupSymbol& sym);

}  // namespace stranded
