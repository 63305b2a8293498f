#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stranded {

// Error with a stable machine-readable code, thrown by validation and
// budget checks across the library.
enum class ErrorCode {
  PortReused,
  DanglingCorner,
  SignMismatch,
  ColorViolation,
  BadCornerIndex,
  BadVertexId,
  UnsupportedDimension,
  NoExternalLegs,
  Unpairable,
  BudgetExceeded,
  OrderTooLarge,
  SymbolAbsent,
  SymbolRepeated,
  SyntaxError,
  SemanticError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode c);

enum class ModelName { boulatov3d, mo3d, colored3d, mo4d };

// Vertex kinds. 3d models with a single interaction use kind A for every
// vertex; colored3d uses A for the phi vertex and B for the phi-bar vertex;
// mo4d uses A for the lambda1 term and B for the lambda2 term.
enum class VertexKind : uint8_t { A = 0, B = 1 };

enum class SlotClass : uint8_t { outer, middle };

struct ModelSpec {
  ModelName name;
  int dimension;            // D
  int corners_per_vertex;   // D+1
  int slots_per_edge;       // D
  bool signed_corners;      // mo3d / mo4d
  bool colored;             // colored3d
  bool two_vertex_kinds;    // colored3d / mo4d
  std::vector<std::string> couplings;

  static const ModelSpec& get(ModelName name);
};

ModelName model_from_string(const std::string& s);
const char* model_to_string(ModelName m);

// Corner sign for the multi-orientable models: +1 means a phi occurrence
// (an edge tail), -1 a phi-bar occurrence (an edge head).
// mo3d: corners (+,-,+,-). mo4d kind A: (-,+,-,+,-); kind B: (+,-,+,-,+).
int corner_sign(const ModelSpec& model, VertexKind kind, int corner);

// Slot classes: for D=3 slot 2 is the middle strand; for D=4 slots 2,3 pair
// only among themselves and count as middle.
SlotClass slot_class(int dimension, int slot);

// The strand pairing inside one vertex, independent of the vertex kind.
// Slots are 1-based (slot i of corner c is the i-th field argument).
// D=3 (quartic kernel): slot 3 of corner i pairs with slot 1 of corner i+1;
// slot 2 of corner i with slot 2 of corner i+2.  D=4 (Ooguri pattern):
// slot 4 of corner i with slot 1 of corner i+1; slot 3 of corner i with
// slot 2 of corner i+2.
struct CornerSlot {
  int corner;
  int slot;
  bool operator==(const CornerSlot&) const = default;
};

std::vector<std::pair<CornerSlot, CornerSlot>> vertex_strand_pairs(int dimension);

}  // namespace stranded
