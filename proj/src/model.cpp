#include "stranded/model.hpp"

namespace stranded {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::PortReused: return "PortReused";
    case ErrorCode::DanglingCorner: return "DanglingCorner";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::ColorViolation: return "ColorViolation";
    case ErrorCode::BadCornerIndex: return "BadCornerIndex";
    case ErrorCode::BadVertexId: return "BadVertexId";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::NoExternalLegs: return "NoExternalLegs";
    case ErrorCode::Unpairable: return "Unpairable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::SymbolAbsent: return "SymbolAbsent";
    case ErrorCode::SymbolRepeated: return "SymbolRepeated";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

const ModelSpec& ModelSpec::get(ModelName name) {
  static const ModelSpec boulatov{ModelName::boulatov3d, 3, 4, 3, false, false, false, {"lambda"}};
  static const ModelSpec mo3d{ModelName::mo3d, 3, 4, 3, true, false, false, {"lambda"}};
  static const ModelSpec colored{ModelName::colored3d, 3, 4, 3, false, true, true, {"lambda"}};
  static const ModelSpec mo4d{ModelName::mo4d, 4, 5, 4, true, false, true, {"lambda1", "lambda2"}};
  switch (name) {
    case ModelName::boulatov3d: return boulatov;
    case ModelName::mo3d: return mo3d;
    case ModelName::colored3d: return colored;
    case ModelName::mo4d: return mo4d;
  }
  throw Error(ErrorCode::SemanticError, "unknown model");
}

ModelName model_from_string(const std::string& s) {
  if (s == "boulatov3d") return ModelName::boulatov3d;
  if (s == "mo3d") return ModelName::mo3d;
  if (s == "colored3d") return ModelName::colored3d;
  if (s == "mo4d") return ModelName::mo4d;
  throw Error(ErrorCode::SyntaxError, "unknown model '" + s + "'");
}

const char* model_to_string(ModelName m) {
  switch (m) {
    case ModelName::boulatov3d: return "boulatov3d";
    case ModelName::mo3d: return "mo3d";
    case ModelName::colored3d: return "colored3d";
    case ModelName::mo4d: return "mo4d";
  }
  return "?";
}

int corner_sign(const ModelSpec& model, VertexKind kind, int corner) {
  if (!model.signed_corners) return 0;
  if (model.name == ModelName::mo3d) return corner % 2 == 0 ? +1 : -1;
  // mo4d kind A = (-,+,-,+,-), kind B the complement
  int a = corner % 2 == 0 ? -1 : +1;
  return kind == VertexKind::A ? a : -a;
}

SlotClass slot_class(int dimension, int slot) {
  if (dimension == 3) return slot == 2 ? SlotClass::middle : SlotClass::outer;
  if (dimension == 4) return (slot == 2 || slot == 3) ? SlotClass::middle : SlotClass::outer;
  throw Error(ErrorCode::UnsupportedDimension, "slot_class: D must be 3 or 4");
}

std::vector<std::pair<CornerSlot, CornerSlot>> vertex_strand_pairs(int dimension) {
  std::vector<std::pair<CornerSlot, CornerSlot>> out;
  if (dimension == 3) {
    for (int i = 0; i < 4; ++i) out.push_back({{i, 3}, {(i + 1) % 4, 1}});
    for (int i = 0; i < 2; ++i) out.push_back({{i, 2}, {(i + 2) % 4, 2}});
  } else if (dimension == 4) {
    for (int i = 0; i < 5; ++i) out.push_back({{i, 4}, {(i + 1) % 5, 1}});
    for (int i = 0; i < 5; ++i) out.push_back({{i, 3}, {(i + 2) % 5, 2}});
  } else {
    throw Error(ErrorCode::UnsupportedDimension, "vertex_strand_pairs: D must be 3 or 4");
  }
  return out;
}

}  // namespace stranded
