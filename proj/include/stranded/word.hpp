#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "stranded/model.hpp"

namespace stranded {

enum class SymbolKind : uint8_t { external = 0, holonomy = 1 };

// A group symbol: an external strand label or an edge holonomy.  Holonomy
// names are h<edge_id+1>; ordering is externals first (by label), then
// holonomies (by edge id).
struct GroupSymbol {
  SymbolKind kind = SymbolKind::external;
  std::string name;  // external label, or "h<k>"
  int edge = -1;     // holonomy: edge index

  auto key() const { return std::tuple(static_cast<int>(kind), edge, std::string_view(name)); }
  bool operator==(const GroupSymbol& o) const { return kind == o.kind && name == o.name; }
  bool operator<(const GroupSymbol& o) const { return key() < o.key(); }
};

GroupSymbol external_symbol(std::string label);
GroupSymbol holonomy_symbol(int edge_index);

struct Letter {
  GroupSymbol symbol;
  int exponent = +1;  // +1 or -1
  bool operator==(const Letter&) const = default;
  // inverse letters order after positive ones
  auto key() const { return std::tuple(symbol.key(), exponent > 0 ? 0 : 1); }
  bool operator<(const Letter& o) const { return key() < o.key(); }
};

// Freely reduced word over group symbols.
struct GroupWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  bool operator==(const GroupWord&) const = default;
  bool operator<(const GroupWord& o) const;
};

GroupWord free_reduce(GroupWord w);
// removes conjugation shells: x^-1 w x ~ w (sound for deltas, which are
// invariant under cyclic rotation)
GroupWord cyclic_reduce(GroupWord w);
GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);
// substitutes sym := replacement everywhere, with free reduction
GroupWord substitute(const GroupWord& w, const GroupSymbol& sym, const GroupWord& replacement);

// Lexicographically minimal representative over all cyclic rotations of w
// and of w^-1, after cyclic reduction.  Idempotent.
GroupWord canonicalize_word(const GroupWord& w);

bool contains_holonomy(const GroupWord& w);
int holonomy_occurrences(const GroupWord& w, int edge_index);

std::string word_to_string(const GroupWord& w);

}  // namespace stranded
