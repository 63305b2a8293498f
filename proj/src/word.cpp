#include "stranded/word.hpp"

#include <algorithm>

namespace stranded {

GroupSymbol external_symbol(std::string label) {
  return GroupSymbol{SymbolKind::external, std::move(label), -1};
}

GroupSymbol holonomy_symbol(int edge_index) {
  return GroupSymbol{SymbolKind::holonomy, "h" + std::to_string(edge_index + 1), edge_index};
}

bool GroupWord::operator<(const GroupWord& o) const {
  return std::lexicographical_compare(letters.begin(), letters.end(), o.letters.begin(),
                                      o.letters.end(),
                                      [](const Letter& a, const Letter& b) { return a < b; });
}

GroupWord free_reduce(GroupWord w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (Letter& l : w.letters) {
    if (!out.empty() && out.back().symbol == l.symbol && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  w.letters = std::move(out);
  return w;
}

GroupWord cyclic_reduce(GroupWord w) {
  w = free_reduce(std::move(w));
  size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo].symbol == w.letters[hi - 1].symbol &&
         w.letters[lo].exponent == -w.letters[hi - 1].exponent) {
    ++lo;
    --hi;
  }
  if (lo > 0) w.letters = std::vector<Letter>(w.letters.begin() + lo, w.letters.begin() + hi);
  return w;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->symbol, -it->exponent});
  return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(std::move(out));
}

GroupWord substitute(const GroupWord& w, const GroupSymbol& sym, const GroupWord& replacement) {
  GroupWord out;
  GroupWord repl_inv = inverse(replacement);
  for (const Letter& l : w.letters) {
    if (l.symbol == sym) {
      const GroupWord& r = l.exponent > 0 ? replacement : repl_inv;
      out.letters.insert(out.letters.end(), r.letters.begin(), r.letters.end());
    } else {
      out.letters.push_back(l);
    }
  }
  return free_reduce(std::move(out));
}

GroupWord canonicalize_word(const GroupWord& w0) {
  GroupWord w = cyclic_reduce(w0);
  size_t n = w.letters.size();
  if (n == 0) return w;
  GroupWord best;
  bool have = false;
  for (const GroupWord* base : {&w, nullptr}) {
    GroupWord inv;
    if (!base) {
      inv = inverse(w);
      base = &inv;
    }
    for (size_t r = 0; r < n; ++r) {
      GroupWord cand;
      cand.letters.reserve(n);
      for (size_t i = 0; i < n; ++i) cand.letters.push_back(base->letters[(r + i) % n]);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
    }
  }
  return best;
}

bool contains_holonomy(const GroupWord& w) {
  return std::any_of(w.letters.begin(), w.letters.end(),
                     [](const Letter& l) { return l.symbol.kind == SymbolKind::holonomy; });
}

int holonomy_occurrences(const GroupWord& w, int edge_index) {
  int n = 0;
  for (const Letter& l : w.letters)
    if (l.symbol.kind == SymbolKind::holonomy && l.symbol.edge == edge_index) ++n;
  return n;
}

std::string word_to_string(const GroupWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (const Letter& l : w.letters) {
    s += l.symbol.name;
    if (l.exponent < 0) s += "^-1";
    s += ' ';
  }
  s.pop_back();
  return s;
}

}  // namespace stranded
