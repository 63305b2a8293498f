#include "stranded/amplitude.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stranded {

namespace {

void sort_kernel(DeltaKernel& k) {
  std::stable_sort(k.deltas.begin(), k.deltas.end(),
                   [](const Delta& a, const Delta& b) { return a.word < b.word; });
}

std::vector<int> kernel_holonomies(const std::vector<Delta>& ds) {
  std::set<int> hs;
  for (const Delta& d : ds)
    for (const Letter& l : d.word.letters)
      if (l.symbol.kind == SymbolKind::holonomy) hs.insert(l.symbol.edge);
  return std::vector<int>(hs.begin(), hs.end());
}

}  // namespace

DeltaKernel kernel_from_graph(const StrandedGraph& g, const FaceSet& faces) {
  std::vector<GroupWord> words;
  std::vector<bool> open_flags;
  for (const Face& f : faces.faces) {
    GroupWord w;
    if (!f.closed) w.letters.push_back({external_symbol(f.entry_symbol), +1});
    for (const EdgePass& p : f.edge_passes)
      w.letters.push_back({holonomy_symbol(p.edge), p.direction});
    if (!f.closed) w.letters.push_back({external_symbol(f.exit_symbol), -1});
    words.push_back(free_reduce(std::move(w)));
    open_flags.push_back(!f.closed);
  }
  DeltaKernel k;
  for (size_t i = 0; i < words.size(); ++i)
    k.deltas.push_back({canonicalize_word(words[i]), open_flags[i]});
  k.source_faces = static_cast<int>(k.deltas.size());
  k.holonomies = kernel_holonomies(k.deltas);
  sort_kernel(k);
  return k;
}

DeltaKernel make_kernel(std::vector<GroupWord> words) {
  DeltaKernel k;
  for (GroupWord& w : words) {
    bool open = std::any_of(w.letters.begin(), w.letters.end(), [](const Letter& l) {
      return l.symbol.kind == SymbolKind::external;
    });
    k.deltas.push_back({canonicalize_word(w), open});
  }
  k.source_faces = static_cast<int>(k.deltas.size());
  k.holonomies = kernel_holonomies(k.deltas);
  sort_kernel(k);
  return k;
}

GroupWord solve_delta_for(const Delta& delta, const GroupSymbol& sym) {
  const GroupWord& w = delta.word;
  int occ = 0;
  size_t pos = 0;
  for (size_t i = 0; i < w.letters.size(); ++i)
    if (w.letters[i].symbol == sym) {
      ++occ;
      pos = i;
    }
  if (occ == 0) throw Error(ErrorCode::SymbolAbsent, "symbol not in delta: " + sym.name);
  if (occ > 1) throw Error(ErrorCode::SymbolRepeated, "symbol repeated in delta: " + sym.name);

  // rotate so the solved letter sits last: p * sym^e = 1 cyclically
  GroupWord p;
  for (size_t i = 1; i < w.letters.size(); ++i)
    p.letters.push_back(w.letters[(pos + i) % w.letters.size()]);
  int e = w.letters[pos].exponent;
  return free_reduce(e > 0 ? inverse(p) : std::move(p));
}

AmplitudeResult eliminate_with_chooser(const DeltaKernel& kernel, const StepChooser& choose) {
  AmplitudeResult res;
  std::vector<Delta> ds;
  for (const Delta& d : kernel.deltas) {
    Delta c{canonicalize_word(d.word), d.from_open_face};
    if (c.word.empty())
      ++res.divergence_degree;
    else
      ds.push_back(std::move(c));
  }

  while (true) {
    // occurrence counts per holonomy per delta
    std::map<int, std::vector<std::pair<size_t, int>>> occ;  // edge -> [(delta, count)]
    for (size_t i = 0; i < ds.size(); ++i) {
      std::map<int, int> cnt;
      for (const Letter& l : ds[i].word.letters)
        if (l.symbol.kind == SymbolKind::holonomy) ++cnt[l.symbol.edge];
      for (auto [e, c] : cnt) occ[e].push_back({i, c});
    }
    std::vector<std::pair<int, size_t>> candidates;  // (edge, delta index)
    for (auto& [e, v] : occ)
      for (auto [i, c] : v)
        if (c == 1) candidates.push_back({e, i});
    if (candidates.empty()) break;

    size_t pick = choose(candidates, ds);
    auto [edge, di] = candidates[pick];
    GroupSymbol h = holonomy_symbol(edge);
    GroupWord sol = solve_delta_for(ds[di], h);
    res.elimination_log.push_back({h, sol});

    std::vector<Delta> next;
    for (size_t i = 0; i < ds.size(); ++i) {
      if (i == di) continue;
      GroupWord w = canonicalize_word(substitute(ds[i].word, h, sol));
      if (w.empty())
        ++res.divergence_degree;
      else
        next.push_back({std::move(w), ds[i].from_open_face});
    }
    ds = std::move(next);
    std::stable_sort(ds.begin(), ds.end(),
                     [](const Delta& a, const Delta& b) { return a.word < b.word; });
  }

  std::vector<Delta> stuck;
  for (Delta& d : ds) {
    if (contains_holonomy(d.word))
      stuck.push_back(std::move(d));
    else
      res.residual_external.push_back(std::move(d));
  }
  if (!stuck.empty()) {
    DeltaKernel sk;
    sk.deltas = std::move(stuck);
    sk.holonomies = kernel_holonomies(sk.deltas);
    sk.source_faces = static_cast<int>(sk.deltas.size());
    res.stuck_kernel = std::move(sk);
  }

  std::set<int> solved;
  for (const EliminationStep& s : res.elimination_log) solved.insert(s.solved.edge);
  std::set<int> remaining;
  if (res.stuck_kernel)
    for (int e : res.stuck_kernel->holonomies) remaining.insert(e);
  for (int e : kernel.holonomies)
    if (!solved.count(e) && !remaining.count(e)) res.free_holonomies.push_back(e);
  return res;
}

AmplitudeResult eliminate(const DeltaKernel& kernel) {
  // lowest edge; among its single-occurrence deltas the shortest word,
  // then the canonically least, then the earliest
  StepChooser fixed = [](const std::vector<std::pair<int, size_t>>& cands,
                         const std::vector<Delta>& ds) {
    size_t best = 0;
    for (size_t i = 1; i < cands.size(); ++i) {
      auto [e0, d0] = cands[best];
      auto [e1, d1] = cands[i];
      if (e1 != e0) {
        if (e1 < e0) best = i;
        continue;
      }
      const GroupWord &w0 = ds[d0].word, &w1 = ds[d1].word;
      if (w1.size() != w0.size()) {
        if (w1.size() < w0.size()) best = i;
        continue;
      }
      if (w1 < w0) best = i;
    }
    return best;
  };
  return eliminate_with_chooser(kernel, fixed);
}

}  // namespace stranded
