#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "autofrob/automata.hpp"
#include "autofrob/error.hpp"

namespace autofrob::detail {

struct SubsetHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (State s : v) h = (h ^ s) * 1099511628211ull;
    return h;
  }
};

/// Subset construction. `successors(q, letter, emit)` calls emit(t) for every
/// successor t; the source states are numbered 0..source_states-1.
template <class IsAccepting, class Successors>
Dfa subset_construction(System system, unsigned arity, std::vector<State> initial, std::size_t source_states,
                        IsAccepting is_accepting, Successors successors, const Budget& budget) {
  Dfa out(system, arity, 0);
  const std::size_t sigma = out.alphabet_size();
  std::unordered_map<std::vector<State>, State, SubsetHash> ids;
  std::vector<std::vector<State>> subsets;
  auto intern = [&](std::vector<State>&& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    if (subsets.size() >= budget.max_states) throw ResourceError("subset construction exceeded the state budget");
    const bool acc = std::any_of(s.begin(), s.end(), is_accepting);
    const State id = out.add_state(acc);
    ids.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  std::sort(initial.begin(), initial.end());
  initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
  out.set_initial(intern(std::move(initial)));

  std::vector<std::uint32_t> stamp(source_states, 0);
  std::uint32_t epoch = 0;
  std::vector<State> buf;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter c = 0; c < sigma; ++c) {
      ++epoch;
      buf.clear();
      auto emit = [&](State t) {
        if (stamp[t] != epoch) {
          stamp[t] = epoch;
          buf.push_back(t);
        }
      };
      for (State q : subsets[i]) successors(q, c, emit);
      std::sort(buf.begin(), buf.end());
      const State to = intern(std::vector<State>(buf));
      out.set_next(static_cast<State>(i), c, to);
    }
  }
  return out;
}

}  // namespace autofrob::detail
