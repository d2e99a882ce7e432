#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "autofrob/automata.hpp"

namespace autofrob {

namespace {

std::vector<State> reachable_states(const TransitionSystem& a) {
  std::vector<std::uint8_t> seen(a.state_count(), 0);
  std::vector<State> order{a.initial()};
  seen[a.initial()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter c = 0; c < a.alphabet_size(); ++c) {
      const State t = a.next(order[i], c);
      if (!seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
    }
  return order;
}

// Refinable partition over 0..n-1 with marking (Valmari & Lehtinen style).
class Partition {
 public:
  Partition(std::size_t n, const std::vector<int>& labels) : elems_(n), loc_(n), block_(n) {
    std::iota(elems_.begin(), elems_.end(), 0);
    std::stable_sort(elems_.begin(), elems_.end(), [&](State x, State y) { return labels[x] < labels[y]; });
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || labels[elems_[i]] != labels[elems_[i - 1]]) {
        first_.push_back(i);
        if (!end_.empty()) end_.back() = i;
        end_.push_back(n);
        mid_.push_back(i);
      }
      loc_[elems_[i]] = i;
      block_[elems_[i]] = static_cast<State>(first_.size() - 1);
    }
  }

  std::size_t blocks() const noexcept { return first_.size(); }
  std::size_t size(State b) const noexcept { return end_[b] - first_[b]; }
  State block_of(State s) const noexcept { return block_[s]; }
  std::vector<State> members(State b) const {
    return {elems_.begin() + first_[b], elems_.begin() + end_[b]};
  }

  void mark(State s) {
    const State b = block_[s];
    const std::size_t i = loc_[s];
    if (i < mid_[b]) return;
    if (mid_[b] == first_[b]) touched_.push_back(b);
    const std::size_t j = mid_[b];
    std::swap(elems_[i], elems_[j]);
    loc_[elems_[i]] = i;
    loc_[elems_[j]] = j;
    ++mid_[b];
  }

  // Splits every touched block into marked / unmarked parts; calls
  // on_split(old_block, new_block) for each actual split.
  template <class OnSplit>
  void split(OnSplit on_split) {
    for (State b : touched_) {
      if (mid_[b] == end_[b]) {
        mid_[b] = first_[b];
        continue;
      }
      const State nb = static_cast<State>(first_.size());
      first_.push_back(first_[b]);
      end_.push_back(mid_[b]);
      mid_.push_back(first_[b]);
      first_[b] = mid_[b];
      for (std::size_t i = first_[nb]; i < end_[nb]; ++i) block_[elems_[i]] = nb;
      on_split(b, nb);
    }
    touched_.clear();
  }

 private:
  std::vector<State> elems_;
  std::vector<std::size_t> loc_;
  std::vector<State> block_;
  std::vector<std::size_t> first_, end_, mid_;
  std::vector<State> touched_;
};

struct Quotient {
  std::vector<State> class_of;   // indexed by original state; only reachable states meaningful
  std::vector<State> representative;  // per class, BFS order from the initial class
};

// Hopcroft partition refinement over the reachable part, with block splitters
// processed against every letter at once.
Quotient coarsest_partition(const TransitionSystem& a, const std::vector<int>& state_labels) {
  const std::vector<State> reach = reachable_states(a);
  const std::size_t n = reach.size();
  const std::size_t sigma = a.alphabet_size();
  std::vector<State> local(a.state_count(), 0);
  for (std::size_t i = 0; i < n; ++i) local[reach[i]] = static_cast<State>(i);

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = state_labels[reach[i]];

  // Inverse transitions per letter, CSR layout.
  std::vector<std::uint32_t> start(sigma * (n + 1), 0);
  std::vector<State> preds(sigma * n);
  for (Letter c = 0; c < sigma; ++c) {
    auto* st = &start[c * (n + 1)];
    for (std::size_t i = 0; i < n; ++i) ++st[local[a.next(reach[i], c)] + 1];
    for (std::size_t i = 0; i < n; ++i) st[i + 1] += st[i];
    std::vector<std::uint32_t> fill(st, st + n);
    for (std::size_t i = 0; i < n; ++i) preds[c * n + fill[local[a.next(reach[i], c)]]++] = static_cast<State>(i);
  }

  Partition p(n, labels);
  std::vector<State> work;
  std::vector<std::uint8_t> queued;
  for (State b = 0; b < p.blocks(); ++b) {
    work.push_back(b);
    queued.push_back(1);
  }
  while (!work.empty()) {
    const State splitter = work.back();
    work.pop_back();
    queued[splitter] = 0;
    const std::vector<State> members = p.members(splitter);
    for (Letter c = 0; c < sigma; ++c) {
      const auto* st = &start[c * (n + 1)];
      for (State s : members)
        for (std::uint32_t i = st[s]; i < st[s + 1]; ++i) p.mark(preds[c * n + i]);
      p.split([&](State old_block, State new_block) {
        queued.push_back(0);
        if (queued[old_block] || p.size(new_block) <= p.size(old_block)) {
          work.push_back(new_block);
          queued[new_block] = 1;
        } else {
          work.push_back(old_block);
          queued[old_block] = 1;
        }
      });
    }
  }

  // Canonical numbering: BFS over classes from the initial class.
  Quotient q;
  q.class_of.assign(a.state_count(), 0);
  std::vector<State> number(p.blocks(), static_cast<State>(-1));
  std::vector<State> order;
  auto visit = [&](State original) {
    const State b = p.block_of(local[original]);
    if (number[b] == static_cast<State>(-1)) {
      number[b] = static_cast<State>(order.size());
      order.push_back(original);
    }
  };
  visit(a.initial());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter c = 0; c < sigma; ++c) visit(a.next(order[i], c));
  for (std::size_t i = 0; i < n; ++i) q.class_of[reach[i]] = number[p.block_of(static_cast<State>(i))];
  q.representative = std::move(order);
  return q;
}

template <class Out, class In, class CopyLabel>
Out build_quotient(const In& a, const Quotient& q, CopyLabel copy_label) {
  Out out(a.system(), a.arity(), q.representative.size());
  out.set_initial(0);
  for (State cls = 0; cls < q.representative.size(); ++cls) {
    const State rep = q.representative[cls];
    copy_label(out, cls, rep);
    for (Letter c = 0; c < a.alphabet_size(); ++c) out.set_next(cls, c, q.class_of[a.next(rep, c)]);
  }
  return out;
}

}  // namespace

Dfa minimize(const Dfa& a) {
  std::vector<int> labels(a.state_count());
  for (State s = 0; s < a.state_count(); ++s) labels[s] = a.accepting(s) ? 1 : 0;
  const Quotient q = coarsest_partition(a, labels);
  return build_quotient<Dfa>(a, q, [&](Dfa& out, State cls, State rep) { out.set_accepting(cls, a.accepting(rep)); });
}

Dfao minimize(const Dfao& a) {
  std::vector<int> labels(a.state_count());
  for (State s = 0; s < a.state_count(); ++s) labels[s] = a.output(s);
  const Quotient q = coarsest_partition(a, labels);
  return build_quotient<Dfao>(a, q, [&](Dfao& out, State cls, State rep) { out.set_output(cls, a.output(rep)); });
}

}  // namespace autofrob
