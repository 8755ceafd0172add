// Copyright 2026 The Ring Grooming Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact branch and bound for A(C,N) on small rings.
//
// Arcs are assigned one at a time (longest first) to an open block or to a
// fresh block. A block holding vertex x can take at most C - load(x, x+1)
// further arcs out of x and C - load(x-1, x) further arcs into x, which gives
// a per-vertex count of blocks still to be opened at x.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grooming/bounds.hpp"
#include "grooming/constructions.hpp"
#include "grooming/ring.hpp"

namespace grooming {

enum class SolveStatus { kProvedOptimal, kBestFound, kBudgetExhausted };

inline std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kProvedOptimal: return "proved-optimal";
    case SolveStatus::kBestFound: return "best-found";
    case SolveStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "budget-exhausted";
}

struct SolverOptions {
  std::int64_t node_budget = 200'000'000;
  std::chrono::milliseconds time_budget{std::chrono::minutes(5)};
  bool optimize_orientation = false;
  // 0: none, 1: fresh blocks only after nonempty ones (always on in practice),
  // 2: also seed from the constructions and stop at the root bound.
  int symmetry_breaking = 2;
  // Only solutions strictly below this count are of interest.
  std::optional<std::int64_t> cutoff;
};

struct SolveOutcome {
  std::int64_t best_adm = 0;
  GroomingSolution solution{RingInstance(2, 1), {}, "exact-solver"};
  SolveStatus status = SolveStatus::kBudgetExhausted;
  std::int64_t nodes_explored = 0;
  std::int64_t bound_used = 0;  // root lower bound
  std::string bound_name;
  bool found = false;  // false when a cutoff excluded every solution
};

namespace detail {

class BranchAndBound {
 public:
  BranchAndBound(const RingInstance& inst, const SolverOptions& opt)
      : inst_(inst), opt_(opt), n_(inst.n()), c_(inst.c()) {
    Tournament t(inst);
    arcs_ = t.arcs();
    std::stable_sort(arcs_.begin(), arcs_.end(), [this](const Arc& a, const Arc& b) {
      int la = clockwise_length(a.tail, a.head, n_);
      int lb = clockwise_length(b.tail, b.head, n_);
      if (la != lb) return la > lb;
      return a < b;
    });
    rem_out_.assign(n_, 0);
    rem_in_.assign(n_, 0);
    for (const Arc& a : arcs_) {
      ++rem_out_[a.tail];
      ++rem_in_[a.head];
    }
    assign_.assign(arcs_.size(), -1);
  }

  SolveOutcome run() {
    start_ = std::chrono::steady_clock::now();
    SolveOutcome out;
    const BoundReport general = lb_general(c_, n_);
    const std::int64_t structural = vertex_bound();
    root_lb_ = std::max(general.ceiling, structural);
    out.bound_used = root_lb_;
    out.bound_name = general.ceiling >= structural ? general.name : "vertex-capacity";

    best_ = opt_.cutoff ? *opt_.cutoff : std::numeric_limits<std::int64_t>::max();
    seeded_ = false;
    if (!opt_.cutoff) seed_greedy();
    if (opt_.symmetry_breaking >= 2 && !opt_.cutoff) seed_constructions();
    const std::int64_t seed_value = best_;

    aborted_ = false;
    if (best_ > root_lb_) dfs(0, 0);
    out.nodes_explored = nodes_;
    out.found = !best_assign_.empty();
    out.best_adm = out.found ? best_ : 0;
    if (!aborted_)
      out.status = SolveStatus::kProvedOptimal;
    else
      out.status = best_ < seed_value ? SolveStatus::kBestFound : SolveStatus::kBudgetExhausted;
    if (out.found) out.solution = build(best_assign_);
    else out.solution = GroomingSolution{inst_, {}, "exact-solver"};
    return out;
  }

 private:
  struct OpenBlock {
    std::vector<int> load;     // per ring arc (x, x+1)
    std::vector<int> degree;   // arcs of the block at each vertex
    int arcs = 0;
  };

  bool fits(const OpenBlock& b, const Arc& a) const {
    for (Node x = a.tail; x != a.head; x = (x + 1) % n_)
      if (b.load[x] >= c_) return false;
    return true;
  }

  void add(OpenBlock& b, const Arc& a, int delta) {
    for (Node x = a.tail; x != a.head; x = (x + 1) % n_) b.load[x] += delta;
    b.degree[a.tail] += delta;
    b.degree[a.head] += delta;
    b.arcs += delta;
  }

  std::int64_t vertex_bound() const {
    std::int64_t extra = 0;
    for (Node x = 0; x < n_; ++x) {
      std::int64_t cap_out = 0;
      std::int64_t cap_in = 0;
      const Node prev = (x + n_ - 1) % n_;
      for (const OpenBlock& b : blocks_) {
        if (b.degree[x] == 0) continue;
        cap_out += c_ - b.load[x];
        cap_in += c_ - b.load[prev];
      }
      const std::int64_t need_out = std::max<std::int64_t>(0, rem_out_[x] - cap_out);
      const std::int64_t need_in = std::max<std::int64_t>(0, rem_in_[x] - cap_in);
      extra += (std::max(need_out, need_in) + c_ - 1) / c_;
    }
    return extra;
  }

  bool out_of_budget() {
    if (nodes_ >= opt_.node_budget) return true;
    if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > opt_.time_budget) return true;
    return false;
  }

  void record(std::int64_t cost) {
    best_ = cost;
    best_assign_ = assign_;
  }

  void dfs(std::size_t i, std::int64_t cost) {
    if (aborted_) return;
    ++nodes_;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    if (i == arcs_.size()) {
      if (cost < best_) record(cost);
      return;
    }
    const Arc a = arcs_[i];
    --rem_out_[a.tail];
    --rem_in_[a.head];

    struct Option {
      int block;
      int delta;
    };
    std::vector<Option> options;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!fits(blocks_[b], a)) continue;
      int delta = (blocks_[b].degree[a.tail] == 0) + (blocks_[b].degree[a.head] == 0);
      options.push_back({static_cast<int>(b), delta});
    }
    options.push_back({-1, 2});
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& x, const Option& y) { return x.delta < y.delta; });

    for (const Option& o : options) {
      if (cost + o.delta >= best_) continue;
      int b = o.block;
      if (b < 0) {
        blocks_.push_back({std::vector<int>(n_, 0), std::vector<int>(n_, 0), 0});
        b = static_cast<int>(blocks_.size()) - 1;
      }
      add(blocks_[b], a, 1);
      assign_[i] = b;
      const std::int64_t next = cost + o.delta;
      if (next + vertex_bound() < best_) dfs(i + 1, next);
      assign_[i] = -1;
      add(blocks_[b], a, -1);
      if (o.block < 0) blocks_.pop_back();
      if (aborted_ || best_ <= root_lb_) break;
    }
    ++rem_out_[a.tail];
    ++rem_in_[a.head];
  }

  GroomingSolution build(const std::vector<int>& assign) const {
    int count = 0;
    for (int b : assign) count = std::max(count, b + 1);
    std::vector<std::vector<Arc>> groups(count);
    for (std::size_t i = 0; i < arcs_.size(); ++i) groups[assign[i]].push_back(arcs_[i]);
    GroomingSolution s{inst_, {}, "exact-solver"};
    for (auto& g : groups) s.blocks.emplace_back(std::move(g));
    canonicalize(s);
    return s;
  }

  // First fit in the search order.
  void seed_greedy() {
    std::vector<OpenBlock> open;
    std::vector<int> assign(arcs_.size());
    std::int64_t cost = 0;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Arc& a = arcs_[i];
      int pick = -1;
      int pick_delta = 3;
      for (std::size_t b = 0; b < open.size(); ++b) {
        if (!fits(open[b], a)) continue;
        int delta = (open[b].degree[a.tail] == 0) + (open[b].degree[a.head] == 0);
        if (delta < pick_delta) {
          pick = static_cast<int>(b);
          pick_delta = delta;
        }
      }
      if (pick < 0 || pick_delta == 2) {
        open.push_back({std::vector<int>(n_, 0), std::vector<int>(n_, 0), 0});
        pick = static_cast<int>(open.size()) - 1;
        pick_delta = 2;
      }
      add(open[pick], a, 1);
      assign[i] = pick;
      cost += pick_delta;
    }
    if (cost < best_) {
      best_ = cost;
      best_assign_ = assign;
    }
  }

  // Upper bounds from the constructions whose orientation matches.
  void seed_constructions() {
    for (const ConstructionResult& r : all_constructions(c_, n_)) {
      if (!r.applicable || r.achieved_adm >= best_) continue;
      if (r.solution.instance.orientation() != inst_.orientation()) continue;
      std::vector<int> assign(arcs_.size(), -1);
      for (std::size_t b = 0; b < r.solution.blocks.size(); ++b)
        for (const Arc& a : r.solution.blocks[b].arcs()) {
          auto it = std::find(arcs_.begin(), arcs_.end(), a);
          if (it == arcs_.end()) throw std::logic_error("construction arc outside the tournament");
          assign[it - arcs_.begin()] = static_cast<int>(b);
        }
      best_ = r.achieved_adm;
      best_assign_ = assign;
    }
  }

  RingInstance inst_;
  SolverOptions opt_;
  int n_;
  int c_;
  std::vector<Arc> arcs_;
  std::vector<int> rem_out_;
  std::vector<int> rem_in_;
  std::vector<OpenBlock> blocks_;
  std::vector<int> assign_;
  std::vector<int> best_assign_;
  std::int64_t best_ = 0;
  std::int64_t root_lb_ = 0;
  std::int64_t nodes_ = 0;
  bool seeded_ = false;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline SolveOutcome solve_exact(const RingInstance& instance, const SolverOptions& options = {});

// Orientation vectors of the diameters under rotation and mirroring of the
// ring; only one representative of each orbit is solved.
namespace detail {

inline std::vector<bool> map_orientation(const std::vector<bool>& fwd, int n, bool mirror, int shift) {
  const int h = n / 2;
  std::vector<bool> out(h);
  for (int i = 0; i < h; ++i) {
    Arc a = fwd[i] ? Arc{i, i + h} : Arc{i + h, i};
    if (mirror) a = mirror_arc(a, n);
    a = {(a.tail + shift) % n, (a.head + shift) % n};
    const int low = std::min(a.tail, a.head);
    out[low] = a.tail == low;
  }
  return out;
}

inline bool canonical_orientation(const std::vector<bool>& fwd, int n) {
  // std::vector<bool> compares lexicographically with false < true; the
  // representative is the largest vector so all-forward leads.
  for (int m = 0; m < 2; ++m)
    for (int s = 0; s < n; ++s)
      if (map_orientation(fwd, n, m == 1, s) > fwd) return false;
  return true;
}

}  // namespace detail

inline SolveOutcome solve_over_orientations(const RingInstance& instance, const SolverOptions& options = {}) {
  if (!instance.even()) throw std::invalid_argument("orientation search needs even N");
  const int n = instance.n();
  const int h = n / 2;
  if (h > 20) throw std::invalid_argument("too many orientation vectors");
  SolveOutcome best;
  bool have = false;
  bool complete = true;
  std::int64_t nodes = 0;
  const auto start = std::chrono::steady_clock::now();
  // Visit the all-forward vector first.
  for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
    std::vector<bool> fwd(h);
    for (int i = 0; i < h; ++i) fwd[i] = !((mask >> i) & 1u);
    if (!detail::canonical_orientation(fwd, n)) continue;
    SolverOptions opt = options;
    opt.node_budget = std::max<std::int64_t>(1, options.node_budget - nodes);
    auto used = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    opt.time_budget = std::max(std::chrono::milliseconds(1), options.time_budget - used);
    if (have) opt.cutoff = best.best_adm;
    SolveOutcome r = solve_exact(RingInstance::explicit_orientation(n, instance.c(), fwd), opt);
    nodes += r.nodes_explored;
    if (r.status != SolveStatus::kProvedOptimal) complete = false;
    if (r.found && (!have || r.best_adm < best.best_adm)) {
      best = r;
      have = true;
    }
  }
  best.nodes_explored = nodes;
  best.status = complete ? SolveStatus::kProvedOptimal : SolveStatus::kBestFound;
  return best;
}

inline SolveOutcome solve_exact(const RingInstance& instance, const SolverOptions& options) {
  if (options.node_budget <= 0 || options.time_budget.count() <= 0)
    throw std::invalid_argument("solver budgets must be positive");
  if (options.optimize_orientation) {
    if (!instance.even()) throw std::invalid_argument("optimize_orientation needs even N");
    SolverOptions inner = options;
    inner.optimize_orientation = false;
    return solve_over_orientations(instance, inner);
  }
  return detail::BranchAndBound(instance, options).run();
}

}  // namespace grooming
