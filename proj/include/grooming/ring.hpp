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

// Ring instances, shortest-path tournaments, blocks and the load constraint.
//
// The bidirectional ring with symmetric shortest-path routing splits into two
// mirror-image unidirectional problems. Everything here works on the
// clockwise half: requests are the arcs of the tournament T_N, each routed
// clockwise along the ring, and a block (one wavelength) is admissible when
// no ring arc carries more than C of its requests.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grooming {

using Node = int;

struct Arc {
  Node tail = 0;
  Node head = 0;

  auto operator<=>(const Arc&) const = default;
};

inline std::string to_string(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

// Number of ring arcs a request from `tail` to `head` traverses clockwise.
inline int clockwise_length(Node tail, Node head, int n) {
  return ((head - tail) % n + n) % n;
}

enum class HalfArcRule { kAllForward, kExplicit };

inline std::string to_string(HalfArcRule rule) {
  return rule == HalfArcRule::kAllForward ? "all-forward" : "explicit";
}

inline HalfArcRule parse_half_arc_rule(const std::string& s) {
  if (s == "all-forward") return HalfArcRule::kAllForward;
  if (s == "explicit") return HalfArcRule::kExplicit;
  throw std::invalid_argument("unknown half_arc_rule '" + s + "'");
}

// N ring nodes, grooming factor C, and for even N the orientation of the N/2
// diameter requests {i, i+N/2}. forward[i] selects (i, i+N/2) over
// (i+N/2, i).
class RingInstance {
 public:
  RingInstance(int n_nodes, int grooming_factor,
               HalfArcRule rule = HalfArcRule::kAllForward,
               std::vector<bool> forward = {})
      : n_(n_nodes), c_(grooming_factor), rule_(rule) {
    if (n_ < 2) throw std::invalid_argument("ring needs N >= 2 nodes");
    if (c_ < 1) throw std::invalid_argument("grooming factor must be >= 1");
    if (n_ % 2 == 1) {
      rule_ = HalfArcRule::kAllForward;
      return;
    }
    if (rule_ == HalfArcRule::kAllForward) {
      if (!forward.empty() &&
          std::find(forward.begin(), forward.end(), false) != forward.end())
        throw std::invalid_argument("all-forward rule with backward choices");
      forward_.assign(n_ / 2, true);
    } else {
      if (static_cast<int>(forward.size()) != n_ / 2)
        throw std::invalid_argument("explicit rule needs N/2 orientation choices, got " +
                                    std::to_string(forward.size()));
      forward_ = std::move(forward);
    }
  }

  static RingInstance explicit_orientation(int n, int c, std::vector<bool> forward) {
    return RingInstance(n, c, HalfArcRule::kExplicit, std::move(forward));
  }

  int n() const { return n_; }
  int c() const { return c_; }
  HalfArcRule rule() const { return rule_; }
  bool even() const { return n_ % 2 == 0; }

  // Empty for odd N.
  const std::vector<bool>& orientation() const { return forward_; }

  bool diameter_forward(int i) const { return forward_.at(i); }

  RingInstance with_grooming_factor(int c) const {
    RingInstance copy = *this;
    if (c < 1) throw std::invalid_argument("grooming factor must be >= 1");
    copy.c_ = c;
    return copy;
  }

  // The arc of T_N joining u and v (u != v).
  Arc oriented(Node u, Node v) const {
    int d = clockwise_length(u, v, n_);
    if (2 * d < n_) return {u, v};
    if (2 * d > n_) return {v, u};
    Node low = std::min(u, v);
    Node high = std::max(u, v);
    return forward_[low] ? Arc{low, high} : Arc{high, low};
  }

  bool operator==(const RingInstance& o) const {
    return n_ == o.n_ && c_ == o.c_ && forward_ == o.forward_;
  }

 private:
  int n_;
  int c_;
  HalfArcRule rule_;
  std::vector<bool> forward_;
};

class Tournament {
 public:
  explicit Tournament(const RingInstance& instance)
      : n_(instance.n()), present_(static_cast<std::size_t>(n_) * n_, 0) {
    arcs_.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (Node u = 0; u < n_; ++u)
      for (Node v = u + 1; v < n_; ++v) {
        Arc a = instance.oriented(u, v);
        present_[index(a)] = 1;
        arcs_.push_back(a);
      }
    std::sort(arcs_.begin(), arcs_.end());
  }

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }

  bool contains(const Arc& a) const {
    if (a.tail < 0 || a.head < 0 || a.tail >= n_ || a.head >= n_) return false;
    return present_[index(a)] != 0;
  }

 private:
  std::size_t index(const Arc& a) const {
    return static_cast<std::size_t>(a.tail) * n_ + a.head;
  }

  int n_;
  std::vector<std::uint8_t> present_;
  std::vector<Arc> arcs_;
};

inline Tournament build_tournament(const RingInstance& instance) { return Tournament(instance); }

// A set of requests sharing one wavelength. Vertices are exactly the arc
// endpoints; each vertex costs one ADM.
class Block {
 public:
  Block() = default;

  explicit Block(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
      throw std::invalid_argument("block lists an arc twice");
    for (const Arc& a : arcs_) {
      if (a.tail == a.head) throw std::invalid_argument("block arc is a loop " + to_string(a));
      vertices_.push_back(a.tail);
      vertices_.push_back(a.head);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }

  const std::vector<Node>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }
  std::size_t adm() const { return vertices_.size(); }

  bool operator==(const Block&) const = default;

 private:
  std::vector<Node> vertices_;
  std::vector<Arc> arcs_;
};

// Entry e is the load on ring arc (e, e+1 mod N).
struct LoadProfile {
  std::vector<int> per_arc;

  int max() const { return per_arc.empty() ? 0 : *std::max_element(per_arc.begin(), per_arc.end()); }
  long total() const {
    long s = 0;
    for (int x : per_arc) s += x;
    return s;
  }
};

inline LoadProfile block_load(const Block& block, int n) {
  LoadProfile profile{std::vector<int>(n, 0)};
  for (const Arc& a : block.arcs()) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw std::out_of_range("arc " + to_string(a) + " has an endpoint outside 0.." +
                              std::to_string(n - 1));
    for (Node x = a.tail; x != a.head; x = (x + 1) % n) ++profile.per_arc[x];
  }
  return profile;
}

enum class Violation {
  kBadEndpoint,
  kForeignArc,
  kOverload,
  kDuplicateArc,
  kUncoveredArc,
  kAdmMismatch,
};

inline std::string to_string(Violation v) {
  switch (v) {
    case Violation::kBadEndpoint: return "bad-endpoint";
    case Violation::kForeignArc: return "foreign-arc";
    case Violation::kOverload: return "overload";
    case Violation::kDuplicateArc: return "duplicate-arc";
    case Violation::kUncoveredArc: return "uncovered-arc";
    case Violation::kAdmMismatch: return "adm-mismatch";
  }
  return "unknown";
}

struct Issue {
  Violation kind;
  std::optional<Arc> arc;
  int ring_arc = -1;  // for kOverload
  int load = 0;       // for kOverload
  int block = -1;     // index in the solution, -1 for a lone block
  std::string message;
};

struct Verdict {
  std::vector<Issue> issues;

  bool accepted() const { return issues.empty(); }
  explicit operator bool() const { return accepted(); }

  std::string summary() const {
    if (issues.empty()) return "ACCEPT";
    std::ostringstream os;
    os << "REJECT";
    for (const Issue& i : issues) os << "\n  " << i.message;
    return os.str();
  }
};

namespace detail {

inline std::optional<Issue> first_block_violation(const Block& block, const RingInstance& instance,
                                                  const Tournament& tournament, int index) {
  const int n = instance.n();
  for (const Arc& a : block.arcs()) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      return Issue{Violation::kBadEndpoint, a, -1, 0, index,
                   "arc " + to_string(a) + " has an endpoint outside the ring"};
    if (!tournament.contains(a))
      return Issue{Violation::kForeignArc, a, -1, 0, index,
                   "arc " + to_string(a) + " is not a request of T_" + std::to_string(n)};
  }
  LoadProfile load = block_load(block, n);
  for (int e = 0; e < n; ++e)
    if (load.per_arc[e] > instance.c())
      return Issue{Violation::kOverload, std::nullopt, e, load.per_arc[e], index,
                   "ring arc (" + std::to_string(e) + "," + std::to_string((e + 1) % n) +
                       ") carries " + std::to_string(load.per_arc[e]) + " > C=" +
                       std::to_string(instance.c())};
  return std::nullopt;
}

}  // namespace detail

inline Verdict validate_block(const Block& block, const RingInstance& instance) {
  Verdict v;
  if (auto issue = detail::first_block_violation(block, instance, build_tournament(instance), -1))
    v.issues.push_back(*issue);
  return v;
}

struct GroomingSolution {
  RingInstance instance;
  std::vector<Block> blocks;
  std::string provenance;

  std::size_t wavelengths() const { return blocks.size(); }
};

inline long adm_count(const GroomingSolution& solution) {
  long total = 0;
  for (const Block& b : solution.blocks) total += static_cast<long>(b.adm());
  return total;
}

// Blocks sorted by (min vertex, size, arcs); empty blocks dropped.
inline void canonicalize(GroomingSolution& solution) {
  auto& blocks = solution.blocks;
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.empty(); }),
               blocks.end());
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    auto key = [](const Block& x) { return std::make_pair(x.vertices().front(), x.adm()); };
    if (key(a) != key(b)) return key(a) < key(b);
    return a.arcs() < b.arcs();
  });
}

inline Verdict validate_solution(const GroomingSolution& solution) {
  Verdict verdict;
  const RingInstance& instance = solution.instance;
  const int n = instance.n();
  Tournament tournament = build_tournament(instance);
  std::vector<int> owner(static_cast<std::size_t>(n) * n, -1);

  for (std::size_t bi = 0; bi < solution.blocks.size(); ++bi) {
    const Block& block = solution.blocks[bi];
    const int index = static_cast<int>(bi);
    if (auto issue = detail::first_block_violation(block, instance, tournament, index)) {
      issue->message = "block " + std::to_string(bi) + ": " + issue->message;
      verdict.issues.push_back(*issue);
    }
    for (const Arc& a : block.arcs()) {
      if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) continue;
      int& slot = owner[static_cast<std::size_t>(a.tail) * n + a.head];
      if (slot >= 0) {
        verdict.issues.push_back({Violation::kDuplicateArc, a, -1, 0, index,
                                  "arc " + to_string(a) + " is covered by blocks " +
                                      std::to_string(slot) + " and " + std::to_string(bi)});
      } else {
        slot = index;
      }
    }
  }
  for (const Arc& a : tournament.arcs())
    if (owner[static_cast<std::size_t>(a.tail) * n + a.head] < 0)
      verdict.issues.push_back(
          {Violation::kUncoveredArc, a, -1, 0, -1, "arc " + to_string(a) + " is not covered"});
  return verdict;
}

// The instance whose clockwise tournament is the mirror of `instance`'s
// counterclockwise requests, under the relabeling x -> -x mod N.
inline Node mirror_node(Node x, int n) { return (n - x) % n; }

inline Arc mirror_arc(const Arc& a, int n) { return {mirror_node(a.head, n), mirror_node(a.tail, n)}; }

inline RingInstance reversed_instance(const RingInstance& instance) {
  const int n = instance.n();
  if (!instance.even()) return instance;
  std::vector<bool> forward(n / 2, true);
  for (int i = 0; i < n / 2; ++i) {
    Arc m = mirror_arc(instance.oriented(i, i + n / 2), n);
    int low = std::min(m.tail, m.head);
    forward[low] = (m.tail == low);
  }
  return RingInstance::explicit_orientation(n, instance.c(), std::move(forward));
}

struct BidirectionalSolution {
  GroomingSolution clockwise;
  // Counterclockwise requests, relabeled by mirror_node so they route clockwise.
  GroomingSolution counterclockwise;

  long total_adm() const { return adm_count(clockwise) + adm_count(counterclockwise); }
};

inline BidirectionalSolution double_solution(const GroomingSolution& solution) {
  Verdict v = validate_solution(solution);
  if (!v) throw std::invalid_argument("cannot double an invalid solution: " + v.summary());
  const int n = solution.instance.n();
  GroomingSolution mirror{reversed_instance(solution.instance), {}, solution.provenance + "+mirror"};
  for (const Block& b : solution.blocks) {
    std::vector<Arc> arcs;
    arcs.reserve(b.arcs().size());
    for (const Arc& a : b.arcs()) arcs.push_back(mirror_arc(a, n));
    mirror.blocks.emplace_back(std::move(arcs));
  }
  canonicalize(mirror);
  return {solution, std::move(mirror)};
}

// Derives an instance whose diameter orientation is the one the blocks use.
// Diameter pairs absent from every block default to forward.
inline RingInstance instance_from_blocks(int n, int c, const std::vector<Block>& blocks,
                                         bool force_explicit = false) {
  if (n % 2 == 1) return RingInstance(n, c);
  std::vector<bool> forward(n / 2, true);
  for (const Block& b : blocks)
    for (const Arc& a : b.arcs())
      if (a.tail >= 0 && a.head >= 0 && a.tail < n && a.head < n &&
          2 * clockwise_length(a.tail, a.head, n) == n) {
        Node low = std::min(a.tail, a.head);
        forward[low] = (a.tail == low);
      }
  bool all = std::find(forward.begin(), forward.end(), false) == forward.end();
  if (all && !force_explicit) return RingInstance(n, c);
  return RingInstance::explicit_orientation(n, c, std::move(forward));
}

// Maps local node x to labels[x].
inline Block relabel(const Block& block, const std::vector<Node>& labels) {
  std::vector<Arc> arcs;
  arcs.reserve(block.arcs().size());
  for (const Arc& a : block.arcs()) arcs.push_back({labels.at(a.tail), labels.at(a.head)});
  return Block(std::move(arcs));
}

inline std::vector<Block> relabel(const std::vector<Block>& blocks, const std::vector<Node>& labels) {
  std::vector<Block> out;
  out.reserve(blocks.size());
  for (const Block& b : blocks) out.push_back(relabel(b, labels));
  return out;
}

// Drops the given nodes with their arcs and renumbers the survivors by rank.
// The result is re-derived from its blocks; callers re-validate.
inline GroomingSolution delete_vertices(const GroomingSolution& solution,
                                        const std::vector<Node>& removed,
                                        const std::string& provenance) {
  const int n = solution.instance.n();
  std::vector<Node> rank(n, -1);
  std::vector<bool> gone(n, false);
  for (Node x : removed) gone.at(x) = true;
  int next = 0;
  for (Node x = 0; x < n; ++x)
    if (!gone[x]) rank[x] = next++;
  if (next < 2) throw std::invalid_argument("deletion leaves fewer than 2 nodes");
  std::vector<Block> blocks;
  for (const Block& b : solution.blocks) {
    std::vector<Arc> arcs;
    for (const Arc& a : b.arcs())
      if (!gone[a.tail] && !gone[a.head]) arcs.push_back({rank[a.tail], rank[a.head]});
    if (!arcs.empty()) blocks.emplace_back(std::move(arcs));
  }
  GroomingSolution out{instance_from_blocks(next, solution.instance.c(), blocks), std::move(blocks),
                       provenance};
  canonicalize(out);
  return out;
}

}  // namespace grooming
