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

// Gadget digraphs: small arc templates over formal slots that become blocks
// once the slots are bound to ring nodes.
//
// Most templates list unordered slot pairs and take each orientation from the
// tournament of the target instance. path8 fixes its arcs explicitly.

#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grooming/ring.hpp"

namespace grooming {

struct Gadget {
  std::string name;
  std::vector<std::string> slots;
  std::vector<std::pair<int, int>> pairs;  // oriented by the tournament
  std::vector<std::pair<int, int>> arcs;   // fixed tail -> head
  // Slots must be bound to nodes in cyclically increasing ring order.
  bool ordered = true;
  int grooming_factor = 0;  // smallest C the gadget is declared for
};

namespace detail {

inline std::vector<std::pair<int, int>> all_pairs(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out.emplace_back(i, j);
  return out;
}

// Slots xA for x < m then xB; pairs joining different points.
inline std::vector<std::pair<int, int>> doubled_cross_pairs(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 2 * m; ++i)
    for (int j = i + 1; j < 2 * m; ++j)
      if (i % m != j % m) out.emplace_back(i, j);
  return out;
}

inline std::vector<std::string> doubled_slots(const std::vector<std::string>& points) {
  std::vector<std::string> out;
  for (const auto& p : points) out.push_back(p + "A");
  for (const auto& p : points) out.push_back(p + "B");
  return out;
}

inline std::map<std::string, Gadget> make_gadget_table() {
  std::map<std::string, Gadget> t;
  t["arc"] = {"arc", {"u", "v"}, {{0, 1}}, {}, true, 1};
  t["T3"] = {"T3", {"u", "v", "w"}, all_pairs(3), {}, true, 1};
  t["T4"] = {"T4", {"a", "b", "c", "d"}, all_pairs(4), {}, true, 3};
  t["T5-infty"] = {"T5-infty", {"inf", "iA", "jA", "iB", "jB"}, all_pairs(5), {}, true, 3};
  t["K222"] = {"K222", doubled_slots({"i", "j", "k"}), doubled_cross_pairs(3), {}, true, 3};

  // (i; inf, j, k): inf-i doubled, i doubled, i joined to j and k.
  Gadget sb{"star-b", {"inf", "iA", "jA", "kA", "iB", "jB", "kB"}, {{0, 1}, {0, 4}, {1, 4}}, {}, true, 3};
  for (int c : {1, 4})
    for (int leaf : {2, 3, 5, 6}) sb.pairs.emplace_back(std::min(c, leaf), std::max(c, leaf));
  t[sb.name] = sb;

  // (i; j, k, l) with i < j < k < l.
  Gadget sc{"star-c", doubled_slots({"i", "j", "k", "l"}), {}, {}, true, 3};
  for (int c : {0, 4})
    for (int leaf : {1, 2, 3, 5, 6, 7}) sc.pairs.emplace_back(std::min(c, leaf), std::max(c, leaf));
  t[sc.name] = sc;

  // C4 (inf, i, j, k); the pair jA-kA, jA-kB, kA-kB is left for a T3.
  Gadget c4{"c4-gadget",
            {"inf", "iA", "jA", "kA", "iB", "jB", "kB"},
            {{0, 1}, {0, 4}, {1, 4}, {1, 2}, {1, 5}, {2, 4}, {4, 5}, {3, 5}, {5, 6}, {0, 3}, {0, 6}},
            {},
            true,
            3};
  t[c4.name] = c4;

  // P4 [1,2,3,4] doubled.
  t["path8"] = {"path8",
                doubled_slots({"1", "2", "3", "4"}),
                {},
                {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {1, 4}, {5, 0}, {2, 5}, {6, 1}, {3, 6}, {7, 2}},
                true,
                3};

  // Three triangles {x1,x2,x3}, {x3,x4,x5}, {x5,x6,x1}.
  t["G6"] = {"G6",
             {"x1", "x2", "x3", "x4", "x5", "x6"},
             {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {0, 4}, {0, 5}},
             {},
             false,
             2};
  // Two triangles {x1,x2,x5}, {x1,x3,x4}.
  t["G5"] = {"G5",
             {"x1", "x2", "x3", "x4", "x5"},
             {{0, 1}, {0, 4}, {1, 4}, {0, 2}, {0, 3}, {2, 3}},
             {},
             false,
             2};
  // 7 vertices, 13 arcs, load 3.
  t["G7"] = {"G7",
             {"x0", "x1", "x2", "x3", "x4", "x5", "x6"},
             {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {0, 4}, {5, 6}, {0, 5}, {0, 6}},
             {},
             true,
             3};
  return t;
}

}  // namespace detail

inline const std::map<std::string, Gadget>& gadget_table() {
  static const std::map<std::string, Gadget> table = detail::make_gadget_table();
  return table;
}

// Doubled K_{m,m}-style gadget on slots 1A..mA, 1B..mB with every pair joining
// different points; admissible for C = m(m-1)/2.
inline Gadget t2x_gadget(int m) {
  if (m < 1) throw std::invalid_argument("T2x(m) needs m >= 1");
  std::vector<std::string> pts;
  for (int i = 1; i <= m; ++i) pts.push_back(std::to_string(i));
  return {"T2x" + std::to_string(m), detail::doubled_slots(pts), detail::doubled_cross_pairs(m), {}, true,
          m * (m - 1) / 2};
}

inline const Gadget& find_gadget(const std::string& name) {
  static std::map<std::string, Gadget> extra;
  const auto& table = gadget_table();
  auto it = table.find(name);
  if (it != table.end()) return it->second;
  if (name.rfind("T2x", 0) == 0) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto jt = extra.find(name);
    if (jt != extra.end()) return jt->second;
    int m = 0;
    try {
      m = std::stoi(name.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown gadget '" + name + "'");
    }
    return extra.emplace(name, t2x_gadget(m)).first->second;
  }
  throw std::invalid_argument("unknown gadget '" + name + "'");
}

inline bool cyclically_increasing(const std::vector<Node>& labels) {
  int descents = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Node a = labels[i];
    Node b = labels[(i + 1) % labels.size()];
    if (a == b) return false;
    if (b < a) ++descents;
  }
  return descents <= 1;
}

class GadgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Binds slots to ring nodes and checks the result against the instance.
inline Block instantiate_gadget(const Gadget& g, const std::vector<Node>& labels,
                                const RingInstance& instance) {
  if (labels.size() != g.slots.size())
    throw GadgetError(g.name + " takes " + std::to_string(g.slots.size()) + " labels, got " +
                      std::to_string(labels.size()));
  for (Node x : labels)
    if (x < 0 || x >= instance.n()) throw GadgetError(g.name + ": label outside the ring");
  {
    std::vector<Node> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GadgetError(g.name + ": repeated label");
  }
  if (g.ordered && !cyclically_increasing(labels))
    throw GadgetError(g.name + ": labels violate the slot order");
  std::vector<Arc> arcs;
  for (auto [a, b] : g.pairs) arcs.push_back(instance.oriented(labels[a], labels[b]));
  for (auto [a, b] : g.arcs) arcs.push_back({labels[a], labels[b]});
  Block block(std::move(arcs));
  Verdict v = validate_block(block, instance);
  if (!v) throw GadgetError(g.name + ": " + v.issues.front().message);
  return block;
}

inline Block instantiate_gadget(const std::string& name, const std::vector<Node>& labels,
                                const RingInstance& instance) {
  return instantiate_gadget(find_gadget(name), labels, instance);
}

}  // namespace grooming
