// Copyright 2026 The quatsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quatsim/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace quatsim {

namespace {

// Successor lists and in-degrees of the wire-overlap partial order, by gate
// position. For each wire, consecutive gates touching it are chained; that
// already generates the full order because precedence is transitive.
struct PrecedenceGraph {
    std::vector<std::vector<std::size_t>> succ;
    std::vector<int> indegree;
};

PrecedenceGraph build_graph(const CircuitShape &shape) {
    std::size_t count = shape.ids.size();
    PrecedenceGraph g;
    g.succ.resize(count);
    g.indegree.assign(count, 0);
    std::map<int, std::size_t> last_on_wire;
    std::vector<std::set<std::size_t>> seen(count);
    for (std::size_t pos = 0; pos < count; pos++) {
        for (int w : shape.wires[pos]) {
            auto it = last_on_wire.find(w);
            if (it != last_on_wire.end()) {
                std::size_t pred = it->second;
                if (seen[pred].insert(pos).second) {
                    g.succ[pred].push_back(pos);
                    g.indegree[pos]++;
                }
            }
            last_on_wire[w] = pos;
        }
    }
    return g;
}

void enumerate_rec(
    const CircuitShape &shape,
    const PrecedenceGraph &g,
    std::set<std::size_t> &available,
    std::vector<int> &indegree,
    std::vector<int> &prefix,
    std::vector<std::vector<int>> &out,
    std::size_t cap) {
    if (available.empty()) {
        if (prefix.size() == shape.ids.size()) {
            if (out.size() >= cap) {
                throw CapError("topological sort enumeration exceeds cap");
            }
            out.push_back(prefix);
        }
        return;
    }
    // Iterate over a snapshot; the set mutates during recursion.
    std::vector<std::size_t> snapshot(available.begin(), available.end());
    for (std::size_t pos : snapshot) {
        available.erase(pos);
        prefix.push_back(shape.ids[pos]);
        std::vector<std::size_t> opened;
        for (std::size_t nxt : g.succ[pos]) {
            if (--indegree[nxt] == 0) {
                available.insert(nxt);
                opened.push_back(nxt);
            }
        }
        enumerate_rec(shape, g, available, indegree, prefix, out, cap);
        for (std::size_t nxt : opened) {
            available.erase(nxt);
        }
        for (std::size_t nxt : g.succ[pos]) {
            indegree[nxt]++;
        }
        prefix.pop_back();
        available.insert(pos);
    }
}

// Positions currently available, kept sorted by gate id so that choice
// strategies are deterministic.
std::vector<std::size_t> initially_available(const CircuitShape &shape, const PrecedenceGraph &g) {
    std::vector<std::size_t> avail;
    for (std::size_t pos = 0; pos < shape.ids.size(); pos++) {
        if (g.indegree[pos] == 0) {
            avail.push_back(pos);
        }
    }
    std::sort(avail.begin(), avail.end(), [&](std::size_t a, std::size_t b) {
        return shape.ids[a] < shape.ids[b];
    });
    return avail;
}

}  // namespace

std::vector<int> default_topological_sort(const CircuitShape &shape) {
    PrecedenceGraph g = build_graph(shape);
    std::vector<int> indegree = g.indegree;
    auto by_id = [&](std::size_t a, std::size_t b) {
        return shape.ids[a] < shape.ids[b];
    };
    std::vector<std::size_t> avail = initially_available(shape, g);
    std::vector<int> order;
    order.reserve(shape.ids.size());
    while (!avail.empty()) {
        std::size_t pos = avail.front();
        avail.erase(avail.begin());
        order.push_back(shape.ids[pos]);
        for (std::size_t nxt : g.succ[pos]) {
            if (--indegree[nxt] == 0) {
                avail.insert(std::lower_bound(avail.begin(), avail.end(), nxt, by_id), nxt);
            }
        }
    }
    return order;
}

std::vector<std::vector<int>> enumerate_topological_sorts(const CircuitShape &shape, std::size_t cap) {
    PrecedenceGraph g = build_graph(shape);
    std::vector<int> indegree = g.indegree;
    std::set<std::size_t> available;
    for (std::size_t pos = 0; pos < shape.ids.size(); pos++) {
        if (indegree[pos] == 0) {
            available.insert(pos);
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    if (shape.ids.empty()) {
        out.push_back({});
        return out;
    }
    enumerate_rec(shape, g, available, indegree, prefix, out, cap);
    // Positions ascend with insertion order but ids may not; present sorts
    // in lexicographic id order.
    std::sort(out.begin(), out.end());
    return out;
}

void validate_topological_sort(const CircuitShape &shape, std::span<const int> sigma) {
    if (sigma.size() != shape.ids.size()) {
        throw SigmaError("sigma length does not match gate count");
    }
    std::map<int, std::size_t> pos_of_id;
    for (std::size_t pos = 0; pos < shape.ids.size(); pos++) {
        pos_of_id[shape.ids[pos]] = pos;
    }
    std::vector<bool> used(shape.ids.size(), false);
    std::vector<std::size_t> position_in_sigma(shape.ids.size(), 0);
    for (std::size_t s = 0; s < sigma.size(); s++) {
        auto it = pos_of_id.find(sigma[s]);
        if (it == pos_of_id.end()) {
            throw SigmaError("sigma references unknown gate id " + std::to_string(sigma[s]));
        }
        if (used[it->second]) {
            throw SigmaError("sigma repeats gate id " + std::to_string(sigma[s]));
        }
        used[it->second] = true;
        position_in_sigma[it->second] = s;
    }
    PrecedenceGraph g = build_graph(shape);
    for (std::size_t pos = 0; pos < shape.ids.size(); pos++) {
        for (std::size_t nxt : g.succ[pos]) {
            if (position_in_sigma[pos] >= position_in_sigma[nxt]) {
                throw SigmaError(
                    "sigma places gate " + std::to_string(shape.ids[nxt]) + " before gate " +
                    std::to_string(shape.ids[pos]) + " which precedes it");
            }
        }
    }
}

std::vector<int> random_topological_sort(const CircuitShape &shape, Rng &rng) {
    PrecedenceGraph g = build_graph(shape);
    std::vector<int> indegree = g.indegree;
    auto by_id = [&](std::size_t a, std::size_t b) {
        return shape.ids[a] < shape.ids[b];
    };
    std::vector<std::size_t> avail = initially_available(shape, g);
    std::vector<int> order;
    order.reserve(shape.ids.size());
    while (!avail.empty()) {
        std::size_t pick = rng.below(avail.size());
        std::size_t pos = avail[pick];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
        order.push_back(shape.ids[pos]);
        for (std::size_t nxt : g.succ[pos]) {
            if (--indegree[nxt] == 0) {
                avail.insert(std::lower_bound(avail.begin(), avail.end(), nxt, by_id), nxt);
            }
        }
    }
    return order;
}

}  // namespace quatsim
