// Copyright 2026 The tlsynth Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Palindrome trie: orders palindromic subcircuits so that neighbouring
 * prefixes cancel as much as possible.
 *
 * Each subcircuit alpha A alpha^R is entered as the path alpha followed by
 * a leaf for its middle gate A. Concatenating subcircuits so that the
 * leaves of every subtrie stay contiguous (any depth-first leaf order does
 * this) maximizes the total number of cancelling gates, and the cancelled
 * circuit then has leaves + 2 * interior gates.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "synth.hpp"

namespace tlsynth {

/**
 * Trie over sequences of self-inverting gate symbols with one leaf per
 * middle gate. Children keep insertion order, so dfs_order() is
 * deterministic. LeafId must be totally ordered.
 */
template <typename Symbol, typename LeafId> class PalindromeTrie {
  public:
    struct Node {
        std::optional<Symbol> symbol; // empty for root and leaves
        std::optional<LeafId> leaf;   // set for leaves only
        std::vector<std::size_t> children;
    };

    PalindromeTrie() : nodes_(1) {}

    /// Adds the path `prefix` followed by a leaf `id`.
    void enter(std::span<const Symbol> prefix, const LeafId &id) {
        if (leaf_index_.count(id) != 0) {
            throw std::invalid_argument(
                "PalindromeTrie: middle gate entered twice");
        }
        std::size_t at = 0;
        for (const auto &sym : prefix) {
            std::size_t next = npos;
            for (auto child : nodes_[at].children) {
                if (nodes_[child].symbol && *nodes_[child].symbol == sym) {
                    next = child;
                    break;
                }
            }
            if (next == npos) {
                next = nodes_.size();
                nodes_.push_back({sym, std::nullopt, {}});
                nodes_[at].children.push_back(next);
            }
            at = next;
        }
        const std::size_t leaf = nodes_.size();
        nodes_.push_back({std::nullopt, id, {}});
        nodes_[at].children.push_back(leaf);
        leaf_index_.emplace(id, leaf);
    }

    [[nodiscard]] std::size_t leaf_count() const { return leaf_index_.size(); }

    /// Non-root, non-leaf nodes.
    [[nodiscard]] std::size_t interior_count() const {
        return nodes_.size() - 1 - leaf_count();
    }

    /// Gates left after cancelling a maximal overlap concatenation.
    [[nodiscard]] std::size_t gate_count() const {
        return leaf_count() + 2 * interior_count();
    }

    [[nodiscard]] const std::vector<Node> &nodes() const { return nodes_; }

    /// Leaf ids in depth-first order.
    [[nodiscard]] std::vector<LeafId> dfs_order() const {
        std::vector<LeafId> out;
        out.reserve(leaf_count());
        std::vector<std::size_t> stack{0};
        while (!stack.empty()) {
            const std::size_t at = stack.back();
            stack.pop_back();
            if (nodes_[at].leaf) {
                out.push_back(*nodes_[at].leaf);
            }
            const auto &kids = nodes_[at].children;
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
                stack.push_back(*it);
            }
        }
        return out;
    }

    /**
     * True iff `seq` is a maximal overlap sequence: the leaves below every
     * node are contiguous in it. Throws if seq is not a permutation of the
     * leaves.
     */
    [[nodiscard]] bool mos_check(std::span<const LeafId> seq) const {
        if (seq.size() != leaf_count()) {
            throw std::invalid_argument(
                "mos_check: sequence length differs from leaf count");
        }
        std::vector<std::size_t> pos(nodes_.size(), npos);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const auto found = leaf_index_.find(seq[i]);
            if (found == leaf_index_.end() || pos[found->second] != npos) {
                throw std::invalid_argument(
                    "mos_check: sequence is not a permutation of the leaves");
            }
            pos[found->second] = i;
        }
        struct Span {
            std::size_t lo, hi, count;
        };
        std::vector<Span> span(nodes_.size());
        // children always have larger indices than their parent
        for (std::size_t at = nodes_.size(); at-- > 0;) {
            if (nodes_[at].leaf) {
                span[at] = {pos[at], pos[at], 1};
                continue;
            }
            Span s{npos, 0, 0};
            for (auto child : nodes_[at].children) {
                s.lo = std::min(s.lo, span[child].lo);
                s.hi = std::max(s.hi, span[child].hi);
                s.count += span[child].count;
            }
            if (s.count != 0 && s.hi - s.lo + 1 != s.count) {
                return false;
            }
            span[at] = s;
        }
        return true;
    }

    /// Indented dump, two spaces per depth; leaves get a `[leaf <id>]`
    /// suffix after their middle-gate label.
    void dump(std::ostream &os,
              const std::function<std::string(const Symbol &)> &symbol_label,
              const std::function<std::string(const LeafId &)> &leaf_label,
              const std::function<std::string(const LeafId &)> &leaf_id)
        const {
        dump_node(os, 0, 0, symbol_label, leaf_label, leaf_id);
    }

  private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    void dump_node(std::ostream &os, std::size_t at, std::size_t depth,
                   const std::function<std::string(const Symbol &)> &sym,
                   const std::function<std::string(const LeafId &)> &label,
                   const std::function<std::string(const LeafId &)> &id)
        const {
        const Node &node = nodes_[at];
        os << std::string(depth * 2, ' ');
        if (at == 0) {
            os << "root";
        } else if (node.leaf) {
            os << label(*node.leaf) << " [leaf " << id(*node.leaf) << ']';
        } else {
            os << sym(*node.symbol);
        }
        os << '\n';
        for (auto child : node.children) {
            dump_node(os, child, depth + 1, sym, label, id);
        }
    }

    std::vector<Node> nodes_;
    std::map<LeafId, std::size_t> leaf_index_;
};

/// Build a trie from (prefix, id) pairs in the given order.
template <typename Symbol, typename LeafId>
[[nodiscard]] PalindromeTrie<Symbol, LeafId>
build_trie(const std::vector<std::pair<std::vector<Symbol>, LeafId>> &items) {
    PalindromeTrie<Symbol, LeafId> trie;
    for (const auto &[prefix, id] : items) {
        trie.enter(prefix, id);
    }
    return trie;
}

/// Length of the longest common prefix, i.e. the number of gate pairs that
/// cancel when `a`'s mirrored suffix meets `b`'s prefix.
template <typename Symbol>
[[nodiscard]] std::size_t overlap(std::span<const Symbol> a,
                                  std::span<const Symbol> b) {
    const auto limit = std::min(a.size(), b.size());
    std::size_t k = 0;
    while (k < limit && a[k] == b[k]) {
        ++k;
    }
    return k;
}

using GateTrie = PalindromeTrie<GateKey, std::size_t>;

[[nodiscard]] inline std::vector<GateKey>
prefix_keys(const PalindromicSubcircuit &sub) {
    std::vector<GateKey> keys;
    keys.reserve(sub.prefix.size());
    for (const auto &g : sub.prefix) {
        keys.push_back(g.key());
    }
    return keys;
}

[[nodiscard]] inline std::size_t overlap(const PalindromicSubcircuit &a,
                                         const PalindromicSubcircuit &b) {
    const auto ka = prefix_keys(a);
    const auto kb = prefix_keys(b);
    return overlap<GateKey>(ka, kb);
}

/// Trie over gate subcircuits; leaf id is produced by `id_of` (e.g. the
/// row of the ordering pair, or the subcircuit's index).
template <typename IdFn>
[[nodiscard]] GateTrie build_trie(const std::vector<PalindromicSubcircuit> &subs,
                                  IdFn id_of) {
    GateTrie trie;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        trie.enter(prefix_keys(subs[i]), id_of(subs[i], i));
    }
    return trie;
}

/// Trie with leaves numbered by position in `subs`.
[[nodiscard]] inline GateTrie
build_trie(const std::vector<PalindromicSubcircuit> &subs) {
    return build_trie(subs, [](const PalindromicSubcircuit &, std::size_t i) {
        return i;
    });
}

/// Sum of overlaps between neighbours in the given order.
[[nodiscard]] inline std::size_t
total_overlap(const std::vector<PalindromicSubcircuit> &seq) {
    std::size_t total = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        total += overlap(seq[i], seq[i + 1]);
    }
    return total;
}

[[nodiscard]] inline std::string gate_label(int n, const GateKey &key) {
    return "X t=" + std::to_string(key.target) +
           " c=" + ControlledGate::x(n, key.target, key.controls).pattern();
}

} // namespace tlsynth
