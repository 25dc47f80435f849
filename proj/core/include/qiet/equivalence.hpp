#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qiet/iet.hpp"
#include "qiet/induction.hpp"

namespace qiet {

/// Canonical form of an interval exchange transformation up to positive
/// rescaling and orientation reversal: lengths are rescaled to sum 1 and the
/// key is the lexicographically smaller of (perm, unit lengths) and its
/// reversal representative (tau.perm.tau, reversed unit lengths).
/// Two transformations are equivalent iff their keys are equal.
struct EquivClassKey {
    std::vector<int> perm;  // 0-based
    std::vector<QuadNum> unit_lengths;

    std::strong_ordering operator<=>(const EquivClassKey& rhs) const;
    bool operator==(const EquivClassKey& rhs) const {
        return perm == rhs.perm && unit_lengths == rhs.unit_lengths;
    }

    /// The representative transformation on [0, 1[ defined by the key.
    Iet representative() const;
};

EquivClassKey canonical_key(const Iet& t);

bool equivalent(const Iet& t, const Iet& u);

/// Directed labeled graph of equivalence classes reachable from a class by
/// psi/phi inductions.  Finite whenever the input is regular and defined
/// over a quadratic field.
struct EquivGraph {
    struct Vertex {
        EquivClassKey key;
        Iet representative;
    };
    struct Edge {
        int src;
        Letter label;
        int dst;
        auto operator<=>(const Edge&) const = default;
    };

    std::vector<Vertex> vertices;  // indexed by discovery order (sorted frontier)
    std::vector<Edge> edges;       // unique, sorted
};

/// Breadth-first closure from canonical_key(t), expanding the pending class
/// with the smallest key first, so the result is deterministic.  Throws
/// ClassBudgetExceeded if more than max_classes classes appear and
/// ConnectionError if any induction step degenerates.
EquivGraph build_graph(const Iet& t, long max_classes = 10'000,
                       long step_cap = kDefaultStepCap);

/// Deterministic DOT rendering: vertices sorted by key, edges lexicographic,
/// vertices labeled by their unit length vectors.
std::string export_dot(const EquivGraph& graph);

}  // namespace qiet
