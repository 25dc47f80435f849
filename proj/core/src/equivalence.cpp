#include "qiet/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace qiet {

std::strong_ordering EquivClassKey::operator<=>(const EquivClassKey& rhs) const {
    if (auto cmp = perm <=> rhs.perm; cmp != 0) return cmp;
    if (auto cmp = unit_lengths.size() <=> rhs.unit_lengths.size(); cmp != 0) return cmp;
    for (std::size_t i = 0; i < unit_lengths.size(); ++i) {
        if (auto cmp = unit_lengths[i] <=> rhs.unit_lengths[i]; cmp != 0) return cmp;
    }
    return std::strong_ordering::equal;
}

Iet EquivClassKey::representative() const {
    return Iet(perm, unit_lengths, QuadNum::zero(unit_lengths.front().d()));
}

EquivClassKey canonical_key(const Iet& t) {
    QuadNum total = t.total_length();
    std::vector<QuadNum> unit;
    unit.reserve(t.s());
    for (const QuadNum& len : t.lengths()) unit.push_back(len / total);

    EquivClassKey direct{t.perm(), unit};
    // Reversal representative: conjugation by tau : i -> s-i+1 on the
    // permutation and the reversed length vector.
    const int s = t.s();
    std::vector<int> rev_perm(s);
    std::vector<QuadNum> rev_unit;
    rev_unit.reserve(s);
    for (int i = 0; i < s; ++i) {
        rev_perm[i] = s - 1 - t.perm()[s - 1 - i];
        rev_unit.push_back(unit[s - 1 - i]);
    }
    EquivClassKey reversed{std::move(rev_perm), std::move(rev_unit)};
    return direct <= reversed ? direct : reversed;
}

bool equivalent(const Iet& t, const Iet& u) { return canonical_key(t) == canonical_key(u); }

EquivGraph build_graph(const Iet& t, long max_classes, long step_cap) {
    std::map<EquivClassKey, int> index_of;
    std::set<EquivClassKey> pending;
    std::vector<std::tuple<int, Letter, EquivClassKey>> raw_edges;
    EquivGraph graph;

    pending.insert(canonical_key(t));
    while (!pending.empty()) {
        EquivClassKey key = *pending.begin();
        pending.erase(pending.begin());
        if (static_cast<long>(graph.vertices.size()) >= max_classes) {
            throw ClassBudgetExceeded("equivalence graph exceeded " +
                                      std::to_string(max_classes) + " classes");
        }
        Iet rep = key.representative();
        const int src = static_cast<int>(graph.vertices.size());
        index_of.emplace(key, src);
        for (Letter letter : {Letter::Phi, Letter::Psi}) {
            EquivClassKey target = canonical_key(rauzy_step(rep, letter, step_cap).transform);
            if (!index_of.contains(target)) pending.insert(target);
            raw_edges.emplace_back(src, letter, std::move(target));
        }
        graph.vertices.push_back(EquivGraph::Vertex{std::move(key), std::move(rep)});
    }

    std::set<EquivGraph::Edge> edges;
    for (auto& [src, letter, target] : raw_edges) {
        edges.insert(EquivGraph::Edge{src, letter, index_of.at(target)});
    }
    graph.edges.assign(edges.begin(), edges.end());
    return graph;
}

std::string export_dot(const EquivGraph& graph) {
    // Vertices renamed v0..vN in key order; edges sorted by (source name,
    // label, target name) so equal graphs render byte-identically.
    const int count = static_cast<int>(graph.vertices.size());
    std::vector<int> by_key(count);
    for (int i = 0; i < count; ++i) by_key[i] = i;
    std::sort(by_key.begin(), by_key.end(), [&](int a, int b) {
        return graph.vertices[a].key < graph.vertices[b].key;
    });
    std::vector<int> name_of(count);
    for (int rank = 0; rank < count; ++rank) name_of[by_key[rank]] = rank;

    std::ostringstream out;
    out << "digraph equivalence {\n";
    for (int rank = 0; rank < count; ++rank) {
        const EquivClassKey& key = graph.vertices[by_key[rank]].key;
        out << "  v" << rank << " [label=\"(";
        for (std::size_t i = 0; i < key.unit_lengths.size(); ++i) {
            if (i) out << ", ";
            out << key.unit_lengths[i].str();
        }
        out << ")\"];\n";
    }
    std::vector<std::tuple<int, std::string, int>> lines;
    lines.reserve(graph.edges.size());
    for (const EquivGraph::Edge& edge : graph.edges) {
        lines.emplace_back(name_of[edge.src], letter_name(edge.label), name_of[edge.dst]);
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [src, label, dst] : lines) {
        out << "  v" << src << " -> v" << dst << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace qiet
