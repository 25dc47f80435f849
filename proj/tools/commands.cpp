#include "commands.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qiet/complexity.hpp"
#include "qiet/continued_fraction.hpp"

namespace qiet::cli {

std::string render_iet(const Iet& t) {
    std::ostringstream out;
    out << "d = " << t.d() << "\n";
    out << "perm =";
    for (int image : t.perm()) out << " " << image + 1;
    out << "\n";
    out << "lengths = ";
    for (int i = 0; i < t.s(); ++i) {
        if (i) out << ", ";
        out << t.lengths()[i].str();
    }
    out << "\n";
    out << "left = " << t.left().str() << "\n";
    return out.str();
}

InductionWord parse_word(const std::string& text) {
    InductionWord word;
    std::string token;
    std::istringstream in(text);
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream stream(normalized);
    while (stream >> token) {
        if (token == "psi") {
            word.push_back(Letter::Psi);
        } else if (token == "phi") {
            word.push_back(Letter::Phi);
        } else {
            throw ParseError("induction word letters are 'psi' and 'phi', got '" + token + "'",
                             1, 1);
        }
    }
    return word;
}

int cmd_induce(const Iet& t, const InductionWord& word, const Budgets& budgets,
               std::ostream& out) {
    InducedResult res = apply_word(t, word, budgets.step_cap);
    out << render_iet(res.transform);
    out << "# word = " << word_name(word) << "\n";
    out << "# domain = " << res.domain.str() << "\n";
    out << "# exponents =";
    for (long e : res.return_exponents) out << " " << e;
    out << "\n";
    out << "# approx lengths =";
    out << std::setprecision(6) << std::fixed;
    for (const QuadNum& len : res.transform.lengths()) out << " " << len.approx();
    out << "\n";
    return 0;
}

namespace {

nlohmann::json quad_triple(const QuadNum& x) {
    return nlohmann::json::array({x.m().str(), x.n().str(), x.r().str()});
}

}  // namespace

int cmd_graph(const Iet& t, const std::string& format, const Budgets& budgets,
              std::ostream& out) {
    EquivGraph graph = build_graph(t, budgets.max_classes, budgets.step_cap);
    if (format == "dot") {
        out << export_dot(graph);
        return 0;
    }
    if (format != "json") {
        throw ParseError("graph format must be 'dot' or 'json', got '" + format + "'", 1, 1);
    }
    const int count = static_cast<int>(graph.vertices.size());
    std::vector<int> by_key(count);
    for (int i = 0; i < count; ++i) by_key[i] = i;
    std::sort(by_key.begin(), by_key.end(), [&](int a, int b) {
        return graph.vertices[a].key < graph.vertices[b].key;
    });
    std::vector<int> name_of(count);
    for (int rank = 0; rank < count; ++rank) name_of[by_key[rank]] = rank;

    nlohmann::json doc;
    doc["d"] = t.d();
    doc["vertices"] = nlohmann::json::array();
    for (int rank = 0; rank < count; ++rank) {
        const EquivClassKey& key = graph.vertices[by_key[rank]].key;
        nlohmann::json vertex;
        vertex["perm"] = nlohmann::json::array();
        for (int image : key.perm) vertex["perm"].push_back(image + 1);
        vertex["unit_lengths"] = nlohmann::json::array();
        for (const QuadNum& len : key.unit_lengths) {
            vertex["unit_lengths"].push_back(quad_triple(len));
        }
        doc["vertices"].push_back(std::move(vertex));
    }
    std::vector<std::tuple<int, std::string, int>> edges;
    for (const EquivGraph::Edge& e : graph.edges) {
        edges.emplace_back(name_of[e.src], letter_name(e.label), name_of[e.dst]);
    }
    std::sort(edges.begin(), edges.end());
    doc["edges"] = nlohmann::json::array();
    for (const auto& [src, label, dst] : edges) {
        doc["edges"].push_back({{"from", src}, {"label", label}, {"to", dst}});
    }
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_admissible(const Iet& t, int depth, const Budgets& budgets, std::ostream& out,
                   std::ostream& diag) {
    AdmissibleEnumeration enumeration = enumerate_admissible(t, depth, budgets.step_cap);
    for (const auto& [word, domain] : enumeration.items) {
        out << word_name(word) << "\t" << domain.str() << "\n";
    }
    if (enumeration.connection_words > 0) {
        diag << "note: " << enumeration.connection_words
             << " word(s) skipped after a degenerate induction step\n";
    }
    return 0;
}

int cmd_check(const Iet& t, long depth, std::ostream& out) {
    if (auto witness = t.find_connection(depth)) {
        out << "connection found: " << witness->str() << "\n";
        return 2;
    }
    out << "no connection found up to depth " << depth << "\n";
    return 0;
}

int cmd_cf(const Iet& t, std::ostream& out) {
    out << cf_expand(iet_ratio(t)).str() << "\n";
    return 0;
}

int cmd_survey(const Iet& t, int depth, const Budgets& budgets, std::ostream& out) {
    out << survey_tsv(pi_survey(t, depth, budgets.step_cap));
    return 0;
}

}  // namespace qiet::cli
