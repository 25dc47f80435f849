#pragma once

#include <iosfwd>
#include <string>

#include "qiet/equivalence.hpp"
#include "qiet/iet.hpp"
#include "qiet/induction.hpp"

namespace qiet::cli {

struct Budgets {
    long step_cap = kDefaultStepCap;
    long max_classes = 10'000;
};

/// Spec text for a transformation; parsing it back yields an equal Iet.
std::string render_iet(const Iet& t);

/// "psi,phi" or "psi phi" (empty string = empty word).
InductionWord parse_word(const std::string& text);

int cmd_induce(const Iet& t, const InductionWord& word, const Budgets& budgets,
               std::ostream& out);
int cmd_graph(const Iet& t, const std::string& format, const Budgets& budgets,
              std::ostream& out);
int cmd_admissible(const Iet& t, int depth, const Budgets& budgets, std::ostream& out,
                   std::ostream& diag);
int cmd_check(const Iet& t, long depth, std::ostream& out);
int cmd_cf(const Iet& t, std::ostream& out);
int cmd_survey(const Iet& t, int depth, const Budgets& budgets, std::ostream& out);

}  // namespace qiet::cli
