#pragma once

#include <vector>

#include "crp/ap_semantics.hpp"
#include "crp/model.hpp"

namespace crp {

// Ids of the cr-rules whose applications restore consistency. Stored
// sorted without duplicates.
struct AbductiveSupport {
    std::vector<int> cr_rule_ids;

    friend bool operator==(const AbductiveSupport&, const AbductiveSupport&) = default;
};

// One CR-Prolog answer set together with the support that produced it.
struct CrSolution {
    Context answer_set;
    AbductiveSupport support;

    friend bool operator==(const CrSolution&, const CrSolution&) = default;
};

/// The cr-rule turned into a regular rule; id, head and body unchanged.
Rule apply(const Rule& r);

/// Regular part of p followed by apply() of the supported cr-rules in
/// id order, renumbered as a fresh Program.
Program apply_support(const Program& p, const AbductiveSupport& s);

/// All cardinality-minimal sets R of cr-rules such that the regular
/// part plus apply(R) has an answer set. Searched level by level;
/// empty result means no support of any size helps. Supports are
/// ordered lexicographically by id set.
std::vector<AbductiveSupport> abductive_supports(const Program& p,
                                                 int max_universe = kDefaultMaxUniverse);

/// Every (answer set, support) pair: for each abductive support, the
/// answer sets of the applied program. Ordered by support, then by
/// canonical context order.
std::vector<CrSolution> cr_answer_sets(const Program& p,
                                       int max_universe = kDefaultMaxUniverse);

/// Each rule reduced to a fact with the same head and id.
std::vector<Rule> factify(const std::vector<Rule>& rules);

std::string to_string(const AbductiveSupport& s);

}  // namespace crp
