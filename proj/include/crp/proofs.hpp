#pragma once

#include <map>
#include <string>
#include <vector>

#include "crp/model.hpp"

namespace crp {

// One proof step: a rule id plus the literal that rule supports wrt
// the proof's context.
struct ProofStep {
    int rule_id;
    Literal supported;

    friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

// A derivation of `target` under `context`: rules are pairwise
// distinct, each supports exactly one literal, the first has an empty
// positive body, every positive premise is supported by an earlier
// step, and the last step supports `target`.
struct Proof {
    std::vector<ProofStep> steps;
    Context context;
    Literal target;

    std::size_t length() const { return steps.size(); }
    std::vector<int> rule_ids() const;

    friend bool operator==(const Proof&, const Proof&) = default;
};

// Length of a shortest proof for each literal of an answer set.
using RankingFunction = std::map<Literal, int>;

/// True iff `step_ids` lists rules of `p` forming a proof of `l` wrt x.
bool is_proof(const Program& p, const Context& x, const Literal& l,
              const std::vector<int>& step_ids);

/// Builds the Proof for a valid step sequence; throws otherwise.
Proof make_proof(const Program& p, const Context& x, const Literal& l,
                 const std::vector<int>& step_ids);

/// Every proof of l wrt x with at most max_len steps, ordered by
/// length and then lexicographically by rule id sequence.
std::vector<Proof> enumerate_proofs(const Program& p, const Context& x, const Literal& l,
                                    int max_len);

/// Length of a shortest proof of l. Requires a head-cycle-free program
/// and an answer set x containing l.
int rank(const Program& p, const Context& x, const Literal& l);

/// rank() for every literal of x.
RankingFunction ranking_function(const Program& p, const Context& x);

/// True iff each step's supported literal out-ranks every literal of
/// that step's positive body.
bool is_normal_proof(const Program& p, const Context& x, const Proof& pr);

/// Prefix of the first `i` steps (1-based), its target re-pointed to
/// step i's supported literal.
Proof subproof(const Proof& pr, std::size_t i);

/// Compact form like "[5, 4, 3] : c", listing rule ids and target.
std::string to_string(const Proof& pr);

}  // namespace crp
