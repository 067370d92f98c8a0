#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "crp/model.hpp"

namespace crp {

// Enumeration refuses literal universes above this size unless the
// caller raises the limit explicitly.
inline constexpr int kDefaultMaxUniverse = 24;

// Thrown when a brute-force enumeration would exceed the size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Naf-free program produced by reduct(). Each rule keeps the id of the
// rule it originated from; order follows the source program.
struct ReductProgram {
    std::vector<Rule> rules;

    friend bool operator==(const ReductProgram&, const ReductProgram&) = default;
};

/// True iff pos_body(r) ⊆ x and neg_body(r) ∩ x = ∅.
bool fires(const Context& x, const Rule& r);

/// True iff r does not fire under x or head(r) ∩ x ≠ ∅.
bool satisfies_rule(const Context& x, const Rule& r);

/// The unique literal l with head(r) ∩ x = {l} when r fires under x;
/// nullopt when r does not fire or the intersection is not a singleton.
std::optional<Literal> supports(const Context& x, const Rule& r);

/// Drops every rule whose naf body intersects x, then erases the naf
/// body of the remaining rules.
ReductProgram reduct(const Program& p, const Context& x);

bool satisfies_program(const Context& x, const Program& p);
bool satisfies_reduct(const Context& x, const ReductProgram& red);

/// True iff x satisfies reduct(p,x) and no proper subset of x does.
/// Requires x ⊆ literal_universe(p) closed under complement.
bool is_answer_set(const Program& p, const Context& x);

/// All answer sets of a regular-only program, found by enumerating the
/// consistent subsets of literal_universe(p). Sorted by cardinality,
/// then lexicographically.
std::vector<Context> answer_sets(const Program& p, int max_universe = kDefaultMaxUniverse);

/// Same search as answer_sets but stops at the first hit. Agrees with
/// answer_sets(p).empty() by construction.
bool has_answer_set(const Program& p, int max_universe = kDefaultMaxUniverse);

/// Supported-model characterization, valid for acyclic programs only:
/// x satisfies p and every member of x is supported by some rule.
bool is_answer_set_acyclic(const Program& p, const Context& x);

}  // namespace crp
