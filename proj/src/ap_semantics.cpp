#include "crp/ap_semantics.hpp"

#include <algorithm>
#include <cstdint>

#include "crp/depgraph.hpp"

namespace crp {

namespace {

void require_consistent(const Context& x) {
    if (!is_consistent(x)) throw std::invalid_argument("context is inconsistent");
}

void require_regular(const Rule& r) {
    if (r.kind() != RuleKind::Regular)
        throw std::invalid_argument("cr-rule passed where a regular rule is required");
}

void require_regular_only(const Program& p) {
    if (!p.is_regular_only())
        throw std::invalid_argument("program contains cr-rules; apply a support first");
}

bool contains_all(const Context& x, const std::vector<Literal>& lits) {
    return std::all_of(lits.begin(), lits.end(),
                       [&](const Literal& l) { return x.contains(l); });
}

bool contains_any(const Context& x, const std::vector<Literal>& lits) {
    return std::any_of(lits.begin(), lits.end(),
                       [&](const Literal& l) { return x.contains(l); });
}

}  // namespace

bool fires(const Context& x, const Rule& r) {
    require_consistent(x);
    require_regular(r);
    return contains_all(x, r.pos_body()) && !contains_any(x, r.neg_body());
}

bool satisfies_rule(const Context& x, const Rule& r) {
    return !fires(x, r) || contains_any(x, r.head());
}

std::optional<Literal> supports(const Context& x, const Rule& r) {
    if (!fires(x, r)) return std::nullopt;
    std::optional<Literal> hit;
    for (const auto& h : r.head())
        if (x.contains(h)) {
            if (hit) return std::nullopt;
            hit = h;
        }
    return hit;
}

ReductProgram reduct(const Program& p, const Context& x) {
    require_regular_only(p);
    require_consistent(x);
    ReductProgram red;
    for (const auto& r : p.rules()) {
        if (contains_any(x, r.neg_body())) continue;
        red.rules.emplace_back(r.id(), RuleKind::Regular, r.head(), r.pos_body(),
                               std::vector<Literal>{});
    }
    return red;
}

bool satisfies_program(const Context& x, const Program& p) {
    require_regular_only(p);
    return std::all_of(p.rules().begin(), p.rules().end(),
                       [&](const Rule& r) { return satisfies_rule(x, r); });
}

bool satisfies_reduct(const Context& x, const ReductProgram& red) {
    require_consistent(x);
    return std::all_of(red.rules.begin(), red.rules.end(), [&](const Rule& r) {
        return !contains_all(x, r.pos_body()) || contains_any(x, r.head());
    });
}

namespace {

// Minimality test shared by is_answer_set and the enumerator: no
// proper subset of x satisfies red. The subsets of a consistent
// context are consistent, so no per-subset check is needed.
bool is_minimal_model_of_reduct(const Context& x, const ReductProgram& red) {
    const auto& lits = x.literals();
    const std::size_t n = lits.size();
    if (n >= 64) throw GuardError("context too large for subset enumeration: " +
                                  std::to_string(n) + " literals");
    const std::uint64_t full = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
    std::vector<Literal> buffer;
    buffer.reserve(n);
    for (std::uint64_t mask = 0; mask < full; ++mask) {
        buffer.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) buffer.push_back(lits[i]);
        if (satisfies_reduct(Context(buffer), red)) return false;
    }
    return true;
}

void require_within_universe(const Program& p, const Context& x) {
    Context universe = literal_universe(p);
    for (const auto& l : x)
        if (!universe.contains(l) && !universe.contains(complement(l)))
            throw std::invalid_argument("context literal " + to_string(l) +
                                        " does not occur in the program");
}

}  // namespace

bool is_answer_set(const Program& p, const Context& x) {
    require_regular_only(p);
    require_consistent(x);
    require_within_universe(p, x);
    ReductProgram red = reduct(p, x);
    if (!satisfies_reduct(x, red)) return false;
    return is_minimal_model_of_reduct(x, red);
}

namespace {

// Visits every consistent subset of the program's literal universe and
// calls fn with it; fn returning true stops the walk.
template <typename Fn>
void for_each_consistent_candidate(const Program& p, int max_universe, Fn fn) {
    require_regular_only(p);
    const std::vector<Literal> universe = literal_universe(p).literals();
    const std::size_t n = universe.size();
    if (static_cast<int>(n) > max_universe)
        throw GuardError("literal universe has " + std::to_string(n) +
                         " literals, above the limit of " + std::to_string(max_universe));
    // Complement pairs (i,j), i < j, used to skip inconsistent masks.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        Literal c = complement(universe[i]);
        auto it = std::lower_bound(universe.begin(), universe.end(), c);
        if (it != universe.end() && *it == c) {
            std::size_t j = static_cast<std::size_t>(it - universe.begin());
            if (i < j) pairs.emplace_back(i, j);
        }
    }
    std::vector<Literal> buffer;
    buffer.reserve(n);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool inconsistent = std::any_of(pairs.begin(), pairs.end(), [&](const auto& pr) {
            return (mask & (std::uint64_t{1} << pr.first)) &&
                   (mask & (std::uint64_t{1} << pr.second));
        });
        if (inconsistent) continue;
        buffer.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) buffer.push_back(universe[i]);
        if (fn(Context(buffer))) return;
    }
}

bool is_answer_set_unchecked(const Program& p, const Context& x) {
    ReductProgram red = reduct(p, x);
    return satisfies_reduct(x, red) && is_minimal_model_of_reduct(x, red);
}

}  // namespace

std::vector<Context> answer_sets(const Program& p, int max_universe) {
    std::vector<Context> out;
    for_each_consistent_candidate(p, max_universe, [&](const Context& x) {
        if (is_answer_set_unchecked(p, x)) out.push_back(x);
        return false;
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool has_answer_set(const Program& p, int max_universe) {
    bool found = false;
    for_each_consistent_candidate(p, max_universe, [&](const Context& x) {
        found = is_answer_set_unchecked(p, x);
        return found;
    });
    return found;
}

bool is_answer_set_acyclic(const Program& p, const Context& x) {
    require_regular_only(p);
    require_consistent(x);
    if (!is_acyclic(build_graph(p)))
        throw std::invalid_argument(
            "supported-model characterization requires an acyclic program");
    if (!satisfies_program(x, p)) return false;
    return std::all_of(x.begin(), x.end(), [&](const Literal& l) {
        return std::any_of(p.rules().begin(), p.rules().end(),
                           [&](const Rule& r) { return supports(x, r) == l; });
    });
}

}  // namespace crp
