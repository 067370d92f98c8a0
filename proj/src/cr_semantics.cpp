#include "crp/cr_semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace crp {

Rule apply(const Rule& r) {
    if (r.kind() != RuleKind::Cr)
        throw std::invalid_argument("apply expects a cr-rule, got a regular rule");
    return Rule(r.id(), RuleKind::Regular, r.head(), r.pos_body(), r.neg_body());
}

Program apply_support(const Program& p, const AbductiveSupport& s) {
    std::vector<int> ids = s.cr_rule_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Rule> rules = p.regular_rules();
    for (int id : ids) rules.push_back(apply(p.rule(id)));
    return Program(std::move(rules));
}

namespace {

// Advances `pick` to the next k-combination of {0..n-1} in
// lexicographic order; false once exhausted.
bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
    const std::size_t k = pick.size();
    for (std::size_t i = k; i-- > 0;) {
        if (pick[i] < n - (k - i)) {
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<AbductiveSupport> abductive_supports(const Program& p, int max_universe) {
    const std::vector<Rule> crs = p.cr_rules();
    const std::size_t n = crs.size();
    for (std::size_t c = 0; c <= n; ++c) {
        std::vector<AbductiveSupport> found;
        std::vector<std::size_t> pick(c);
        for (std::size_t i = 0; i < c; ++i) pick[i] = i;
        do {
            AbductiveSupport s;
            for (std::size_t i : pick) s.cr_rule_ids.push_back(crs[i].id());
            if (has_answer_set(apply_support(p, s), max_universe)) found.push_back(std::move(s));
        } while (c > 0 && next_combination(pick, n));
        if (!found.empty()) return found;
    }
    return {};
}

std::vector<CrSolution> cr_answer_sets(const Program& p, int max_universe) {
    std::vector<CrSolution> out;
    for (const auto& s : abductive_supports(p, max_universe))
        for (auto& x : answer_sets(apply_support(p, s), max_universe))
            out.push_back({std::move(x), s});
    return out;
}

std::vector<Rule> factify(const std::vector<Rule>& rules) {
    std::vector<Rule> out;
    out.reserve(rules.size());
    for (const auto& r : rules) {
        if (r.kind() != RuleKind::Regular)
            throw std::invalid_argument("factify expects regular rules; apply cr-rules first");
        out.emplace_back(r.id(), RuleKind::Regular, r.head(), std::vector<Literal>{},
                         std::vector<Literal>{});
    }
    return out;
}

std::string to_string(const AbductiveSupport& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.cr_rule_ids.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(s.cr_rule_ids[i]);
    }
    return out + "}";
}

}  // namespace crp
