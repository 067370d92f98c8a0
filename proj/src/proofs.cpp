#include "crp/proofs.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>

#include "crp/ap_semantics.hpp"
#include "crp/depgraph.hpp"

namespace crp {

std::vector<int> Proof::rule_ids() const {
    std::vector<int> ids;
    ids.reserve(steps.size());
    for (const auto& s : steps) ids.push_back(s.rule_id);
    return ids;
}

namespace {

void require_proof_inputs(const Program& p, const Context& x) {
    if (!p.is_regular_only())
        throw std::invalid_argument("proofs are defined for regular-only programs");
    if (!is_consistent(x)) throw std::invalid_argument("context is inconsistent");
}

// Shared recognizer: the step list as ProofSteps when `step_ids` is a
// proof of `l`, nullopt when some clause fails. Structural problems
// (no steps, ids outside the program) throw.
std::optional<std::vector<ProofStep>> check_steps(const Program& p, const Context& x,
                                                  const Literal& l,
                                                  const std::vector<int>& step_ids) {
    require_proof_inputs(p, x);
    if (step_ids.empty()) throw std::invalid_argument("a proof needs at least one step");

    std::vector<ProofStep> steps;
    steps.reserve(step_ids.size());
    for (std::size_t i = 0; i < step_ids.size(); ++i) {
        const Rule& r = p.rule(step_ids[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (steps[j].rule_id == r.id()) return std::nullopt;
        auto supported = supports(x, r);
        if (!supported) return std::nullopt;
        if (i == 0 && !r.pos_body().empty()) return std::nullopt;
        for (const auto& b : r.pos_body()) {
            bool established = false;
            for (std::size_t j = 0; j < i && !established; ++j)
                established = steps[j].supported == b;
            if (!established) return std::nullopt;
        }
        steps.push_back({r.id(), *supported});
    }
    if (!(steps.back().supported == l)) return std::nullopt;
    return steps;
}

}  // namespace

bool is_proof(const Program& p, const Context& x, const Literal& l,
              const std::vector<int>& step_ids) {
    return check_steps(p, x, l, step_ids).has_value();
}

Proof make_proof(const Program& p, const Context& x, const Literal& l,
                 const std::vector<int>& step_ids) {
    auto steps = check_steps(p, x, l, step_ids);
    if (!steps)
        throw std::invalid_argument("rule sequence is not a proof of " + to_string(l));
    return Proof{std::move(*steps), x, l};
}

namespace {

// Rules usable as proof steps: those supporting exactly one literal
// wrt x, in ascending id order.
std::vector<ProofStep> supporting_rules(const Program& p, const Context& x) {
    std::vector<ProofStep> out;
    for (const auto& r : p.rules())
        if (auto h = supports(x, r)) out.push_back({r.id(), *h});
    return out;
}

bool established_covers(const std::vector<Literal>& established,
                        const std::vector<Literal>& pos_body) {
    return std::all_of(pos_body.begin(), pos_body.end(), [&](const Literal& b) {
        return std::find(established.begin(), established.end(), b) != established.end();
    });
}

struct ProofDfs {
    const Program& p;
    const Context& x;
    const Literal& target;
    int max_len;
    std::vector<ProofStep> candidates;
    std::vector<bool> used;
    std::vector<ProofStep> sequence;
    std::vector<Literal> established;
    std::vector<Proof> found;

    void run() {
        candidates = supporting_rules(p, x);
        used.assign(candidates.size(), false);
        descend();
    }

    void descend() {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (used[i]) continue;
            const Rule& r = p.rule(candidates[i].rule_id);
            if (!established_covers(established, r.pos_body())) continue;
            used[i] = true;
            sequence.push_back(candidates[i]);
            established.push_back(candidates[i].supported);
            if (candidates[i].supported == target) found.push_back(Proof{sequence, x, target});
            if (static_cast<int>(sequence.size()) < max_len) descend();
            established.pop_back();
            sequence.pop_back();
            used[i] = false;
        }
    }
};

}  // namespace

std::vector<Proof> enumerate_proofs(const Program& p, const Context& x, const Literal& l,
                                    int max_len) {
    require_proof_inputs(p, x);
    if (max_len < 1) throw std::invalid_argument("max_len must be positive");
    ProofDfs dfs{p, x, l, max_len, {}, {}, {}, {}, {}};
    dfs.run();
    std::sort(dfs.found.begin(), dfs.found.end(), [](const Proof& a, const Proof& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        auto ia = a.rule_ids(), ib = b.rule_ids();
        return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
    });
    return dfs.found;
}

namespace {

// Depth-limited existence search for a proof of exactly `len` steps.
// The state is the set of used candidate rules; the established
// literals are a function of that set, so failed states memoize by
// used-set mask alone within one depth limit.
struct RankSearch {
    const Program& p;
    const Literal& target;
    const std::vector<ProofStep>& candidates;
    std::vector<Literal> established;
    std::unordered_set<std::uint64_t> failed;
    std::uint64_t used = 0;

    bool proof_exists(int len) {
        failed.clear();
        established.clear();
        used = 0;
        return reach_target(len);
    }

    bool reach_target(int remaining) {
        if (failed.count(used)) return false;
        if (remaining == 1) {
            for (std::size_t i = 0; i < candidates.size(); ++i)
                if (!(used & (std::uint64_t{1} << i)) && candidates[i].supported == target &&
                    established_covers(established, p.rule(candidates[i].rule_id).pos_body()))
                    return true;
            failed.insert(used);
            return false;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (used & (std::uint64_t{1} << i)) continue;
            if (!established_covers(established, p.rule(candidates[i].rule_id).pos_body()))
                continue;
            used |= std::uint64_t{1} << i;
            established.push_back(candidates[i].supported);
            bool ok = reach_target(remaining - 1);
            established.pop_back();
            used &= ~(std::uint64_t{1} << i);
            if (ok) return true;
        }
        failed.insert(used);
        return false;
    }
};

int rank_unchecked(const Program& p, const Context& x, const Literal& l) {
    std::vector<ProofStep> candidates = supporting_rules(p, x);
    if (candidates.size() > 63)
        throw GuardError("too many supporting rules for proof search: " +
                         std::to_string(candidates.size()));
    RankSearch search{p, l, candidates, {}, {}, 0};
    for (int len = 1; len <= static_cast<int>(candidates.size()); ++len)
        if (search.proof_exists(len)) return len;
    throw std::runtime_error("no proof of " + to_string(l) + " exists");
}

void require_rank_inputs(const Program& p, const Context& x) {
    if (!p.is_regular_only())
        throw std::invalid_argument("ranks are defined for regular-only programs");
    if (!is_hcf(p)) throw std::invalid_argument("ranks require a head-cycle-free program");
    if (!is_answer_set(p, x))
        throw std::invalid_argument("context is not an answer set of the program");
}

}  // namespace

int rank(const Program& p, const Context& x, const Literal& l) {
    require_rank_inputs(p, x);
    if (!x.contains(l))
        throw std::invalid_argument("literal " + to_string(l) + " is not in the context");
    return rank_unchecked(p, x, l);
}

RankingFunction ranking_function(const Program& p, const Context& x) {
    require_rank_inputs(p, x);
    RankingFunction rk;
    for (const auto& l : x) rk[l] = rank_unchecked(p, x, l);
    return rk;
}

bool is_normal_proof(const Program& p, const Context& x, const Proof& pr) {
    auto steps = check_steps(p, x, pr.target, pr.rule_ids());
    if (!steps || *steps != pr.steps)
        throw std::invalid_argument("not a valid proof of " + to_string(pr.target));
    RankingFunction rk = ranking_function(p, x);
    for (const auto& step : pr.steps)
        for (const auto& b : p.rule(step.rule_id).pos_body())
            if (rk.at(step.supported) <= rk.at(b)) return false;
    return true;
}

Proof subproof(const Proof& pr, std::size_t i) {
    if (i < 1 || i > pr.steps.size())
        throw std::out_of_range("subproof index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(pr.steps.size()));
    std::vector<ProofStep> steps(pr.steps.begin(),
                                 pr.steps.begin() + static_cast<std::ptrdiff_t>(i));
    Literal target = steps.back().supported;
    return Proof{std::move(steps), pr.context, std::move(target)};
}

std::string to_string(const Proof& pr) {
    std::string out = "[";
    for (std::size_t i = 0; i < pr.steps.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(pr.steps[i].rule_id);
    }
    return out + "] : " + to_string(pr.target);
}

}  // namespace crp
