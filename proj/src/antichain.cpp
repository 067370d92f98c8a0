#include "crp/antichain.hpp"

#include <algorithm>
#include <random>

#include "crp/depgraph.hpp"

namespace crp {

AntichainReport check_antichain(const Program& p, int max_universe) {
    AntichainReport report{true, std::nullopt, cr_answer_sets(p, max_universe)};
    std::vector<Context> sets;
    sets.reserve(report.solutions.size());
    for (const auto& s : report.solutions) sets.push_back(s.answer_set);
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    for (std::size_t i = 0; i < sets.size() && report.holds; ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (sets[i].proper_subset_of(sets[j])) {
                report.holds = false;
                report.witness = {sets[i], sets[j]};
                break;
            }
    return report;
}

namespace {

// Draws on top of the engine. The standard distributions are not
// pinned across implementations, so replayable seeds need hand-rolled
// mappings.
struct Draws {
    std::mt19937_64 engine;

    explicit Draws(std::uint64_t seed) : engine(seed) {}

    int below(int n) { return static_cast<int>(engine() % static_cast<std::uint64_t>(n)); }

    bool coin(double p) {
        return static_cast<double>(engine() >> 11) * 0x1.0p-53 < p;
    }
};

void validate(const GenConfig& cfg) {
    if (cfg.atoms < 1 || cfg.atoms > 26)
        throw std::invalid_argument("atoms must be between 1 and 26");
    if (cfg.regular_rules < 0 || cfg.cr_rules < 0)
        throw std::invalid_argument("rule counts must be nonnegative");
    if (cfg.max_head < 1) throw std::invalid_argument("max_head must be positive");
    if (cfg.max_body < 0) throw std::invalid_argument("max_body must be nonnegative");
    if (cfg.neg_prob < 0 || cfg.neg_prob > 1 || cfg.strong_neg_prob < 0 ||
        cfg.strong_neg_prob > 1)
        throw std::invalid_argument("probabilities must lie in [0,1]");
    if (cfg.max_attempts < 1) throw std::invalid_argument("max_attempts must be positive");
}

std::string atom_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

struct Generator {
    const GenConfig& cfg;
    Draws draws;
    bool acyclic;
    bool nondisjunctive;
    // stratum[atom] orders the atoms; with the Acyclic requirement,
    // positive premises are drawn strictly below the head's stratum,
    // which rules cycles out by construction.
    std::vector<int> stratum;

    explicit Generator(const GenConfig& c)
        : cfg(c),
          draws(c.seed),
          acyclic(c.require.count(Requirement::Acyclic) > 0),
          nondisjunctive(c.require.count(Requirement::Nondisjunctive) > 0) {}

    Program attempt() {
        shuffle_strata();
        std::vector<Rule> rules;
        for (int i = 0; i < cfg.regular_rules; ++i) rules.push_back(make_rule(false));
        for (int i = 0; i < cfg.cr_rules; ++i) rules.push_back(make_rule(true));
        return Program(std::move(rules));
    }

    void shuffle_strata() {
        stratum.resize(static_cast<std::size_t>(cfg.atoms));
        std::vector<int> order(stratum.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[static_cast<std::size_t>(draws.below(static_cast<int>(i)))]);
        for (std::size_t pos = 0; pos < order.size(); ++pos)
            stratum[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    }

    Literal random_literal(int atom) {
        return Literal(atom_name(atom), draws.coin(cfg.strong_neg_prob));
    }

    Rule make_rule(bool cr) {
        const int head_size = (cr || nondisjunctive) ? 1 : 1 + draws.below(cfg.max_head);
        std::vector<Literal> head;
        int min_head_stratum = cfg.atoms;
        for (int i = 0; i < head_size; ++i) {
            int atom = draws.below(cfg.atoms);
            head.push_back(random_literal(atom));
            min_head_stratum = std::min(min_head_stratum, stratum[static_cast<std::size_t>(atom)]);
        }
        std::vector<Literal> pos, neg;
        const int body_size = draws.below(cfg.max_body + 1);
        for (int i = 0; i < body_size; ++i) {
            if (draws.coin(cfg.neg_prob)) {
                neg.push_back(random_literal(draws.below(cfg.atoms)));
            } else if (!acyclic) {
                pos.push_back(random_literal(draws.below(cfg.atoms)));
            } else if (min_head_stratum > 0) {
                int pick = draws.below(min_head_stratum);
                for (int atom = 0; atom < cfg.atoms; ++atom)
                    if (stratum[static_cast<std::size_t>(atom)] == pick) {
                        pos.push_back(random_literal(atom));
                        break;
                    }
            }
            // bottom-stratum heads take no positive premises
        }
        return Rule(0, cr ? RuleKind::Cr : RuleKind::Regular, std::move(head), std::move(pos),
                    std::move(neg));
    }
};

bool meets_requirements(const Program& p, const std::set<Requirement>& require) {
    for (Requirement r : require) {
        switch (r) {
            case Requirement::Acyclic:
                if (!is_acyclic(build_graph(p))) return false;
                break;
            case Requirement::CrIndependent:
                if (!is_cr_independent(p)) return false;
                break;
            case Requirement::Nondisjunctive:
                if (!p.is_nondisjunctive()) return false;
                break;
            case Requirement::Hcf:
                if (!is_hcf(p)) return false;
                break;
        }
    }
    return true;
}

}  // namespace

Program random_program(const GenConfig& cfg) {
    validate(cfg);
    Generator gen(cfg);
    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        Program p = gen.attempt();
        if (meets_requirements(p, cfg.require)) return p;
    }
    throw GenError("no program met the requirements within " +
                   std::to_string(cfg.max_attempts) + " attempts");
}

std::uint64_t trial_seed(std::uint64_t base_seed, int trial) {
    // splitmix64 of the trial's offset from the base seed
    std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

GenConfig trial_config(const GenConfig& cfg, int trial, FalsifyTarget target) {
    GenConfig out = cfg;
    out.seed = trial_seed(cfg.seed, trial);
    switch (target) {
        case FalsifyTarget::RegularOnly:
            out.cr_rules = 0;
            break;
        case FalsifyTarget::AcyclicCrIndependent:
            out.require.insert(Requirement::Acyclic);
            out.require.insert(Requirement::CrIndependent);
            break;
        case FalsifyTarget::CrIndependentOnly:
            out.require.insert(Requirement::CrIndependent);
            break;
    }
    return out;
}

}  // namespace

FalsifyReport falsify(const GenConfig& cfg, int trials, FalsifyTarget target, int max_universe) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    FalsifyReport report;
    for (int trial = 0; trial < trials; ++trial) {
        ++report.trials;
        GenConfig tc = trial_config(cfg, trial, target);
        try {
            Program p = random_program(tc);
            AntichainReport ar = check_antichain(p, max_universe);
            if (!ar.holds) {
                report.counterexample = Counterexample{trial, tc, std::move(p), std::move(ar)};
                break;
            }
        } catch (const GenError&) {
            ++report.discarded;
        } catch (const GuardError&) {
            ++report.discarded;
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

Program replay(const Counterexample& ce) { return random_program(ce.config); }

const char* to_string(Requirement r) {
    switch (r) {
        case Requirement::Acyclic: return "acyclic";
        case Requirement::CrIndependent: return "cr-independent";
        case Requirement::Nondisjunctive: return "nondisjunctive";
        case Requirement::Hcf: return "head-cycle-free";
    }
    return "?";
}

const char* to_string(FalsifyTarget t) {
    switch (t) {
        case FalsifyTarget::RegularOnly: return "regular";
        case FalsifyTarget::AcyclicCrIndependent: return "acyclic-cr-independent";
        case FalsifyTarget::CrIndependentOnly: return "cr-independent";
    }
    return "?";
}

}  // namespace crp
