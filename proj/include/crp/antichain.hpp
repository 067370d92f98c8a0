#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crp/cr_semantics.hpp"
#include "crp/model.hpp"

namespace crp {

// Structural constraints the random generator must satisfy.
enum class Requirement { Acyclic, CrIndependent, Nondisjunctive, Hcf };

// What the falsification harness attacks:
//   RegularOnly           - antichain over programs without cr-rules
//   AcyclicCrIndependent  - antichain over acyclic cr-independent programs
//   CrIndependentOnly     - cr-independence alone, cycles permitted
//                           (no counterexample is known; none is asserted)
enum class FalsifyTarget { RegularOnly, AcyclicCrIndependent, CrIndependentOnly };

struct GenConfig {
    std::uint64_t seed = 0;
    int atoms = 4;
    int regular_rules = 4;
    int cr_rules = 0;
    int max_head = 2;
    int max_body = 3;
    double neg_prob = 0.3;
    double strong_neg_prob = 0.2;
    std::set<Requirement> require;
    int max_attempts = 1000;

    friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

// Thrown when rejection sampling cannot meet the requirements within
// max_attempts.
class GenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AntichainReport {
    bool holds;
    // Present iff holds is false: answer sets with witness.first a
    // proper subset of witness.second, first such pair in canonical
    // order.
    std::optional<std::pair<Context, Context>> witness;
    std::vector<CrSolution> solutions;

    friend bool operator==(const AntichainReport&, const AntichainReport&) = default;
};

struct Counterexample {
    int trial;
    GenConfig config;
    Program program;
    AntichainReport report;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct FalsifyReport {
    int trials = 0;
    int discarded = 0;
    std::optional<Counterexample> counterexample;
    std::chrono::milliseconds elapsed{0};
};

/// Decides the antichain property: no answer set of p is a proper
/// subset of another. Examines every CrSolution of p.
AntichainReport check_antichain(const Program& p, int max_universe = kDefaultMaxUniverse);

/// Deterministic random program for cfg: same cfg, same program.
/// Resamples until every Requirement holds; GenError after
/// cfg.max_attempts failures.
Program random_program(const GenConfig& cfg);

/// Seed for one trial of a falsification run, derived so that trials
/// are independent and individually replayable.
std::uint64_t trial_seed(std::uint64_t base_seed, int trial);

/// Runs `trials` random programs against check_antichain, constraining
/// generation to the target's precondition. Stops at the first
/// violation; generation and guard failures count as discarded.
FalsifyReport falsify(const GenConfig& cfg, int trials, FalsifyTarget target,
                      int max_universe = kDefaultMaxUniverse);

/// Regenerates the program of a recorded counterexample from its
/// embedded config; equals the original bit for bit.
Program replay(const Counterexample& ce);

const char* to_string(Requirement r);
const char* to_string(FalsifyTarget t);

}  // namespace crp
