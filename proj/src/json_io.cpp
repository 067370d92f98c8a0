#include "crp/json_io.hpp"

namespace crp {

using nlohmann::ordered_json;

ordered_json json_of(const Context& c) {
    ordered_json arr = ordered_json::array();
    for (const auto& l : c) arr.push_back(to_string(l));
    return arr;
}

ordered_json json_of(const Rule& r) { return to_string(r); }

ordered_json json_of(const Program& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : p.rules()) arr.push_back(json_of(r));
    return arr;
}

ordered_json json_of(const AbductiveSupport& s) {
    ordered_json arr = ordered_json::array();
    for (int id : s.cr_rule_ids) arr.push_back(id);
    return arr;
}

ordered_json json_of(const CrSolution& s) {
    ordered_json j;
    j["answer_set"] = json_of(s.answer_set);
    j["support"] = json_of(s.support);
    return j;
}

ordered_json json_of(const Proof& pr) {
    ordered_json j;
    j["target"] = to_string(pr.target);
    j["steps"] = ordered_json::array();
    for (const auto& step : pr.steps) {
        ordered_json s;
        s["rule"] = step.rule_id;
        s["supports"] = to_string(step.supported);
        j["steps"].push_back(s);
    }
    return j;
}

ordered_json json_of(const AntichainReport& r) {
    ordered_json j;
    j["holds"] = r.holds;
    if (r.witness) {
        j["witness"] = ordered_json::object();
        j["witness"]["subset"] = json_of(r.witness->first);
        j["witness"]["superset"] = json_of(r.witness->second);
    } else {
        j["witness"] = nullptr;
    }
    j["solutions"] = ordered_json::array();
    for (const auto& s : r.solutions) j["solutions"].push_back(json_of(s));
    return j;
}

ordered_json json_of(const GenConfig& cfg) {
    ordered_json j;
    j["seed"] = cfg.seed;
    j["atoms"] = cfg.atoms;
    j["regular_rules"] = cfg.regular_rules;
    j["cr_rules"] = cfg.cr_rules;
    j["max_head"] = cfg.max_head;
    j["max_body"] = cfg.max_body;
    j["neg_prob"] = cfg.neg_prob;
    j["strong_neg_prob"] = cfg.strong_neg_prob;
    j["require"] = ordered_json::array();
    for (Requirement r : cfg.require) j["require"].push_back(to_string(r));
    j["max_attempts"] = cfg.max_attempts;
    return j;
}

ordered_json json_of(const Counterexample& ce) {
    ordered_json j;
    j["trial"] = ce.trial;
    j["config"] = json_of(ce.config);
    j["program"] = json_of(ce.program);
    j["report"] = json_of(ce.report);
    return j;
}

// elapsed stays out of the JSON so identical runs serialize
// byte-identically; the text report still shows it.
ordered_json json_of(const FalsifyReport& r) {
    ordered_json j;
    j["trials"] = r.trials;
    j["discarded"] = r.discarded;
    j["counterexample"] = r.counterexample ? json_of(*r.counterexample) : ordered_json(nullptr);
    return j;
}

}  // namespace crp
