#include "crp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "crp/antichain.hpp"
#include "crp/ap_semantics.hpp"
#include "crp/cr_semantics.hpp"
#include "crp/depgraph.hpp"
#include "crp/json_io.hpp"
#include "crp/parser.hpp"
#include "crp/proofs.hpp"
#include "crp/transform.hpp"

namespace crp::cli {

namespace {

using nlohmann::ordered_json;

Program load_program(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream text;
        text << in.rdbuf();
        return parse_program(text.str());
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream text;
    text << file.rdbuf();
    return parse_program(text.str());
}

std::string support_text(const Program& p, const AbductiveSupport& s) {
    if (s.cr_rule_ids.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < s.cr_rule_ids.size(); ++i) {
        if (i > 0) out += "; ";
        out += std::to_string(s.cr_rule_ids[i]) + ": " + to_string(p.rule(s.cr_rule_ids[i]));
    }
    return out;
}

std::string solution_line(const Program& p, const CrSolution& s) {
    return to_string(s.answer_set) + " [support: " + support_text(p, s.support) + "]";
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int cmd_solve(std::ostream& out, const Program& p, const std::string& format,
              int max_universe) {
    auto solutions = cr_answer_sets(p, max_universe);
    if (format == "json") {
        ordered_json j;
        j["consistent"] = !solutions.empty();
        j["solutions"] = ordered_json::array();
        for (const auto& s : solutions) j["solutions"].push_back(json_of(s));
        emit_json(out, j);
    } else if (solutions.empty()) {
        out << "inconsistent\n";
    } else {
        for (const auto& s : solutions) out << solution_line(p, s) << "\n";
    }
    return solutions.empty() ? kInconsistent : kOk;
}

int cmd_analyze(std::ostream& out, const Program& p, const std::string& format) {
    DepGraph g = build_graph(p);
    const bool acyclic = is_acyclic(g);
    const bool hcf = !has_head_cycle(p, g);
    const bool cr_independent = is_cr_independent(p);
    const bool nondisjunctive = p.is_nondisjunctive();
    const bool regular_only = p.is_regular_only();
    const bool guaranteed = regular_only || (acyclic && cr_independent);
    if (format == "json") {
        ordered_json j;
        j["acyclic"] = acyclic;
        j["head_cycle_free"] = hcf;
        j["cr_independent"] = cr_independent;
        j["nondisjunctive"] = nondisjunctive;
        j["regular_only"] = regular_only;
        j["antichain_guaranteed"] = guaranteed;
        emit_json(out, j);
    } else {
        auto yesno = [](bool b) { return b ? "yes" : "no"; };
        out << "acyclic: " << yesno(acyclic) << "\n"
            << "head-cycle-free: " << yesno(hcf) << "\n"
            << "cr-independent: " << yesno(cr_independent) << "\n"
            << "nondisjunctive: " << yesno(nondisjunctive) << "\n"
            << "regular-only: " << yesno(regular_only) << "\n"
            << "antichain-guaranteed: " << yesno(guaranteed) << "\n";
    }
    return kOk;
}

int cmd_antichain(std::ostream& out, const Program& p, const std::string& format,
                  int max_universe) {
    AntichainReport report = check_antichain(p, max_universe);
    if (format == "json") {
        emit_json(out, json_of(report));
    } else {
        out << "antichain property " << (report.holds ? "holds" : "violated") << "\n";
        if (report.witness)
            out << "witness: " << to_string(report.witness->first) << " < "
                << to_string(report.witness->second) << "\n";
        out << "solutions:\n";
        for (const auto& s : report.solutions) out << "  " << solution_line(p, s) << "\n";
    }
    return report.holds ? kOk : kAntichainViolated;
}

int cmd_graph(std::ostream& out, const Program& p, const std::string& format) {
    DepGraph g = build_graph(p);
    if (format == "dot") {
        out << to_dot(g);
    } else if (format == "json") {
        out << to_json(g) << "\n";
    } else {
        out << "vertices:";
        for (const auto& v : g.vertices()) out << " " << to_string(v);
        out << "\nedges:\n";
        for (const auto& [to, from] : g.edges())
            out << "  " << to_string(from) << " -> " << to_string(to) << "\n";
    }
    return kOk;
}

int cmd_proofs(std::ostream& out, const Program& p, const Literal& literal,
               const std::string& format, int max_universe) {
    auto solutions = cr_answer_sets(p, max_universe);
    if (solutions.empty()) {
        if (format == "json") {
            ordered_json j;
            j["literal"] = to_string(literal);
            j["consistent"] = false;
            j["solutions"] = ordered_json::array();
            emit_json(out, j);
        } else {
            out << "inconsistent\n";
        }
        return kInconsistent;
    }
    ordered_json jsolutions = ordered_json::array();
    std::ostringstream text;
    for (const auto& s : solutions) {
        Program applied = apply_support(p, s.support);
        text << "answer set " << solution_line(p, s) << "\n";
        ordered_json js;
        js["answer_set"] = json_of(s.answer_set);
        js["support"] = json_of(s.support);
        if (!s.answer_set.contains(literal)) {
            js["in_answer_set"] = false;
            text << "  literal " << to_string(literal) << " not in this answer set\n";
        } else {
            int r = rank(applied, s.answer_set, literal);
            auto proofs = enumerate_proofs(applied, s.answer_set, literal, r);
            js["in_answer_set"] = true;
            js["rank"] = r;
            js["minimal_proofs"] = ordered_json::array();
            text << "  rank(" << to_string(literal) << ") = " << r << "\n";
            for (std::size_t i = 0; i < proofs.size(); ++i) {
                js["minimal_proofs"].push_back(json_of(proofs[i]));
                text << "  minimal proof " << (i + 1) << ":\n";
                for (const auto& step : proofs[i].steps)
                    text << "    " << step.rule_id << ": " << to_string(applied.rule(step.rule_id))
                         << "  supports " << to_string(step.supported) << "\n";
            }
        }
        jsolutions.push_back(js);
    }
    if (format == "json") {
        ordered_json j;
        j["literal"] = to_string(literal);
        j["consistent"] = true;
        j["solutions"] = jsolutions;
        emit_json(out, j);
    } else {
        out << text.str();
    }
    return kOk;
}

int cmd_shift(std::ostream& out, const Program& p, const std::string& format) {
    Program shifted = shift(p);
    if (format == "json")
        emit_json(out, json_of(shifted));
    else
        out << render_program(shifted);
    return kOk;
}

struct FuzzOptions {
    GenConfig cfg;
    std::string target = "acyclic-cr-independent";
    int trials = 100;
    std::vector<std::string> require;
};

FalsifyTarget target_from_name(const std::string& name) {
    if (name == "regular") return FalsifyTarget::RegularOnly;
    if (name == "acyclic-cr-independent") return FalsifyTarget::AcyclicCrIndependent;
    return FalsifyTarget::CrIndependentOnly;
}

Requirement requirement_from_name(const std::string& name) {
    if (name == "acyclic") return Requirement::Acyclic;
    if (name == "cr-independent") return Requirement::CrIndependent;
    if (name == "nondisjunctive") return Requirement::Nondisjunctive;
    return Requirement::Hcf;
}

int cmd_fuzz(std::ostream& out, const FuzzOptions& opts, const std::string& format,
             int max_universe) {
    GenConfig cfg = opts.cfg;
    for (const auto& name : opts.require) cfg.require.insert(requirement_from_name(name));
    FalsifyTarget target = target_from_name(opts.target);
    FalsifyReport report = falsify(cfg, opts.trials, target, max_universe);
    if (format == "json") {
        ordered_json j;
        j["target"] = to_string(target);
        j.update(json_of(report));
        emit_json(out, j);
    } else {
        out << "target: " << to_string(target) << "\n"
            << "trials: " << report.trials << "\n"
            << "discarded: " << report.discarded << "\n"
            << "elapsed: " << report.elapsed.count() << " ms\n";
        if (!report.counterexample) {
            out << "no counterexample found\n";
        } else {
            const Counterexample& ce = *report.counterexample;
            out << "counterexample at trial " << ce.trial << " (seed " << ce.config.seed
                << ")\nprogram:\n"
                << render_program(ce.program);
            if (ce.report.witness)
                out << "witness: " << to_string(ce.report.witness->first) << " < "
                    << to_string(ce.report.witness->second) << "\n";
        }
    }
    return report.counterexample ? kCounterexample : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
    CLI::App app{"CR-Prolog ground program analyzer"};
    app.name("crpcheck");
    app.require_subcommand(1);

    std::string path = "-";
    std::string format = "text";
    std::string literal_text;
    int max_universe = kDefaultMaxUniverse;
    FuzzOptions fuzz;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "program file, or - for standard input")->required();
        cmd->add_option("--max-universe", max_universe,
                        "largest literal universe the enumerator accepts");
    };
    auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };

    CLI::App* solve = app.add_subcommand("solve", "answer sets with their abductive supports");
    add_input(solve);
    add_format(solve, {"text", "json"});

    CLI::App* analyze = app.add_subcommand("analyze", "structural properties of the program");
    analyze->add_option("file", path, "program file, or - for standard input")->required();
    add_format(analyze, {"text", "json"});

    CLI::App* antichain = app.add_subcommand("antichain",
                                             "check that no answer set contains another");
    add_input(antichain);
    add_format(antichain, {"text", "json"});

    CLI::App* graph = app.add_subcommand("graph", "literal dependency graph");
    graph->add_option("file", path, "program file, or - for standard input")->required();
    add_format(graph, {"text", "json", "dot"});

    CLI::App* proofs = app.add_subcommand("proofs", "rank and minimal proofs of a literal");
    add_input(proofs);
    proofs->add_option("--literal", literal_text, "literal to prove, e.g. a or -a")->required();
    add_format(proofs, {"text", "json"});

    CLI::App* shift_cmd = app.add_subcommand("shift",
                                             "rewrite disjunctive heads into single-head rules");
    shift_cmd->add_option("file", path, "program file, or - for standard input")->required();
    add_format(shift_cmd, {"text", "json"});

    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "search random programs for antichain "
                                                    "violations");
    fuzz_cmd->add_option("--target", fuzz.target, "program family to search")
        ->check(CLI::IsMember({"regular", "acyclic-cr-independent", "cr-independent"}))
        ->capture_default_str();
    fuzz_cmd->add_option("--trials", fuzz.trials, "number of random programs")
        ->capture_default_str();
    fuzz_cmd->add_option("--seed", fuzz.cfg.seed, "base seed")->capture_default_str();
    fuzz_cmd->add_option("--atoms", fuzz.cfg.atoms, "atom count")->capture_default_str();
    fuzz_cmd->add_option("--regular-rules", fuzz.cfg.regular_rules, "regular rule count")
        ->capture_default_str();
    fuzz_cmd->add_option("--cr-rules", fuzz.cfg.cr_rules, "cr-rule count")
        ->capture_default_str();
    fuzz_cmd->add_option("--max-head", fuzz.cfg.max_head, "largest head size")
        ->capture_default_str();
    fuzz_cmd->add_option("--max-body", fuzz.cfg.max_body, "largest body size")
        ->capture_default_str();
    fuzz_cmd->add_option("--neg-prob", fuzz.cfg.neg_prob, "chance a body literal is negated")
        ->capture_default_str();
    fuzz_cmd->add_option("--strong-neg-prob", fuzz.cfg.strong_neg_prob,
                         "chance a literal is strongly negated")
        ->capture_default_str();
    fuzz_cmd->add_option("--require", fuzz.require, "extra structural requirements")
        ->check(CLI::IsMember({"acyclic", "cr-independent", "nondisjunctive", "hcf"}));
    fuzz_cmd->add_option("--max-attempts", fuzz.cfg.max_attempts,
                         "rejection sampling budget per trial")
        ->capture_default_str();
    fuzz_cmd->add_option("--max-universe", max_universe,
                         "largest literal universe the enumerator accepts");
    add_format(fuzz_cmd, {"text", "json"});

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("crpcheck");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kError;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (fuzz_cmd->parsed()) {
            code = cmd_fuzz(buffer, fuzz, format, max_universe);
        } else {
            Program p = load_program(path, in);
            if (solve->parsed())
                code = cmd_solve(buffer, p, format, max_universe);
            else if (analyze->parsed())
                code = cmd_analyze(buffer, p, format);
            else if (antichain->parsed())
                code = cmd_antichain(buffer, p, format, max_universe);
            else if (graph->parsed())
                code = cmd_graph(buffer, p, format);
            else if (proofs->parsed())
                code = cmd_proofs(buffer, p, parse_literal(literal_text), format, max_universe);
            else if (shift_cmd->parsed())
                code = cmd_shift(buffer, p, format);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    out << buffer.str();
    return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run(args, out, err, std::cin);
}

}  // namespace crp::cli
