#include "crp/model.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crp {

bool is_valid_atom_name(std::string_view name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    });
}

Atom::Atom(std::string name) : name_(std::move(name)) {
    if (!is_valid_atom_name(name_))
        throw std::invalid_argument("invalid atom name: '" + name_ + "'");
}

Literal complement(const Literal& l) { return Literal(l.atom(), !l.negated()); }

namespace {

// Set semantics for rule parts: drop repeated literals, keep first
// occurrence order.
std::vector<Literal> dedupe(std::vector<Literal> lits) {
    std::vector<Literal> out;
    out.reserve(lits.size());
    for (auto& l : lits)
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
    return out;
}

}  // namespace

Rule::Rule(int id, RuleKind kind, std::vector<Literal> head, std::vector<Literal> pos_body,
           std::vector<Literal> neg_body)
    : id_(id),
      kind_(kind),
      head_(dedupe(std::move(head))),
      pos_body_(dedupe(std::move(pos_body))),
      neg_body_(dedupe(std::move(neg_body))) {
    if (head_.empty()) throw std::invalid_argument("rule head must not be empty");
    if (kind_ == RuleKind::Cr && head_.size() != 1)
        throw std::invalid_argument("cr-rule head must be a single literal");
}

Rule Rule::with_id(int id) const { return Rule(id, kind_, head_, pos_body_, neg_body_); }

Program::Program(std::vector<Rule> rules) {
    rules_.reserve(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i)
        rules_.push_back(rules[i].with_id(static_cast<int>(i)));
}

const Rule& Program::rule(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= rules_.size())
        throw std::out_of_range("no rule with id " + std::to_string(id));
    return rules_[static_cast<std::size_t>(id)];
}

std::vector<Rule> Program::regular_rules() const {
    std::vector<Rule> out;
    for (const auto& r : rules_)
        if (r.kind() == RuleKind::Regular) out.push_back(r);
    return out;
}

std::vector<Rule> Program::cr_rules() const {
    std::vector<Rule> out;
    for (const auto& r : rules_)
        if (r.kind() == RuleKind::Cr) out.push_back(r);
    return out;
}

bool Program::is_regular_only() const {
    return std::all_of(rules_.begin(), rules_.end(),
                       [](const Rule& r) { return r.kind() == RuleKind::Regular; });
}

bool Program::is_nondisjunctive() const {
    return std::all_of(rules_.begin(), rules_.end(),
                       [](const Rule& r) { return r.is_nondisjunctive(); });
}

bool Program::is_naf_free() const {
    return std::all_of(rules_.begin(), rules_.end(),
                       [](const Rule& r) { return r.is_naf_free(); });
}

Context::Context(std::vector<Literal> literals) : lits_(std::move(literals)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Context::Context(std::initializer_list<Literal> literals)
    : Context(std::vector<Literal>(literals)) {}

bool Context::contains(const Literal& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Context::subset_of(const Context& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

bool Context::proper_subset_of(const Context& other) const {
    return lits_.size() < other.lits_.size() && subset_of(other);
}

Context Context::plus(const Literal& l) const {
    auto lits = lits_;
    lits.push_back(l);
    return Context(std::move(lits));
}

bool is_consistent(const Context& c) {
    for (const auto& l : c)
        if (!l.negated() && c.contains(complement(l))) return false;
    return true;
}

Context intersect(const Context& a, const Context& b) {
    std::vector<Literal> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Context(std::move(out));
}

Context unite(const Context& a, const Context& b) {
    std::vector<Literal> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Context(std::move(out));
}

bool canonical_less(const Context& a, const Context& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Context literal_universe(const Program& p) {
    std::vector<Literal> lits;
    for (const auto& r : p.rules()) {
        lits.insert(lits.end(), r.head().begin(), r.head().end());
        lits.insert(lits.end(), r.pos_body().begin(), r.pos_body().end());
        lits.insert(lits.end(), r.neg_body().begin(), r.neg_body().end());
    }
    return Context(std::move(lits));
}

std::string to_string(const Literal& l) {
    return l.negated() ? "-" + l.atom().name() : l.atom().name();
}

std::string to_string(const ExtendedLiteral& e) {
    return e.naf ? "not " + to_string(e.literal) : to_string(e.literal);
}

std::string to_string(const Context& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(c.literals()[i]);
    }
    return out + "}";
}

std::string to_string(const Rule& r) {
    std::string out;
    for (std::size_t i = 0; i < r.head().size(); ++i) {
        if (i > 0) out += " | ";
        out += to_string(r.head()[i]);
    }
    const bool has_body = !r.pos_body().empty() || !r.neg_body().empty();
    if (r.kind() == RuleKind::Cr)
        out += has_body ? " :+ " : " :+";
    else if (has_body)
        out += " :- ";
    bool first = true;
    for (const auto& l : r.pos_body()) {
        if (!first) out += ", ";
        out += to_string(l);
        first = false;
    }
    for (const auto& l : r.neg_body()) {
        if (!first) out += ", ";
        out += "not " + to_string(l);
        first = false;
    }
    return out + ".";
}

std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << to_string(l); }
std::ostream& operator<<(std::ostream& os, const Context& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const Rule& r) { return os << to_string(r); }

}  // namespace crp
