#include "ontomcq/pattern.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ontomcq/errors.hpp"

namespace ontomcq {

namespace {

std::string term_repr(const Ontology& o, TermId id) {
    const Term& t = o.term(id);
    switch (t.kind) {
        case TermKind::Iri: return t.lexical;
        case TermKind::Blank: return "_:" + t.lexical;
        default: return "\"" + t.lexical + "\"^^" + t.datatype + "@" + t.lang;
    }
}

std::string condition_key(const Ontology& o, const Condition& c) {
    return std::to_string(static_cast<int>(c.kind)) + "|" + term_repr(o, c.predicate) +
           (c.filler == kNoTerm ? "" : "|" + term_repr(o, c.filler));
}

SlotKind slot_kind_from_name(const std::string& name) {
    if (name == "type") return SlotKind::Type;
    if (name == "out") return SlotKind::OutgoingRole;
    if (name == "in") return SlotKind::IncomingRole;
    if (name == "data") return SlotKind::Datatype;
    throw DataError("unknown pattern slot '" + name + "' (expected type|out|in|data)");
}

/// A constraint matches by full IRI, or failing that by local name.
bool constraint_matches(const Ontology& o, const std::string& constraint, TermId id) {
    const Term& t = o.term(id);
    if (t.kind != TermKind::Iri) return false;
    return t.lexical == constraint || iri_local_name(t.lexical) == constraint;
}

}  // namespace

PatternShape pattern_p1() { return {"p1", {{SlotKind::IncomingRole, {}}, {SlotKind::Datatype, {}}}}; }
PatternShape pattern_p2() { return {"p2", {{SlotKind::IncomingRole, {}}, {SlotKind::IncomingRole, {}}}}; }
PatternShape pattern_p3() { return {"p3", {{SlotKind::OutgoingRole, {}}}}; }

PatternShape parse_pattern(const std::string& token) {
    if (token == "p1") return pattern_p1();
    if (token == "p2") return pattern_p2();
    if (token == "p3") return pattern_p3();
    PatternShape shape{token, {}};
    std::size_t pos = 0;
    while (pos <= token.size()) {
        const std::size_t plus = token.find('+', pos);
        std::string part = token.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        if (part.empty()) throw DataError("empty slot in pattern '" + token + "'");
        std::optional<std::string> constraint;
        const std::size_t eq = part.find('=');
        if (eq != std::string::npos) {
            constraint = part.substr(eq + 1);
            part = part.substr(0, eq);
        }
        shape.slots.push_back({slot_kind_from_name(part), std::move(constraint)});
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    if (shape.slots.empty()) throw DataError("pattern '" + token + "' has no slots");
    return shape;
}

std::vector<PatternShape> parse_patterns(const std::string& csv) {
    std::vector<PatternShape> shapes;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) shapes.push_back(parse_pattern(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (shapes.empty()) throw DataError("no patterns given");
    return shapes;
}

std::string Stem::identity(const Ontology& o) const {
    std::string out = term_repr(o, pivot) + "|" + shape.name;
    for (const auto& c : conditions) out += "|" + condition_key(o, c);
    return out;
}

std::vector<Stem> enumerate_stems(const Ontology& o, const std::vector<PatternShape>& shapes,
                                  std::optional<std::size_t> limit) {
    std::vector<std::pair<std::string, TermId>> pivots;
    for (const TermId i : o.instances())
        if (!o.is_blank(i)) pivots.emplace_back(o.term(i).lexical, i);
    std::sort(pivots.begin(), pivots.end());

    std::vector<Stem> result;
    for (const auto& [pivotIri, pivot] : pivots) {
        for (const auto& shape : shapes) {
            // candidate conditions per slot, sorted for a stable tuple order
            std::vector<std::vector<Condition>> perSlot;
            perSlot.reserve(shape.slots.size());
            for (const Slot& slot : shape.slots) {
                std::vector<Condition> cands;
                switch (slot.kind) {
                    case SlotKind::OutgoingRole:
                        for (const Edge& e : o.outgoing(pivot))
                            cands.push_back(Condition::outgoing(e.role, e.other));
                        break;
                    case SlotKind::IncomingRole:
                        for (const Edge& e : o.incoming(pivot))
                            cands.push_back(Condition::incoming(e.role, e.other));
                        break;
                    case SlotKind::Datatype:
                        for (const Edge& e : o.data_of(pivot))
                            cands.push_back(Condition::data_equals(e.role, e.other));
                        break;
                    case SlotKind::Type:
                        for (const TermId c : o.types_of(pivot))
                            cands.push_back(Condition::concept_membership(c));
                        break;
                }
                if (slot.constraint) {
                    std::erase_if(cands, [&](const Condition& c) {
                        return !constraint_matches(o, *slot.constraint, c.predicate);
                    });
                }
                std::sort(cands.begin(), cands.end(), [&](const Condition& a, const Condition& b) {
                    return condition_key(o, a) < condition_key(o, b);
                });
                perSlot.push_back(std::move(cands));
            }

            // depth-first tuple assembly; permutations of the same condition
            // set collapse to one stem
            std::set<std::set<Condition>> seen;
            std::vector<Condition> current;
            std::function<void(std::size_t)> assemble = [&](std::size_t slotIdx) {
                if (slotIdx == shape.slots.size()) {
                    std::set<Condition> asSet(current.begin(), current.end());
                    if (asSet.size() != current.size()) return;  // a triple bound twice
                    if (!seen.insert(asSet).second) return;
                    result.push_back({pivot, current, shape, ""});
                    return;
                }
                for (const Condition& c : perSlot[slotIdx]) {
                    current.push_back(c);
                    assemble(slotIdx + 1);
                    current.pop_back();
                }
            };
            assemble(0);
        }
    }
    if (limit && result.size() > *limit) result.resize(*limit);
    return result;
}

std::set<TermId> potential_set(const Ontology& o, const Stem& s) {
    std::set<TermId> pool = o.instances();

    auto restrict_to_concepts = [&](const std::set<TermId>& concepts) {
        for (const TermId c : concepts) {
            const std::set<TermId> members = o.satisfiers(Condition::concept_membership(c));
            std::set<TermId> kept;
            std::set_intersection(pool.begin(), pool.end(), members.begin(), members.end(),
                                  std::inserter(kept, kept.begin()));
            pool = std::move(kept);
        }
    };

    for (std::size_t i = 0; i < s.conditions.size(); ++i) {
        const Condition& c = s.conditions[i];
        switch (c.kind) {
            case Condition::Kind::Concept:
                restrict_to_concepts({c.predicate});
                break;
            case Condition::Kind::Outgoing:
            case Condition::Kind::DataEquals:
                restrict_to_concepts(o.declared_domains(c.predicate));
                break;
            case Condition::Kind::Incoming:
                restrict_to_concepts(o.declared_ranges(c.predicate));
                break;
        }
    }
    return pool;
}

}  // namespace ontomcq
