#pragma once

// Converts between the library's interned representations and the string
// world the naive oracle lives in.

#include <set>
#include <string>

#include "naive_oracle.hpp"
#include "ontomcq/ontology.hpp"
#include "ontomcq/pattern.hpp"

namespace ontomcq::testsupport {

inline std::string term_string(const Ontology& o, TermId id) {
    const Term& t = o.term(id);
    if (t.kind == TermKind::Blank) return "_:" + t.lexical;
    if (t.kind == TermKind::Literal) return naive_literal_repr(t);
    return t.lexical;
}

inline NCondition to_ncondition(const Ontology& o, const Condition& c) {
    switch (c.kind) {
        case Condition::Kind::Concept: return {"concept", term_string(o, c.predicate), ""};
        case Condition::Kind::Outgoing:
            return {"out", term_string(o, c.predicate), term_string(o, c.filler)};
        case Condition::Kind::Incoming:
            return {"in", term_string(o, c.predicate), term_string(o, c.filler)};
        default: return {"data", term_string(o, c.predicate), term_string(o, c.filler)};
    }
}

inline NStem to_nstem(const Ontology& o, const Stem& s) {
    NStem out;
    out.pivot = term_string(o, s.pivot);
    for (const Condition& c : s.conditions) out.conditions.push_back(to_ncondition(o, c));
    return out;
}

inline std::set<std::string> id_strings(const Ontology& o, const std::set<TermId>& ids) {
    std::set<std::string> out;
    for (const TermId id : ids) out.insert(term_string(o, id));
    return out;
}

}  // namespace ontomcq::testsupport
