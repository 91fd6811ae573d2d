#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "ontomcq/term.hpp"

namespace ontomcq {

/// An atomic predicate an instance can satisfy against a fixed ontology:
///   Concept(c)        — membership in concept c (inherited memberships count)
///   Outgoing(r, i)    — some triple (x, r, i); the "exists r.{i}" restriction
///   Incoming(r, i)    — some triple (i, r, x)
///   DataEquals(r, v)  — a datatype triple (x, r, v) with exactly literal v
struct Condition {
    enum class Kind : std::uint8_t { Concept, Outgoing, Incoming, DataEquals };

    Kind kind = Kind::Concept;
    TermId predicate = kNoTerm;  // concept for Concept, role otherwise
    TermId filler = kNoTerm;     // instance for Outgoing/Incoming, literal for DataEquals

    friend auto operator<=>(const Condition&, const Condition&) = default;
    friend bool operator==(const Condition&, const Condition&) = default;

    static Condition concept_membership(TermId c) { return {Kind::Concept, c, kNoTerm}; }
    static Condition outgoing(TermId role, TermId instance) { return {Kind::Outgoing, role, instance}; }
    static Condition incoming(TermId role, TermId instance) { return {Kind::Incoming, role, instance}; }
    static Condition data_equals(TermId role, TermId literal) { return {Kind::DataEquals, role, literal}; }
};

std::string to_string(Condition::Kind kind);

}  // namespace ontomcq
