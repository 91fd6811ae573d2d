#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ontomcq {

/// Index into an Ontology's interned term table.
using TermId = std::uint32_t;

inline constexpr TermId kNoTerm = static_cast<TermId>(-1);

enum class TermKind : std::uint8_t { Iri, Blank, Literal };

/// One RDF term. Literals carry an optional datatype IRI or language tag
/// in `datatype` / `lang`; both stay empty for plain literals.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string lexical;
    std::string datatype;
    std::string lang;

    friend auto operator<=>(const Term&, const Term&) = default;
    friend bool operator==(const Term&, const Term&) = default;

    bool is_literal() const { return kind == TermKind::Literal; }
    bool is_blank() const { return kind == TermKind::Blank; }
};

/// A parsed triple, before interning.
struct RawTriple {
    Term subject;
    Term predicate;
    Term object;

    friend auto operator<=>(const RawTriple&, const RawTriple&) = default;
    friend bool operator==(const RawTriple&, const RawTriple&) = default;
};

/// Returns the local-name part of an IRI (after the last '#', '/' or ':').
std::string iri_local_name(const std::string& iri);

/// Turns an identifier into display text: camelCase and underscore/hyphen
/// boundaries become spaces, the first letter is capitalized.
/// "isDirectedBy" -> "Is directed by", with `capitalize=false` -> "is directed by".
std::string humanize(const std::string& localName, bool capitalize);

}  // namespace ontomcq
