#include "ontomcq/verbalize.hpp"

#include <cctype>

namespace ontomcq {

namespace {

bool starts_with_vowel(const std::string& s) {
    if (s.empty()) return false;
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::string with_article(const std::string& label) {
    return (starts_with_vowel(label) ? "an " : "a ") + label;
}

std::string role_phrase(const Ontology& o, TermId role) {
    if (const auto l = o.label(role)) return *l;
    return humanize(iri_local_name(o.term(role).lexical), false);
}

std::string filler_text(const Ontology& o, TermId filler) {
    const Term& t = o.term(filler);
    if (t.is_literal()) return t.lexical;
    return o.display(filler, true);
}

}  // namespace

std::string stem_sentence(const Ontology& o, const Stem& s) {
    std::string head;
    std::vector<std::string> clauses;
    bool headTaken = false;
    for (const Condition& c : s.conditions) {
        if (c.kind == Condition::Kind::Concept && !headTaken) {
            head = "Choose " + with_article(o.display(c.predicate, true));
            headTaken = true;
            continue;
        }
        switch (c.kind) {
            case Condition::Kind::Concept:
                clauses.push_back("is " + with_article(o.display(c.predicate, true)));
                break;
            case Condition::Kind::Outgoing:
            case Condition::Kind::Incoming:
            case Condition::Kind::DataEquals:
                clauses.push_back(role_phrase(o, c.predicate) + " " + filler_text(o, c.filler));
                break;
        }
    }
    if (!headTaken) head = "Choose the one";
    if (clauses.empty()) return head + ".";
    std::string out = head + ", which ";
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (i > 0) out += " and ";
        out += clauses[i];
    }
    return out + ".";
}

std::string option_letter(std::size_t index) {
    return std::string(1, static_cast<char>('A' + index));
}

std::vector<RenderedOption> render_options(const Ontology& o, const ChoiceSet& c) {
    std::vector<RenderedOption> out;
    std::size_t idx = 0;
    for (const TermId opt : c.optionOrder) {
        std::string letter(1, static_cast<char>('a' + idx));
        out.push_back({letter, o.display(opt, true)});
        ++idx;
    }
    out.push_back({std::string(1, static_cast<char>('a' + idx)), "SKIP"});
    out.push_back({std::string(1, static_cast<char>('a' + idx + 1)), "INVALID"});
    return out;
}

std::string verbalize(const Ontology& o, const Stem& s, const ChoiceSet& c) {
    std::string out = stem_sentence(o, s);
    for (const RenderedOption& opt : render_options(o, c)) {
        out += "\n";
        out += opt.letter;
        out += ". ";
        out += opt.text;
    }
    return out;
}

}  // namespace ontomcq
