#include "ontomcq/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ontomcq/errors.hpp"
#include "ontomcq/vocab.hpp"

namespace ontomcq {

namespace {

bool has_scheme(const std::string& iri) {
    if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
    for (std::size_t i = 1; i < iri.size(); ++i) {
        const char c = iri[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

class Scanner {
public:
    Scanner(std::string text, RdfFormat format) : text_(std::move(text)), format_(format) {}

    std::vector<RawTriple> parse() {
        skip_ws();
        while (!eof()) {
            parse_statement();
            skip_ws();
        }
        return std::move(triples_);
    }

private:
    // --- character stream ------------------------------------------------
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char peek_at(std::size_t offset) const {
        return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
    }
    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, col_);
    }

    void skip_ws() {
        while (!eof()) {
            const char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (eof() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
        advance();
    }

    bool try_consume(char c) {
        skip_ws();
        if (!eof() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    bool word_ahead(const char* w, bool caseInsensitive = false) const {
        std::size_t i = 0;
        for (; w[i] != '\0'; ++i) {
            const char have = peek_at(i);
            const char want = w[i];
            if (caseInsensitive) {
                if (std::tolower(static_cast<unsigned char>(have)) !=
                    std::tolower(static_cast<unsigned char>(want)))
                    return false;
            } else if (have != want) {
                return false;
            }
        }
        const char next = peek_at(i);
        // a name continuing past the keyword (a:x, truely) is not the keyword
        return next == '\0' || !(std::isalnum(static_cast<unsigned char>(next)) || next == '_' ||
                                 next == ':' || next == '-' || next == '.');
    }

    void consume_word(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) advance();
    }

    // --- statements --------------------------------------------------------
    void parse_statement() {
        if (format_ == RdfFormat::Turtle) {
            if (peek() == '@') {
                parse_at_directive();
                return;
            }
            if (word_ahead("PREFIX", true)) {
                consume_word(6);
                parse_prefix_binding();
                return;
            }
            if (word_ahead("BASE", true)) {
                consume_word(4);
                base_ = parse_iriref();
                return;
            }
        }
        parse_triples();
        expect('.', "to end the statement");
    }

    void parse_at_directive() {
        advance();  // '@'
        if (word_ahead("prefix")) {
            consume_word(6);
            parse_prefix_binding();
            expect('.', "after @prefix directive");
        } else if (word_ahead("base")) {
            consume_word(4);
            base_ = parse_iriref();
            expect('.', "after @base directive");
        } else {
            fail("unknown directive");
        }
    }

    void parse_prefix_binding() {
        skip_ws();
        std::string prefix;
        while (!eof() && peek() != ':') {
            const char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) fail("expected ':' in prefix name");
            prefix.push_back(advance());
        }
        expect(':', "in prefix declaration");
        prefixes_[prefix] = parse_iriref();
    }

    void parse_triples() {
        const Term subject = parse_subject();
        parse_predicate_object_list(subject);
    }

    void parse_predicate_object_list(const Term& subject) {
        for (;;) {
            const Term predicate = parse_verb();
            parse_object_list(subject, predicate);
            skip_ws();
            if (!try_consume(';')) return;
            skip_ws();
            // a trailing ';' before '.' is allowed
            if (eof() || peek() == '.') return;
        }
    }

    void parse_object_list(const Term& subject, const Term& predicate) {
        for (;;) {
            const Term object = parse_object();
            triples_.push_back({subject, predicate, object});
            if (!try_consume(',')) return;
        }
    }

    Term parse_subject() {
        skip_ws();
        if (eof()) fail("expected a subject");
        switch (peek()) {
            case '[': fail("unsupported construct: anonymous blank node '[]'");
            case '(': fail("unsupported construct: RDF collection '()'");
            case '{': fail("unsupported construct: graph block '{}'");
            default: break;
        }
        if (peek() == '_') return parse_blank_node();
        return parse_iri_term();
    }

    Term parse_verb() {
        skip_ws();
        if (format_ == RdfFormat::Turtle && word_ahead("a")) {
            consume_word(1);
            return Term{TermKind::Iri, std::string(vocab::kRdfType), "", ""};
        }
        return parse_iri_term();
    }

    Term parse_object() {
        skip_ws();
        if (eof()) fail("expected an object");
        const char c = peek();
        if (c == '[') fail("unsupported construct: anonymous blank node '[]'");
        if (c == '(') fail("unsupported construct: RDF collection '()'");
        if (c == '_') return parse_blank_node();
        if (c == '"' || c == '\'') return parse_string_literal();
        if (format_ == RdfFormat::Turtle) {
            if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c)))
                return parse_numeric_literal();
            if (word_ahead("true")) {
                consume_word(4);
                return make_typed("true", vocab::kXsdBoolean);
            }
            if (word_ahead("false")) {
                consume_word(5);
                return make_typed("false", vocab::kXsdBoolean);
            }
        }
        return parse_iri_term();
    }

    static Term make_typed(std::string lexical, std::string_view datatype) {
        return Term{TermKind::Literal, std::move(lexical), std::string(datatype), ""};
    }

    Term parse_blank_node() {
        advance();  // '_'
        if (eof() || peek() != ':') fail("expected ':' after '_' in blank node label");
        advance();
        std::string name;
        while (!eof()) {
            const char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
                name.push_back(advance());
            } else if (c == '.' && (std::isalnum(static_cast<unsigned char>(peek_at(1))) ||
                                    peek_at(1) == '_')) {
                name.push_back(advance());
            } else {
                break;
            }
        }
        if (name.empty()) fail("empty blank node label");
        return Term{TermKind::Blank, name, "", ""};
    }

    Term parse_iri_term() {
        skip_ws();
        if (eof()) fail("expected an IRI");
        if (peek() == '<') return Term{TermKind::Iri, parse_iriref(), "", ""};
        if (format_ == RdfFormat::NTriples) fail("expected '<' to begin an IRI");
        return Term{TermKind::Iri, parse_prefixed_name(), "", ""};
    }

    std::string parse_iriref() {
        skip_ws();
        if (eof() || peek() != '<') fail("expected '<' to begin an IRI");
        advance();
        std::string iri;
        while (true) {
            if (eof()) fail("unterminated IRI");
            char c = advance();
            if (c == '>') break;
            if (c == '\\') {
                iri += read_ucs_escape();
            } else if (c == ' ' || c == '\n' || c == '\t') {
                fail("whitespace inside IRI");
            } else {
                iri.push_back(c);
            }
        }
        if (!has_scheme(iri) && !base_.empty()) return base_ + iri;
        return iri;
    }

    std::string read_ucs_escape() {
        if (eof()) fail("dangling escape");
        const char kind = advance();
        std::size_t n = 0;
        if (kind == 'u')
            n = 4;
        else if (kind == 'U')
            n = 8;
        else
            fail(std::string("unsupported escape '\\") + kind + "' in IRI");
        unsigned long cp = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (eof()) fail("truncated \\u escape");
            const char c = advance();
            cp <<= 4;
            if (c >= '0' && c <= '9')
                cp += static_cast<unsigned long>(c - '0');
            else if (c >= 'a' && c <= 'f')
                cp += static_cast<unsigned long>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                cp += static_cast<unsigned long>(c - 'A' + 10);
            else
                fail("bad hex digit in \\u escape");
        }
        std::string out;
        append_utf8(out, cp);
        return out;
    }

    std::string parse_prefixed_name() {
        std::string prefix;
        while (!eof()) {
            const char c = peek();
            if (c == ':') break;
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
                prefix.push_back(advance());
            } else {
                fail("expected a prefixed name or IRI");
            }
        }
        if (eof() || peek() != ':') fail("expected ':' in prefixed name");
        advance();
        const auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + ":'");
        std::string local;
        while (!eof()) {
            const char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '%') {
                local.push_back(advance());
            } else if (c == '.' && (std::isalnum(static_cast<unsigned char>(peek_at(1))) ||
                                    peek_at(1) == '_' || peek_at(1) == '-')) {
                local.push_back(advance());  // dot inside a local name, not end of statement
            } else {
                break;
            }
        }
        return it->second + local;
    }

    Term parse_string_literal() {
        const char quote = advance();
        bool longString = false;
        if (peek() == quote && peek_at(1) == quote) {
            advance();
            advance();
            longString = true;
        }
        std::string value;
        for (;;) {
            if (eof()) fail("unterminated string literal");
            char c = advance();
            if (c == quote) {
                if (!longString) break;
                if (peek() == quote && peek_at(1) == quote) {
                    advance();
                    advance();
                    break;
                }
                value.push_back(c);
                continue;
            }
            if (c == '\\') {
                if (eof()) fail("dangling escape in string");
                const char e = peek();
                switch (e) {
                    case 't': value.push_back('\t'); advance(); break;
                    case 'b': value.push_back('\b'); advance(); break;
                    case 'n': value.push_back('\n'); advance(); break;
                    case 'r': value.push_back('\r'); advance(); break;
                    case 'f': value.push_back('\f'); advance(); break;
                    case '"': value.push_back('"'); advance(); break;
                    case '\'': value.push_back('\''); advance(); break;
                    case '\\': value.push_back('\\'); advance(); break;
                    case 'u':
                    case 'U': value += read_ucs_escape(); break;
                    default: fail(std::string("unsupported escape '\\") + e + "' in string");
                }
                continue;
            }
            if (!longString && c == '\n') fail("newline in single-line string literal");
            value.push_back(c);
        }
        // language tag or datatype
        if (!eof() && peek() == '@') {
            advance();
            std::string lang;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
                lang.push_back(advance());
            if (lang.empty()) fail("empty language tag");
            return Term{TermKind::Literal, value, "", lang};
        }
        if (!eof() && peek() == '^' && peek_at(1) == '^') {
            advance();
            advance();
            const Term dt = parse_iri_term();
            return Term{TermKind::Literal, value, dt.lexical, ""};
        }
        return Term{TermKind::Literal, value, "", ""};
    }

    Term parse_numeric_literal() {
        std::string lex;
        bool sawDigit = false, sawDot = false, sawExp = false;
        if (peek() == '+' || peek() == '-') lex.push_back(advance());
        while (!eof()) {
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                sawDigit = true;
                lex.push_back(advance());
            } else if (c == '.' && !sawDot && !sawExp &&
                       std::isdigit(static_cast<unsigned char>(peek_at(1)))) {
                sawDot = true;
                lex.push_back(advance());
            } else if ((c == 'e' || c == 'E') && sawDigit && !sawExp) {
                sawExp = true;
                lex.push_back(advance());
                if (!eof() && (peek() == '+' || peek() == '-')) lex.push_back(advance());
            } else {
                break;
            }
        }
        if (!sawDigit) fail("malformed numeric literal");
        const std::string_view dt =
            sawExp ? vocab::kXsdDouble : (sawDot ? vocab::kXsdDecimal : vocab::kXsdInteger);
        return make_typed(lex, dt);
    }

    std::string text_;
    RdfFormat format_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::string base_;
    std::map<std::string, std::string> prefixes_;
    std::vector<RawTriple> triples_;
};

std::string escape_for_ntriples(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string term_to_ntriples(const Term& t) {
    switch (t.kind) {
        case TermKind::Iri: return "<" + t.lexical + ">";
        case TermKind::Blank: return "_:" + t.lexical;
        default: {
            std::string out = "\"" + escape_for_ntriples(t.lexical) + "\"";
            if (!t.lang.empty())
                out += "@" + t.lang;
            else if (!t.datatype.empty())
                out += "^^<" + t.datatype + ">";
            return out;
        }
    }
}

}  // namespace

std::vector<RawTriple> parse_rdf(const std::string& text, RdfFormat format) {
    Scanner scanner(text, format);
    return scanner.parse();
}

std::vector<RawTriple> parse_rdf(std::istream& in, RdfFormat format) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rdf(buf.str(), format);
}

std::vector<RawTriple> parse_rdf_file(const std::string& path, RdfFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open ontology file: " + path);
    return parse_rdf(in, format);
}

RdfFormat format_from_path(const std::string& path) {
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".nt") == 0)
        return RdfFormat::NTriples;
    return RdfFormat::Turtle;
}

std::string to_ntriples(const std::vector<RawTriple>& triples) {
    std::set<std::string> lines;
    for (const auto& t : triples) {
        lines.insert(term_to_ntriples(t.subject) + " " + term_to_ntriples(t.predicate) + " " +
                     term_to_ntriples(t.object) + " .");
    }
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += "\n";
    }
    return out;
}

}  // namespace ontomcq
