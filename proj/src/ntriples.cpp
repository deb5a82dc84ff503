#include "ontoembed/ntriples.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ontoembed {

namespace {

struct Cursor {
    const std::string& line;
    std::size_t pos = 0;
    std::size_t lineno;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(lineno, msg);
    }
    bool done() const { return pos >= line.size(); }
    char peek() const { return done() ? '\0' : line[pos]; }
    void skip_ws() {
        while (!done() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
};

void append_utf8(std::string& out, std::uint32_t cp) {
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

std::uint32_t parse_hex(Cursor& c, int digits) {
    std::uint32_t value = 0;
    for (int i = 0; i < digits; ++i) {
        if (c.done()) c.fail("truncated \\u escape");
        const char ch = c.line[c.pos++];
        value <<= 4;
        if (ch >= '0' && ch <= '9') value |= static_cast<std::uint32_t>(ch - '0');
        else if (ch >= 'a' && ch <= 'f') value |= static_cast<std::uint32_t>(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F') value |= static_cast<std::uint32_t>(ch - 'A' + 10);
        else c.fail("bad hex digit in escape");
    }
    return value;
}

Iri parse_iri(Cursor& c) {
    if (c.peek() != '<') c.fail("expected '<'");
    ++c.pos;
    std::string out;
    while (true) {
        if (c.done()) c.fail("unterminated IRI");
        char ch = c.line[c.pos++];
        if (ch == '>') break;
        if (ch == '\\') {
            if (c.done()) c.fail("truncated escape in IRI");
            char esc = c.line[c.pos++];
            if (esc == 'u') append_utf8(out, parse_hex(c, 4));
            else if (esc == 'U') append_utf8(out, parse_hex(c, 8));
            else c.fail("unsupported escape in IRI");
        } else {
            out.push_back(ch);
        }
    }
    if (out.empty()) c.fail("empty IRI");
    return out;
}

BlankNode parse_blank(Cursor& c) {
    // caller consumed nothing; expects "_:" prefix
    c.pos += 2;
    std::string label;
    while (!c.done()) {
        char ch = c.line[c.pos];
        if (ch == ' ' || ch == '\t') break;
        label.push_back(ch);
        ++c.pos;
    }
    if (label.empty()) c.fail("empty blank node label");
    return BlankNode{label};
}

Literal parse_literal(Cursor& c) {
    ++c.pos;  // opening quote
    Literal lit;
    while (true) {
        if (c.done()) c.fail("unterminated literal");
        char ch = c.line[c.pos++];
        if (ch == '"') break;
        if (ch == '\\') {
            if (c.done()) c.fail("truncated escape in literal");
            char esc = c.line[c.pos++];
            switch (esc) {
                case 't': lit.lexical.push_back('\t'); break;
                case 'b': lit.lexical.push_back('\b'); break;
                case 'n': lit.lexical.push_back('\n'); break;
                case 'r': lit.lexical.push_back('\r'); break;
                case 'f': lit.lexical.push_back('\f'); break;
                case '"': lit.lexical.push_back('"'); break;
                case '\'': lit.lexical.push_back('\''); break;
                case '\\': lit.lexical.push_back('\\'); break;
                case 'u': append_utf8(lit.lexical, parse_hex(c, 4)); break;
                case 'U': append_utf8(lit.lexical, parse_hex(c, 8)); break;
                default: c.fail("unsupported escape in literal");
            }
        } else {
            lit.lexical.push_back(ch);
        }
    }
    if (c.peek() == '^') {
        if (c.pos + 1 >= c.line.size() || c.line[c.pos + 1] != '^') {
            c.fail("expected '^^' before datatype");
        }
        c.pos += 2;
        lit.datatype = parse_iri(c);
    } else if (c.peek() == '@') {
        ++c.pos;
        while (!c.done()) {
            char ch = c.line[c.pos];
            if (ch == ' ' || ch == '\t') break;
            lit.lang.push_back(ch);
            ++c.pos;
        }
        if (lit.lang.empty()) c.fail("empty language tag");
    }
    return lit;
}

Term parse_term(Cursor& c, bool allow_literal) {
    c.skip_ws();
    if (c.peek() == '<') return parse_iri(c);
    if (c.peek() == '_' && c.pos + 1 < c.line.size() && c.line[c.pos + 1] == ':') {
        return parse_blank(c);
    }
    if (c.peek() == '"') {
        if (!allow_literal) c.fail("literal not allowed in this position");
        return parse_literal(c);
    }
    c.fail("expected IRI, blank node or literal");
}

}  // namespace

std::vector<Triple> parse_ntriples(std::istream& in) {
    std::vector<Triple> triples;
    std::set<Triple> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        Cursor c{line, 0, lineno};
        c.skip_ws();
        if (c.done() || c.peek() == '#') continue;

        Term subject = parse_term(c, false);
        c.skip_ws();
        Term pred = parse_term(c, false);
        if (!is_iri(pred)) c.fail("predicate must be an IRI");
        Term object = parse_term(c, true);
        c.skip_ws();
        if (c.peek() != '.') c.fail("expected terminating '.'");
        ++c.pos;
        c.skip_ws();
        if (!c.done() && c.peek() != '#') c.fail("trailing content after '.'");

        Triple t{std::move(subject), std::get<Iri>(pred), std::move(object)};
        if (seen.insert(t).second) triples.push_back(std::move(t));
    }
    return triples;
}

std::vector<Triple> parse_ntriples(const std::string& text) {
    std::istringstream in(text);
    return parse_ntriples(in);
}

std::vector<Triple> parse_ntriples_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_ntriples(in);
}

namespace {

std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

void write_term(std::string& out, const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t)) {
        out += '<';
        out += *iri;
        out += '>';
    } else if (const auto* b = std::get_if<BlankNode>(&t)) {
        out += "_:";
        out += b->label;
    } else {
        const auto& lit = std::get<Literal>(t);
        out += '"';
        out += escape_literal(lit.lexical);
        out += '"';
        if (!lit.lang.empty()) {
            out += '@';
            out += lit.lang;
        } else if (!lit.datatype.empty()) {
            out += "^^<";
            out += lit.datatype;
            out += '>';
        }
    }
}

}  // namespace

std::string to_ntriples_line(const Triple& t) {
    std::string out;
    write_term(out, t.subject);
    out += ' ';
    write_term(out, Term{t.predicate});
    out += ' ';
    write_term(out, t.object);
    out += " .";
    return out;
}

void write_ntriples(std::ostream& out, const std::vector<Triple>& triples) {
    for (const auto& t : triples) out << to_ntriples_line(t) << '\n';
}

void write_ntriples_file(const std::string& path, const std::vector<Triple>& triples) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_ntriples(out, triples);
}

}  // namespace ontoembed
