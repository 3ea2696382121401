#include "mcg/dsl.hpp"

#include <cctype>

namespace mcg {

namespace {

struct Cursor {
    const std::string& src;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    bool eof() const { return pos >= src.size(); }
    char peek() const { return src[pos]; }

    void advance() {
        if (src[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line, column);
    }
};

std::string read_identifier(Cursor& c) {
    if (c.eof() || !std::isalpha(static_cast<unsigned char>(c.peek())))
        c.fail("expected an identifier");
    std::string out;
    while (!c.eof() && std::isalnum(static_cast<unsigned char>(c.peek()))) {
        out += c.peek();
        c.advance();
    }
    return out;
}

long long read_integer(Cursor& c) {
    bool negative = false;
    if (!c.eof() && (c.peek() == '-' || c.peek() == '+')) {
        negative = c.peek() == '-';
        c.advance();
    }
    if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        c.fail("expected an integer");
    long long value = 0;
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        value = checked_mul(value, 10);
        value = checked_add(value, c.peek() - '0');
        c.advance();
    }
    return negative ? -value : value;
}

OpaqueKind kind_for_label(const std::string& label) {
    if (label.empty() || label[0] != 'C') return OpaqueKind::UnknownElement;
    for (std::size_t i = 1; i < label.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(label[i]))) return OpaqueKind::UnknownElement;
    return OpaqueKind::Commutator;
}

TwistWord parse_word_at(Cursor& c, bool top_level);

TwistWord parse_atom(Cursor& c) {
    char head = c.peek();
    if (head == 't') {
        c.advance();
        if (c.eof() || c.peek() != '_') c.fail("expected '_' after 't'");
        c.advance();
        std::string name = read_identifier(c);
        return TwistWord::twist(std::move(name));
    }
    if (head == '?') {
        c.advance();
        OpaqueBlock block;
        block.label = read_identifier(c);
        block.kind = kind_for_label(block.label);
        if (!c.eof() && c.peek() == '(') {
            c.advance();
            while (true) {
                c.skip_ws();
                std::string key = read_identifier(c);
                c.skip_ws();
                if (c.eof() || c.peek() != '=') c.fail("expected '=' in opaque parameters");
                c.advance();
                c.skip_ws();
                block.params[key] = read_integer(c);
                c.skip_ws();
                if (!c.eof() && c.peek() == ',') {
                    c.advance();
                    continue;
                }
                break;
            }
            if (c.eof() || c.peek() != ')') c.fail("expected ')' after opaque parameters");
            c.advance();
        }
        return TwistWord::opaque(std::move(block));
    }
    if (head == '(') {
        c.advance();
        TwistWord inner = parse_word_at(c, false);
        c.skip_ws();
        if (c.eof() || c.peek() != ')') c.fail("expected ')'");
        c.advance();
        return inner;
    }
    if (head == '[') {
        c.advance();
        TwistWord lhs = parse_word_at(c, false);
        c.skip_ws();
        if (c.eof() || c.peek() != ',') c.fail("expected ',' in a commutator");
        c.advance();
        TwistWord rhs = parse_word_at(c, false);
        c.skip_ws();
        if (c.eof() || c.peek() != ']') c.fail("expected ']'");
        c.advance();
        return TwistWord::commutator(std::move(lhs), std::move(rhs));
    }
    c.fail(std::string("unexpected character '") + head + "'");
}

TwistWord parse_term(Cursor& c) {
    TwistWord atom = parse_atom(c);
    if (!c.eof() && c.peek() == '^') {
        c.advance();
        if (c.eof() || (!std::isdigit(static_cast<unsigned char>(c.peek())) && c.peek() != '-' &&
                        c.peek() != '+'))
            c.fail("dangling '^' without an exponent");
        long long exponent = read_integer(c);
        if (auto* t = std::get_if<Twist>(&atom.node())) {
            if (exponent == 0) c.fail("twist exponent must be nonzero");
            return TwistWord::twist(t->curve, checked_mul(t->exponent, exponent));
        }
        return TwistWord::power(std::move(atom), exponent);
    }
    return atom;
}

TwistWord parse_word_at(Cursor& c, bool top_level) {
    std::vector<TwistWord> terms;
    while (true) {
        c.skip_ws();
        if (c.eof()) break;
        char head = c.peek();
        if (head == ')' || head == ']' || head == ',') {
            if (top_level) c.fail(std::string("unexpected character '") + head + "'");
            break;
        }
        terms.push_back(parse_term(c));
    }
    if (terms.size() == 1) return terms.front();
    return TwistWord::product(std::move(terms));
}

// Whether w must be parenthesized to take an exponent without re-parsing
// differently.
bool needs_parens(const TwistWord& w) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n)) return t->exponent != 1;
    return std::holds_alternative<TwistWord::ProductNode>(n) ||
           std::holds_alternative<TwistWord::PowerNode>(n);
}

void print_into(const TwistWord& w, std::string& out);

void print_atomized(const TwistWord& w, std::string& out) {
    if (needs_parens(w)) {
        out += '(';
        print_into(w, out);
        out += ')';
    } else {
        print_into(w, out);
    }
}

void print_into(const TwistWord& w, std::string& out) {
    const auto& n = w.node();
    if (auto* t = std::get_if<Twist>(&n)) {
        out += "t_" + t->curve;
        if (t->exponent != 1) out += "^" + std::to_string(t->exponent);
        return;
    }
    if (auto* o = std::get_if<OpaqueBlock>(&n)) {
        out += "?" + opaque_display(*o);
        return;
    }
    if (auto* p = std::get_if<TwistWord::ProductNode>(&n)) {
        bool first = true;
        for (const auto& f : p->factors) {
            if (!first) out += ' ';
            first = false;
            // A bare nested product needs parentheses to survive re-parsing.
            if (std::holds_alternative<TwistWord::ProductNode>(f.node())) {
                out += '(';
                print_into(f, out);
                out += ')';
            } else {
                print_into(f, out);
            }
        }
        return;
    }
    if (auto* p = std::get_if<TwistWord::PowerNode>(&n)) {
        print_atomized(p->base, out);
        out += "^" + std::to_string(p->exponent);
        return;
    }
    const auto& c = std::get<TwistWord::CommutatorNode>(n);
    out += '[';
    print_into(c.lhs, out);
    out += ", ";
    print_into(c.rhs, out);
    out += ']';
}

}  // namespace

TwistWord parse_word(const std::string& src) {
    Cursor c{src};
    TwistWord word = parse_word_at(c, true);
    c.skip_ws();
    if (!c.eof()) c.fail("trailing input");
    return word;
}

std::string print_word(const TwistWord& w) {
    std::string out;
    print_into(w, out);
    return out;
}

}  // namespace mcg
