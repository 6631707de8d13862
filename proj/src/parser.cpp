#include "norm/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace norm {

const char* rule_kind_name(RuleKind k) {
    switch (k) {
        case RuleKind::Strict: return "strict";
        case RuleKind::NormalDefault: return "normal-default";
        case RuleKind::SemiNormalDefault: return "semi-normal-default";
    }
    return "?";
}

void Rulebase::merge(Rulebase other) {
    for (auto& r : other.rules) rules.push_back(std::move(r));
    for (auto& f : other.facts) facts.push_back(std::move(f));
    actions.insert(other.actions.begin(), other.actions.end());
    cause_pot.insert(other.cause_pot.begin(), other.cause_pot.end());
    for (auto& p : other.incompatibilities.extra)
        incompatibilities.extra.push_back(std::move(p));
}

bool structurally_equal(const Rule& a, const Rule& b) {
    return a.kind == b.kind && a.premises == b.premises && a.conclusions == b.conclusions &&
           a.justifications == b.justifications;
}

bool structurally_equal(const Rulebase& a, const Rulebase& b) {
    if (a.rules.size() != b.rules.size()) return false;
    for (std::size_t i = 0; i < a.rules.size(); ++i)
        if (!structurally_equal(a.rules[i], b.rules[i])) return false;
    return a.facts == b.facts && a.actions == b.actions && a.cause_pot == b.cause_pot &&
           a.incompatibilities.extra == b.incompatibilities.extra;
}

namespace {

enum class Tok {
    Ident, Quoted, Int,
    LParen, RParen, LBracket, RBracket,
    Comma, Dot, Bang, Amp, Colon, Arrow, Plus, Minus,
    End
};

struct Token {
    Tok kind;
    std::string text;
    int value = 0;  // Int
    SourcePos pos;
};

class Lexer {
public:
    Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

    Token next() {
        skip_ws();
        SourcePos pos{file_, line_, col_};
        if (i_ >= text_.size()) return {Tok::End, "", 0, pos};
        char c = text_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                s += advance();
            return {Tok::Ident, s, 0, pos};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                s += advance();
            return {Tok::Int, s, std::stoi(s), pos};
        }
        if (c == '"') {
            advance();
            std::string s;
            while (i_ < text_.size() && text_[i_] != '"' && text_[i_] != '\n') s += advance();
            if (i_ >= text_.size() || text_[i_] != '"')
                throw ParseError(pos, "unterminated agent constant");
            advance();
            return {Tok::Quoted, s, 0, pos};
        }
        advance();
        switch (c) {
            case '(': return {Tok::LParen, "(", 0, pos};
            case ')': return {Tok::RParen, ")", 0, pos};
            case '[': return {Tok::LBracket, "[", 0, pos};
            case ']': return {Tok::RBracket, "]", 0, pos};
            case ',': return {Tok::Comma, ",", 0, pos};
            case '.': return {Tok::Dot, ".", 0, pos};
            case '!': return {Tok::Bang, "!", 0, pos};
            case '&': return {Tok::Amp, "&", 0, pos};
            case ':': return {Tok::Colon, ":", 0, pos};
            case '+': return {Tok::Plus, "+", 0, pos};
            case '-':
                if (i_ < text_.size() && text_[i_] == '>') {
                    advance();
                    return {Tok::Arrow, "->", 0, pos};
                }
                return {Tok::Minus, "-", 0, pos};
        }
        throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }

private:
    char advance() {
        char c = text_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (i_ < text_.size()) {
            char c = text_[i_];
            if (c == '%') {
                while (i_ < text_.size() && text_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::string file_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// A variable is a single uppercase letter optionally followed by digits
// (A, B, T, P1); every other identifier is a constant.
bool is_var_name(const std::string& s) {
    if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

class Parser {
public:
    Parser(std::string_view text, std::string file) : lex_(text, file), file_(std::move(file)) {
        cur_ = lex_.next();
    }

    Rulebase parse_rulebase() {
        Rulebase rb;
        while (cur_.kind != Tok::End) parse_statement(rb);
        return rb;
    }

    std::vector<Literal> parse_fact_list() {
        std::vector<Literal> facts;
        while (cur_.kind != Tok::End) {
            SourcePos pos = cur_.pos;
            Literal lit = parse_literal_();
            expect(Tok::Dot, "'.'");
            check_ground_fact(lit, pos);
            facts.push_back(std::move(lit));
        }
        return facts;
    }

    Literal parse_single_literal() {
        Literal lit = parse_literal_();
        if (cur_.kind == Tok::Dot) consume();
        if (cur_.kind != Tok::End) throw ParseError(cur_.pos, "trailing input after literal");
        return lit;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(cur_.pos, msg); }

    Token consume() {
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }

    Token expect(Tok k, const std::string& what) {
        if (cur_.kind != k) fail("expected " + what);
        return consume();
    }

    void parse_statement(Rulebase& rb) {
        if (cur_.kind == Tok::Ident) {
            if (cur_.text == "action") return parse_action(rb);
            if (cur_.text == "cause_pot") return parse_cause_pot(rb);
            if (cur_.text == "incompatible") return parse_incompatible(rb);
        }
        parse_fact_or_rule(rb);
    }

    void parse_action(Rulebase& rb) {
        consume();
        Token name = expect(Tok::Ident, "action symbol");
        expect(Tok::Dot, "'.'");
        rb.actions.insert(name.text);
    }

    void parse_cause_pot(Rulebase& rb) {
        consume();
        expect(Tok::LParen, "'('");
        Token prop = expect(Tok::Ident, "property symbol");
        expect(Tok::Comma, "','");
        Token act = expect(Tok::Ident, "action symbol");
        expect(Tok::RParen, "')'");
        expect(Tok::Dot, "'.'");
        rb.cause_pot.emplace(prop.text, act.text);
    }

    void parse_incompatible(Rulebase& rb) {
        consume();
        expect(Tok::LParen, "'('");
        Property a = parse_property();
        expect(Tok::Comma, "','");
        Property b = parse_property();
        expect(Tok::RParen, "')'");
        expect(Tok::Dot, "'.'");
        rb.incompatibilities.add(std::move(a), std::move(b));
    }

    void parse_fact_or_rule(Rulebase& rb) {
        SourcePos start = cur_.pos;
        std::vector<Literal> lits;
        std::vector<SourcePos> positions;
        positions.push_back(cur_.pos);
        lits.push_back(parse_literal_());
        while (cur_.kind == Tok::Amp) {
            consume();
            positions.push_back(cur_.pos);
            lits.push_back(parse_literal_());
        }
        if (cur_.kind == Tok::Dot) {
            consume();
            if (lits.size() != 1)
                throw ParseError(start, "expected '->' or ':' after premises");
            check_ground_fact(lits[0], positions[0]);
            rb.facts.push_back(std::move(lits[0]));
            return;
        }
        Rule rule;
        rule.id = file_ + ":" + std::to_string(start.line);
        rule.premises = std::move(lits);
        if (cur_.kind == Tok::Arrow) {
            consume();
            rule.kind = RuleKind::Strict;
            rule.conclusions.push_back(parse_literal_());
            while (cur_.kind == Tok::Amp) {
                consume();
                rule.conclusions.push_back(parse_literal_());
            }
        } else if (cur_.kind == Tok::Colon) {
            consume();
            rule.kind = RuleKind::NormalDefault;
            rule.conclusions.push_back(parse_literal_());
            if (cur_.kind == Tok::Amp)
                throw ArityError(cur_.pos, "a default concludes a single literal");
            if (cur_.kind == Tok::LBracket) {
                consume();
                rule.kind = RuleKind::SemiNormalDefault;
                rule.justifications.push_back(parse_literal_());
                while (cur_.kind == Tok::Comma) {
                    consume();
                    rule.justifications.push_back(parse_literal_());
                }
                expect(Tok::RBracket, "']'");
            }
        } else {
            fail("expected '->', ':' or '.'");
        }
        expect(Tok::Dot, "'.'");
        check_range_restriction(rule, start);
        rb.rules.push_back(std::move(rule));
    }

    void check_ground_fact(const Literal& lit, const SourcePos& pos) {
        if (!lit.is_ground())
            throw NonGroundError(pos, "fact contains a variable");
        if (lit.time.value() < 1)
            throw ParseError(pos, "time instants are positive integers");
    }

    void check_range_restriction(const Rule& rule, const SourcePos& pos) {
        VarOccurrences prem;
        for (const auto& p : rule.premises) collect_vars(p, prem);
        auto check = [&](const std::vector<Literal>& lits, const char* where) {
            for (const auto& l : lits) {
                VarOccurrences occ;
                collect_vars(l, occ);
                for (const auto& v : occ.term_vars)
                    if (!prem.term_vars.count(v))
                        throw RangeError(pos, "variable " + v + " in " + where +
                                                  " is not bound by any premise");
                for (const auto& v : occ.time_vars)
                    if (!prem.time_vars.count(v))
                        throw RangeError(pos, "time variable " + v + " in " + where +
                                                  " is not bound by any premise");
            }
        };
        check(rule.conclusions, "conclusion");
        check(rule.justifications, "justification");
    }

    Literal parse_literal_() {
        bool positive = true;
        if (cur_.kind == Tok::Bang) {
            consume();
            positive = false;
        }
        Token head = expect(Tok::Ident, "a modality (Vrai, Doit or EnMesure)");
        Modality m;
        if (head.text == "Vrai") m = Modality::Fact;
        else if (head.text == "Doit") m = Modality::Duty;
        else if (head.text == "EnMesure") m = Modality::Capacity;
        else throw ParseError(head.pos, "unknown modality '" + head.text + "'");
        expect(Tok::LParen, "'('");
        Property prop = parse_property();
        expect(Tok::Comma, "','");
        Term agent = parse_term();
        expect(Tok::Comma, "','");
        TimeExpr time = parse_time();
        expect(Tok::RParen, "')'");
        return Literal(positive, m, std::move(prop), std::move(agent), std::move(time));
    }

    Property parse_property() {
        Token head = expect(Tok::Ident, "a property");
        if (head.text == "neg") {
            expect(Tok::LParen, "'('");
            Property inner = parse_property();
            expect(Tok::RParen, "')'");
            return Property::neg(std::move(inner));
        }
        if (head.text == "Combine") {
            expect(Tok::LParen, "'('");
            Property h = parse_property();
            expect(Tok::Comma, "','");
            Term arg = parse_term();
            expect(Tok::RParen, "')'");
            return Property::combine(std::move(h), std::move(arg));
        }
        return Property::simple(head.text);
    }

    Term parse_term() {
        if (cur_.kind == Tok::Quoted) return Term::agent(consume().text);
        Token t = expect(Tok::Ident, "a term");
        if (t.text == "neg" || t.text == "Combine") {
            // reparse as a property argument
            if (t.text == "neg") {
                expect(Tok::LParen, "'('");
                Property inner = parse_property();
                expect(Tok::RParen, "')'");
                return Term::prop(Property::neg(std::move(inner)));
            }
            expect(Tok::LParen, "'('");
            Property h = parse_property();
            expect(Tok::Comma, "','");
            Term arg = parse_term();
            expect(Tok::RParen, "')'");
            return Term::prop(Property::combine(std::move(h), std::move(arg)));
        }
        if (is_var_name(t.text)) return Term::var(t.text);
        return Term::symbol(t.text);
    }

    TimeExpr parse_time() {
        if (cur_.kind == Tok::Int) {
            Token t = consume();
            if (t.value < 1) throw ParseError(t.pos, "time instants are positive integers");
            return TimeExpr::constant(t.value);
        }
        Token t = expect(Tok::Ident, "a time expression");
        if (!is_var_name(t.text))
            throw ParseError(t.pos, "expected a time variable or instant");
        int off = 0;
        if (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool negated = cur_.kind == Tok::Minus;
            consume();
            Token n = expect(Tok::Int, "an offset");
            off = negated ? -n.value : n.value;
        }
        return TimeExpr::variable(t.text, off);
    }

    Lexer lex_;
    std::string file_;
    Token cur_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw EngineError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Rulebase parse_rules(std::string_view text, const std::string& filename) {
    return Parser(text, filename).parse_rulebase();
}

std::vector<Literal> parse_facts(std::string_view text, const std::string& filename) {
    return Parser(text, filename).parse_fact_list();
}

Literal parse_literal(std::string_view text) {
    return Parser(text, "<literal>").parse_single_literal();
}

Rulebase parse_rules_file(const std::string& path) {
    return parse_rules(read_file(path), path);
}

std::vector<Literal> parse_facts_file(const std::string& path) {
    return parse_facts(read_file(path), path);
}

std::string render(const Rule& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.premises.size(); ++i) {
        if (i) os << " & ";
        os << to_string(r.premises[i]);
    }
    os << (r.kind == RuleKind::Strict ? " -> " : " : ");
    for (std::size_t i = 0; i < r.conclusions.size(); ++i) {
        if (i) os << " & ";
        os << to_string(r.conclusions[i]);
    }
    if (!r.justifications.empty()) {
        os << " [";
        for (std::size_t i = 0; i < r.justifications.size(); ++i) {
            if (i) os << ", ";
            os << to_string(r.justifications[i]);
        }
        os << "]";
    }
    os << ".";
    return os.str();
}

std::string render(const Rulebase& rb) {
    std::ostringstream os;
    for (const auto& a : rb.actions) os << "action " << a << ".\n";
    for (const auto& [p, a] : rb.cause_pot) os << "cause_pot(" << p << ", " << a << ").\n";
    for (const auto& [a, b] : rb.incompatibilities.extra)
        os << "incompatible(" << to_string(a) << ", " << to_string(b) << ").\n";
    for (const auto& f : rb.facts) os << to_string(f) << ".\n";
    for (const auto& r : rb.rules) os << render(r) << "\n";
    return os.str();
}

}  // namespace norm
