#include "icis/problem.hpp"

#include "icis/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace icis {

std::string_view kind_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Milnor: return "milnor";
        case ProblemKind::IcisMilnor: return "icis-milnor";
        case ProblemKind::FunctionMilnor: return "function-milnor";
        case ProblemKind::Discriminant: return "discriminant";
        case ProblemKind::GenericLine: return "generic-line";
        case ProblemKind::FamilyAnalyze: return "family-analyze";
        case ProblemKind::GreuelCheck: return "greuel-check";
    }
    return "milnor";
}

std::optional<ProblemKind> kind_from_name(std::string_view name) {
    for (auto k : {ProblemKind::Milnor, ProblemKind::IcisMilnor, ProblemKind::FunctionMilnor, ProblemKind::Discriminant,
                   ProblemKind::GenericLine, ProblemKind::FamilyAnalyze, ProblemKind::GreuelCheck}) {
        if (kind_name(k) == name) return k;
    }
    return std::nullopt;
}

const Binding* ProblemFile::find(std::string_view name) const {
    for (const auto& b : bindings) {
        if (b.name == name) return &b;
    }
    return nullptr;
}

namespace {

enum class Tok { Ident, Int, Symbol, End };

struct Token {
    Tok kind;
    std::string text;
    SourcePosition pos;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    const auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const SourcePosition pos{line, col};
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), pos});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Int, std::string(text.substr(i, j - i)), pos});
        } else if (std::string_view("+-*/^(),;=").find(c) != std::string_view::npos) {
            j = i + 1;
            out.push_back({Tok::Symbol, std::string(1, c), pos});
        } else {
            throw ParseError(ErrorCode::Syntax, std::string("unexpected character '") + c + "'", line, col);
        }
        advance(j - i);
    }
    out.push_back({Tok::End, "", {line, col}});
    return out;
}

[[noreturn]] void fail(ErrorCode code, const std::string& message, const SourcePosition& pos) {
    throw ParseError(code, message, pos.line, pos.column);
}

std::string describe(const Token& t) {
    return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

constexpr unsigned kMaxExponent = 1000;

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ProblemFile parse_file();
    Polynomial parse_single(const RingPtr& ring);

private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }
    bool is_symbol(char c, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Symbol && peek(ahead).text[0] == c;
    }
    bool accept(char c) {
        if (!is_symbol(c)) return false;
        next();
        return true;
    }
    const Token& expect(char c) {
        if (!is_symbol(c)) fail(ErrorCode::Syntax, std::string("expected '") + c + "' but found " + describe(peek()), peek().pos);
        return next();
    }
    const Token& expect_ident() {
        if (peek().kind != Tok::Ident) fail(ErrorCode::Syntax, "expected a name but found " + describe(peek()), peek().pos);
        return next();
    }
    std::uint64_t parse_count();
    Rational parse_rational_literal();
    std::vector<Rational> parse_rational_list();
    std::vector<std::string> parse_name_list();

    Polynomial expression();
    Polynomial term();
    Polynomial factor();
    Polynomial power();
    Polynomial primary();

    void statement(ProblemFile& problem, bool& have_kind, bool& have_ring);
    void validate(const ProblemFile& problem, bool have_kind, const SourcePosition& end) const;

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    RingPtr ring_;
    const ProblemFile* scope_ = nullptr;
};

std::uint64_t Parser::parse_count() {
    if (peek().kind != Tok::Int) fail(ErrorCode::Syntax, "expected an integer but found " + describe(peek()), peek().pos);
    const Token& t = next();
    const Integer value(t.text);
    if (value > Integer(std::to_string(UINT64_MAX))) fail(ErrorCode::Syntax, "integer out of range", t.pos);
    return std::stoull(t.text);
}

Rational Parser::parse_rational_literal() {
    const bool negative = accept('-');
    if (peek().kind != Tok::Int) fail(ErrorCode::Syntax, "expected a rational number but found " + describe(peek()), peek().pos);
    const Token& num = next();
    Integer den(1);
    if (accept('/')) {
        if (peek().kind != Tok::Int) fail(ErrorCode::Syntax, "expected a denominator but found " + describe(peek()), peek().pos);
        const Token& d = next();
        den = Integer(d.text);
        if (den == 0) fail(ErrorCode::Syntax, "zero denominator", d.pos);
    }
    Rational r(Integer(num.text), den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::vector<Rational> Parser::parse_rational_list() {
    std::vector<Rational> out{parse_rational_literal()};
    while (accept(',')) out.push_back(parse_rational_literal());
    return out;
}

std::vector<std::string> Parser::parse_name_list() {
    std::vector<std::string> out{expect_ident().text};
    while (accept(',')) out.push_back(expect_ident().text);
    return out;
}

Polynomial Parser::expression() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
        bool negative = false;
        if (is_symbol('+') || is_symbol('-')) {
            negative = next().text[0] == '-';
        } else if (!first) {
            break;
        }
        Polynomial t = term();
        if (negative) t = -t;
        acc += t;
        first = false;
    }
    return acc;
}

Polynomial Parser::term() {
    Polynomial acc = factor();
    while (true) {
        if (is_symbol('*')) {
            next();
            acc *= factor();
        } else if (is_symbol('/')) {
            const Token& slash = next();
            const Polynomial d = factor();
            if (!d.is_constant() || d.is_zero()) {
                fail(ErrorCode::Syntax, "division is only allowed by a nonzero constant", slash.pos);
            }
            acc *= Rational(1 / d.constant_term());
        } else if (peek().kind == Tok::Ident || is_symbol('(')) {
            acc *= factor();
        } else {
            return acc;
        }
    }
}

Polynomial Parser::factor() {
    if (accept('-')) return -factor();
    return power();
}

Polynomial Parser::power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    if (peek().kind != Tok::Int) {
        fail(ErrorCode::Syntax, "exponent must be a nonnegative integer, found " + describe(peek()), peek().pos);
    }
    const Token& e = next();
    if (e.text.size() > 4 || std::stoul(e.text) > kMaxExponent) fail(ErrorCode::Syntax, "exponent too large", e.pos);
    if (is_symbol('^')) fail(ErrorCode::Syntax, "chained exponents need parentheses", peek().pos);
    return base.pow(static_cast<unsigned>(std::stoul(e.text)));
}

Polynomial Parser::primary() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
        next();
        return Polynomial::constant(ring_, Rational(Integer(t.text)));
    }
    if (t.kind == Tok::Ident) {
        next();
        if (ring_->contains(t.text)) return Polynomial::variable(ring_, t.text);
        if (scope_) {
            if (const Binding* b = scope_->find(t.text)) {
                if (b->values.size() != 1) {
                    fail(ErrorCode::UnboundName, "'" + t.text + "' is a list and cannot be used in an expression", t.pos);
                }
                return b->values.front();
            }
        }
        fail(ErrorCode::UnboundName, "unbound name '" + t.text + "'", t.pos);
    }
    if (accept('(')) {
        Polynomial inner = expression();
        expect(')');
        return inner;
    }
    fail(ErrorCode::Syntax, "unexpected " + describe(t), t.pos);
}

void Parser::statement(ProblemFile& problem, bool& have_kind, bool& have_ring) {
    const Token& head = expect_ident();
    const bool assignment = is_symbol('=');
    const auto need_ring = [&] {
        if (!have_ring) fail(ErrorCode::Syntax, "the ring declaration must come first", head.pos);
    };
    if (assignment) {
        need_ring();
        next();
        if (problem.ring->contains(head.text)) {
            fail(ErrorCode::Syntax, "'" + head.text + "' is a ring variable and cannot be rebound", head.pos);
        }
        if (problem.find(head.text)) fail(ErrorCode::Syntax, "'" + head.text + "' is already bound", head.pos);
        Binding b{head.text, {}, head.pos};
        ring_ = problem.ring;
        scope_ = &problem;
        b.values.push_back(expression());
        while (accept(',')) b.values.push_back(expression());
        problem.bindings.push_back(std::move(b));
    } else if (head.text == "ring") {
        if (have_ring) fail(ErrorCode::Syntax, "ring declared twice", head.pos);
        const SourcePosition at = peek().pos;
        std::vector<std::string> names = parse_name_list();
        try {
            problem.ring = make_ring(std::move(names));
        } catch (const Error& e) {
            fail(ErrorCode::Syntax, e.what(), at);
        }
        have_ring = true;
    } else if (head.text == "param") {
        need_ring();
        const Token& p = expect_ident();
        if (!problem.ring->contains(p.text)) {
            fail(ErrorCode::MissingParameter, "parameter '" + p.text + "' is not a ring variable", p.pos);
        }
        problem.parameter = p.text;
    } else if (head.text == "kind") {
        std::string name;
        const SourcePosition at = peek().pos;
        while (peek().kind != Tok::End && !is_symbol(';')) name += next().text;
        const auto kind = kind_from_name(name);
        if (!kind) fail(ErrorCode::UnknownKind, "unknown problem kind '" + name + "'", at);
        problem.kind = *kind;
        problem.kind_position = head.pos;
        have_kind = true;
    } else if (head.text == "samples") {
        problem.samples = parse_rational_list();
        for (const auto& s : problem.samples) {
            if (s == 0) fail(ErrorCode::Syntax, "sample values must be nonzero", head.pos);
        }
    } else if (head.text == "seed") {
        problem.seed = parse_count();
    } else if (head.text == "budget") {
        problem.budget = parse_count();
        if (problem.budget == 0) fail(ErrorCode::Syntax, "budget must be positive", head.pos);
    } else if (head.text == "direction") {
        problem.direction = parse_rational_list();
    } else if (head.text == "target") {
        problem.targets = parse_name_list();
    } else if (head.text == "probe") {
        need_ring();
        ring_ = make_ring({"s"});
        scope_ = nullptr;
        CurveProbe probe;
        probe.components.push_back(expression());
        while (accept(',')) probe.components.push_back(expression());
        if (probe.components.size() != problem.ring->size()) {
            fail(ErrorCode::Syntax, "probe needs one component per ring variable", head.pos);
        }
        for (const auto& c : probe.components) {
            if (c.constant_term() != 0) fail(ErrorCode::Syntax, "probe curve must pass through the origin", head.pos);
        }
        problem.probes.push_back(std::move(probe));
    } else {
        fail(ErrorCode::Syntax, "unknown statement '" + head.text + "'", head.pos);
    }
    expect(';');
}

void Parser::validate(const ProblemFile& problem, bool have_kind, const SourcePosition& end) const {
    if (!problem.ring) fail(ErrorCode::Syntax, "missing ring declaration", end);
    if (!have_kind) fail(ErrorCode::UnknownKind, "missing kind statement", end);
    const SourcePosition& at = problem.kind_position;
    const std::string kind(kind_name(problem.kind));
    const auto require = [&](const char* name) -> const Binding& {
        const Binding* b = problem.find(name);
        if (!b) fail(ErrorCode::MissingBinding, "kind " + kind + " needs a binding for '" + name + "'", at);
        return *b;
    };
    const auto require_single = [&](const char* name) {
        const Binding& b = require(name);
        if (b.values.size() != 1) fail(ErrorCode::MissingBinding, "'" + std::string(name) + "' must be a single polynomial", b.position);
    };
    const auto require_parameter = [&] {
        if (!problem.parameter) fail(ErrorCode::MissingParameter, "kind " + kind + " needs a 'param' declaration", at);
    };
    switch (problem.kind) {
        case ProblemKind::Milnor: require_single("f"); break;
        case ProblemKind::IcisMilnor: require("phi"); break;
        case ProblemKind::FunctionMilnor:
            require("phi");
            require_single("f");
            break;
        case ProblemKind::Discriminant: require("phi"); break;
        case ProblemKind::GenericLine:
            if (!problem.direction) fail(ErrorCode::MissingBinding, "kind generic-line needs a 'direction' statement", at);
            if (problem.find("delta")) {
                require_single("delta");
            } else {
                require("phi");
            }
            break;
        case ProblemKind::FamilyAnalyze:
            require_parameter();
            if (problem.find("F")) {
                require_single("F");
                require("phi");
            } else {
                require("Phi");
            }
            break;
        case ProblemKind::GreuelCheck:
            require_parameter();
            require("phi");
            require_single("F");
            break;
    }
}

ProblemFile Parser::parse_file() {
    ProblemFile problem;
    bool have_kind = false;
    bool have_ring = false;
    while (peek().kind != Tok::End) statement(problem, have_kind, have_ring);
    validate(problem, have_kind, peek().pos);
    return problem;
}

Polynomial Parser::parse_single(const RingPtr& ring) {
    ring_ = ring;
    Polynomial p = expression();
    if (peek().kind != Tok::End) fail(ErrorCode::Syntax, "unexpected " + describe(peek()), peek().pos);
    return p;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) { return Parser(lex(text)).parse_file(); }

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(lex(text)).parse_single(ring); }

std::string read_problem_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void apply_overrides(ProblemFile& problem, const RunOverrides& overrides) {
    if (overrides.seed) problem.seed = *overrides.seed;
    if (overrides.samples) problem.samples = *overrides.samples;
    if (overrides.budget) problem.budget = *overrides.budget;
}

}  // namespace icis
