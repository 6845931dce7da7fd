#include <hyperseq/instance.hpp>

#include <cctype>
#include <map>
#include <sstream>

namespace hyperseq {

namespace {

struct Token {
    enum Kind { Ident, Integer, Plus, Minus, Star, Caret, Slash, LParen, RParen, Equals, End };
    Kind kind;
    std::string text;
    int column;  // 1-based
};

class LineParser {
public:
    LineParser(const std::string& line, int line_no) : line_(line), line_no_(line_no) {
        tokenize();
    }

    // key "=" expr
    std::pair<std::string, Polynomial> parse_statement() {
        Token key = expect(Token::Ident, "key (p, q, u0 or t)");
        expect(Token::Equals, "'='");
        Polynomial value = parse_expr();
        if (peek().kind != Token::End) fail("unexpected trailing input", peek().column);
        return {key.text, value};
    }

private:
    const std::string& line_;
    int line_no_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message, int column) const {
        throw ParseError(message, line_no_, column);
    }

    void tokenize() {
        std::size_t i = 0;
        while (i < line_.size()) {
            char c = line_[i];
            int col = static_cast<int>(i) + 1;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < line_.size() && std::isdigit(static_cast<unsigned char>(line_[j]))) ++j;
                tokens_.push_back({Token::Integer, line_.substr(i, j - i), col});
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < line_.size() &&
                       (std::isalnum(static_cast<unsigned char>(line_[j])) || line_[j] == '_'))
                    ++j;
                tokens_.push_back({Token::Ident, line_.substr(i, j - i), col});
                i = j;
                continue;
            }
            Token::Kind kind;
            switch (c) {
                case '+': kind = Token::Plus; break;
                case '-': kind = Token::Minus; break;
                case '*': kind = Token::Star; break;
                case '^': kind = Token::Caret; break;
                case '/': kind = Token::Slash; break;
                case '(': kind = Token::LParen; break;
                case ')': kind = Token::RParen; break;
                case '=': kind = Token::Equals; break;
                default: fail(std::string("unexpected character '") + c + "'", col);
            }
            tokens_.push_back({kind, std::string(1, c), col});
            ++i;
        }
        tokens_.push_back({Token::End, "", static_cast<int>(line_.size()) + 1});
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    Token expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) fail("expected " + what, peek().column);
        return advance();
    }

    Polynomial parse_expr() {
        bool negate = false;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus)
            negate = advance().kind == Token::Minus;
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = advance().kind == Token::Minus;
            Polynomial rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (peek().kind == Token::Star) {
            advance();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (peek().kind == Token::Caret) {
            advance();
            Token e = expect(Token::Integer, "natural exponent");
            long exp = 0;
            try {
                exp = std::stol(e.text);
            } catch (const std::exception&) {
                fail("exponent out of range", e.column);
            }
            if (exp > 64) fail("exponent larger than 64", e.column);
            Polynomial acc = Polynomial::constant(Rat(1));
            for (long i = 0; i < exp; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Integer: {
                advance();
                Int numerator(tok.text);
                if (peek().kind == Token::Slash) {
                    advance();
                    Token d = expect(Token::Integer, "positive integer denominator");
                    Int denominator(d.text);
                    if (denominator == 0) fail("zero denominator", d.column);
                    return Polynomial::constant(make_rat(numerator, denominator));
                }
                return Polynomial::constant(Rat(numerator));
            }
            case Token::Ident: {
                if (tok.text != "n")
                    fail("unknown identifier '" + tok.text + "' (only 'n' is allowed)",
                         tok.column);
                advance();
                return Polynomial::monomial(Rat(1), 1);
            }
            case Token::LParen: {
                advance();
                Polynomial inner = parse_expr();
                expect(Token::RParen, "')'");
                return inner;
            }
            default:
                fail("expected a rational, 'n' or '('", tok.column);
        }
    }
};

}  // namespace

InstanceFile parse_instance(const std::string& text) {
    std::map<std::string, Polynomial> values;
    std::map<std::string, int> seen_line;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        auto [key, value] = LineParser(line, line_no).parse_statement();
        if (key != "p" && key != "q" && key != "u0" && key != "t")
            throw ParseError("unknown key '" + key + "'", line_no, 1);
        if (seen_line.count(key))
            throw ParseError("duplicate key '" + key + "' (first at line " +
                                 std::to_string(seen_line[key]) + ")",
                             line_no, 1);
        seen_line[key] = line_no;
        values.emplace(key, std::move(value));
    }
    for (const char* key : {"p", "q", "u0", "t"})
        if (!values.count(key))
            throw ParseError(std::string("missing key '") + key + "'", line_no, 1);

    auto constant_of = [&](const char* key) {
        const Polynomial& f = values.at(key);
        if (f.degree() > 0)
            throw ParseError(std::string("'") + key + "' must be a rational constant",
                             seen_line[key], 1);
        return f.is_zero() ? Rat(0) : f.coeff(0);
    };
    InstanceFile inst;
    inst.p = values.at("p");
    inst.q = values.at("q");
    inst.u0 = constant_of("u0");
    inst.t = constant_of("t");
    if (inst.p.is_zero()) throw ParseError("p must be nonzero", seen_line["p"], 1);
    if (inst.q.is_zero()) throw ParseError("q must be nonzero", seen_line["q"], 1);
    return inst;
}

std::string serialize_instance(const InstanceFile& inst) {
    std::ostringstream out;
    out << "p = " << inst.p.to_string() << "\n";
    out << "q = " << inst.q.to_string() << "\n";
    out << "u0 = " << to_string(inst.u0) << "\n";
    out << "t = " << to_string(inst.t) << "\n";
    return out.str();
}

}  // namespace hyperseq
