#include "uq/parser.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>

namespace uq {

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    std::size_t pos = 0;
    while (pos < input.size()) {
        char c = input[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        if (c == 'E' || c == 'F' || c == 'K') {
            // generator [EFK][1-9][0-9]* -- but a following letter or "'"
            // makes it a name (e.g. E3p); bare E3/E4 are names only via the
            // name table, generators win when the suffix is purely digits.
            std::size_t p = pos + 1;
            while (p < input.size() &&
                   std::isdigit(static_cast<unsigned char>(input[p])))
                ++p;
            bool digits = p > pos + 1 && input[pos + 1] != '0';
            bool name_tail =
                p < input.size() &&
                (std::isalpha(static_cast<unsigned char>(input[p])) ||
                 input[p] == '\'');
            if (digits && !name_tail) {
                out.push_back({Token::Kind::Generator,
                               input.substr(start, p - start), start});
                pos = p;
                continue;
            }
            if (name_tail) ++p;
            out.push_back(
                {Token::Kind::Name, input.substr(start, p - start), start});
            pos = p;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t p = pos;
            while (p < input.size() &&
                   std::isdigit(static_cast<unsigned char>(input[p])))
                ++p;
            out.push_back(
                {Token::Kind::Number, input.substr(start, p - start), start});
            pos = p;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t p = pos;
            while (p < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[p])) ||
                    input[p] == '\''))
                ++p;
            std::string word = input.substr(start, p - start);
            out.push_back({word == "q" ? Token::Kind::QSymbol
                                       : Token::Kind::Name,
                           word, start});
            pos = p;
            continue;
        }
        switch (c) {
            case '+':
            case '-':
            case '*':
            case '/':
            case '^':
                out.push_back({Token::Kind::Op, std::string(1, c), pos});
                ++pos;
                break;
            case '(':
                out.push_back({Token::Kind::LParen, "(", pos});
                ++pos;
                break;
            case ')':
                out.push_back({Token::Kind::RParen, ")", pos});
                ++pos;
                break;
            default:
                throw ParseError(pos, std::string("unexpected character '") +
                                          c + "'");
        }
    }
    out.push_back({Token::Kind::End, "", input.size()});
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    std::unique_ptr<Expression> run() {
        auto e = additive();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[at_]; }
    const Token& take() { return toks_[at_++]; }
    bool is_op(const char* s) const {
        return peek().kind == Token::Kind::Op && peek().text == s;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError(peek().position, "expected " + what);
        ++at_;
    }

    static std::unique_ptr<Expression> node(Expression::Node n) {
        auto e = std::make_unique<Expression>();
        e->node = n;
        return e;
    }

    std::unique_ptr<Expression> additive() {
        auto lhs = unary();
        while (is_op("+") || is_op("-")) {
            bool plus = take().text == "+";
            auto e = node(plus ? Expression::Node::Add : Expression::Node::Sub);
            e->children.push_back(std::move(lhs));
            e->children.push_back(unary());
            lhs = std::move(e);
        }
        return lhs;
    }

    std::unique_ptr<Expression> unary() {
        if (is_op("-")) {
            take();
            auto e = node(Expression::Node::Neg);
            e->children.push_back(unary());
            return e;
        }
        return multiplicative();
    }

    std::unique_ptr<Expression> multiplicative() {
        auto lhs = power();
        while (is_op("*") || is_op("/")) {
            bool mul = take().text == "*";
            auto e = node(mul ? Expression::Node::Mul : Expression::Node::Div);
            e->children.push_back(std::move(lhs));
            e->children.push_back(power());
            lhs = std::move(e);
        }
        return lhs;
    }

    std::unique_ptr<Expression> power() {
        auto base = atom();
        if (!is_op("^")) return base;
        take();
        long sign = 1;
        if (is_op("-")) {
            take();
            sign = -1;
        }
        if (peek().kind != Token::Kind::Number)
            throw ParseError(peek().position, "expected integer exponent");
        auto e = node(Expression::Node::Pow);
        e->exponent = sign * std::stol(take().text);
        e->children.push_back(std::move(base));
        return e;
    }

    std::unique_ptr<Expression> atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                auto e = node(Expression::Node::Number);
                e->number = Rational(take().text);
                return e;
            }
            case Token::Kind::QSymbol:
                take();
                return node(Expression::Node::Q);
            case Token::Kind::Generator: {
                auto e = node(Expression::Node::Gen);
                std::string s = take().text;
                int idx = std::stoi(s.substr(1));
                GenKind k = s[0] == 'E'   ? GenKind::E
                            : s[0] == 'F' ? GenKind::F
                                          : GenKind::Kplus;
                e->gen = Generator{k, static_cast<std::uint8_t>(idx)};
                return e;
            }
            case Token::Kind::Name: {
                auto e = node(Expression::Node::Name);
                e->name = take().text;
                return e;
            }
            case Token::Kind::LParen: {
                take();
                auto e = additive();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            default:
                throw ParseError(t.position, "expected an operand");
        }
    }

    const std::vector<Token>& toks_;
    std::size_t at_ = 0;
};

// Scalar extraction: an element supported on the empty word.
std::optional<RationalFunction> as_scalar(const AlgElement& x) {
    if (x.is_zero()) return RationalFunction(0);
    if (x.terms().size() == 1 && x.terms().begin()->first.empty())
        return x.terms().begin()->second;
    return std::nullopt;
}

// A single-term element whose word consists of K letters only.
bool is_k_monomial(const AlgElement& x) {
    if (x.terms().size() != 1) return false;
    const Word& w = x.terms().begin()->first;
    return std::all_of(w.begin(), w.end(),
                       [](Generator g) { return g.is_k(); });
}

AlgElement eval(const RewriteSystem& rs, const NameTable& names,
                const Expression& e) {
    int n = rs.cartan().rank();
    switch (e.node) {
        case Expression::Node::Number:
            return AlgElement::scalar(n, RationalFunction(e.number));
        case Expression::Node::Q:
            return AlgElement::scalar(n, RationalFunction::q_power(1));
        case Expression::Node::Gen: {
            if (e.gen.index >= 1 && e.gen.index <= n)
                return AlgElement::generator(n, e.gen);
            // Out-of-range indices may still be named constants (E3, E4, ...).
            auto it = names.find(e.gen.str());
            if (it != names.end()) return it->second;
            throw InvalidArgument("generator index out of range: " +
                                  e.gen.str());
        }
        case Expression::Node::Name: {
            auto it = names.find(e.name);
            if (it == names.end())
                throw InvalidArgument("unknown name '" + e.name + "'");
            return it->second;
        }
        case Expression::Node::Neg:
            return -eval(rs, names, *e.children[0]);
        case Expression::Node::Add:
            return eval(rs, names, *e.children[0]) +
                   eval(rs, names, *e.children[1]);
        case Expression::Node::Sub:
            return eval(rs, names, *e.children[0]) -
                   eval(rs, names, *e.children[1]);
        case Expression::Node::Mul:
            return rs.multiply(eval(rs, names, *e.children[0]),
                               eval(rs, names, *e.children[1]));
        case Expression::Node::Div: {
            AlgElement num = eval(rs, names, *e.children[0]);
            auto den = as_scalar(eval(rs, names, *e.children[1]));
            if (!den)
                throw InvalidArgument("division requires a scalar divisor");
            if (den->is_zero()) throw DivisionByZero();
            return num * den->inv();
        }
        case Expression::Node::Pow: {
            AlgElement base = eval(rs, names, *e.children[0]);
            long exp = e.exponent;
            if (exp >= 0) {
                AlgElement r = rs.one();
                for (long t = 0; t < exp; ++t) r = rs.multiply(r, base);
                return r;
            }
            if (auto s = as_scalar(base)) {
                if (s->is_zero()) throw DivisionByZero();
                return AlgElement::scalar(n, s->pow(exp));
            }
            if (is_k_monomial(base)) {
                const auto& [w, c] = *base.terms().begin();
                Word inv;
                for (auto it = w.rbegin(); it != w.rend(); ++it)
                    inv.push_back(it->kind == GenKind::Kplus
                                      ? Generator::Kinv(it->index)
                                      : Generator::K(it->index));
                AlgElement x = AlgElement::monomial(n, inv, c.pow(-1));
                AlgElement r = rs.one();
                for (long t = 0; t < -exp; ++t) r = rs.multiply(r, x);
                return r;
            }
            throw InvalidArgument(
                "negative exponents require a scalar or K-monomial base");
        }
    }
    throw InvalidArgument("elaborate: bad expression node");
}

}  // namespace

std::unique_ptr<Expression> parse(const std::vector<Token>& tokens) {
    return Parser(tokens).run();
}

AlgElement elaborate(const RewriteSystem& rs, const NameTable& names,
                     const Expression& expr) {
    return rs.normal_form(eval(rs, names, expr));
}

AlgElement parse_element(const RewriteSystem& rs, const NameTable& names,
                         const std::string& text) {
    auto tree = parse(tokenize(text));
    return elaborate(rs, names, *tree);
}

std::string render(const AlgElement& x) { return x.str(); }

EndoSpec parse_endo_file(const RewriteSystem& rs, const NameTable& names,
                         std::istream& in) {
    int n = rs.cartan().rank();
    std::vector<AlgElement> images(n, AlgElement::zero(n));
    std::vector<bool> seen(n, false);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw InvalidArgument("automorphism file: missing '->' in: " + line);
        std::string lhs = line.substr(0, arrow);
        auto epos = lhs.find('E');
        if (epos == std::string::npos)
            throw InvalidArgument("automorphism file: left side must be E<i>");
        int idx = std::stoi(lhs.substr(epos + 1));
        if (idx < 1 || idx > n)
            throw InvalidArgument("automorphism file: index out of range");
        if (seen[idx - 1])
            throw InvalidArgument("automorphism file: duplicate image for E" +
                                  std::to_string(idx));
        seen[idx - 1] = true;
        images[idx - 1] = parse_element(rs, names, line.substr(arrow + 2));
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i])
            throw InvalidArgument("automorphism file: no image for E" +
                                  std::to_string(i + 1));
    return EndoSpec{std::move(images)};
}

}  // namespace uq
