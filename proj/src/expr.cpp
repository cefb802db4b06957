#include "diffinv/expr.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace diffinv {

Expr Expr::num(const Rational& q) {
    Expr e;
    e.kind = Kind::Number;
    e.number = q;
    return e;
}

Expr Expr::variable(VarKey v) {
    Expr e;
    e.kind = Kind::Var;
    e.var = v;
    return e;
}

// ---- tokenizer ---------------------------------------------------------------

namespace {

struct Token {
    enum class Type { Number, Ident, Op, LParen, RParen, Comma, End };
    Type type = Type::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_ = Token{};
        current_.pos = pos_;
        if (pos_ >= text_.size()) {
            current_.type = Token::Type::End;
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_.type = Token::Type::Number;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_.type = Token::Type::Ident;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        ++pos_;
        switch (c) {
        case '(': current_.type = Token::Type::LParen; return;
        case ')': current_.type = Token::Type::RParen; return;
        case ',': current_.type = Token::Type::Comma; return;
        case '+':
        case '-':
        case '*':
        case '/':
        case '^':
            current_.type = Token::Type::Op;
            current_.text = std::string(1, c);
            return;
        default: throw ParseError(std::string("unexpected character '") + c + "'", pos_ - 1);
        }
    }
};

// ---- parser ------------------------------------------------------------------

class Parser {
public:
    Parser(const std::string& text, const ParseOptions& opts) : lex_(text), opts_(opts) {}

    Expr parse_full() {
        Expr e = parse_sum();
        if (lex_.peek().type != Token::Type::End)
            throw ParseError("trailing input", lex_.peek().pos);
        return e;
    }

private:
    Lexer lex_;
    ParseOptions opts_;

    Expr parse_sum() {
        Expr left = parse_term();
        while (lex_.peek().type == Token::Type::Op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            Token op = lex_.take();
            Expr right = parse_term();
            Expr node;
            node.kind = op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
            node.args = {std::move(left), std::move(right)};
            left = std::move(node);
        }
        return left;
    }

    Expr parse_term() {
        Expr left = parse_unary();
        while (lex_.peek().type == Token::Type::Op &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            Token op = lex_.take();
            Expr right = parse_unary();
            Expr node;
            node.kind = op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
            node.args = {std::move(left), std::move(right)};
            left = std::move(node);
        }
        return left;
    }

    Expr parse_unary() {
        if (lex_.peek().type == Token::Type::Op && lex_.peek().text == "-") {
            lex_.take();
            Expr node;
            node.kind = Expr::Kind::Neg;
            node.args = {parse_unary()};
            return node;
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (lex_.peek().type == Token::Type::Op && lex_.peek().text == "^") {
            Token caret = lex_.take();
            Expr exp = parse_atom();
            auto folded = fold_constant(exp);
            if (!folded) throw ParseError("exponent is not a constant", caret.pos);
            if (folded->get_den() != 1)
                throw ParseError("non-integer exponent", caret.pos);
            if (*folded < 0) throw ParseError("negative exponent", caret.pos);
            if (!folded->get_num().fits_uint_p())
                throw ParseError("exponent too large", caret.pos);
            Expr node;
            node.kind = Expr::Kind::Pow;
            node.exponent = static_cast<unsigned>(folded->get_num().get_ui());
            node.args = {std::move(base)};
            return node;
        }
        return base;
    }

    Expr parse_atom() {
        Token t = lex_.take();
        switch (t.type) {
        case Token::Type::Number: return Expr::num(rat_from_string(t.text));
        case Token::Type::LParen: {
            Expr inner = parse_sum();
            expect_rparen(t.pos);
            return inner;
        }
        case Token::Type::Ident: return parse_ident(t);
        default: throw ParseError("expected an expression", t.pos);
        }
    }

    void expect_rparen(std::size_t open_pos) {
        if (lex_.peek().type != Token::Type::RParen)
            throw ParseError("expected ')'", open_pos);
        lex_.take();
    }

    Expr parse_ident(const Token& t) {
        if (t.text == "D") return parse_derive(t);
        if (t.text == "dot") return parse_dot(t);
        return make_variable(t);
    }

    Expr parse_derive(const Token& t) {
        if (lex_.peek().type != Token::Type::LParen)
            throw ParseError("D expects arguments", t.pos);
        lex_.take();
        Expr node;
        node.kind = Expr::Kind::Derive;
        node.args.push_back(parse_sum());
        node.dorder = 1;
        if (lex_.peek().type == Token::Type::Comma) {
            lex_.take();
            Token k = lex_.take();
            if (k.type != Token::Type::Number)
                throw ParseError("derivative order must be an integer literal", k.pos);
            const long order = std::stol(k.text);
            if (order < 1) throw ParseError("derivative order must be positive", k.pos);
            node.dorder = static_cast<unsigned>(order);
        }
        expect_rparen(t.pos);
        return node;
    }

    Expr parse_dot(const Token& t) {
        if (lex_.peek().type != Token::Type::LParen)
            throw ParseError("dot expects two arguments", t.pos);
        lex_.take();
        Expr node;
        node.kind = Expr::Kind::Dot;
        node.args.push_back(parse_sum());
        if (lex_.peek().type != Token::Type::Comma)
            throw ParseError("dot expects two arguments", t.pos);
        lex_.take();
        node.args.push_back(parse_sum());
        expect_rparen(t.pos);
        return node;
    }

    Expr make_variable(const Token& t) {
        const std::string& s = t.text;
        auto digits = [](const std::string& txt, std::size_t from, std::size_t to) {
            return std::all_of(txt.begin() + from, txt.begin() + to,
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        };
        if (s == "g") return Expr::variable(VarKey::g());
        if (s == "y") return Expr::variable(VarKey::y());
        if (s == "s") return Expr::variable(VarKey::s());
        if (s == "t") return Expr::variable(VarKey::t(0));
        if (s == "x") {
            if (!opts_.allow_vectors) throw ParseError("unknown variable 'x'", t.pos);
            Expr e;
            e.kind = Expr::Kind::VecX;
            return e;
        }
        if (s[0] == 'x' && s.size() > 1 && digits(s, 1, s.size())) {
            unsigned i = static_cast<unsigned>(std::stoul(s.substr(1)));
            if (i == 0 || (opts_.max_x && i > opts_.max_x))
                throw ParseError("unknown variable '" + s + "'", t.pos);
            return Expr::variable(VarKey::x(i));
        }
        if (s[0] == 't' && s.size() > 1 && digits(s, 1, s.size())) {
            unsigned i = static_cast<unsigned>(std::stoul(s.substr(1)));
            if (i == 0) throw ParseError("unknown variable '" + s + "'", t.pos);
            return Expr::variable(VarKey::t(i));
        }
        if (s[0] == 'z' && s.size() > 1) {
            auto underscore = s.find('_');
            if (underscore == std::string::npos) {
                if (!digits(s, 1, s.size())) throw ParseError("unknown variable '" + s + "'", t.pos);
                if (!opts_.allow_vectors) throw ParseError("unknown variable '" + s + "'", t.pos);
                unsigned b = static_cast<unsigned>(std::stoul(s.substr(1)));
                if (b == 0) throw ParseError("unknown variable '" + s + "'", t.pos);
                Expr e;
                e.kind = Expr::Kind::VecZ;
                e.block = b;
                return e;
            }
            if (underscore <= 1 || underscore + 1 >= s.size() || !digits(s, 1, underscore) ||
                !digits(s, underscore + 1, s.size()))
                throw ParseError("unknown variable '" + s + "'", t.pos);
            unsigned i = static_cast<unsigned>(std::stoul(s.substr(1, underscore - 1)));
            unsigned b = static_cast<unsigned>(std::stoul(s.substr(underscore + 1)));
            if (i == 0 || b == 0 || (opts_.max_x && i > opts_.max_x))
                throw ParseError("unknown variable '" + s + "'", t.pos);
            return Expr::variable(VarKey::z(i, b));
        }
        throw ParseError("unknown variable '" + s + "'", t.pos);
    }

    std::optional<Rational> fold_constant(const Expr& e) const {
        switch (e.kind) {
        case Expr::Kind::Number: return e.number;
        case Expr::Kind::Neg: {
            auto v = fold_constant(e.args[0]);
            if (v) return -*v;
            return std::nullopt;
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Mul:
        case Expr::Kind::Div: {
            auto a = fold_constant(e.args[0]);
            auto b = fold_constant(e.args[1]);
            if (!a || !b) return std::nullopt;
            switch (e.kind) {
            case Expr::Kind::Add: return *a + *b;
            case Expr::Kind::Sub: return *a - *b;
            case Expr::Kind::Mul: return *a * *b;
            default:
                if (*b == 0) return std::nullopt;
                return *a / *b;
            }
        }
        case Expr::Kind::Pow: {
            auto a = fold_constant(e.args[0]);
            if (!a) return std::nullopt;
            return rat_pow(*a, e.exponent);
        }
        default: return std::nullopt;
        }
    }
};

} // namespace

Expr parse(const std::string& text, const ParseOptions& opts) {
    return Parser(text, opts).parse_full();
}

// ---- printer -----------------------------------------------------------------

namespace {

enum class Prec { Sum = 0, Product = 1, Unary = 2, Power = 3, Atom = 4 };

std::string print_prec(const Expr& e, Prec min_prec);

// Sort key: numbers first, then jet variables by (derivative order,
// indeterminate), then composites by their printed text.
struct FactorKey {
    int cls;
    unsigned order = 0;
    VarKey var{};
    std::string text;

    bool operator<(const FactorKey& o) const {
        if (cls != o.cls) return cls < o.cls;
        if (cls == 1) {
            if (order != o.order) return order < o.order;
            if (var != o.var) return var < o.var;
            return text < o.text;
        }
        return text < o.text;
    }
};

FactorKey key_of(const Expr& e, const std::string& text) {
    if (e.kind == Expr::Kind::Number) return {0, 0, {}, text};
    if (e.kind == Expr::Kind::Var) return {1, e.var.order, e.var.base(), text};
    if (e.kind == Expr::Kind::Derive && e.args[0].kind == Expr::Kind::Var)
        return {1, e.args[0].var.order + e.dorder, e.args[0].var.base(), text};
    if (e.kind == Expr::Kind::Pow) {
        FactorKey inner = key_of(e.args[0], text);
        inner.text = text;
        return inner;
    }
    return {2, 0, {}, text};
}

void collect_terms(const Expr& e, bool negated, std::vector<std::pair<bool, const Expr*>>& out) {
    switch (e.kind) {
    case Expr::Kind::Add:
        collect_terms(e.args[0], negated, out);
        collect_terms(e.args[1], negated, out);
        return;
    case Expr::Kind::Sub:
        collect_terms(e.args[0], negated, out);
        collect_terms(e.args[1], !negated, out);
        return;
    case Expr::Kind::Neg: collect_terms(e.args[0], !negated, out); return;
    default: out.push_back({negated, &e});
    }
}

void collect_factors(const Expr& e, bool inverted, bool& negated,
                     std::vector<const Expr*>& num, std::vector<const Expr*>& den) {
    switch (e.kind) {
    case Expr::Kind::Mul:
        collect_factors(e.args[0], inverted, negated, num, den);
        collect_factors(e.args[1], inverted, negated, num, den);
        return;
    case Expr::Kind::Div:
        collect_factors(e.args[0], inverted, negated, num, den);
        collect_factors(e.args[1], !inverted, negated, num, den);
        return;
    case Expr::Kind::Neg:
        negated = !negated;
        collect_factors(e.args[0], inverted, negated, num, den);
        return;
    default: (inverted ? den : num).push_back(&e);
    }
}

std::string print_factor_list(const std::vector<const Expr*>& factors) {
    if (factors.empty()) return "1";
    std::vector<std::pair<FactorKey, std::string>> printed;
    printed.reserve(factors.size());
    for (const Expr* f : factors) {
        std::string text = print_prec(*f, Prec::Power);
        printed.push_back({key_of(*f, text), std::move(text)});
    }
    std::stable_sort(printed.begin(), printed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (std::size_t i = 0; i < printed.size(); ++i) {
        if (i) out += "*";
        out += printed[i].second;
    }
    return out;
}

std::string print_product(const Expr& e) {
    bool negated = false;
    std::vector<const Expr*> num, den;
    collect_factors(e, false, negated, num, den);
    std::string out = print_factor_list(num);
    if (!den.empty()) {
        std::string d = den.size() == 1 ? print_prec(*den[0], Prec::Power)
                                        : "(" + print_factor_list(den) + ")";
        out += "/" + d;
    }
    if (negated) out = "-" + out;
    return out;
}

std::string print_sum(const Expr& e) {
    std::vector<std::pair<bool, const Expr*>> terms;
    collect_terms(e, false, terms);
    std::vector<std::pair<FactorKey, std::pair<bool, std::string>>> printed;
    printed.reserve(terms.size());
    for (const auto& [neg, sub] : terms) {
        bool sign = neg;
        std::string text = print_prec(*sub, Prec::Product);
        if (!text.empty() && text[0] == '-') {
            sign = !sign;
            text = text.substr(1);
        }
        printed.push_back({key_of(*sub, text), {sign, std::move(text)}});
    }
    std::stable_sort(printed.begin(), printed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (std::size_t i = 0; i < printed.size(); ++i) {
        const auto& [sign, text] = printed[i].second;
        if (i == 0) {
            if (sign) out += "-";
        } else {
            out += sign ? " - " : " + ";
        }
        out += text;
    }
    return out;
}

std::string print_prec(const Expr& e, Prec min_prec) {
    std::string out;
    Prec prec = Prec::Atom;
    switch (e.kind) {
    case Expr::Kind::Number:
        out = rat_str(e.number);
        prec = (e.number < 0 || e.number.get_den() != 1) ? Prec::Product : Prec::Atom;
        break;
    case Expr::Kind::Var: out = e.var.display(); break;
    case Expr::Kind::VecX: out = "x"; break;
    case Expr::Kind::VecZ: out = "z" + std::to_string(e.block); break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        out = print_sum(e);
        prec = Prec::Sum;
        break;
    case Expr::Kind::Neg:
        out = print_sum(e); // folds the sign into the leading term
        prec = Prec::Sum;
        break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
        out = print_product(e);
        prec = Prec::Product;
        break;
    case Expr::Kind::Pow:
        out = print_prec(e.args[0], Prec::Atom) + "^" + std::to_string(e.exponent);
        prec = Prec::Power;
        break;
    case Expr::Kind::Derive:
        out = "D(" + print_prec(e.args[0], Prec::Sum) +
              (e.dorder == 1 ? "" : "," + std::to_string(e.dorder)) + ")";
        break;
    case Expr::Kind::Dot:
        out = "dot(" + print_prec(e.args[0], Prec::Sum) + ", " +
              print_prec(e.args[1], Prec::Sum) + ")";
        break;
    }
    if (static_cast<int>(prec) < static_cast<int>(min_prec)) return "(" + out + ")";
    return out;
}

} // namespace

std::string print(const Expr& e) { return print_prec(e, Prec::Sum); }

// ---- lowering ----------------------------------------------------------------

namespace {

struct Lowered {
    bool is_vector = false;
    std::vector<DiffRational> comps; // size 1 for scalars
};

Lowered lower_impl(const Expr& e, unsigned n);

Lowered lower_scalar_binary(const Expr& e, unsigned n) {
    Lowered a = lower_impl(e.args[0], n);
    Lowered b = lower_impl(e.args[1], n);
    if (a.is_vector || b.is_vector)
        throw std::invalid_argument("vector-valued expression outside dot()");
    DiffRational out;
    switch (e.kind) {
    case Expr::Kind::Add: out = a.comps[0] + b.comps[0]; break;
    case Expr::Kind::Sub: out = a.comps[0] - b.comps[0]; break;
    case Expr::Kind::Mul: out = a.comps[0] * b.comps[0]; break;
    case Expr::Kind::Div:
        if (b.comps[0].is_zero()) throw std::invalid_argument("division by zero");
        out = a.comps[0] / b.comps[0];
        break;
    default: throw std::logic_error("unreachable");
    }
    return {false, {out}};
}

Lowered lower_impl(const Expr& e, unsigned n) {
    switch (e.kind) {
    case Expr::Kind::Number: return {false, {DiffRational(e.number)}};
    case Expr::Kind::Var:
        if (e.var.kind == Kind::X && n > 0 && e.var.a > n)
            throw std::invalid_argument("unknown variable " + e.var.name());
        return {false, {DiffRational::variable(e.var)}};
    case Expr::Kind::VecX: {
        if (n == 0) throw std::invalid_argument("vector expressions need the dimension n");
        Lowered out;
        out.is_vector = true;
        for (unsigned i = 1; i <= n; ++i) out.comps.push_back(DiffRational::variable(VarKey::x(i)));
        return out;
    }
    case Expr::Kind::VecZ: {
        if (n == 0) throw std::invalid_argument("vector expressions need the dimension n");
        Lowered out;
        out.is_vector = true;
        for (unsigned i = 1; i <= n; ++i)
            out.comps.push_back(DiffRational::variable(VarKey::z(i, e.block)));
        return out;
    }
    case Expr::Kind::Neg: {
        Lowered a = lower_impl(e.args[0], n);
        for (auto& c : a.comps) c = -c;
        return a;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return lower_scalar_binary(e, n);
    case Expr::Kind::Pow: {
        Lowered a = lower_impl(e.args[0], n);
        if (a.is_vector) throw std::invalid_argument("vector-valued expression outside dot()");
        return {false, {a.comps[0].pow(static_cast<int>(e.exponent))}};
    }
    case Expr::Kind::Derive: {
        Lowered a = lower_impl(e.args[0], n);
        for (auto& c : a.comps)
            for (unsigned k = 0; k < e.dorder; ++k) c = c.derive();
        return a;
    }
    case Expr::Kind::Dot: {
        Lowered a = lower_impl(e.args[0], n);
        Lowered b = lower_impl(e.args[1], n);
        if (!a.is_vector || !b.is_vector)
            throw std::invalid_argument("dot() expects vector arguments");
        if (a.comps.size() != b.comps.size())
            throw std::invalid_argument("dot() arguments of different dimension");
        DiffRational acc;
        for (std::size_t i = 0; i < a.comps.size(); ++i) acc = acc + a.comps[i] * b.comps[i];
        return {false, {acc}};
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

DiffRational lower(const Expr& e, unsigned n) {
    Lowered out = lower_impl(e, n);
    if (out.is_vector) throw std::invalid_argument("expression is vector-valued");
    return out.comps[0];
}

UniRational lower_curve_coordinate(const Expr& e) {
    DiffRational f = lower(e, 0);
    auto to_unipoly = [](const DiffPolynomial& p) {
        std::vector<Rational> coeffs;
        for (const auto& [m, c] : p.terms()) {
            unsigned deg = 0;
            for (const auto& [v, exp] : m.factors) {
                if (v.kind != Kind::T || v.a != 0)
                    throw std::invalid_argument("curve coordinates are functions of t only");
                if (v.order > 0)
                    throw std::invalid_argument("curve coordinates must be D-free");
                deg = exp;
            }
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
            coeffs[deg] += c;
        }
        return UniPoly(std::move(coeffs));
    };
    return UniRational(to_unipoly(f.num()), to_unipoly(f.den()));
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

CurveSpec parse_curve_text(const std::string& text) {
    CurveSpec curve;
    std::istringstream in(text);
    std::string line;
    ParseOptions opts;
    opts.allow_vectors = false;
    while (std::getline(in, line)) {
        if (blank_or_comment(line)) continue;
        curve.coords.push_back(lower_curve_coordinate(parse(strip(line), opts)));
    }
    if (curve.coords.empty()) throw std::invalid_argument("curve file has no coordinates");
    return curve;
}

CurveSpec parse_curve_file(const std::string& path) { return parse_curve_text(slurp(path)); }

GroupSpec parse_group_text(const std::string& text) {
    GroupSpec g;
    g.sampler = SamplerKind::None;
    bool have_n = false, have_p = false;
    std::string p_text;
    std::vector<std::string> phi_texts;
    std::string pbar_text;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (blank_or_comment(line)) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("group file lines are 'key: value', got '" + line + "'");
        std::string key = strip(line.substr(0, colon));
        std::string value = strip(line.substr(colon + 1));
        if (key == "name") {
            g.name = value;
        } else if (key == "n") {
            g.n = static_cast<unsigned>(std::stoul(value));
            have_n = true;
        } else if (key == "phi") {
            phi_texts.push_back(value);
        } else if (key == "p") {
            p_text = value;
            have_p = true;
        } else if (key == "pbar") {
            pbar_text = value;
        } else if (key == "pbar-binding") {
            if (value == "phis") {
                g.pbar_binding = PbarBinding::Phis;
            } else if (value == "wratios") {
                g.pbar_binding = PbarBinding::WRatios;
            } else {
                throw std::invalid_argument("pbar-binding must be 'phis' or 'wratios'");
            }
        } else {
            throw std::invalid_argument("unknown group file key '" + key + "'");
        }
    }
    if (g.name.empty()) throw std::invalid_argument("group file needs a name");
    if (!have_n || g.n < 2) throw std::invalid_argument("group file needs n >= 2");
    if (!have_p) throw std::invalid_argument("group file needs the normalizer p");

    ParseOptions opts;
    opts.max_x = g.n;
    for (const auto& txt : phi_texts) g.phis.push_back(lower(parse(txt, opts), g.n));
    g.p = lower(parse(p_text, opts), g.n);
    if (g.p.is_zero()) throw std::invalid_argument("the normalizer p must be nonzero");
    if (!pbar_text.empty()) g.pbar = lower(parse(pbar_text, opts), g.n);
    return g;
}

GroupSpec parse_group_file(const std::string& path) { return parse_group_text(slurp(path)); }

} // namespace diffinv
