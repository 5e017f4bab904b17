#include "syzdist/parse.hpp"

#include <cctype>
#include <optional>

namespace syzdist {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, DotDot, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        cur_.line = line_;
        cur_.col = col_;
        cur_.text.clear();
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur_.kind = Tok::Int;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                cur_.text += src_[pos_];
                bump();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            cur_.kind = Tok::Ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                cur_.text += src_[pos_];
                bump();
            }
            return;
        }
        if (c == '.' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
            cur_.kind = Tok::DotDot;
            bump();
            bump();
            return;
        }
        switch (c) {
            case '+': cur_.kind = Tok::Plus; break;
            case '-': cur_.kind = Tok::Minus; break;
            case '*': cur_.kind = Tok::Star; break;
            case '^': cur_.kind = Tok::Caret; break;
            case '/': cur_.kind = Tok::Slash; break;
            case '(': cur_.kind = Tok::LParen; break;
            case ')': cur_.kind = Tok::RParen; break;
            case ',': cur_.kind = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        cur_.text = c;
        bump();
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
};

// scalar-plus-differential value so one evaluator serves polynomials and
// 1-forms; `form` entries line up with main variables
struct ExprValue {
    Polynomial scalar;
    std::vector<Polynomial> form;
    bool has_form = false;

    explicit ExprValue(const RingPtr& ring) : scalar(Polynomial::zero(ring)) {}
};

class ExprParser {
public:
    ExprParser(const std::string& src, RingPtr ring, bool allow_form)
        : lex_(src), ring_(std::move(ring)), allow_form_(allow_form) {}

    ExprValue parse() {
        ExprValue v = expr();
        expect(Tok::End, "end of input");
        return v;
    }

private:
    Lexer lex_;
    RingPtr ring_;
    bool allow_form_;

    [[noreturn]] void fail(const std::string& msg, const Token& t) {
        throw ParseError(msg, t.line, t.col);
    }

    Token expect(Tok k, const std::string& what) {
        if (lex_.peek().kind != k) fail("expected " + what, lex_.peek());
        return lex_.next();
    }

    ExprValue expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Plus) lex_.next();
        else if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            neg = true;
        }
        ExprValue v = term();
        if (neg) negate(v);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.next().kind == Tok::Minus;
            ExprValue r = term();
            if (minus) negate(r);
            add(v, r);
        }
        return v;
    }

    ExprValue term() {
        ExprValue v = factor();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.next();
                ExprValue r = factor();
                v = mul(v, r, lex_.peek());
            } else if (k == Tok::Int || k == Tok::Ident || k == Tok::LParen) {
                fail("implicit multiplication is not allowed; insert '*'", lex_.peek());
            } else {
                break;
            }
        }
        return v;
    }

    ExprValue factor() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            ExprValue v = factor();
            negate(v);
            return v;
        }
        ExprValue v = primary();
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.next();
            Token e = expect(Tok::Int, "integer exponent");
            if (v.has_form) fail("cannot raise a 1-form to a power", caret);
            v.scalar = v.scalar.pow(std::stoi(e.text));
        }
        return v;
    }

    ExprValue primary() {
        Token t = lex_.next();
        ExprValue v(ring_);
        switch (t.kind) {
            case Tok::Int: {
                std::string lit = t.text;
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.next();
                    Token den = expect(Tok::Int, "integer denominator");
                    lit += "/" + den.text;
                }
                v.scalar = Polynomial::constant(ring_, rat_from_string(lit));
                return v;
            }
            case Tok::Ident: {
                int mi = ring_->main_index(t.text);
                if (mi >= 0) {
                    v.scalar = Polynomial::variable(ring_, mi);
                    return v;
                }
                int pi = ring_->param_index(t.text);
                if (pi >= 0) {
                    v.scalar = Polynomial::parameter(ring_, pi);
                    return v;
                }
                if (allow_form_ && t.text.size() > 1 && t.text[0] == 'd') {
                    int di = ring_->main_index(t.text.substr(1));
                    if (di >= 0) {
                        v.has_form = true;
                        v.form.assign(ring_->nmain(), Polynomial::zero(ring_));
                        v.form[di] = Polynomial::constant(ring_, Rat(1));
                        return v;
                    }
                }
                fail("unknown variable '" + t.text + "'", t);
            }
            case Tok::LParen: {
                ExprValue inner = expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                fail("expected a number, variable or '('", t);
        }
    }

    static void negate(ExprValue& v) {
        v.scalar = -v.scalar;
        for (auto& f : v.form) f = -f;
    }

    static void add(ExprValue& a, const ExprValue& b) {
        a.scalar += b.scalar;
        if (b.has_form) {
            if (!a.has_form) {
                a.form = b.form;
                a.has_form = true;
            } else {
                for (size_t i = 0; i < a.form.size(); ++i) a.form[i] += b.form[i];
            }
        }
    }

    ExprValue mul(const ExprValue& a, const ExprValue& b, const Token& at) {
        if (a.has_form && b.has_form) fail("product of two 1-forms is not a 1-form", at);
        ExprValue r(ring_);
        r.scalar = a.scalar * b.scalar;
        const ExprValue& formside = a.has_form ? a : b;
        const ExprValue& scalarside = a.has_form ? b : a;
        if (formside.has_form) {
            r.has_form = true;
            r.form.reserve(formside.form.size());
            for (const auto& f : formside.form) r.form.push_back(scalarside.scalar * f);
        }
        return r;
    }
};

std::vector<std::string> parse_var_list(Lexer& lex) {
    std::vector<std::string> names;
    while (true) {
        Token t = lex.next();
        if (t.kind != Tok::Ident) throw ParseError("expected variable name", t.line, t.col);
        if (lex.peek().kind == Tok::DotDot) {
            lex.next();
            Token hi = lex.next();
            if (hi.kind != Tok::Ident) throw ParseError("expected range end", hi.line, hi.col);
            auto split = [](const std::string& s) -> std::pair<std::string, int> {
                size_t i = s.size();
                while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
                if (i == s.size()) return {s, -1};
                return {s.substr(0, i), std::stoi(s.substr(i))};
            };
            auto [plo, lo] = split(t.text);
            auto [phi, hiv] = split(hi.text);
            if (lo < 0 || hiv < 0 || plo != phi || hiv < lo)
                throw ParseError("bad variable range '" + t.text + ".." + hi.text + "'",
                                 t.line, t.col);
            for (int k = lo; k <= hiv; ++k) names.push_back(plo + std::to_string(k));
        } else {
            names.push_back(t.text);
        }
        if (lex.peek().kind == Tok::Comma) {
            lex.next();
            continue;
        }
        break;
    }
    return names;
}

} // namespace

RingPtr parse_ring(const std::string& decl) {
    Lexer lex(decl);
    Token kw = lex.next();
    if (kw.kind != Tok::Ident || kw.text != "ring")
        throw ParseError("ring declaration must start with 'ring'", kw.line, kw.col);
    std::vector<std::string> mains = parse_var_list(lex);
    std::vector<std::string> params;
    OrderKind order = OrderKind::Grevlex;
    while (lex.peek().kind == Tok::Ident) {
        Token t = lex.next();
        if (t.text == "params") {
            params = parse_var_list(lex);
        } else if (t.text == "order") {
            Token o = lex.next();
            if (o.kind != Tok::Ident) throw ParseError("expected order name", o.line, o.col);
            if (o.text == "grevlex") order = OrderKind::Grevlex;
            else if (o.text == "lex") order = OrderKind::Lex;
            else throw ParseError("unknown order '" + o.text + "'", o.line, o.col);
        } else {
            throw ParseError("unexpected token '" + t.text + "'", t.line, t.col);
        }
    }
    if (lex.peek().kind != Tok::End)
        throw ParseError("trailing input in ring declaration", lex.peek().line, lex.peek().col);
    try {
        return make_ring(std::move(mains), std::move(params), order);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), kw.line, kw.col);
    }
}

Polynomial parse_polynomial(const std::string& src, const RingPtr& ring) {
    ExprParser p(src, ring, /*allow_form=*/false);
    ExprValue v = p.parse();
    return v.scalar;
}

std::vector<Polynomial> parse_form_coefficients(const std::string& src, const RingPtr& ring) {
    ExprParser p(src, ring, /*allow_form=*/true);
    ExprValue v = p.parse();
    if (!v.scalar.is_zero()) throw ParseError("1-form has a stray scalar part", 1, 1);
    if (!v.has_form) v.form.assign(ring->nmain(), Polynomial::zero(ring));
    return v.form;
}

namespace {

std::string coeff_body_string(const Coeff& c, const RingPtr& ring) {
    // signed sum, constant slot first then parameters ascending
    std::string s;
    bool first = true;
    auto emit = [&](const Rat& v, const std::string& var) {
        if (v == 0) return;
        Rat a = abs(v);
        if (first) {
            if (v < 0) s += "-";
            first = false;
        } else {
            s += v < 0 ? " - " : " + ";
        }
        if (var.empty()) {
            s += rat_str(a);
        } else if (a == 1) {
            s += var;
        } else {
            s += rat_str(a) + "*" + var;
        }
    };
    emit(c.constant_part(), "");
    for (const auto& [i, v] : c.linear_part()) emit(v, ring->param_vars()[i]);
    return s;
}

std::string mono_string(const Monomial& m, const RingPtr& ring) {
    std::string s;
    for (int i = 0; i < ring->nmain(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring->main_vars()[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

} // namespace

std::string poly_to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const RingPtr& ring = p.ring();
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        const Coeff& c = t.c;
        std::string mono = mono_string(t.m, ring);
        bool simple = c.is_constant() ||
                      (c.constant_part() == 0 && c.linear_part().size() == 1);
        std::string body;
        bool negative = false;
        if (simple) {
            Rat v = c.is_constant() ? c.constant_part() : c.linear_part().front().second;
            negative = v < 0;
            Rat a = abs(v);
            std::string varpart =
                c.is_constant() ? "" : ring->param_vars()[c.linear_part().front().first];
            if (!varpart.empty() && !mono.empty()) varpart += "*";
            std::string factors = varpart + mono;
            if (factors.empty()) body = rat_str(a);
            else if (a == 1) body = factors;
            else body = rat_str(a) + "*" + factors;
        } else {
            body = "(" + coeff_body_string(c, ring) + ")";
            if (!mono.empty()) body += "*" + mono;
        }
        if (first) {
            s += negative ? "-" : "";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        s += body;
    }
    return s;
}

std::string Polynomial::str() const { return poly_to_string(*this); }

std::string form_to_string(const std::vector<Polynomial>& coeffs) {
    if (coeffs.empty()) return "0";
    const RingPtr& ring = coeffs.front().ring();
    std::string s;
    for (int i = 0; i < ring->nmain(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + poly_to_string(coeffs[i]) + ")*d" + ring->main_vars()[i];
    }
    return s.empty() ? "0" : s;
}

} // namespace syzdist
