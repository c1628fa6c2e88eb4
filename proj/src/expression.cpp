#include "folia/expression.hpp"

#include <cctype>
#include <set>

#include "folia/error.hpp"

namespace folia {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

// Function-local so that parsing works during static initialization elsewhere.
const std::vector<std::string>& default_names() {
    static const std::vector<std::string> names = {"x", "y", "z", "w", "v", "u", "t", "s", "r", "q", "p"};
    return names;
}

} // namespace

Variables::Variables(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n)) throw PreconditionError("invalid variable name '" + n + "'");
        if (n == "i") throw PreconditionError("'i' is the imaginary unit and cannot name a variable");
        if (n.front() == 'd') throw PreconditionError("variable names may not start with 'd' (reserved for differentials)");
        if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
    }
}

Variables Variables::defaults(std::size_t n) {
    std::vector<std::string> names;
    const auto& pool = default_names();
    if (n <= pool.size()) {
        names.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
    } else {
        for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    }
    return Variables(std::move(names));
}

Variables Variables::parse_list(std::string_view text) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    names.push_back(cur);
    return Variables(std::move(names));
}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

Variables Variables::extended() const {
    std::vector<std::string> names = names_;
    for (const auto& candidate : default_names()) {
        if (!index_of(candidate)) {
            names.push_back(candidate);
            return Variables(std::move(names));
        }
    }
    for (std::size_t k = names_.size() + 1;; ++k) {
        std::string candidate = "x" + std::to_string(k);
        if (!index_of(candidate)) {
            names.push_back(candidate);
            return Variables(std::move(names));
        }
    }
}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

// Values during parsing are 0-forms (polynomials) or 1-forms.
class Parser {
public:
    Parser(std::string_view text, const Variables& vars, bool allow_differentials)
        : tokens_(tokenize(text)), vars_(vars), n_(vars.size()), allow_d_(allow_differentials) {}

    Form parse() {
        Form v = expr();
        if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
        return v;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    Form constant(const Scalar& c) const { return Form::function(Poly::constant(n_, c)); }

    Form add(Form a, const Form& b, bool subtract, std::size_t offset) const {
        if (a.arity() != b.arity()) {
            if (a.is_zero() && a.arity() == 0) return subtract ? -b : b;
            if (b.is_zero() && b.arity() == 0) return a;
            throw ParseError("misplaced differential: cannot add a function and a one-form", offset);
        }
        return subtract ? a - b : a + b;
    }

    Form expr() {
        Form v = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = take();
            v = add(std::move(v), term(), op.kind == Tok::minus, op.offset);
        }
        return v;
    }

    Form term() {
        Form v = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& op = take();
            const std::size_t rhs_offset = peek().offset;
            Form rhs = factor();
            if (op.kind == Tok::star) {
                v = multiply(v, rhs, rhs_offset);
            } else {
                if (rhs.arity() != 0) throw ParseError("misplaced differential: cannot divide by a one-form", rhs_offset);
                const Poly d = rhs.as_function();
                if (d.is_zero()) throw ParseError("zero denominator", rhs_offset);
                if (homogeneous_degree(d).degree != 0 || !homogeneous_degree(d).is_homogeneous()) {
                    throw ParseError("division is only by nonzero constants", rhs_offset);
                }
                v = d.constant_term().inverse() * v;
            }
        }
        return v;
    }

    Form multiply(const Form& a, const Form& b, std::size_t offset) const {
        if (a.arity() == 1 && b.arity() == 1) {
            throw ParseError("product of differentials (arity 2) is not accepted here", offset);
        }
        if (a.arity() == 0) return a.as_function() * b;
        return b.as_function() * a;
    }

    Form factor() {
        if (peek().kind == Tok::minus) {
            take();
            return -factor();
        }
        if (peek().kind == Tok::plus) {
            take();
            return factor();
        }
        const std::size_t base_offset = peek().offset;
        Form base = primary();
        if (peek().kind == Tok::caret) {
            take();
            const Token& exp = take();
            if (exp.kind != Tok::number) throw ParseError("exponent must be a non-negative integer", exp.offset);
            if (base.arity() != 0) throw ParseError("misplaced differential: cannot raise a one-form to a power", base_offset);
            unsigned long k = 0;
            try {
                k = std::stoul(exp.text);
            } catch (const std::exception&) {
                throw ParseError("exponent too large", exp.offset);
            }
            if (k > 10000) throw ParseError("exponent too large", exp.offset);
            base = Form::function(pow(base.as_function(), static_cast<unsigned>(k)));
        }
        return base;
    }

    Form primary() {
        const Token& t = take();
        switch (t.kind) {
        case Tok::number: return constant(Scalar(mpq_class(mpz_class(t.text))));
        case Tok::lparen: {
            Form v = expr();
            if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().offset);
            take();
            return v;
        }
        case Tok::ident: return identifier(t);
        case Tok::end: throw ParseError("unexpected end of expression", t.offset);
        default: throw ParseError("unexpected '" + t.text + "'", t.offset);
        }
    }

    Form identifier(const Token& t) {
        if (t.text == "i") return constant(Scalar::imaginary_unit());
        if (auto idx = vars_.index_of(t.text)) return Form::function(Poly::variable(n_, *idx));
        if (t.text.size() > 1 && t.text.front() == 'd') {
            if (auto idx = vars_.index_of(std::string_view(t.text).substr(1))) {
                if (!allow_d_) throw ParseError("differential '" + t.text + "' is not allowed in a polynomial", t.offset);
                return Form::differential(n_, *idx);
            }
        }
        throw ParseError("undeclared variable '" + t.text + "'", t.offset);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Variables& vars_;
    std::size_t n_;
    bool allow_d_;
};

struct Piece {
    bool negative = false;
    std::string body;
};

std::string monomial_text(const Monomial& m, const Variables& vars) {
    std::string out;
    for (std::size_t i = 0; i < m.ambient_dim(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

// c * m * suffix as a signed piece, e.g. {true, "3/2*x*y*dz"}.
Piece term_piece(const Scalar& c, const Monomial& m, const Variables& vars, const std::string& suffix) {
    std::vector<std::string> factors;
    Piece piece;
    const std::string mono = monomial_text(m, vars);
    const bool has_rest = !mono.empty() || !suffix.empty();
    if (c.is_real()) {
        piece.negative = sgn(c.real()) < 0;
        const mpq_class a = abs(c.real());
        if (a != 1 || !has_rest) factors.push_back(a.get_str());
    } else if (sgn(c.real()) == 0) {
        piece.negative = sgn(c.imag()) < 0;
        const mpq_class a = abs(c.imag());
        factors.push_back(a == 1 ? "i" : a.get_str() + "*i");
    } else {
        factors.push_back("(" + c.to_string() + ")");
    }
    if (!mono.empty()) factors.push_back(mono);
    if (!suffix.empty()) factors.push_back(suffix);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k > 0) piece.body += '*';
        piece.body += factors[k];
    }
    return piece;
}

std::string join(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k == 0) {
            if (pieces[k].negative) out += '-';
        } else {
            out += pieces[k].negative ? " - " : " + ";
        }
        out += pieces[k].body;
    }
    return out;
}

void require_ring(std::size_t n, const Variables& vars) {
    if (n != vars.size()) throw DimensionMismatch("variable list does not match the ambient dimension");
}

} // namespace

Poly parse_poly(std::string_view text, const Variables& vars) {
    return Parser(text, vars, false).parse().as_function();
}

Form parse_form(std::string_view text, const Variables& vars) {
    Form v = Parser(text, vars, true).parse();
    if (v.arity() == 0) {
        if (v.is_zero()) return Form(vars.size(), 1);
        throw ParseError("expected a one-form: no differential in the expression", 0);
    }
    return v;
}

Scalar parse_scalar(std::string_view text) {
    const Poly p = parse_poly(text, Variables());
    return p.constant_term();
}

std::string render(const Poly& p, const Variables& vars) {
    require_ring(p.ambient_dim(), vars);
    std::vector<Piece> pieces;
    for (const auto& [m, c] : p.terms()) pieces.push_back(term_piece(c, m, vars, ""));
    return join(pieces);
}

std::string render(const Form& f, const Variables& vars) {
    require_ring(f.ambient_dim(), vars);
    if (f.arity() == 0) return render(f.as_function(), vars);
    std::vector<Piece> pieces;
    for (const auto& [idx, p] : f.components()) {
        std::string diff;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k > 0) diff += '*';
            diff += "d" + vars.name(static_cast<std::size_t>(idx[k]));
        }
        if (p.term_count() == 1) {
            const auto& [m, c] = *p.terms().begin();
            pieces.push_back(term_piece(c, m, vars, diff));
        } else {
            pieces.push_back({false, "(" + render(p, vars) + ")*" + diff});
        }
    }
    return join(pieces);
}

} // namespace folia
