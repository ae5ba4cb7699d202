#include "noetherres/poly_io.hpp"

#include <cctype>

namespace nres {

std::string VarNames::name(std::size_t i) const {
    if (i < tcount) return "t" + std::to_string(i + 1);
    return "x" + std::to_string(i - tcount + 1);
}

std::size_t VarNames::index(const std::string& s) const {
    if (s.size() < 2 || (s[0] != 'x' && s[0] != 't')) return std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::string::npos;
    std::size_t k = std::stoul(s.substr(1));
    if (k == 0) return std::string::npos;
    if (s[0] == 't') return k <= tcount ? k - 1 : std::string::npos;
    return k <= xcount ? tcount + k - 1 : std::string::npos;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    std::string number() { // digits, optionally /digits
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            std::size_t save = pos++;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) pos = save; // '/' did not start a denominator
        }
        return s.substr(start, pos - start);
    }
    std::string variable() {
        skip_ws();
        std::size_t start = pos;
        ++pos; // 'x' or 't'
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const VarNames& names,
                            const FieldSpec& field, const MonomialOrder& ord) {
    Lexer lx{text};
    std::vector<Term> terms;
    bool first = true;
    while (!lx.done()) {
        bool negative = false;
        if (lx.eat('+')) {
        } else if (lx.eat('-')) {
            negative = true;
        } else if (!first) {
            throw ParseError("expected '+' or '-' near position " + std::to_string(lx.pos) +
                             " in '" + text + "'");
        }
        first = false;

        FieldElement coeff = FieldElement::one(field);
        bool have_any = false;
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = FieldElement::parse(lx.number(), field);
            have_any = true;
        }
        Monomial m(names.nvars());
        for (;;) {
            lx.eat('*');
            char v = lx.peek();
            if (v != 'x' && v != 't') break;
            std::string vs = lx.variable();
            std::size_t idx = names.index(vs);
            if (idx == std::string::npos)
                throw ParseError("unknown variable '" + vs + "' in '" + text + "'");
            Exp e = 1;
            if (lx.eat('^')) {
                std::string n = lx.number();
                if (n.empty() || n.find('/') != std::string::npos)
                    throw ParseError("bad exponent in '" + text + "'");
                e = static_cast<Exp>(std::stoul(n));
            }
            m = mul(m, Monomial::variable(names.nvars(), idx, e));
            have_any = true;
        }
        if (!have_any)
            throw ParseError("empty term in '" + text + "'");
        if (negative) coeff = -coeff;
        terms.push_back({std::move(coeff), std::move(m)});
    }
    if (terms.empty()) throw ParseError("empty polynomial");
    return Polynomial::from_terms(std::move(terms), names.nvars(), field, ord);
}

std::string monomial_str(const Monomial& m, const VarNames& names) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (!m[i]) continue;
        if (!out.empty()) out += "*";
        out += names.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string polynomial_str(const Polynomial& f, const VarNames& names) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        const Term& t = f.terms()[i];
        FieldElement c = t.c;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(cs.begin());
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (t.m.is_one()) {
            out += cs;
        } else if (cs == "1") {
            out += monomial_str(t.m, names);
        } else {
            out += cs + "*" + monomial_str(t.m, names);
        }
    }
    return out;
}

} // namespace nres
