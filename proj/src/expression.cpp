#include "hyperslice/expression.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace hyperslice {

namespace {

class Parser {
public:
    Parser(std::string_view s, const Algebra& alg) : s_(s), alg_(alg) {}

    OrderedPolynomial run(int min_n) {
        struct Term {
            std::map<int, int> exps;
            ExactElement a;
        };
        std::vector<Term> terms;
        int maxvar = 0;
        skip();
        if (at_end()) fail("term");
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            advance();
            skip();
        }
        while (true) {
            Term t = {{}, ExactElement::one(alg_.get())};
            bool any = false;
            if (peek() == '(') {
                t.a = coeff();
                any = true;
            }
            skip();
            while (peek() == 'x') {
                advance();
                int idx = natural("variable index");
                if (idx < 1) fail_at(last_line_, last_col_, "variable index >= 1");
                int e = 1;
                skip();
                if (peek() == '^') {
                    advance();
                    skip();
                    e = natural("exponent");
                }
                t.exps[idx] += e;
                maxvar = std::max(maxvar, idx);
                any = true;
                skip();
            }
            if (!any) fail("term");
            if (negate) t.a = -t.a;
            terms.push_back(std::move(t));
            skip();
            if (at_end()) break;
            if (peek() == '+' || peek() == '-') {
                negate = peek() == '-';
                advance();
                skip();
                continue;
            }
            fail("'+', '-', 'x' or end of input");
        }
        const int n = std::max({maxvar, min_n, 1});
        OrderedPolynomial p(alg_, n);
        for (const auto& t : terms) {
            Exponents e(n, 0);
            for (const auto& [v, k] : t.exps) e[v - 1] = k;
            p.add_term(e, t.a);
        }
        return p;
    }

private:
    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[i_]; }
    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(line_, col_, expected); }
    [[noreturn]] void fail_at(int line, int col, const std::string& expected) const {
        throw SyntaxError(line, col, expected);
    }

    int natural(const std::string& what) {
        last_line_ = line_;
        last_col_ = col_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(what);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000) fail_at(last_line_, last_col_, what + " below 10^6");
            advance();
        }
        return static_cast<int>(v);
    }

    Rational real() {
        const int line = line_, col = col_;
        std::size_t start = i_;
        auto digits = [&] {
            bool any = false;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                advance();
                any = true;
            }
            return any;
        };
        if (peek() == '+' || peek() == '-') advance();
        bool any = digits();
        if (peek() == '.') {
            advance();
            any = digits() || any;
        }
        if (!any) fail_at(line, col, "real number");
        if (peek() == 'e' || peek() == 'E') {
            std::size_t save = i_;
            int sl = line_, sc = col_;
            advance();
            if (peek() == '+' || peek() == '-') advance();
            if (!digits()) {
                i_ = save;
                line_ = sl;
                col_ = sc;
            }
        } else if (peek() == '/') {
            advance();
            if (!digits()) fail("denominator");
        }
        try {
            return parse_rational(s_.substr(start, i_ - start));
        } catch (const std::exception&) {
            fail_at(line, col, "real number");
        }
    }

    ExactElement coeff() {
        advance();  // '('
        skip();
        ExactElement a = ExactElement::real(alg_.get(), real());
        skip();
        while (peek() != ')') {
            if (at_end()) fail("')'");
            if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("basis name or ')'");
            const int line = line_, col = col_;
            std::size_t start = i_;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
            std::string name(s_.substr(start, i_ - start));
            int k = alg_->basis_index(name);
            if (k < 0)
                throw Error(ErrorKind::UnknownBasisName, "unknown basis name '" + name + "' for " + alg_->label() +
                                                             " at " + std::to_string(line) + ":" +
                                                             std::to_string(col));
            skip();
            a[k] += real();
            skip();
        }
        advance();  // ')'
        return a;
    }

    std::string_view s_;
    const Algebra& alg_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
    int last_line_ = 1, last_col_ = 1;
};

}  // namespace

OrderedPolynomial parse_expression(std::string_view src, const Algebra& alg, int min_n) {
    return Parser(src, alg).run(min_n);
}

std::string coefficient_to_string(const ExactElement& a) {
    std::string s = "(" + rational_to_string(a[0]);
    const auto& names = a.algebra()->names();
    for (int k = 1; k < a.dim(); ++k)
        if (a[k] != 0) s += " " + names[k] + " " + rational_to_string(a[k]);
    return s + ")";
}

std::string to_expression(const OrderedPolynomial& p) {
    if (p.is_zero()) return "(0)";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += coefficient_to_string(it->second);
        for (int h = 0; h < p.n(); ++h) {
            if (it->first[h] == 0) continue;
            out += " x" + std::to_string(h + 1);
            if (it->first[h] > 1) out += "^" + std::to_string(it->first[h]);
        }
    }
    return out;
}

}  // namespace hyperslice
