#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "hyperslice/element.hpp"
#include "hyperslice/rational.hpp"

namespace hyperslice {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic with variable 0 largest.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return b < a;
    }
};

inline bool coeff_is_zero(const Rational& r) { return r == 0; }
inline bool coeff_is_zero(const ExactElement& e) { return e.is_zero(); }
inline Rational coeff_scale(const Rational& c, const Rational& s) { return c * s; }
inline ExactElement coeff_scale(const ExactElement& c, const Rational& s) { return c * s; }

/// Sparse multivariate polynomial with exact coefficients of type C.
template <class C>
class Polynomial {
public:
    using Terms = std::map<Exponents, C, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    int nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(const Exponents& e, const C& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw Error(ErrorKind::InvalidArgument, "exponent vector length differs from variable count");
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (coeff_is_zero(it->second)) terms_.erase(it);
    }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }
    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, coeff_scale(c, Rational(-1)));
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }

    Polynomial scaled(const Rational& s) const {
        Polynomial r(nvars_);
        if (s == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, coeff_scale(c, s));
        return r;
    }

    Polynomial derivative(int var) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents f = e;
            f[var] -= 1;
            r.add_term(f, coeff_scale(c, Rational(e[var])));
        }
        return r;
    }

    /// Exact division by the monomial x^m; throws when some term is not divisible.
    Polynomial divide_monomial(const Exponents& m) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            for (int v = 0; v < nvars_; ++v) {
                f[v] -= m[v];
                if (f[v] < 0) throw Error(ErrorKind::InvalidArgument, "monomial does not divide polynomial");
            }
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Product with coefficients combined as mul(c_self, c_other).
    template <class D, class Mul>
    auto multiply(const Polynomial<D>& o, Mul mul) const {
        using R = decltype(mul(std::declval<C>(), std::declval<D>()));
        Polynomial<R> r(nvars_);
        if (nvars_ != o.nvars()) throw Error(ErrorKind::InvalidArgument, "variable counts differ");
        Exponents f(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms()) {
                for (int v = 0; v < nvars_; ++v) f[v] = e1[v] + e2[v];
                r.add_term(f, mul(c1, c2));
            }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check(const Polynomial& o) const {
        if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "variable counts differ");
    }

    int nvars_ = 0;
    Terms terms_;
};

using RealPoly = Polynomial<Rational>;
using ElemPoly = Polynomial<ExactElement>;

inline ElemPoly real_times_element(const RealPoly& p, const ExactElement& a) {
    ElemPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, a * c);
    return r;
}

inline RealPoly operator*(const RealPoly& a, const RealPoly& b) {
    return a.multiply(b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}

inline RealPoly real_constant(int nvars, const Rational& c) {
    RealPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

inline RealPoly real_variable(int nvars, int var) {
    RealPoly p(nvars);
    Exponents e(nvars, 0);
    e[var] = 1;
    p.add_term(e, Rational(1));
    return p;
}

}  // namespace hyperslice
