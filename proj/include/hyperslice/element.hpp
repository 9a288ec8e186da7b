#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hyperslice/algebra.hpp"
#include "hyperslice/errors.hpp"

namespace hyperslice {

/// Coefficient vector over the basis of an algebra. The algebra must outlive the element.
template <class T>
class BasicElement {
public:
    BasicElement() = default;
    explicit BasicElement(const AlgebraDef* alg) : alg_(alg), c_(alg->dim(), T(0)) {}
    BasicElement(const AlgebraDef* alg, std::vector<T> coeffs) : alg_(alg), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != alg_->dim())
            throw Error(ErrorKind::InvalidArgument, "coefficient vector length differs from algebra dimension");
    }

    static BasicElement zero(const AlgebraDef* alg) { return BasicElement(alg); }
    static BasicElement real(const AlgebraDef* alg, T r) {
        BasicElement e(alg);
        e.c_[0] = r;
        return e;
    }
    static BasicElement one(const AlgebraDef* alg) { return real(alg, T(1)); }
    static BasicElement basis(const AlgebraDef* alg, int k) {
        if (k < 0 || k >= alg->dim()) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
        BasicElement e(alg);
        e.c_[k] = T(1);
        return e;
    }

    const AlgebraDef* algebra() const noexcept { return alg_; }
    int dim() const noexcept { return static_cast<int>(c_.size()); }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    std::vector<T>& coeffs() noexcept { return c_; }
    const T& operator[](int k) const { return c_[k]; }
    T& operator[](int k) { return c_[k]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    BasicElement& operator+=(const BasicElement& o) {
        check_same(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    BasicElement& operator-=(const BasicElement& o) {
        check_same(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    BasicElement& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    BasicElement& operator/=(const T& s) {
        for (auto& v : c_) v /= s;
        return *this;
    }
    friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
    friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
    friend BasicElement operator-(BasicElement a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend BasicElement operator*(BasicElement a, const T& s) { return a *= s; }
    friend BasicElement operator*(const T& s, BasicElement a) { return a *= s; }
    friend BasicElement operator/(BasicElement a, const T& s) { return a /= s; }

    friend BasicElement operator*(const BasicElement& a, const BasicElement& b) {
        a.check_same(b);
        const AlgebraDef& A = *a.alg_;
        BasicElement out(a.alg_);
        const int d = A.dim();
        if (A.signed_permutation()) {
            for (int i = 0; i < d; ++i) {
                if (a.c_[i] == 0) continue;
                for (int j = 0; j < d; ++j) {
                    if (b.c_[j] == 0) continue;
                    if (A.perm_sign(i, j) > 0)
                        out.c_[A.perm_index(i, j)] += a.c_[i] * b.c_[j];
                    else
                        out.c_[A.perm_index(i, j)] -= a.c_[i] * b.c_[j];
                }
            }
            return out;
        }
        for (int i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (b.c_[j] == 0) continue;
                T ab = a.c_[i] * b.c_[j];
                for (const auto& e : A.product(i, j)) out.c_[e.k] += ab * coeff_of(e);
            }
        }
        return out;
    }

    friend bool operator==(const BasicElement& a, const BasicElement& b) {
        return a.alg_ == b.alg_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BasicElement& a, const BasicElement& b) { return !(a == b); }

    void check_same(const BasicElement& o) const {
        if (alg_ != o.alg_ && !(alg_ && o.alg_ && alg_->same_as(*o.alg_)))
            throw Error(ErrorKind::AlgebraMismatch, "elements belong to different algebras");
    }

private:
    static T coeff_of(const TableEntry& e) {
        if constexpr (std::is_same_v<T, double>)
            return e.d;
        else
            return T(e.q);
    }

    const AlgebraDef* alg_ = nullptr;
    std::vector<T> c_;
};

using Element = BasicElement<double>;
using ExactElement = BasicElement<Rational>;

template <class T>
BasicElement<T> conj(const BasicElement<T>& a) {
    BasicElement<T> out = a;
    const auto& s = a.algebra()->conj_signs();
    for (int k = 0; k < a.dim(); ++k)
        if (s[k] < 0) out[k] = -out[k];
    return out;
}

template <class T>
BasicElement<T> trace(const BasicElement<T>& a) {
    return a + conj(a);
}

template <class T>
BasicElement<T> norm_sq(const BasicElement<T>& a) {
    return a * conj(a);
}

/// Power by repeated left multiplication; well defined since alternative algebras are power associative.
template <class T>
BasicElement<T> power(const BasicElement<T>& a, int k) {
    BasicElement<T> r = BasicElement<T>::one(a.algebra());
    for (int i = 0; i < k; ++i) r = a * r;
    return r;
}

/// Euclidean norm of the coefficient vector.
double euclidean_norm(const Element& a);
/// Largest absolute non-real coefficient.
double imaginary_size(const Element& a);
bool is_real(const Element& a, double tol = kDefaultTol);

Element to_double(const ExactElement& a);
ExactElement to_exact(const Element& a);

std::string to_string(const Element& a, int precision = 12);
std::string to_string(const ExactElement& a);

/// Element with the given imaginary coefficients (c[0] is the real part).
Element element_from(const Algebra& alg, std::vector<double> coeffs);

}  // namespace hyperslice
