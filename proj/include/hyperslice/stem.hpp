#pragma once

#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperslice/element.hpp"
#include "hyperslice/polynomial.hpp"

namespace hyperslice {

/// Subset K of {1..n} as a bitmask: bit h-1 is set iff h is in K.
using Subset = unsigned;

inline int card(Subset K) { return std::popcount(K); }
inline bool contains(Subset K, int h) { return (K >> (h - 1)) & 1u; }
inline Subset singleton(int h) { return 1u << (h - 1); }
inline Subset full_set(int n) { return (1u << n) - 1u; }
/// Elements of K in increasing order.
std::vector<int> elements(Subset K);
std::string subset_name(Subset K);

/// Index of the variable alpha_h (h is 1-based); beta_h follows it.
inline int alpha_var(int h) { return 2 * (h - 1); }
inline int beta_var(int h) { return 2 * (h - 1) + 1; }

/// sum over K of (-1)^(|H n K| + |K n L|).
long combinatorial_sum(int n, Subset H, Subset L);

/// Structure constants of a symmetric-difference product e_K e_H = sigma(K,H) e_{K xor H}.
class SigmaTable {
public:
    SigmaTable(int n, std::vector<Rational> values);
    static SigmaTable tensor(int n);

    int n() const noexcept { return n_; }
    const Rational& operator()(Subset K, Subset H) const { return s_[(static_cast<std::size_t>(K) << n_) | H]; }

    bool has_unity() const;
    bool is_commutative() const;
    bool is_associative() const;
    bool is_hypercomplex() const;
    friend bool operator==(const SigmaTable& a, const SigmaTable& b) { return a.n_ == b.n_ && a.s_ == b.s_; }

private:
    int n_;
    std::vector<Rational> s_;
};

/// Determines sigma from unity, hypercomplexity, commutativity and associativity alone by
/// propagating the defining equations. Returns nothing when they do not fix every entry
/// or are contradictory.
std::optional<SigmaTable> solve_hypercomplex_commutative_associative(int n);

/// Value of a stem function at a point: 2^n elements indexed by subsets.
struct StemValue {
    int n = 0;
    std::vector<Element> comps;
};

struct ParityViolation {
    Subset K;
    Exponents exponents;
};

/// Stem function whose components are exact polynomials in (alpha_1, beta_1, ..., alpha_n, beta_n).
class StemPoly {
public:
    StemPoly() = default;
    StemPoly(Algebra alg, int n);

    /// Rejects monomials breaking the parity law.
    static StemPoly make(Algebra alg, int n, std::vector<ElemPoly> comps);
    /// Skips the parity check; used for diagnostics and adapters.
    static StemPoly unchecked(Algebra alg, int n, std::vector<ElemPoly> comps);
    static StemPoly constant(Algebra alg, int n, const ExactElement& a);

    int n() const noexcept { return n_; }
    int nvars() const noexcept { return 2 * n_; }
    const Algebra& algebra() const noexcept { return alg_; }
    const ElemPoly& operator[](Subset K) const { return comps_.at(K); }
    const std::vector<ElemPoly>& components() const noexcept { return comps_; }

    bool is_zero() const;
    int degree() const;
    bool has_real_components() const;

    StemPoly& operator+=(const StemPoly& o);
    StemPoly& operator-=(const StemPoly& o);
    friend StemPoly operator+(StemPoly a, const StemPoly& b) { return a += b; }
    friend StemPoly operator-(StemPoly a, const StemPoly& b) { return a -= b; }
    StemPoly scaled(const Rational& s) const;
    friend bool operator==(const StemPoly& a, const StemPoly& b);

    /// Components at z = (alpha_h + i beta_h)_h given as interleaved (alpha_1, beta_1, ...).
    StemValue evaluate(const std::vector<double>& ab) const;

private:
    void check_same(const StemPoly& o) const;

    Algebra alg_;
    int n_ = 0;
    std::vector<ElemPoly> comps_;
};

/// Empty iff F satisfies the parity law of stem functions.
std::vector<ParityViolation> stem_parity_check(const StemPoly& F);

/// (FG)_K = sum over H xor L = K of sigma(H,L) F_H G_L, coefficients in the order F then G.
StemPoly stem_product(const StemPoly& F, const StemPoly& G, const SigmaTable& sigma);
StemPoly tensor_product(const StemPoly& F, const StemPoly& G);

/// Complex structure J_h: component K of the input lands on K xor {h} with sign (-1)^|K n {h}|.
StemValue apply_complex_structure(const StemValue& w, int h);
StemPoly apply_complex_structure(const StemPoly& F, int h);

StemPoly cr_partial(const StemPoly& F, int h);
StemPoly cr_partial_bar(const StemPoly& F, int h);

/// (alpha + i beta)^k = p_k + i q_k, in the two variables (alpha, beta).
std::pair<RealPoly, RealPoly> pq_polynomials(int k);

/// Stem of the monomial x^l a.
StemPoly monomial_stem(const Algebra& alg, const std::vector<int>& ell, const ExactElement& a);

}  // namespace hyperslice
