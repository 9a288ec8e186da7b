#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperslice/slice.hpp"

namespace hyperslice {

SliceFunction slice_partial(const SliceFunction& f, int h);
SliceFunction slice_partial_conj(const SliceFunction& f, int h);

/// One failed Cauchy-Riemann component equation. K never contains h.
/// equation 1: dF_K/dalpha_h = dF_{K+h}/dbeta_h; equation 2: dF_K/dbeta_h = -dF_{K+h}/dalpha_h.
struct CRViolation {
    Subset K = 0;
    int h = 0;
    int equation = 1;
    std::string describe() const;
};

struct RegularityReport {
    bool regular = true;
    std::vector<CRViolation> violations;
};

RegularityReport is_slice_regular(const StemPoly& F);
/// Throws BlackBoxUnsupported for numeric stems.
RegularityReport is_slice_regular(const SliceFunction& f);

/// Finite sum of ordered monomials x^l a = [(x_1^l_1, ..., x_n^l_n), a].
class OrderedPolynomial {
public:
    OrderedPolynomial() = default;
    OrderedPolynomial(Algebra alg, int n) : alg_(std::move(alg)), n_(n), p_(n) {}

    const Algebra& algebra() const noexcept { return alg_; }
    int n() const noexcept { return n_; }
    const ElemPoly::Terms& terms() const noexcept { return p_.terms(); }
    const ElemPoly& as_poly() const noexcept { return p_; }
    int degree() const { return p_.degree(); }
    bool is_zero() const { return p_.is_zero(); }

    void add_term(const Exponents& ell, const ExactElement& a);
    /// Coefficient of x^l (zero if absent).
    ExactElement coefficient(const Exponents& ell) const;

    OrderedPolynomial& operator+=(const OrderedPolynomial& o);
    friend OrderedPolynomial operator+(OrderedPolynomial a, const OrderedPolynomial& b) { return a += b; }
    friend bool operator==(const OrderedPolynomial& a, const OrderedPolynomial& b) {
        return a.n_ == b.n_ && a.p_ == b.p_;
    }

private:
    Algebra alg_;
    int n_ = 0;
    ElemPoly p_;
};

/// Pointwise sum of ordered monomials on raw tuples; any x in A^n is accepted.
Element poly_eval(const OrderedPolynomial& p, const std::vector<Element>& x);
Element poly_eval(const OrderedPolynomial& p, const SlicePoint& x);
StemPoly poly_to_stem(const OrderedPolynomial& p);
/// Coefficient of x^l is the sum over p + q = l of a_p b_q.
OrderedPolynomial star_product(const OrderedPolynomial& p, const OrderedPolynomial& q);

/// Power series sum over l of x^l a_l with ||a_l|| <= M^|l| (asserted by the caller for closures).
struct PowerSeries {
    Algebra algebra;
    int n = 1;
    std::function<Element(const Exponents&)> coeff;
    /// When set, coefficients come from this finite table and coeff is ignored.
    std::optional<OrderedPolynomial> table;
    double M = 1;
    int truncation_degree = 24;

    static PowerSeries from_polynomial(const OrderedPolynomial& p, double M);
};

struct SeriesValue {
    Element value;
    double tail_bound = 0;
    double gamma = 0;
};

/// Truncated sum with a bound for the discarded tail. Throws OutsideConvergenceBall.
SeriesValue series_eval(const PowerSeries& s, const std::vector<Element>& x, double rho);

/// sum over h > deg of (h+1)^n gamma^h.
double series_tail_bound(int n, double gamma, int deg);

struct SplitHolomorphyReport {
    bool holomorphic = true;
    /// Coefficient size of the largest Cauchy-Riemann defect over all f_l and variables.
    double max_residual = 0;
    /// Indices l of the components f_l that fail.
    std::vector<int> failing_components;
    /// True when the splitting basis and coordinates were computed in exact arithmetic.
    bool exact = false;
};

/// Restricts f to (C_J)^n, splits f_J = sum_l f_l J_l over a splitting basis and checks
/// that each f_l is holomorphic. Exact when J has rational coordinates with J^2 = -1 exactly.
SplitHolomorphyReport split_holomorphy_check(const SliceFunction& f, const Element& J, double tol = kDefaultTol);
SplitHolomorphyReport split_holomorphy_check(const StemPoly& F, const ExactElement& J);

struct OneVariableFailure {
    int h = 0;
    std::vector<int> eps;
    Subset H = 0;
};

struct OneVariableReport {
    bool regular = true;
    int checks = 0;
    std::vector<OneVariableFailure> failures;
};

/// Checks that each truncated spherical derivative D_eps f, eps on {1..h-1}, is slice regular
/// in x_h with the remaining variables and units frozen.
OneVariableReport one_variable_regularity_check(const StemPoly& F);
OneVariableReport one_variable_regularity_check(const SliceFunction& f);

}  // namespace hyperslice
