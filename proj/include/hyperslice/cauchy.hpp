#pragma once

#include <optional>
#include <vector>

#include "hyperslice/slice.hpp"

namespace hyperslice {

/// Delta_q(p) = p^2 - 2 Re(q) p + n(q). Throws NotInQuadraticCone for q.
Element char_poly(const Element& q, const Element& p, double tol = kDefaultTol);

/// Delta_y(x)^{-1} (y^c - x). Throws OnSingularSphere when Delta_y(x) is not invertible.
Element cauchy_kernel_1var(const Element& x, const Element& y, double tol = kDefaultTol);

/// Circle c + r e^{Jt} in C_J; orientation -1 traverses it clockwise.
struct Circle {
    double center = 0;
    double radius = 1;
    int orientation = 1;
};

/// Distinguished boundary of E = E_1 x ... x E_n in (C_J)^n, each E_h a disc or an annulus
/// with real centre.
struct BoundaryTorus {
    std::vector<std::vector<Circle>> circles;
    Element J;
    int samples = 128;

    static BoundaryTorus discs(const std::vector<double>& centers, const std::vector<double>& radii, const Element& J,
                               int samples = 128);
    /// Replaces the boundary of variable h (1-based) by the annulus r_in < |z - c| < r_out.
    BoundaryTorus& set_annulus(int h, double c, double r_in, double r_out);

    int n() const { return static_cast<int>(circles.size()); }
    /// Winding number of the boundary of E_h around alpha + i beta.
    int winding(int h, double alpha, double beta) const;
    /// True iff x lies in Omega(E).
    bool contains(const SlicePoint& x) const;
};

/// Point xi(t) of the torus and its derivative, for the chosen circle of each variable.
struct TorusSample {
    std::vector<Element> xi;
    std::vector<Element> xi_dot;
};
TorusSample torus_sample(const BoundaryTorus& torus, const std::vector<double>& t, const std::vector<int>& circle);

/// sum over K of (-1)^{n-|K|} [C(x, xi(t), K), xi_K^c xi' J^{-n} g(xi(t))] with ordered products.
Element cauchy_integrand(const BlackBox& g, const SlicePoint& x, const std::vector<double>& t,
                         const BoundaryTorus& torus, const std::vector<int>& circle = {});
/// C_{xi,1}(x) ... C_{xi,n}(x) xi' J^{-n} g(xi(t)); agrees with cauchy_integrand on E only.
Element cauchy_integrand_product(const BlackBox& g, const SlicePoint& x, const std::vector<double>& t,
                                 const BoundaryTorus& torus, const std::vector<int>& circle = {});

/// C(x, y) = sum over K of (-1)^{n-|K|} [C(x, y, K), y_K^c]. Associative algebras only.
Element slice_cauchy_kernel(const SlicePoint& x, const std::vector<Element>& y, double tol = kDefaultTol);

struct CauchyOptions {
    /// Integrate C(x, y) J^{-n} dy f(y) instead of the ordered-product integrand.
    bool associative_kernel = false;
    double singularity_threshold = 1e-3;
};

struct CauchyResult {
    Element value;
    std::optional<Element> reference;
    double abs_error = 0;
    int samples = 0;
    double min_abs_delta = 0;
    double max_inv_delta = 0;
    bool associative_kernel = false;
};

/// Tensor trapezoidal rule (2 pi)^{-n} (2 pi / N)^n sum of the integrand over the grid.
/// Throws PointOutsideE or QuadratureSingularity.
CauchyResult cauchy_reconstruct(const SliceFunction& f, const BoundaryTorus& torus, const SlicePoint& x,
                                const CauchyOptions& opt = {});
CauchyResult cauchy_reconstruct(const BlackBox& g, const Algebra& alg, const BoundaryTorus& torus,
                                const SlicePoint& x, const CauchyOptions& opt = {});

}  // namespace hyperslice
