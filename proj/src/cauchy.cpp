#include "hyperslice/cauchy.hpp"

#include <cmath>
#include <numbers>

namespace hyperslice {

Element char_poly(const Element& q, const Element& p, double tol) {
    ConeDecomposition d = cone_decompose(q, tol);
    const double nq = d.alpha * d.alpha + d.beta * d.beta;
    return p * p - p * (2 * d.alpha) + Element::real(p.algebra(), nq);
}

namespace {

Element invert_delta(const Element& delta, double tol) {
    try {
        return invert(delta, tol);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotInvertible)
            throw Error(ErrorKind::OnSingularSphere, "Delta_y(x) is not invertible: x lies on the sphere of y");
        throw;
    }
}

}  // namespace

Element cauchy_kernel_1var(const Element& x, const Element& y, double tol) {
    Element delta = char_poly(y, x, tol);
    if (euclidean_norm(delta) <= tol) throw Error(ErrorKind::OnSingularSphere, "x lies on the sphere of y");
    return invert_delta(delta, tol) * (conj(y) - x);
}

// ---------------------------------------------------------------- torus

BoundaryTorus BoundaryTorus::discs(const std::vector<double>& centers, const std::vector<double>& radii,
                                   const Element& J, int samples) {
    if (centers.size() != radii.size()) throw Error(ErrorKind::InvalidArgument, "centers and radii differ in length");
    if (!is_imaginary_unit(J)) throw Error(ErrorKind::NotImaginaryUnit, "torus slice unit is not in S_A");
    if (samples < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample per circle");
    BoundaryTorus T;
    for (std::size_t h = 0; h < centers.size(); ++h) {
        if (!(radii[h] > 0)) throw Error(ErrorKind::InvalidArgument, "circle radius must be positive");
        T.circles.push_back({Circle{centers[h], radii[h], 1}});
    }
    T.J = J;
    T.samples = samples;
    return T;
}

BoundaryTorus& BoundaryTorus::set_annulus(int h, double c, double r_in, double r_out) {
    if (h < 1 || h > n()) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
    if (!(r_in > 0 && r_out > r_in)) throw Error(ErrorKind::InvalidArgument, "bad annulus radii");
    circles[h - 1] = {Circle{c, r_out, 1}, Circle{c, r_in, -1}};
    return *this;
}

int BoundaryTorus::winding(int h, double alpha, double beta) const {
    int w = 0;
    for (const auto& c : circles.at(h - 1))
        if (std::hypot(alpha - c.center, beta) < c.radius) w += c.orientation;
    return w;
}

bool BoundaryTorus::contains(const SlicePoint& x) const {
    if (x.n() != n()) return false;
    for (int h = 1; h <= n(); ++h)
        if (winding(h, x.coords[h - 1].alpha, x.coords[h - 1].beta) != 1) return false;
    return true;
}

TorusSample torus_sample(const BoundaryTorus& torus, const std::vector<double>& t, const std::vector<int>& circle) {
    TorusSample s;
    const AlgebraDef* A = torus.J.algebra();
    for (int h = 0; h < torus.n(); ++h) {
        const Circle& c = torus.circles[h][circle.empty() ? 0 : circle[h]];
        const double ct = std::cos(t[h]), st = std::sin(t[h]);
        s.xi.push_back(Element::real(A, c.center + c.radius * ct) + torus.J * (c.radius * st));
        // r J e^{Jt} = -r sin t + r cos t J
        Element d = Element::real(A, -c.radius * st) + torus.J * (c.radius * ct);
        s.xi_dot.push_back(c.orientation > 0 ? d : -d);
    }
    return s;
}

// ---------------------------------------------------------------- integrands

namespace {

enum class Form { Ordered, Product, Associative };

struct Deltas {
    std::vector<Element> inv;
    double min_norm = INFINITY;
};

Deltas deltas(const std::vector<Element>& x, const std::vector<Element>& y, const Element& J) {
    Deltas d;
    for (std::size_t h = 0; h < x.size(); ++h) {
        // y lies in C_J, so Re(y) and n(y) are read off directly
        const double a = y[h][0];
        Element im = y[h] - Element::real(y[h].algebra(), a);
        double ij = 0, jj = 0;
        for (int k = 0; k < J.dim(); ++k) {
            ij += im[k] * J[k];
            jj += J[k] * J[k];
        }
        const double b = ij / jj;
        Element delta = x[h] * x[h] - x[h] * (2 * a) + Element::real(x[h].algebra(), a * a + b * b);
        d.min_norm = std::min(d.min_norm, euclidean_norm(delta));
        d.inv.push_back(invert_delta(delta, kDefaultTol));
    }
    return d;
}

Element j_inverse_power(const Element& J, int n) { return power(-J, n); }

/// Kernel part of the integrand in the requested form, applied to w = g(xi).
Element integrand_core(Form form, const std::vector<Element>& x, const TorusSample& s, const Deltas& d,
                       const Element& Jn, const Element& gy) {
    const int n = static_cast<int>(x.size());
    const AlgebraDef* A = gy.algebra();
    Element xidot = Element::one(A);
    for (const auto& e : s.xi_dot) xidot = xidot * e;
    Element factor = xidot * Jn;
    if (form == Form::Product) {
        std::vector<Element> C;
        for (int h = 0; h < n; ++h) C.push_back(d.inv[h] * (conj(s.xi[h]) - x[h]));
        return ordered_product(C, factor * gy);
    }
    Element out = Element::zero(A);
    std::vector<Element> C(n);
    for (Subset K = 0; K < (1u << n); ++K) {
        Element yKc = Element::one(A);
        for (int h = 1; h <= n; ++h) {
            if (contains(K, h)) {
                C[h - 1] = d.inv[h - 1];
                yKc = yKc * conj(s.xi[h - 1]);
            } else {
                C[h - 1] = d.inv[h - 1] * x[h - 1];
            }
        }
        Element term = form == Form::Ordered ? ordered_product(C, (yKc * factor) * gy) : ordered_product(C, yKc);
        if ((n - card(K)) % 2) out -= term;
        else out += term;
    }
    if (form == Form::Associative) return (out * factor) * gy;
    return out;
}

void check_args(const SlicePoint& x, const std::vector<double>& t, const BoundaryTorus& torus,
                const std::vector<int>& circle) {
    if (x.n() != torus.n() || static_cast<int>(t.size()) != torus.n())
        throw Error(ErrorKind::InvalidArgument, "point, angles and torus differ in arity");
    if (!circle.empty() && static_cast<int>(circle.size()) != torus.n())
        throw Error(ErrorKind::InvalidArgument, "need one circle index per variable");
    for (int h = 0; h < static_cast<int>(circle.size()); ++h)
        if (circle[h] < 0 || circle[h] >= static_cast<int>(torus.circles[h].size()))
            throw Error(ErrorKind::IndexOutOfRange, "circle index out of range");
}

}  // namespace

Element cauchy_integrand(const BlackBox& g, const SlicePoint& x, const std::vector<double>& t,
                         const BoundaryTorus& torus, const std::vector<int>& circle) {
    check_args(x, t, torus, circle);
    TorusSample s = torus_sample(torus, t, circle);
    auto xe = x.elements();
    return integrand_core(Form::Ordered, xe, s, deltas(xe, s.xi, torus.J), j_inverse_power(torus.J, torus.n()), g(s.xi));
}

Element cauchy_integrand_product(const BlackBox& g, const SlicePoint& x, const std::vector<double>& t,
                                 const BoundaryTorus& torus, const std::vector<int>& circle) {
    check_args(x, t, torus, circle);
    TorusSample s = torus_sample(torus, t, circle);
    auto xe = x.elements();
    return integrand_core(Form::Product, xe, s, deltas(xe, s.xi, torus.J), j_inverse_power(torus.J, torus.n()), g(s.xi));
}

Element slice_cauchy_kernel(const SlicePoint& x, const std::vector<Element>& y, double tol) {
    if (x.n() != static_cast<int>(y.size())) throw Error(ErrorKind::InvalidArgument, "x and y differ in arity");
    if (x.n() == 0) throw Error(ErrorKind::InvalidArgument, "empty point");
    const AlgebraDef* A = y[0].algebra();
    if (!A->associative()) throw Error(ErrorKind::NonAssociativeAlgebra, "closed-form kernel needs an associative algebra");
    const int n = x.n();
    auto xe = x.elements();
    std::vector<Element> inv;
    for (int h = 0; h < n; ++h) {
        Element delta = char_poly(y[h], xe[h], tol);
        if (euclidean_norm(delta) <= tol) throw Error(ErrorKind::OnSingularSphere, "x_h lies on the sphere of y_h");
        inv.push_back(invert_delta(delta, tol));
    }
    Element out = Element::zero(A);
    std::vector<Element> C(n);
    for (Subset K = 0; K < (1u << n); ++K) {
        Element yKc = Element::one(A);
        for (int h = 1; h <= n; ++h) {
            if (contains(K, h)) {
                C[h - 1] = inv[h - 1];
                yKc = yKc * conj(y[h - 1]);
            } else {
                C[h - 1] = inv[h - 1] * xe[h - 1];
            }
        }
        Element term = ordered_product(C, yKc);
        if ((n - card(K)) % 2) out -= term;
        else out += term;
    }
    return out;
}

// ---------------------------------------------------------------- reconstruction

namespace {

using Sampler = std::function<Element(const TorusSample&, const std::vector<double>& t, const std::vector<int>& circle)>;

CauchyResult reconstruct(const Sampler& value_on_torus, const AlgebraDef* A, const BoundaryTorus& torus,
                         const SlicePoint& x, const CauchyOptions& opt) {
    const int n = torus.n();
    if (x.n() != n) throw Error(ErrorKind::InvalidArgument, "point and torus differ in arity");
    if (!torus.contains(x)) throw Error(ErrorKind::PointOutsideE, "x is not in Omega(E)");
    if (opt.associative_kernel && !A->associative())
        throw Error(ErrorKind::NonAssociativeAlgebra, "closed-form kernel needs an associative algebra");
    const Form form = opt.associative_kernel ? Form::Associative : Form::Ordered;
    const int N = torus.samples;
    const auto xe = x.elements();
    const Element Jn = j_inverse_power(torus.J, n);
    std::size_t per_combo = 1;
    for (int h = 0; h < n; ++h) per_combo *= static_cast<std::size_t>(N);

    CauchyResult r;
    r.samples = N;
    r.associative_kernel = opt.associative_kernel;
    r.min_abs_delta = INFINITY;
    r.value = Element::zero(A);

    std::vector<int> circle(n, 0);
    std::vector<double> t(n);
    auto point = [&](std::size_t idx) {
        for (int h = n - 1; h >= 0; --h) {
            t[h] = 2 * std::numbers::pi * static_cast<double>(idx % N) / N;
            idx /= N;
        }
        TorusSample s = torus_sample(torus, t, circle);
        Deltas d = deltas(xe, s.xi, torus.J);
        r.min_abs_delta = std::min(r.min_abs_delta, d.min_norm);
        if (d.min_norm < opt.singularity_threshold)
            throw Error(ErrorKind::QuadratureSingularity, "x is too close to a sphere of the boundary torus");
        return integrand_core(form, xe, s, d, Jn, value_on_torus(s, t, circle));
    };
    std::function<Element(std::size_t, std::size_t)> pairwise = [&](std::size_t lo, std::size_t hi) {
        if (hi - lo <= 16) {
            Element acc = Element::zero(A);
            for (std::size_t i = lo; i < hi; ++i) acc += point(i);
            return acc;
        }
        std::size_t mid = lo + (hi - lo) / 2;
        return pairwise(lo, mid) + pairwise(mid, hi);
    };
    // iterate over every choice of boundary circle per variable
    while (true) {
        r.value += pairwise(0, per_combo);
        int h = n - 1;
        while (h >= 0 && ++circle[h] == static_cast<int>(torus.circles[h].size())) circle[h--] = 0;
        if (h < 0) break;
    }
    r.value = r.value / static_cast<double>(per_combo);
    r.max_inv_delta = 1 / r.min_abs_delta;
    return r;
}

}  // namespace

CauchyResult cauchy_reconstruct(const SliceFunction& f, const BoundaryTorus& torus, const SlicePoint& x,
                                const CauchyOptions& opt) {
    const int n = torus.n();
    if (f.n() != n) throw Error(ErrorKind::InvalidArgument, "function and torus differ in arity");
    Sampler on_torus = [&](const TorusSample&, const std::vector<double>& t, const std::vector<int>& circle) {
        std::vector<double> a(n), b(n);
        for (int h = 0; h < n; ++h) {
            const Circle& c = torus.circles[h][circle[h]];
            a[h] = c.center + c.radius * std::cos(t[h]);
            b[h] = c.radius * std::sin(t[h]);
        }
        return eval_parts(f, a, b, std::vector<Element>(n, torus.J));
    };
    CauchyResult r = reconstruct(on_torus, f.algebra().get(), torus, x, opt);
    r.reference = eval(f, x);
    r.abs_error = euclidean_norm(r.value - *r.reference);
    return r;
}

CauchyResult cauchy_reconstruct(const BlackBox& g, const Algebra& alg, const BoundaryTorus& torus, const SlicePoint& x,
                                const CauchyOptions& opt) {
    Sampler on_torus = [&](const TorusSample& s, const std::vector<double>&, const std::vector<int>&) { return g(s.xi); };
    return reconstruct(on_torus, alg.get(), torus, x, opt);
}

}  // namespace hyperslice
