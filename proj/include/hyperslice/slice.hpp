#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "hyperslice/geometry.hpp"
#include "hyperslice/stem.hpp"

namespace hyperslice {

/// Conjugation-invariant region of C; only |Im| bounds are stored.
struct Region {
    enum class Shape { Plane, Disc, Annulus, Rectangle };
    Shape shape = Shape::Plane;
    double center = 0;  // real centre for discs and annuli
    double radius = 0;
    double inner_radius = 0;
    double re_lo = 0, re_hi = 0, im_max = 0;

    static Region plane() { return {}; }
    static Region disc(double c, double r);
    static Region annulus(double c, double r_in, double r_out);
    static Region rectangle(double re_lo, double re_hi, double im_max);
    bool contains(double alpha, double beta) const;
};

/// D as a product of per-variable regions; each variable may carry several regions (intersection).
struct DomainSpec {
    std::vector<std::vector<Region>> per_var;

    static DomainSpec whole(int n) { return DomainSpec{std::vector<std::vector<Region>>(n)}; }
    static DomainSpec discs(const std::vector<double>& centers, const std::vector<double>& radii);
    int n() const { return static_cast<int>(per_var.size()); }
    bool contains(const std::vector<double>& alpha, const std::vector<double>& beta) const;
    DomainSpec intersect(const DomainSpec& o) const;
};

/// Point of (Q_A)^n stored as decompositions alpha_h + beta_h J_h with beta_h >= 0.
struct SlicePoint {
    std::vector<ConeDecomposition> coords;

    static SlicePoint from_elements(const std::vector<Element>& x, double tol = kDefaultTol);
    static SlicePoint from_parts(const std::vector<double>& alpha, const std::vector<double>& beta,
                                 const std::vector<Element>& J);

    int n() const { return static_cast<int>(coords.size()); }
    std::vector<double> alphas() const;
    std::vector<double> betas() const;
    std::vector<Element> units() const;
    std::vector<Element> elements() const;
    /// Interleaved (alpha_1, beta_1, ..., alpha_n, beta_n).
    std::vector<double> ab() const;
    /// x^{c,H}: coordinates in H replaced by their conjugates.
    SlicePoint conjugated(Subset H) const;
    /// Same alpha, beta with new units.
    SlicePoint with_units(const std::vector<Element>& J) const;
};

/// Numeric stem: maps interleaved (alpha_h, beta_h) to the 2^n component values.
using CallableStem = std::function<StemValue(const std::vector<double>& ab)>;
/// Arbitrary function on raw tuples of algebra elements.
using BlackBox = std::function<Element(const std::vector<Element>& x)>;

/// f = I(F) on the circularization of a domain D.
class SliceFunction {
public:
    SliceFunction(StemPoly stem, DomainSpec domain);
    explicit SliceFunction(StemPoly stem);
    SliceFunction(Algebra alg, int n, CallableStem stem, DomainSpec domain);

    int n() const noexcept { return n_; }
    const Algebra& algebra() const noexcept { return alg_; }
    const DomainSpec& domain() const noexcept { return domain_; }
    bool has_polynomial_stem() const noexcept { return static_cast<bool>(poly_); }
    /// Throws BlackBoxUnsupported for numeric stems.
    const StemPoly& stem() const;

    StemValue stem_value(const std::vector<double>& alpha, const std::vector<double>& beta) const;
    Element operator()(const SlicePoint& x) const;
    /// Decomposes each coordinate first.
    Element at(const std::vector<Element>& x, double tol = kDefaultTol) const;
    BlackBox as_black_box(double tol = kDefaultTol) const;

private:
    struct Compiled;
    Algebra alg_;
    int n_;
    std::shared_ptr<const StemPoly> poly_;
    std::shared_ptr<const Compiled> compiled_;
    CallableStem callable_;
    DomainSpec domain_;
};

/// sum over K of [J_K, F_K(z)] for arbitrary signs of beta_h.
Element eval_parts(const SliceFunction& f, const std::vector<double>& alpha, const std::vector<double>& beta,
                   const std::vector<Element>& J);
Element eval(const SliceFunction& f, const SlicePoint& x);

/// 2^{-n} sum over K of [J_K, [I_K^{-1}, sum over H of (-1)^|K n H| values[H]]].
Element representation_from_values(const std::vector<Element>& values, const std::vector<Element>& I,
                                   const std::vector<Element>& J);
/// f(x) computed from the 2^n values f(y^{c,H}); x and y must share alpha and beta.
Element representation_eval(const SliceFunction& f, const SlicePoint& y, const SlicePoint& x,
                            double tol = kDefaultTol);
Element representation_eval(const BlackBox& g, const SlicePoint& y, const SlicePoint& x, double tol = kDefaultTol);

/// F_K(z) = 2^{-n} [I_K^{-1}, sum over H of (-1)^|K n H| values[H]].
StemValue stem_from_values(const std::vector<Element>& values, const SlicePoint& y);

struct SlicenessReport {
    std::vector<double> residuals;
    double max_residual = 0;
};
SlicenessReport sliceness_test(const BlackBox& g, const std::vector<Element>& I, const std::vector<SlicePoint>& samples);

Element spherical_value(const SliceFunction& f, const SlicePoint& x);
Element spherical_derivative(const SliceFunction& f, Subset K, const SlicePoint& x, double tol = kDefaultTol);
/// Orbit-average forms, usable on black boxes.
Element spherical_value_intrinsic(const BlackBox& g, const SlicePoint& x);
Element spherical_derivative_intrinsic(const BlackBox& g, Subset K, const SlicePoint& x, double tol = kDefaultTol);

/// Truncated spherical derivative of order eps.size(), read off the stem.
Element truncated_derivative(const SliceFunction& f, const std::vector<int>& eps, const SlicePoint& x,
                             double tol = kDefaultTol);
/// Same quantity by iterating one-variable spherical value / derivative on a black box.
Element iterated_spherical_derivative(const BlackBox& g, const std::vector<int>& eps, const SlicePoint& x,
                                      double tol = kDefaultTol);

SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g, const SigmaTable& sigma);
SliceFunction slice_tensor_product(const SliceFunction& f, const SliceFunction& g);

}  // namespace hyperslice
