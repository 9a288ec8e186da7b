#include "hyperslice/slice.hpp"

#include <cmath>

namespace hyperslice {

// ---------------------------------------------------------------- domains

Region Region::disc(double c, double r) {
    if (!(r > 0)) throw Error(ErrorKind::InvalidArgument, "disc radius must be positive");
    Region g;
    g.shape = Shape::Disc;
    g.center = c;
    g.radius = r;
    return g;
}

Region Region::annulus(double c, double r_in, double r_out) {
    if (!(r_in >= 0 && r_out > r_in)) throw Error(ErrorKind::InvalidArgument, "bad annulus radii");
    Region g;
    g.shape = Shape::Annulus;
    g.center = c;
    g.inner_radius = r_in;
    g.radius = r_out;
    return g;
}

Region Region::rectangle(double lo, double hi, double im_max) {
    if (!(hi > lo && im_max > 0)) throw Error(ErrorKind::InvalidArgument, "bad rectangle");
    Region g;
    g.shape = Shape::Rectangle;
    g.re_lo = lo;
    g.re_hi = hi;
    g.im_max = im_max;
    return g;
}

bool Region::contains(double a, double b) const {
    switch (shape) {
        case Shape::Plane: return true;
        case Shape::Disc: return std::hypot(a - center, b) < radius;
        case Shape::Annulus: {
            double r = std::hypot(a - center, b);
            return r > inner_radius && r < radius;
        }
        case Shape::Rectangle: return a > re_lo && a < re_hi && std::abs(b) < im_max;
    }
    return false;
}

DomainSpec DomainSpec::discs(const std::vector<double>& centers, const std::vector<double>& radii) {
    if (centers.size() != radii.size()) throw Error(ErrorKind::InvalidArgument, "centers and radii differ in length");
    DomainSpec d;
    for (std::size_t h = 0; h < centers.size(); ++h) d.per_var.push_back({Region::disc(centers[h], radii[h])});
    return d;
}

bool DomainSpec::contains(const std::vector<double>& alpha, const std::vector<double>& beta) const {
    for (std::size_t h = 0; h < per_var.size(); ++h)
        for (const auto& r : per_var[h])
            if (!r.contains(alpha[h], beta[h])) return false;
    return true;
}

DomainSpec DomainSpec::intersect(const DomainSpec& o) const {
    if (o.n() != n()) throw Error(ErrorKind::InvalidArgument, "domains of different arity");
    DomainSpec d = *this;
    for (int h = 0; h < n(); ++h) d.per_var[h].insert(d.per_var[h].end(), o.per_var[h].begin(), o.per_var[h].end());
    return d;
}

// ---------------------------------------------------------------- points

SlicePoint SlicePoint::from_elements(const std::vector<Element>& x, double tol) {
    SlicePoint p;
    for (const auto& e : x) p.coords.push_back(cone_decompose(e, tol));
    return p;
}

SlicePoint SlicePoint::from_parts(const std::vector<double>& alpha, const std::vector<double>& beta,
                                  const std::vector<Element>& J) {
    if (alpha.size() != beta.size() || alpha.size() != J.size())
        throw Error(ErrorKind::InvalidArgument, "alpha, beta and J differ in length");
    SlicePoint p;
    for (std::size_t h = 0; h < alpha.size(); ++h) {
        if (beta[h] < 0) p.coords.push_back({alpha[h], -beta[h], -J[h]});
        else p.coords.push_back({alpha[h], beta[h], J[h]});
    }
    return p;
}

std::vector<double> SlicePoint::alphas() const {
    std::vector<double> v;
    for (const auto& c : coords) v.push_back(c.alpha);
    return v;
}

std::vector<double> SlicePoint::betas() const {
    std::vector<double> v;
    for (const auto& c : coords) v.push_back(c.beta);
    return v;
}

std::vector<Element> SlicePoint::units() const {
    std::vector<Element> v;
    for (const auto& c : coords) v.push_back(c.J);
    return v;
}

std::vector<Element> SlicePoint::elements() const {
    std::vector<Element> v;
    for (const auto& c : coords) v.push_back(c.reconstruct());
    return v;
}

std::vector<double> SlicePoint::ab() const {
    std::vector<double> v;
    for (const auto& c : coords) {
        v.push_back(c.alpha);
        v.push_back(c.beta);
    }
    return v;
}

SlicePoint SlicePoint::conjugated(Subset H) const {
    SlicePoint p = *this;
    for (int h = 1; h <= n(); ++h)
        if (contains(H, h)) p.coords[h - 1].J = -p.coords[h - 1].J;
    return p;
}

SlicePoint SlicePoint::with_units(const std::vector<Element>& J) const {
    if (static_cast<int>(J.size()) != n()) throw Error(ErrorKind::InvalidArgument, "need one unit per coordinate");
    SlicePoint p = *this;
    for (int h = 0; h < n(); ++h) p.coords[h].J = J[h];
    return p;
}

// ---------------------------------------------------------------- slice functions

struct SliceFunction::Compiled {
    struct Term {
        Exponents e;
        Element a;
    };
    std::vector<std::vector<Term>> comps;
    int maxdeg = 0;
};

SliceFunction::SliceFunction(StemPoly stem, DomainSpec domain)
    : alg_(stem.algebra()), n_(stem.n()), domain_(std::move(domain)) {
    if (domain_.n() != n_) throw Error(ErrorKind::InvalidArgument, "domain arity differs from stem arity");
    if (alg_->canonical_unit_index() < 0)
        throw Error(ErrorKind::NotImaginaryUnit, "slice functions need an algebra with imaginary units");
    auto c = std::make_shared<Compiled>();
    c->comps.resize(stem.components().size());
    c->maxdeg = std::max(0, stem.degree());
    for (Subset K = 0; K < c->comps.size(); ++K)
        for (const auto& [e, a] : stem[K].terms()) c->comps[K].push_back({e, to_double(a)});
    compiled_ = std::move(c);
    poly_ = std::make_shared<const StemPoly>(std::move(stem));
}

SliceFunction::SliceFunction(StemPoly stem) : SliceFunction(stem, DomainSpec::whole(stem.n())) {}

SliceFunction::SliceFunction(Algebra alg, int n, CallableStem stem, DomainSpec domain)
    : alg_(std::move(alg)), n_(n), callable_(std::move(stem)), domain_(std::move(domain)) {
    if (domain_.n() != n_) throw Error(ErrorKind::InvalidArgument, "domain arity differs from stem arity");
    if (alg_->canonical_unit_index() < 0)
        throw Error(ErrorKind::NotImaginaryUnit, "slice functions need an algebra with imaginary units");
}

const StemPoly& SliceFunction::stem() const {
    if (!poly_) throw Error(ErrorKind::BlackBoxUnsupported, "operation needs a polynomial stem");
    return *poly_;
}

StemValue SliceFunction::stem_value(const std::vector<double>& alpha, const std::vector<double>& beta) const {
    if (static_cast<int>(alpha.size()) != n_ || static_cast<int>(beta.size()) != n_)
        throw Error(ErrorKind::InvalidArgument, "point arity differs from function arity");
    if (!domain_.contains(alpha, beta)) throw Error(ErrorKind::OutsideDomain, "point outside the domain");
    std::vector<double> ab(2 * n_);
    for (int h = 0; h < n_; ++h) {
        ab[2 * h] = alpha[h];
        ab[2 * h + 1] = beta[h];
    }
    if (callable_) {
        StemValue v = callable_(ab);
        if (v.comps.size() != (std::size_t{1} << n_))
            throw Error(ErrorKind::EvaluationFailure, "numeric stem returned the wrong number of components");
        return v;
    }
    const auto& C = *compiled_;
    std::vector<std::vector<double>> pw(2 * n_, std::vector<double>(C.maxdeg + 1, 1.0));
    for (int v = 0; v < 2 * n_; ++v)
        for (int k = 1; k <= C.maxdeg; ++k) pw[v][k] = pw[v][k - 1] * ab[v];
    StemValue out{n_, std::vector<Element>(C.comps.size(), Element::zero(alg_.get()))};
    for (Subset K = 0; K < C.comps.size(); ++K) {
        Element& acc = out.comps[K];
        for (const auto& t : C.comps[K]) {
            double m = 1;
            for (int v = 0; v < 2 * n_; ++v) m *= pw[v][t.e[v]];
            for (int k = 0; k < acc.dim(); ++k) acc[k] += m * t.a[k];
        }
    }
    return out;
}

Element eval_parts(const SliceFunction& f, const std::vector<double>& alpha, const std::vector<double>& beta,
                   const std::vector<Element>& J) {
    if (static_cast<int>(J.size()) != f.n()) throw Error(ErrorKind::InvalidArgument, "need one unit per coordinate");
    for (const auto& u : J) {
        if (u.algebra() != f.algebra().get() && !u.algebra()->same_as(*f.algebra()))
            throw Error(ErrorKind::AlgebraMismatch, "point and function over different algebras");
    }
    StemValue F = f.stem_value(alpha, beta);
    Element out = Element::zero(f.algebra().get());
    for (Subset K = 0; K < F.comps.size(); ++K) {
        if (F.comps[K].is_zero()) continue;
        std::vector<Element> JK;
        for (int h : elements(K)) JK.push_back(J[h - 1]);
        out += ordered_product(JK, F.comps[K]);
    }
    return out;
}

Element eval(const SliceFunction& f, const SlicePoint& x) {
    return eval_parts(f, x.alphas(), x.betas(), x.units());
}

Element SliceFunction::operator()(const SlicePoint& x) const { return eval(*this, x); }

Element SliceFunction::at(const std::vector<Element>& x, double tol) const {
    return eval(*this, SlicePoint::from_elements(x, tol));
}

BlackBox SliceFunction::as_black_box(double tol) const {
    SliceFunction self = *this;
    return [self, tol](const std::vector<Element>& x) { return self.at(x, tol); };
}

// ---------------------------------------------------------------- representation

Element representation_from_values(const std::vector<Element>& values, const std::vector<Element>& I,
                                   const std::vector<Element>& J) {
    const int n = static_cast<int>(I.size());
    if (values.size() != (std::size_t{1} << n) || J.size() != I.size())
        throw Error(ErrorKind::InvalidArgument, "representation needs 2^n values and n units");
    Element out = Element::zero(values[0].algebra());
    for (Subset K = 0; K < values.size(); ++K) {
        Element s = Element::zero(values[0].algebra());
        for (Subset H = 0; H < values.size(); ++H) {
            if (card(K & H) % 2) s -= values[H];
            else s += values[H];
        }
        std::vector<Element> IK, JK;
        for (int h : elements(K)) {
            IK.push_back(I[h - 1]);
            JK.push_back(J[h - 1]);
        }
        out += ordered_product(JK, ordered_inverse_product(IK, s));
    }
    return out / std::ldexp(1.0, n);
}

namespace {

void check_same_sphere(const SlicePoint& y, const SlicePoint& x, double tol) {
    if (x.n() != y.n()) throw Error(ErrorKind::SphereMismatch, "points of different arity");
    for (int h = 0; h < x.n(); ++h) {
        double s = std::max(1.0, std::abs(x.coords[h].alpha) + x.coords[h].beta);
        if (std::abs(x.coords[h].alpha - y.coords[h].alpha) > tol * s ||
            std::abs(x.coords[h].beta - y.coords[h].beta) > tol * s)
            throw Error(ErrorKind::SphereMismatch, "x and y lie on different spheres");
    }
}

}  // namespace

Element representation_eval(const BlackBox& g, const SlicePoint& y, const SlicePoint& x, double tol) {
    check_same_sphere(y, x, tol);
    std::vector<Element> values;
    for (Subset H = 0; H < (1u << y.n()); ++H) values.push_back(g(y.conjugated(H).elements()));
    return representation_from_values(values, y.units(), x.units());
}

Element representation_eval(const SliceFunction& f, const SlicePoint& y, const SlicePoint& x, double tol) {
    check_same_sphere(y, x, tol);
    std::vector<Element> values;
    for (Subset H = 0; H < (1u << y.n()); ++H) values.push_back(eval(f, y.conjugated(H)));
    return representation_from_values(values, y.units(), x.units());
}

StemValue stem_from_values(const std::vector<Element>& values, const SlicePoint& y) {
    const int n = y.n();
    if (values.size() != (std::size_t{1} << n)) throw Error(ErrorKind::InvalidArgument, "need 2^n values");
    StemValue out{n, {}};
    const auto I = y.units();
    for (Subset K = 0; K < values.size(); ++K) {
        Element s = Element::zero(values[0].algebra());
        for (Subset H = 0; H < values.size(); ++H) {
            if (card(K & H) % 2) s -= values[H];
            else s += values[H];
        }
        std::vector<Element> IK;
        for (int h : elements(K)) IK.push_back(I[h - 1]);
        out.comps.push_back(ordered_inverse_product(IK, s) / std::ldexp(1.0, n));
    }
    return out;
}

SlicenessReport sliceness_test(const BlackBox& g, const std::vector<Element>& I, const std::vector<SlicePoint>& samples) {
    SlicenessReport r;
    for (const auto& x : samples) {
        SlicePoint y = x.with_units(I);
        Element lhs, rhs;
        try {
            lhs = g(x.elements());
            rhs = representation_eval(g, y, x);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SphereMismatch) throw;
            throw Error(ErrorKind::EvaluationFailure, std::string("black box failed: ") + e.what());
        }
        double res = euclidean_norm(lhs - rhs);
        r.residuals.push_back(res);
        r.max_residual = std::max(r.max_residual, res);
    }
    return r;
}

// ---------------------------------------------------------------- spherical calculus

Element spherical_value(const SliceFunction& f, const SlicePoint& x) {
    return f.stem_value(x.alphas(), x.betas()).comps[0];
}

Element spherical_derivative(const SliceFunction& f, Subset K, const SlicePoint& x, double tol) {
    if (K == 0) throw Error(ErrorKind::InvalidArgument, "spherical K-derivative needs K nonempty");
    if (K >= (1u << f.n())) throw Error(ErrorKind::IndexOutOfRange, "subset outside {1..n}");
    double bK = 1;
    for (int k : elements(K)) {
        if (x.coords[k - 1].beta <= tol) throw Error(ErrorKind::OnRealLocus, "x_k is real for some k in K");
        bK *= x.coords[k - 1].beta;
    }
    return f.stem_value(x.alphas(), x.betas()).comps[K] / bK;
}

Element spherical_value_intrinsic(const BlackBox& g, const SlicePoint& x) {
    Element s = g(x.elements());
    for (Subset H = 1; H < (1u << x.n()); ++H) s += g(x.conjugated(H).elements());
    return s / std::ldexp(1.0, x.n());
}

Element spherical_derivative_intrinsic(const BlackBox& g, Subset K, const SlicePoint& x, double tol) {
    if (K == 0) throw Error(ErrorKind::InvalidArgument, "spherical K-derivative needs K nonempty");
    std::vector<Element> imK;
    for (int k : elements(K)) {
        if (x.coords[k - 1].beta <= tol) throw Error(ErrorKind::OnRealLocus, "x_k is real for some k in K");
        imK.push_back(x.coords[k - 1].J * x.coords[k - 1].beta);
    }
    Element s = Element::zero(x.coords[0].J.algebra());
    for (Subset H = 0; H < (1u << x.n()); ++H) {
        Element v = g(x.conjugated(H).elements());
        if (card(K & H) % 2) s -= v;
        else s += v;
    }
    return ordered_inverse_product(imK, s) / std::ldexp(1.0, x.n());
}

Element truncated_derivative(const SliceFunction& f, const std::vector<int>& eps, const SlicePoint& x, double tol) {
    const int order = static_cast<int>(eps.size());
    if (order > f.n()) throw Error(ErrorKind::IndexOutOfRange, "derivative order exceeds n");
    Subset E = 0;
    double bE = 1;
    for (int k = 1; k <= order; ++k) {
        if (!eps[k - 1]) continue;
        E |= singleton(k);
        if (x.coords[k - 1].beta <= tol) throw Error(ErrorKind::OnRealLocus, "x_k is real for some k with eps(k)=1");
        bE *= x.coords[k - 1].beta;
    }
    StemValue F = f.stem_value(x.alphas(), x.betas());
    const auto J = x.units();
    const Subset low = full_set(order);
    Element out = Element::zero(f.algebra().get());
    for (Subset H = 0; H < (1u << f.n()); ++H) {
        if (H & low) continue;
        std::vector<Element> JH;
        for (int h : elements(H)) JH.push_back(J[h - 1]);
        out += ordered_product(JH, F.comps[H | E]);
    }
    return out / bE;
}

namespace {

Element iterate(const BlackBox& g, const std::vector<int>& eps, int level, const SlicePoint& x, double tol) {
    if (level == 0) return g(x.elements());
    Element a = iterate(g, eps, level - 1, x, tol);
    Element b = iterate(g, eps, level - 1, x.conjugated(singleton(level)), tol);
    if (!eps[level - 1]) return (a + b) / 2.0;
    const auto& c = x.coords[level - 1];
    if (c.beta <= tol) throw Error(ErrorKind::OnRealLocus, "x_h is real where a derivative is taken");
    return invert(c.J * c.beta) * (a - b) / 2.0;
}

}  // namespace

Element iterated_spherical_derivative(const BlackBox& g, const std::vector<int>& eps, const SlicePoint& x, double tol) {
    if (static_cast<int>(eps.size()) > x.n()) throw Error(ErrorKind::IndexOutOfRange, "derivative order exceeds n");
    return iterate(g, eps, static_cast<int>(eps.size()), x, tol);
}

// ---------------------------------------------------------------- products

SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g, const SigmaTable& sigma) {
    return SliceFunction(stem_product(f.stem(), g.stem(), sigma), f.domain().intersect(g.domain()));
}

SliceFunction slice_tensor_product(const SliceFunction& f, const SliceFunction& g) {
    return slice_product(f, g, SigmaTable::tensor(f.n()));
}

}  // namespace hyperslice
