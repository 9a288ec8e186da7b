#include "hyperslice/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hyperslice {

namespace {

Eigen::MatrixXd left_mult_matrix(const Element& x) {
    const int d = x.dim();
    Eigen::MatrixXd L(d, d);
    for (int j = 0; j < d; ++j) {
        Element col = x * Element::basis(x.algebra(), j);
        for (int i = 0; i < d; ++i) L(i, j) = col[i];
    }
    return L;
}

}  // namespace

Element canonical_unit(const AlgebraDef* alg) {
    int k = alg->canonical_unit_index();
    if (k < 0) throw Error(ErrorKind::NotImaginaryUnit, "algebra " + alg->label() + " has no imaginary units");
    return Element::basis(alg, k);
}

ConeDecomposition cone_decompose(const Element& x, double tol) {
    const double scale = std::max(1.0, euclidean_norm(x));
    Element t = trace(x);
    if (imaginary_size(t) > tol * scale)
        throw Error(ErrorKind::NotInQuadraticCone, "trace t(x) is not real");
    Element n = norm_sq(x);
    if (imaginary_size(n) > tol * scale * scale)
        throw Error(ErrorKind::NotInQuadraticCone, "norm n(x) is not real");
    ConeDecomposition d;
    d.alpha = t[0] / 2;
    Element im = x - Element::real(x.algebra(), d.alpha);
    if (euclidean_norm(im) <= tol) {
        d.beta = 0;
        d.J = canonical_unit(x.algebra());
        return d;
    }
    // n(Im x) directly rather than n(x) - alpha^2, which cancels when beta is small.
    double disc = norm_sq(im)[0];
    const double im_size = euclidean_norm(im);
    if (disc <= tol * im_size * im_size)
        throw Error(ErrorKind::NotInQuadraticCone, "4n(x) > t(x)^2 fails for a non-real element");
    d.beta = std::sqrt(disc);
    d.J = im / d.beta;
    return d;
}

ConeDecomposition cone_decompose(const ExactElement& x) {
    ExactElement t = trace(x);
    ExactElement n = norm_sq(x);
    for (int k = 1; k < x.dim(); ++k) {
        if (t[k] != 0) throw Error(ErrorKind::NotInQuadraticCone, "trace t(x) is not real");
        if (n[k] != 0) throw Error(ErrorKind::NotInQuadraticCone, "norm n(x) is not real");
    }
    ConeDecomposition d;
    Rational a = t[0] / 2;
    d.alpha = a.get_d();
    ExactElement im = x - ExactElement::real(x.algebra(), a);
    if (im.is_zero()) {
        d.J = canonical_unit(x.algebra());
        return d;
    }
    Rational disc = n[0] - a * a;
    if (disc <= 0) throw Error(ErrorKind::NotInQuadraticCone, "4n(x) > t(x)^2 fails for a non-real element");
    d.beta = std::sqrt(disc.get_d());
    d.J = to_double(im) / d.beta;
    return d;
}

bool in_quadratic_cone(const Element& x, double tol) {
    try {
        cone_decompose(x, tol);
        return true;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotInQuadraticCone) return false;
        throw;
    }
}

bool is_imaginary_unit(const Element& x, double tol) {
    Element t = trace(x);
    if (euclidean_norm(t) > tol) return false;
    Element n = norm_sq(x) - Element::one(x.algebra());
    return euclidean_norm(n) <= tol;
}

Element invert(const Element& x, double tol) {
    const double scale = std::max(1.0, euclidean_norm(x));
    Element n = norm_sq(x);
    Element n2 = conj(x) * x;
    if (imaginary_size(n) <= tol * scale * scale && imaginary_size(n2) <= tol * scale * scale &&
        std::abs(n[0] - n2[0]) <= tol * scale * scale) {
        if (std::abs(n[0]) <= tol * tol) throw Error(ErrorKind::NotInvertible, "n(x) vanishes");
        return conj(x) / n[0];
    }
    Eigen::MatrixXd L = left_mult_matrix(x);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(L);
    if (!lu.isInvertible()) throw Error(ErrorKind::NotInvertible, "left multiplication is singular");
    Eigen::VectorXd e = Eigen::VectorXd::Zero(x.dim());
    e(0) = 1;
    Eigen::VectorXd y = lu.solve(e);
    Element r(x.algebra(), std::vector<double>(y.data(), y.data() + y.size()));
    Element one = Element::one(x.algebra());
    if (euclidean_norm(r * x - one) > 1e3 * tol * scale || euclidean_norm(x * r - one) > 1e3 * tol * scale)
        throw Error(ErrorKind::NotInvertible, "no two-sided inverse");
    return r;
}

ExactElement invert(const ExactElement& x) {
    ExactElement n = norm_sq(x);
    for (int k = 1; k < n.dim(); ++k)
        if (n[k] != 0) throw Error(ErrorKind::NotInvertible, "n(x) is not real");
    if (n[0] == 0) throw Error(ErrorKind::NotInvertible, "n(x) vanishes");
    if (conj(x) * x != n) throw Error(ErrorKind::NotInvertible, "x^c x differs from x x^c");
    Rational inv = 1 / n[0];
    return conj(x) * inv;
}

Element ordered_inverse_product(const std::vector<Element>& u, const Element& w, double tol) {
    Element r = w;
    for (const auto& e : u) r = invert(e, tol) * r;
    return r;
}

Element ordered_product(const std::vector<Element>& u, const AlgebraDef* alg) {
    if (u.empty()) return Element::one(alg);
    std::vector<Element> head(u.begin(), u.end() - 1);
    return ordered_product(head, u.back());
}

std::vector<Element> splitting_basis(const Element& J, double tol) {
    if (!is_imaginary_unit(J, 1e3 * tol)) throw Error(ErrorKind::NotImaginaryUnit, "J is not in S_A");
    const AlgebraDef* alg = J.algebra();
    const int d = alg->dim();
    std::vector<Element> out{Element::one(alg), J};
    auto rank_of = [&](const std::vector<Element>& v) {
        Eigen::MatrixXd M(d, static_cast<int>(v.size()));
        for (int c = 0; c < static_cast<int>(v.size()); ++c)
            for (int r = 0; r < d; ++r) M(r, c) = v[c][r];
        Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
        lu.setThreshold(1e-10);
        return static_cast<int>(lu.rank());
    };
    for (int k = 0; k < d && static_cast<int>(out.size()) < d; ++k) {
        Element e = Element::basis(alg, k);
        std::vector<Element> trial = out;
        trial.push_back(e);
        trial.push_back(J * e);
        if (rank_of(trial) == static_cast<int>(trial.size())) out = std::move(trial);
    }
    if (static_cast<int>(out.size()) != d || rank_of(out) != d)
        throw Error(ErrorKind::SplittingFailed, "could not complete a splitting basis");
    return out;
}

std::vector<double> coordinates_in_basis(const std::vector<Element>& basis, const Element& x) {
    const int d = x.dim();
    Eigen::MatrixXd M(d, static_cast<int>(basis.size()));
    for (int c = 0; c < static_cast<int>(basis.size()); ++c)
        for (int r = 0; r < d; ++r) M(r, c) = basis[c][r];
    Eigen::VectorXd b(d);
    for (int r = 0; r < d; ++r) b(r) = x[r];
    Eigen::VectorXd s = M.colPivHouseholderQr().solve(b);
    return std::vector<double>(s.data(), s.data() + s.size());
}

}  // namespace hyperslice
