#include "hyperslice/zeros.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <functional>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <sstream>

namespace hyperslice {

namespace {

using cd = std::complex<double>;

std::vector<ExactElement> coefficients_by_degree(const OrderedPolynomial& p) {
    std::vector<ExactElement> a(std::max(0, p.degree()) + 1, ExactElement::zero(p.algebra().get()));
    for (const auto& [ell, c] : p.terms()) a[ell[0]] = c;
    return a;
}

void check_supported(const OrderedPolynomial& p) {
    const AlgebraDef& A = *p.algebra();
    if (p.n() != 1) throw Error(ErrorKind::InvalidArgument, "root finding needs a polynomial in one variable");
    switch (A.kind()) {
        case AlgebraKind::Quaternions:
        case AlgebraKind::Octonions: return;
        case AlgebraKind::Clifford:
            if (A.clifford_p() != 0)
                throw Error(ErrorKind::UnsupportedKind, "root finding on Clifford algebras needs signature (0,m)");
            for (const auto& [ell, c] : p.terms())
                for (int k = 0; k < c.dim(); ++k)
                    if (c[k] != 0 && std::popcount(static_cast<unsigned>(k)) > 1)
                        throw Error(ErrorKind::UnsupportedKind, "Clifford coefficients must be paravectors");
            return;
        default: throw Error(ErrorKind::UnsupportedKind, "root finding supports H, O and Cl(0,m)");
    }
}

/// Random imaginary units spanned by anticommuting generators of S_A.
class UnitSampler {
public:
    UnitSampler(const AlgebraDef* A, std::uint64_t seed) : A_(A), rng_(seed) {
        for (int k = 1; k < A->dim(); ++k) {
            if (A->kind() == AlgebraKind::Clifford && std::popcount(static_cast<unsigned>(k)) != 1) continue;
            gens_.push_back(k);
        }
    }
    Element next() {
        std::normal_distribution<double> N(0, 1);
        Element J = Element::zero(A_);
        double s = 0;
        for (int k : gens_) {
            J[k] = N(rng_);
            s += J[k] * J[k];
        }
        return J / std::sqrt(s);
    }

private:
    const AlgebraDef* A_;
    std::mt19937_64 rng_;
    std::vector<int> gens_;
};

std::vector<cd> companion_roots(const std::vector<Rational>& c) {
    const int D = static_cast<int>(c.size()) - 1;
    // strip zero roots so the companion matrix stays well conditioned
    int z = 0;
    while (z < D && c[z] == 0) ++z;
    std::vector<cd> roots(z, cd(0, 0));
    const int m = D - z;
    if (m == 0) return roots;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m, m);
    for (int i = 1; i < m; ++i) C(i, i - 1) = 1;
    for (int i = 0; i < m; ++i) C(i, m - 1) = -Rational(c[z + i] / c[D]).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    for (int i = 0; i < m; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

std::vector<cd> cluster(const std::vector<cd>& roots) {
    const int m = static_cast<int>(roots.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (std::abs(roots[i] - roots[j]) <= 1e-3 * (1 + std::max(std::abs(roots[i]), std::abs(roots[j]))))
                parent[find(i)] = find(j);
    std::map<int, std::pair<cd, int>> acc;
    for (int i = 0; i < m; ++i) {
        auto& [s, k] = acc[find(i)];
        s += roots[i];
        ++k;
    }
    std::vector<cd> out;
    for (const auto& [r, sk] : acc) out.push_back(sk.first / static_cast<double>(sk.second));
    return out;
}

struct Evaluator {
    std::vector<Element> a;  // coefficients in doubles, by degree
    const AlgebraDef* A;

    Element value(const Element& x) const {
        Element out = Element::zero(A), pw = Element::one(A);
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (k > 0) pw = x * pw;
            out += pw * a[k];
        }
        return out;
    }

    /// (P, Q) with p(alpha + J beta) = P + J Q for every unit J.
    std::pair<Element, Element> split(cd z) const {
        Element P = Element::zero(A), Q = Element::zero(A);
        cd pw(1, 0);
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (k > 0) pw *= z;
            P += a[k] * pw.real();
            Q += a[k] * pw.imag();
        }
        return {P, Q};
    }

    /// d/dz of (P, Q) along a complex direction w.
    std::pair<Element, Element> split_derivative(cd z, cd w) const {
        Element P = Element::zero(A), Q = Element::zero(A);
        cd pw(1, 0);
        for (std::size_t k = 1; k < a.size(); ++k) {
            cd d = static_cast<double>(k) * pw * w;
            P += a[k] * d.real();
            Q += a[k] * d.imag();
            pw *= z;
        }
        return {P, Q};
    }

    Eigen::MatrixXd jacobian(const Element& x) const {
        const int d = x.dim();
        std::vector<Element> pw{Element::one(A)};
        for (std::size_t k = 1; k < a.size(); ++k) pw.push_back(x * pw.back());
        Eigen::MatrixXd Jm(d, d);
        for (int j = 0; j < d; ++j) {
            Element v = Element::basis(A, j);
            Element D = Element::zero(A), col = Element::zero(A);
            for (std::size_t k = 1; k < a.size(); ++k) {
                D = v * pw[k - 1] + x * D;
                col += D * a[k];
            }
            for (int i = 0; i < d; ++i) Jm(i, j) = col[i];
        }
        return Jm;
    }
};

Eigen::VectorXd stack(const Element& P, const Element& Q) {
    Eigen::VectorXd v(P.dim() + Q.dim());
    for (int k = 0; k < P.dim(); ++k) {
        v(k) = P[k];
        v(P.dim() + k) = Q[k];
    }
    return v;
}

/// Gauss-Newton on (alpha, beta) for P = Q = 0.
cd refine_sphere(const Evaluator& ev, cd z, int iters) {
    for (int it = 0; it < iters; ++it) {
        auto [P, Q] = ev.split(z);
        Eigen::VectorXd r = stack(P, Q);
        if (r.norm() == 0) break;
        auto [Pa, Qa] = ev.split_derivative(z, cd(1, 0));
        auto [Pb, Qb] = ev.split_derivative(z, cd(0, 1));
        Eigen::MatrixXd Jm(r.size(), 2);
        Jm.col(0) = stack(Pa, Qa);
        Jm.col(1) = stack(Pb, Qb);
        Eigen::VectorXd step = Jm.colPivHouseholderQr().solve(-r);
        if (!step.allFinite()) break;
        z += cd(step(0), step(1));
        if (step.norm() <= 1e-16 * (1 + std::abs(z))) break;
    }
    return z;
}

Element refine_point(const Evaluator& ev, Element x, int iters) {
    for (int it = 0; it < iters; ++it) {
        Element r = ev.value(x);
        if (euclidean_norm(r) == 0) break;
        Eigen::VectorXd rv(r.dim());
        for (int k = 0; k < r.dim(); ++k) rv(k) = r[k];
        Eigen::VectorXd step = ev.jacobian(x).colPivHouseholderQr().solve(-rv);
        if (!step.allFinite()) break;
        for (int k = 0; k < x.dim(); ++k) x[k] += step(k);
        if (step.norm() <= 1e-16 * (1 + euclidean_norm(x))) break;
    }
    return x;
}

std::string describe(cd z) {
    std::ostringstream s;
    s.precision(12);
    s << "candidate " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return s.str();
}

}  // namespace

double zero_residual_bound(const OrderedPolynomial& p) {
    double s = 1;
    for (const auto& [ell, c] : p.terms()) s += euclidean_norm(to_double(c));
    return 1e-8 * s;
}

std::vector<Rational> normal_polynomial(const OrderedPolynomial& p) {
    auto a = coefficients_by_degree(p);
    const int d = static_cast<int>(a.size()) - 1;
    std::vector<ExactElement> c(2 * d + 1, ExactElement::zero(p.algebra().get()));
    for (int k = 0; k <= d; ++k)
        for (int l = 0; l <= d; ++l) c[k + l] += a[k] * conj(a[l]);
    std::vector<Rational> out;
    for (const auto& e : c) {
        for (int k = 1; k < e.dim(); ++k)
            if (e[k] != 0) throw Error(ErrorKind::UnsupportedKind, "normal polynomial has non-real coefficients");
        out.push_back(e[0]);
    }
    return out;
}

ZeroReport roots_one_var(const OrderedPolynomial& p, const RootOptions& opt) {
    check_supported(p);
    if (p.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "polynomial is constant");
    const AlgebraDef* A = p.algebra().get();
    std::vector<Rational> N = normal_polynomial(p);
    if (N.back() == 0) throw Error(ErrorKind::UnsupportedKind, "leading coefficient is a zero divisor");

    Evaluator ev{{}, A};
    for (const auto& c : coefficients_by_degree(p)) ev.a.push_back(to_double(c));
    const double bound = zero_residual_bound(p);
    // candidates this close to P = Q = 0 are tried as spheres first
    const double loose = 1e4 * bound;
    UnitSampler units(A, opt.seed);

    ZeroReport rep;
    auto record_residual = [&](double r) { rep.residual_max = std::max(rep.residual_max, r); };

    for (cd z : cluster(companion_roots(N))) {
        const double scale = 1 + std::abs(z);
        if (z.imag() < -1e-6 * scale) continue;  // mirror of an upper half-plane root
        if (std::abs(z.imag()) <= 1e-6 * scale) {
            Element x = refine_point(ev, Element::real(A, z.real()), opt.newton_iterations);
            double r = euclidean_norm(ev.value(x));
            if (r <= bound && is_real(x, 1e-6 * scale)) {
                rep.isolated.push_back(Element::real(A, x[0]));
                record_residual(euclidean_norm(ev.value(rep.isolated.back())));
            } else {
                rep.refinement_failures.push_back(describe(z) + ": real refinement residual " + std::to_string(r));
            }
            continue;
        }
        auto [P0, Q0] = ev.split(z);
        if (euclidean_norm(P0) <= loose && euclidean_norm(Q0) <= loose) {
            cd w = refine_sphere(ev, z, opt.newton_iterations);
            auto [P, Q] = ev.split(w);
            if (euclidean_norm(P) <= bound && euclidean_norm(Q) <= bound && w.imag() > 0) {
                double worst = 0;
                for (int s = 0; s < opt.sphere_samples; ++s) {
                    Element x = Element::real(A, w.real()) + units.next() * w.imag();
                    worst = std::max(worst, euclidean_norm(ev.value(x)));
                }
                if (worst <= bound) {
                    rep.spherical.push_back({w.real(), w.imag()});
                    record_residual(worst);
                    continue;
                }
            }
        }
        // isolated candidate: J Q = -P
        Element x;
        try {
            Element J = -P0 * invert(Q0);
            Element im = J - Element::real(A, J[0]);
            Element nj = norm_sq(im);
            if (!(nj[0] > 0)) throw Error(ErrorKind::NotImaginaryUnit, "J has no positive norm");
            x = Element::real(A, z.real()) + im * (z.imag() / std::sqrt(nj[0]));
        } catch (const Error& e) {
            rep.refinement_failures.push_back(describe(z) + ": " + e.what());
            continue;
        }
        x = refine_point(ev, x, opt.newton_iterations);
        double r = euclidean_norm(ev.value(x));
        if (r <= bound && in_quadratic_cone(x, 1e-8)) {
            bool dup = false;
            for (const auto& y : rep.isolated) dup = dup || euclidean_norm(x - y) <= 1e-6 * (1 + euclidean_norm(x));
            if (!dup) {
                rep.isolated.push_back(x);
                record_residual(r);
            }
        } else {
            rep.refinement_failures.push_back(describe(z) + ": refinement residual " + std::to_string(r));
        }
    }
    return rep;
}

// ---------------------------------------------------------------- scans

OrderedPolynomial restrict_to_first_variable(const OrderedPolynomial& f, const std::vector<Element>& x_rest) {
    if (static_cast<int>(x_rest.size()) != f.n() - 1)
        throw Error(ErrorKind::InvalidArgument, "need values for x_2, ..., x_n");
    const AlgebraDef* A = f.algebra().get();
    std::map<int, Element> b;
    for (const auto& [ell, a] : f.terms()) {
        std::vector<Element> u;
        for (int h = 1; h < f.n(); ++h) u.push_back(power(x_rest[h - 1], ell[h]));
        auto [it, fresh] = b.emplace(ell[0], Element::zero(A));
        it->second += ordered_product(u, to_double(a));
    }
    OrderedPolynomial g(f.algebra(), 1);
    for (const auto& [k, c] : b) g.add_term({k}, to_exact(c));
    return g;
}

ScanReport zero_scan(const OrderedPolynomial& f, const std::vector<std::vector<Element>>& samples, const RootOptions& opt) {
    if (f.n() < 2) throw Error(ErrorKind::InvalidArgument, "zero scan needs at least two variables");
    if (f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "polynomial is constant");
    const int nominal = f.as_poly().degree_in(0);
    ScanReport out;
    for (const auto& xr : samples) {
        FiberRecord rec;
        rec.x_rest = xr;
        OrderedPolynomial g = restrict_to_first_variable(f, xr);
        const int deg = g.degree();
        rec.leading_degenerate = deg < nominal;
        if (g.is_zero()) {
            rec.type = "whole";
        } else if (deg == 0) {
            rec.type = rec.leading_degenerate ? "empty-leading-degenerate" : "empty";
        } else {
            rec.report = roots_one_var(g, opt);
            rec.points = static_cast<int>(rec.report.isolated.size());
            rec.spheres = static_cast<int>(rec.report.spherical.size());
            if (rec.points && rec.spheres) rec.type = "mixed";
            else if (rec.spheres) rec.type = "spheres";
            else if (rec.points) rec.type = "finite";
            else rec.type = "empty";
        }
        ++out.counts[rec.type];
        out.fibers.push_back(std::move(rec));
    }
    return out;
}

std::string ScanReport::csv() const {
    std::ostringstream s;
    s << "index,x_rest,type,points,spheres,residual_max,refinement_failures\n";
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        const auto& f = fibers[i];
        std::string xs;
        for (std::size_t h = 0; h < f.x_rest.size(); ++h) xs += (h ? ";" : "") + to_string(f.x_rest[h], 10);
        s << i << ",\"" << xs << "\"," << f.type << ',' << f.points << ',' << f.spheres << ','
          << f.report.residual_max << ',' << f.report.refinement_failures.size() << '\n';
    }
    return s.str();
}

}  // namespace hyperslice
