#include "hyperslice/regularity.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

namespace hyperslice {

SliceFunction slice_partial(const SliceFunction& f, int h) {
    return SliceFunction(cr_partial(f.stem(), h), f.domain());
}

SliceFunction slice_partial_conj(const SliceFunction& f, int h) {
    return SliceFunction(cr_partial_bar(f.stem(), h), f.domain());
}

std::string CRViolation::describe() const {
    const std::string a = "F_" + subset_name(K);
    const std::string b = "F_" + subset_name(K | singleton(h));
    const std::string hs = std::to_string(h);
    if (equation == 1) return "d" + a + "/dalpha_" + hs + " = d" + b + "/dbeta_" + hs;
    return "d" + a + "/dbeta_" + hs + " = -d" + b + "/dalpha_" + hs;
}

RegularityReport is_slice_regular(const StemPoly& F) {
    RegularityReport r;
    for (int h = 1; h <= F.n(); ++h) {
        StemPoly D = cr_partial_bar(F, h);
        for (Subset K = 0; K < D.components().size(); ++K) {
            if (D[K].is_zero()) continue;
            r.regular = false;
            if (contains(K, h)) r.violations.push_back({K & ~singleton(h), h, 2});
            else r.violations.push_back({K, h, 1});
        }
    }
    return r;
}

RegularityReport is_slice_regular(const SliceFunction& f) { return is_slice_regular(f.stem()); }

// ---------------------------------------------------------------- polynomials

void OrderedPolynomial::add_term(const Exponents& ell, const ExactElement& a) {
    if (static_cast<int>(ell.size()) != n_) throw Error(ErrorKind::InvalidArgument, "exponent tuple has wrong length");
    for (int e : ell)
        if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    if (a.algebra() != alg_.get() && !a.algebra()->same_as(*alg_))
        throw Error(ErrorKind::AlgebraMismatch, "coefficient from another algebra");
    p_.add_term(ell, a);
}

ExactElement OrderedPolynomial::coefficient(const Exponents& ell) const {
    auto it = p_.terms().find(ell);
    if (it == p_.terms().end()) return ExactElement::zero(alg_.get());
    return it->second;
}

OrderedPolynomial& OrderedPolynomial::operator+=(const OrderedPolynomial& o) {
    if (o.n_ != n_) throw Error(ErrorKind::InvalidArgument, "polynomials of different arity");
    p_ += o.p_;
    return *this;
}

Element poly_eval(const OrderedPolynomial& p, const std::vector<Element>& x) {
    if (static_cast<int>(x.size()) != p.n()) throw Error(ErrorKind::InvalidArgument, "point arity differs");
    const AlgebraDef* A = p.algebra().get();
    for (const auto& xh : x)
        if (xh.algebra() != A && !xh.algebra()->same_as(*A))
            throw Error(ErrorKind::AlgebraMismatch, "point from another algebra");
    const int deg = std::max(0, p.degree());
    std::vector<std::vector<Element>> pw(p.n());
    for (int h = 0; h < p.n(); ++h) {
        pw[h].push_back(Element::one(A));
        for (int k = 1; k <= deg; ++k) pw[h].push_back(x[h] * pw[h].back());
    }
    Element out = Element::zero(A);
    std::vector<Element> u(p.n());
    for (const auto& [ell, a] : p.terms()) {
        for (int h = 0; h < p.n(); ++h) u[h] = pw[h][ell[h]];
        out += ordered_product(u, to_double(a));
    }
    return out;
}

Element poly_eval(const OrderedPolynomial& p, const SlicePoint& x) { return poly_eval(p, x.elements()); }

StemPoly poly_to_stem(const OrderedPolynomial& p) {
    StemPoly F(p.algebra(), p.n());
    for (const auto& [ell, a] : p.terms()) F += monomial_stem(p.algebra(), ell, a);
    return F;
}

OrderedPolynomial star_product(const OrderedPolynomial& p, const OrderedPolynomial& q) {
    if (p.n() != q.n()) throw Error(ErrorKind::InvalidArgument, "polynomials of different arity");
    if (!p.algebra()->same_as(*q.algebra())) throw Error(ErrorKind::AlgebraMismatch, "polynomials over different algebras");
    OrderedPolynomial r(p.algebra(), p.n());
    auto prod = p.as_poly().multiply(q.as_poly(), [](const ExactElement& a, const ExactElement& b) { return a * b; });
    for (const auto& [e, c] : prod.terms()) r.add_term(e, c);
    return r;
}

// ---------------------------------------------------------------- power series

PowerSeries PowerSeries::from_polynomial(const OrderedPolynomial& p, double M) {
    PowerSeries s;
    s.algebra = p.algebra();
    s.n = p.n();
    s.table = p;
    s.M = M;
    return s;
}

double series_tail_bound(int n, double gamma, int deg) {
    if (gamma <= 0) return 0;
    if (gamma >= 1) return INFINITY;
    double sum = 0;
    for (int h = deg + 1; h < 1000000; ++h) {
        double term = std::pow(h + 1.0, n) * std::pow(gamma, h);
        sum += term;
        // terms decrease once h + 1 > n / (-log gamma); stop when negligible
        if (h > n / -std::log(gamma) && term < 1e-18 * sum) break;
        if (term == 0) break;
    }
    return sum;
}

namespace {

void for_each_exponent(int n, int maxdeg, const std::function<void(const Exponents&)>& fn) {
    Exponents e(n, 0);
    std::function<void(int, int)> rec = [&](int h, int left) {
        if (h == n) {
            fn(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[h] = k;
            rec(h + 1, left - k);
        }
        e[h] = 0;
    };
    rec(0, maxdeg);
}

}  // namespace

SeriesValue series_eval(const PowerSeries& s, const std::vector<Element>& x, double rho) {
    if (static_cast<int>(x.size()) != s.n) throw Error(ErrorKind::InvalidArgument, "point arity differs");
    if (!(rho > 0)) throw Error(ErrorKind::InvalidArgument, "rho must be positive");
    for (const auto& xh : x)
        if (euclidean_norm(xh) >= rho) throw Error(ErrorKind::OutsideConvergenceBall, "a coordinate has norm >= rho");
    SeriesValue out;
    out.gamma = s.algebra->product_bound() * rho * s.M;
    if (out.gamma >= 1) throw Error(ErrorKind::OutsideConvergenceBall, "B rho M >= 1");
    const int deg = s.truncation_degree;
    const AlgebraDef* A = s.algebra.get();
    std::vector<std::vector<Element>> pw(s.n);
    for (int h = 0; h < s.n; ++h) {
        pw[h].push_back(Element::one(A));
        for (int k = 1; k <= deg; ++k) pw[h].push_back(x[h] * pw[h].back());
    }
    out.value = Element::zero(A);
    std::vector<Element> u(s.n);
    auto add = [&](const Exponents& ell, const Element& a) {
        if (a.is_zero()) return;
        for (int h = 0; h < s.n; ++h) u[h] = pw[h][ell[h]];
        out.value += ordered_product(u, a);
    };
    if (s.table) {
        for (const auto& [ell, a] : s.table->terms()) {
            int d = 0;
            for (int e : ell) d += e;
            if (d <= deg) add(ell, to_double(a));
        }
        out.tail_bound = s.table->degree() <= deg ? 0.0 : series_tail_bound(s.n, out.gamma, deg);
        return out;
    }
    if (!s.coeff) throw Error(ErrorKind::InvalidArgument, "power series has no coefficients");
    for_each_exponent(s.n, deg, [&](const Exponents& ell) { add(ell, s.coeff(ell)); });
    out.tail_bound = series_tail_bound(s.n, out.gamma, deg);
    return out;
}

// ---------------------------------------------------------------- splitting decomposition

namespace {

template <class T>
using CoordPoly = std::map<Exponents, T, GrlexLess>;

template <class T>
void add_to(CoordPoly<T>& p, const Exponents& e, const T& c) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

template <class T>
CoordPoly<T> d_dvar(const CoordPoly<T>& p, int var) {
    CoordPoly<T> r;
    for (const auto& [e, c] : p) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        add_to(r, f, T(c * e[var]));
    }
    return r;
}

template <class T>
double defect(const CoordPoly<T>& a, const CoordPoly<T>& b, int sign) {
    CoordPoly<T> r = a;
    for (const auto& [e, c] : b) add_to(r, e, T(sign * c));
    double m = 0;
    for (const auto& [e, c] : r) {
        if constexpr (std::is_same_v<T, double>) m = std::max(m, std::abs(c));
        else m = std::max(m, std::abs(c.get_d()));
    }
    return m;
}

/// Coordinate polynomials f_{1,l}, f_{2,l} from P and Q, given a map element -> coordinates.
template <class T, class Coords>
SplitHolomorphyReport check_split(const ElemPoly& P, const ElemPoly& Q, int u1, int n, Coords coords, double tol,
                                  bool exact) {
    std::vector<CoordPoly<T>> f1(u1), f2(u1);
    for (const auto& [e, c] : P.terms()) {
        std::vector<T> x = coords(c);
        for (int l = 0; l < u1; ++l) {
            add_to(f1[l], e, x[2 * l]);
            add_to(f2[l], e, x[2 * l + 1]);
        }
    }
    // J(a J_l + b J J_l) = a J J_l - b J_l
    for (const auto& [e, c] : Q.terms()) {
        std::vector<T> x = coords(c);
        for (int l = 0; l < u1; ++l) {
            add_to(f1[l], e, T(-x[2 * l + 1]));
            add_to(f2[l], e, x[2 * l]);
        }
    }
    SplitHolomorphyReport r;
    r.exact = exact;
    for (int l = 0; l < u1; ++l) {
        double worst = 0;
        for (int h = 1; h <= n; ++h) {
            const int a = alpha_var(h), b = beta_var(h);
            worst = std::max(worst, defect(d_dvar(f1[l], a), d_dvar(f2[l], b), -1));
            worst = std::max(worst, defect(d_dvar(f1[l], b), d_dvar(f2[l], a), +1));
        }
        r.max_residual = std::max(r.max_residual, worst);
        if (worst > tol) {
            r.holomorphic = false;
            r.failing_components.push_back(l);
        }
    }
    return r;
}

/// f_J = P + J Q with P = sum over even |K| of (-1)^{|K|/2} F_K and Q = sum over odd |K| of (-1)^{(|K|-1)/2} F_K.
std::pair<ElemPoly, ElemPoly> restrict_to_slice(const StemPoly& F) {
    ElemPoly P(F.nvars()), Q(F.nvars());
    for (Subset K = 0; K < F.components().size(); ++K) {
        int c = card(K);
        Rational s = ((c / 2) % 2) ? Rational(-1) : Rational(1);
        if (c % 2) Q += F[K].scaled(s);
        else P += F[K].scaled(s);
    }
    return {P, Q};
}

using QMatrix = std::vector<std::vector<Rational>>;

int exact_rank(QMatrix rows) {
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][c] == 0) continue;
            Rational m = rows[r][c] / rows[rank][c];
            for (int k = c; k < cols; ++k) rows[r][k] -= m * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Inverse of the matrix whose columns are the given vectors.
QMatrix exact_inverse_of_columns(const std::vector<ExactElement>& cols) {
    const int d = static_cast<int>(cols.size());
    QMatrix a(d, std::vector<Rational>(2 * d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a[i][j] = cols[j][i];
        a[i][d + i] = 1;
    }
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (a[piv][c] == 0) ++piv;
        std::swap(a[c], a[piv]);
        Rational inv = 1 / a[c][c];
        for (auto& v : a[c]) v *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational m = a[r][c];
            for (int k = 0; k < 2 * d; ++k) a[r][k] -= m * a[c][k];
        }
    }
    QMatrix out(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out[i][j] = a[i][d + j];
    return out;
}

bool exact_unit(const ExactElement& J) {
    ExactElement m1 = -ExactElement::one(J.algebra());
    return trace(J).is_zero() && norm_sq(J) == ExactElement::one(J.algebra()) && J * J == m1;
}

}  // namespace

SplitHolomorphyReport split_holomorphy_check(const StemPoly& F, const ExactElement& J) {
    if (!exact_unit(J)) throw Error(ErrorKind::NotImaginaryUnit, "J is not an exact imaginary unit");
    const AlgebraDef* A = J.algebra();
    const int d = A->dim();
    std::vector<ExactElement> basis{ExactElement::one(A), J};
    auto rows_of = [](const std::vector<ExactElement>& b) {
        QMatrix m;
        for (const auto& e : b) m.push_back(e.coeffs());
        return m;
    };
    int rank = exact_rank(rows_of(basis));
    for (int k = 0; k < d && static_cast<int>(basis.size()) < d; ++k) {
        ExactElement ek = ExactElement::basis(A, k);
        auto trial = basis;
        trial.push_back(ek);
        trial.push_back(J * ek);
        int r = exact_rank(rows_of(trial));
        if (r == rank + 2) {
            basis = std::move(trial);
            rank = r;
        }
    }
    if (static_cast<int>(basis.size()) != d) throw Error(ErrorKind::SplittingFailed, "no splitting basis found");
    QMatrix inv = exact_inverse_of_columns(basis);
    auto coords = [&](const ExactElement& c) {
        std::vector<Rational> x(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (c[j] != 0) x[i] += inv[i][j] * c[j];
        return x;
    };
    auto [P, Q] = restrict_to_slice(F);
    return check_split<Rational>(P, Q, d / 2, F.n(), coords, 0.0, true);
}

SplitHolomorphyReport split_holomorphy_check(const SliceFunction& f, const Element& J, double tol) {
    if (!is_imaginary_unit(J, tol)) throw Error(ErrorKind::NotImaginaryUnit, "J is not an imaginary unit");
    const StemPoly& F = f.stem();
    ExactElement Jq = to_exact(J);
    if (exact_unit(Jq)) return split_holomorphy_check(F, Jq);
    std::vector<Element> basis = splitting_basis(J, tol);
    const int d = J.dim();
    Eigen::MatrixXd M(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) M(i, j) = basis[j][i];
    Eigen::MatrixXd inv = M.inverse();
    auto coords = [&](const ExactElement& c) {
        Element x = to_double(c);
        Eigen::VectorXd v(d);
        for (int i = 0; i < d; ++i) v(i) = x[i];
        Eigen::VectorXd y = inv * v;
        return std::vector<double>(y.data(), y.data() + d);
    };
    auto [P, Q] = restrict_to_slice(F);
    double scale = 1;
    for (const auto& comp : F.components())
        for (const auto& [e, c] : comp.terms()) scale = std::max(scale, euclidean_norm(to_double(c)));
    return check_split<double>(P, Q, d / 2, F.n(), coords, tol * scale, false);
}

// ---------------------------------------------------------------- one-variable interpretation

OneVariableReport one_variable_regularity_check(const StemPoly& F) {
    OneVariableReport r;
    const int n = F.n();
    for (int h = 1; h <= n; ++h) {
        const int a = alpha_var(h), b = beta_var(h);
        for (Subset K = 0; K < (1u << (h - 1)); ++K) {
            Exponents beta_K(F.nvars(), 0);
            for (int k : elements(K)) beta_K[beta_var(k)] = 1;
            std::vector<int> eps(h - 1);
            for (int k = 1; k < h; ++k) eps[k - 1] = contains(K, k) ? 1 : 0;
            for (Subset H = 0; H < (1u << n); ++H) {
                if (H & full_set(h)) continue;
                ElemPoly g1 = F[H | K].divide_monomial(beta_K);
                ElemPoly g2 = F[H | K | singleton(h)].divide_monomial(beta_K);
                ++r.checks;
                bool ok = g1.derivative(a) == g2.derivative(b) && g1.derivative(b) == -g2.derivative(a);
                if (!ok) {
                    r.regular = false;
                    r.failures.push_back({h, eps, H});
                }
            }
        }
    }
    return r;
}

OneVariableReport one_variable_regularity_check(const SliceFunction& f) { return one_variable_regularity_check(f.stem()); }

}  // namespace hyperslice
