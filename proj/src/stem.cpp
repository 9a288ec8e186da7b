#include "hyperslice/stem.hpp"

#include <cmath>
#include <map>

namespace hyperslice {

std::vector<int> elements(Subset K) {
    std::vector<int> out;
    for (int h = 1; K; ++h, K >>= 1)
        if (K & 1u) out.push_back(h);
    return out;
}

std::string subset_name(Subset K) {
    if (!K) return "{}";
    std::string s = "{";
    bool first = true;
    for (int h : elements(K)) {
        if (!first) s += ",";
        s += std::to_string(h);
        first = false;
    }
    return s + "}";
}

long combinatorial_sum(int n, Subset H, Subset L) {
    long s = 0;
    for (Subset K = 0; K < (1u << n); ++K) s += ((card(H & K) + card(K & L)) % 2) ? -1 : 1;
    return s;
}

// ---------------------------------------------------------------- SigmaTable

SigmaTable::SigmaTable(int n, std::vector<Rational> values) : n_(n), s_(std::move(values)) {
    if (n < 1 || n > 8) throw Error(ErrorKind::InvalidArgument, "sigma arity out of range");
    if (s_.size() != (std::size_t{1} << (2 * n)))
        throw Error(ErrorKind::InvalidArgument, "sigma table has the wrong size");
    if (!has_unity()) throw Error(ErrorKind::InvalidArgument, "sigma(K,{}) and sigma({},K) must equal 1");
}

SigmaTable SigmaTable::tensor(int n) {
    if (n < 1 || n > 8) throw Error(ErrorKind::InvalidArgument, "sigma arity out of range");
    const Subset N = 1u << n;
    std::vector<Rational> v(static_cast<std::size_t>(N) * N);
    for (Subset K = 0; K < N; ++K)
        for (Subset H = 0; H < N; ++H) v[(static_cast<std::size_t>(K) << n) | H] = (card(K & H) % 2) ? -1 : 1;
    return SigmaTable(n, std::move(v));
}

bool SigmaTable::has_unity() const {
    for (Subset K = 0; K < (1u << n_); ++K)
        if ((*this)(K, 0) != 1 || (*this)(0, K) != 1) return false;
    return true;
}

bool SigmaTable::is_commutative() const {
    for (Subset K = 0; K < (1u << n_); ++K)
        for (Subset H = 0; H < (1u << n_); ++H)
            if ((*this)(K, H) != (*this)(H, K)) return false;
    return true;
}

bool SigmaTable::is_associative() const {
    const Subset N = 1u << n_;
    for (Subset K = 0; K < N; ++K)
        for (Subset H = 0; H < N; ++H)
            for (Subset L = 0; L < N; ++L)
                if ((*this)(K, H) * (*this)(K ^ H, L) != (*this)(H, L) * (*this)(K, H ^ L)) return false;
    return true;
}

bool SigmaTable::is_hypercomplex() const {
    for (int k = 1; k <= n_; ++k)
        if ((*this)(singleton(k), singleton(k)) != -1) return false;
    for (Subset K = 1; K < (1u << n_); ++K) {
        auto el = elements(K);
        Rational prod = 1;
        for (std::size_t i = 0; i + 1 < el.size(); ++i) {
            Subset rest = 0;
            for (std::size_t j = i + 1; j < el.size(); ++j) rest |= singleton(el[j]);
            prod *= (*this)(singleton(el[i]), rest);
        }
        if (prod != 1) return false;
    }
    return true;
}

std::optional<SigmaTable> solve_hypercomplex_commutative_associative(int n) {
    const Subset N = 1u << n;
    const std::size_t vars = static_cast<std::size_t>(N) * N;
    auto idx = [&](Subset K, Subset H) { return (static_cast<std::size_t>(K) << n) | H; };
    std::vector<std::optional<Rational>> val(vars);
    // lhs product = rhs product * constant
    struct Eq {
        std::vector<std::size_t> lhs, rhs;
        Rational c;
    };
    std::vector<Eq> eqs;
    for (Subset K = 0; K < N; ++K) {
        eqs.push_back({{idx(K, 0)}, {}, 1});
        eqs.push_back({{idx(0, K)}, {}, 1});
    }
    for (int k = 1; k <= n; ++k) eqs.push_back({{idx(singleton(k), singleton(k))}, {}, -1});
    for (Subset K = 1; K < N; ++K) {
        auto el = elements(K);
        if (el.size() < 2) continue;
        Eq e{{}, {}, 1};
        for (std::size_t i = 0; i + 1 < el.size(); ++i) {
            Subset rest = 0;
            for (std::size_t j = i + 1; j < el.size(); ++j) rest |= singleton(el[j]);
            e.lhs.push_back(idx(singleton(el[i]), rest));
        }
        eqs.push_back(e);
    }
    for (Subset K = 0; K < N; ++K)
        for (Subset H = 0; H < N; ++H) eqs.push_back({{idx(K, H)}, {idx(H, K)}, 1});
    for (Subset K = 0; K < N; ++K)
        for (Subset H = 0; H < N; ++H)
            for (Subset L = 0; L < N; ++L)
                eqs.push_back({{idx(K, H), idx(K ^ H, L)}, {idx(H, L), idx(K, H ^ L)}, 1});

    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& e : eqs) {
            int unknown_side = -1;
            std::size_t unknown = 0;
            int unknowns = 0;
            Rational lp = 1, rp = e.c;
            for (auto v : e.lhs) {
                if (val[v]) lp *= *val[v];
                else if (unknowns++ == 0) unknown = v, unknown_side = 0;
            }
            for (auto v : e.rhs) {
                if (val[v]) rp *= *val[v];
                else if (unknowns++ == 0) unknown = v, unknown_side = 1;
            }
            if (unknowns == 0) {
                if (lp != rp) return std::nullopt;
                continue;
            }
            if (unknowns > 1) continue;
            // the same variable may appear twice; only solve linear occurrences
            int occurrences = 0;
            for (auto v : e.lhs) occurrences += v == unknown;
            for (auto v : e.rhs) occurrences += v == unknown;
            if (occurrences != 1) continue;
            if (unknown_side == 0) {
                if (lp == 0) continue;
                val[unknown] = Rational(rp / lp);
            } else {
                if (rp == 0) continue;
                val[unknown] = Rational(lp / rp);
            }
            progress = true;
        }
    }
    std::vector<Rational> out(vars);
    for (std::size_t v = 0; v < vars; ++v) {
        if (!val[v]) return std::nullopt;
        out[v] = *val[v];
    }
    return SigmaTable(n, std::move(out));
}

// ---------------------------------------------------------------- StemPoly

StemPoly::StemPoly(Algebra alg, int n) : alg_(std::move(alg)), n_(n) {
    if (n < 1 || n > 8) throw Error(ErrorKind::InvalidArgument, "stem arity out of range");
    comps_.assign(std::size_t{1} << n, ElemPoly(2 * n));
}

StemPoly StemPoly::unchecked(Algebra alg, int n, std::vector<ElemPoly> comps) {
    StemPoly F(std::move(alg), n);
    if (comps.size() != F.comps_.size()) throw Error(ErrorKind::InvalidArgument, "need 2^n components");
    for (const auto& c : comps) {
        if (c.nvars() != 2 * n) throw Error(ErrorKind::InvalidArgument, "component has wrong variable count");
        for (const auto& [e, a] : c.terms())
            if (a.algebra() != F.alg_.get() && !a.algebra()->same_as(*F.alg_))
                throw Error(ErrorKind::AlgebraMismatch, "coefficient from another algebra");
    }
    F.comps_ = std::move(comps);
    return F;
}

StemPoly StemPoly::make(Algebra alg, int n, std::vector<ElemPoly> comps) {
    StemPoly F = unchecked(std::move(alg), n, std::move(comps));
    auto bad = stem_parity_check(F);
    if (!bad.empty())
        throw Error(ErrorKind::InvalidArgument,
                    "component " + subset_name(bad.front().K) + " breaks the stem parity law");
    return F;
}

StemPoly StemPoly::constant(Algebra alg, int n, const ExactElement& a) {
    StemPoly F(std::move(alg), n);
    F.comps_[0].add_term(Exponents(2 * n, 0), a);
    return F;
}

bool StemPoly::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

int StemPoly::degree() const {
    int d = -1;
    for (const auto& c : comps_) d = std::max(d, c.degree());
    return d;
}

bool StemPoly::has_real_components() const {
    for (const auto& c : comps_)
        for (const auto& [e, a] : c.terms())
            for (int k = 1; k < a.dim(); ++k)
                if (a[k] != 0) return false;
    return true;
}

void StemPoly::check_same(const StemPoly& o) const {
    if (n_ != o.n_) throw Error(ErrorKind::InvalidArgument, "stems have different arity");
    if (alg_.get() != o.alg_.get() && !alg_->same_as(*o.alg_))
        throw Error(ErrorKind::AlgebraMismatch, "stems over different algebras");
}

StemPoly& StemPoly::operator+=(const StemPoly& o) {
    check_same(o);
    for (std::size_t K = 0; K < comps_.size(); ++K) comps_[K] += o.comps_[K];
    return *this;
}

StemPoly& StemPoly::operator-=(const StemPoly& o) {
    check_same(o);
    for (std::size_t K = 0; K < comps_.size(); ++K) comps_[K] -= o.comps_[K];
    return *this;
}

StemPoly StemPoly::scaled(const Rational& s) const {
    StemPoly r = *this;
    for (auto& c : r.comps_) c = c.scaled(s);
    return r;
}

bool operator==(const StemPoly& a, const StemPoly& b) {
    return a.n_ == b.n_ && (a.alg_.get() == b.alg_.get() || a.alg_->same_as(*b.alg_)) && a.comps_ == b.comps_;
}

StemValue StemPoly::evaluate(const std::vector<double>& ab) const {
    if (static_cast<int>(ab.size()) != 2 * n_) throw Error(ErrorKind::InvalidArgument, "need 2n coordinates");
    StemValue out{n_, std::vector<Element>(comps_.size(), Element::zero(alg_.get()))};
    // powers cache per variable
    std::vector<std::vector<double>> pw(2 * n_);
    int maxdeg = std::max(0, degree());
    for (int v = 0; v < 2 * n_; ++v) {
        pw[v].assign(maxdeg + 1, 1.0);
        for (int k = 1; k <= maxdeg; ++k) pw[v][k] = pw[v][k - 1] * ab[v];
    }
    for (std::size_t K = 0; K < comps_.size(); ++K) {
        Element& acc = out.comps[K];
        for (const auto& [e, a] : comps_[K].terms()) {
            double m = 1;
            for (int v = 0; v < 2 * n_; ++v) m *= pw[v][e[v]];
            for (int k = 0; k < a.dim(); ++k)
                if (a[k] != 0) acc[k] += m * a[k].get_d();
        }
    }
    return out;
}

std::vector<ParityViolation> stem_parity_check(const StemPoly& F) {
    std::vector<ParityViolation> out;
    for (Subset K = 0; K < (1u << F.n()); ++K)
        for (const auto& [e, a] : F[K].terms())
            for (int h = 1; h <= F.n(); ++h)
                if ((e[beta_var(h)] % 2 == 1) != contains(K, h)) {
                    out.push_back({K, e});
                    break;
                }
    return out;
}

StemPoly stem_product(const StemPoly& F, const StemPoly& G, const SigmaTable& sigma) {
    if (F.n() != G.n() || sigma.n() != F.n()) throw Error(ErrorKind::InvalidArgument, "arity mismatch");
    if (F.algebra().get() != G.algebra().get() && !F.algebra()->same_as(*G.algebra()))
        throw Error(ErrorKind::AlgebraMismatch, "stems over different algebras");
    const Subset N = 1u << F.n();
    std::vector<ElemPoly> comps(N, ElemPoly(F.nvars()));
    auto mul = [](const ExactElement& a, const ExactElement& b) { return a * b; };
    for (Subset H = 0; H < N; ++H) {
        if (F[H].is_zero()) continue;
        for (Subset L = 0; L < N; ++L) {
            if (G[L].is_zero() || sigma(H, L) == 0) continue;
            ElemPoly prod = F[H].multiply(G[L], mul);
            comps[H ^ L] += sigma(H, L) == 1 ? prod : prod.scaled(sigma(H, L));
        }
    }
    return StemPoly::unchecked(F.algebra(), F.n(), std::move(comps));
}

StemPoly tensor_product(const StemPoly& F, const StemPoly& G) {
    return stem_product(F, G, SigmaTable::tensor(F.n()));
}

StemValue apply_complex_structure(const StemValue& w, int h) {
    if (h < 1 || h > w.n) throw Error(ErrorKind::IndexOutOfRange, "complex structure index out of range");
    StemValue out{w.n, std::vector<Element>(w.comps.size(), Element::zero(w.comps[0].algebra()))};
    for (Subset K = 0; K < w.comps.size(); ++K) {
        Subset T = K ^ singleton(h);
        out.comps[T] = contains(K, h) ? Element(-w.comps[K]) : w.comps[K];
    }
    return out;
}

StemPoly apply_complex_structure(const StemPoly& F, int h) {
    if (h < 1 || h > F.n()) throw Error(ErrorKind::IndexOutOfRange, "complex structure index out of range");
    std::vector<ElemPoly> comps(F.components().size(), ElemPoly(F.nvars()));
    for (Subset K = 0; K < comps.size(); ++K) {
        Subset T = K ^ singleton(h);
        comps[T] = contains(K, h) ? -F[K] : F[K];
    }
    return StemPoly::unchecked(F.algebra(), F.n(), std::move(comps));
}

namespace {

StemPoly cr_operator(const StemPoly& F, int h, int bar_sign) {
    if (h < 1 || h > F.n()) throw Error(ErrorKind::IndexOutOfRange, "derivative index out of range");
    std::vector<ElemPoly> comps(F.components().size(), ElemPoly(F.nvars()));
    const Rational half(1, 2);
    for (Subset K = 0; K < comps.size(); ++K) {
        ElemPoly da = F[K].derivative(alpha_var(h));
        ElemPoly db = F[K ^ singleton(h)].derivative(beta_var(h));
        int s = (contains(K, h) ? -1 : 1) * bar_sign;
        comps[K] = (s > 0 ? da + db : da - db).scaled(half);
    }
    return StemPoly::unchecked(F.algebra(), F.n(), std::move(comps));
}

}  // namespace

StemPoly cr_partial(const StemPoly& F, int h) { return cr_operator(F, h, 1); }
StemPoly cr_partial_bar(const StemPoly& F, int h) { return cr_operator(F, h, -1); }

std::pair<RealPoly, RealPoly> pq_polynomials(int k) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    RealPoly p(2), q(2);
    // (alpha + i beta)^k = sum_j C(k,j) alpha^(k-j) (i beta)^j
    mpz_class binom = 1;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) binom = binom * (k - j + 1) / j;
        Rational c(binom);
        switch (j % 4) {
            case 0: p.add_term({k - j, j}, c); break;
            case 1: q.add_term({k - j, j}, c); break;
            case 2: p.add_term({k - j, j}, Rational(-c)); break;
            case 3: q.add_term({k - j, j}, Rational(-c)); break;
        }
    }
    return {p, q};
}

namespace {

RealPoly lift(const RealPoly& two_var, int n, int h) {
    RealPoly r(2 * n);
    for (const auto& [e, c] : two_var.terms()) {
        Exponents f(2 * n, 0);
        f[alpha_var(h)] = e[0];
        f[beta_var(h)] = e[1];
        r.add_term(f, c);
    }
    return r;
}

}  // namespace

StemPoly monomial_stem(const Algebra& alg, const std::vector<int>& ell, const ExactElement& a) {
    const int n = static_cast<int>(ell.size());
    if (a.algebra() != alg.get() && !a.algebra()->same_as(*alg))
        throw Error(ErrorKind::AlgebraMismatch, "coefficient from another algebra");
    std::vector<RealPoly> P(n + 1), Q(n + 1);
    for (int h = 1; h <= n; ++h) {
        auto [p, q] = pq_polynomials(ell[h - 1]);
        P[h] = lift(p, n, h);
        Q[h] = lift(q, n, h);
    }
    std::vector<ElemPoly> comps(std::size_t{1} << n, ElemPoly(2 * n));
    for (Subset K = 0; K < comps.size(); ++K) {
        RealPoly r = real_constant(2 * n, 1);
        for (int h = 1; h <= n && !r.is_zero(); ++h) r = r * (contains(K, h) ? Q[h] : P[h]);
        comps[K] = real_times_element(r, a);
    }
    return StemPoly::unchecked(alg, n, std::move(comps));
}

}  // namespace hyperslice
