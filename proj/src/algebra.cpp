#include "hyperslice/algebra.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <regex>
#include <tuple>

#include "hyperslice/element.hpp"
#include "hyperslice/errors.hpp"

namespace hyperslice {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::UnsupportedKind: return "UnsupportedKind";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::NotInQuadraticCone: return "NotInQuadraticCone";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotImaginaryUnit: return "NotImaginaryUnit";
        case ErrorKind::SplittingFailed: return "SplittingFailed";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::OutsideDomain: return "OutsideDomain";
        case ErrorKind::SphereMismatch: return "SphereMismatch";
        case ErrorKind::OnRealLocus: return "OnRealLocus";
        case ErrorKind::BlackBoxUnsupported: return "BlackBoxUnsupported";
        case ErrorKind::OutsideConvergenceBall: return "OutsideConvergenceBall";
        case ErrorKind::OnSingularSphere: return "OnSingularSphere";
        case ErrorKind::NonAssociativeAlgebra: return "NonAssociativeAlgebra";
        case ErrorKind::PointOutsideE: return "PointOutsideE";
        case ErrorKind::QuadratureSingularity: return "QuadratureSingularity";
        case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorKind::RefinementFailed: return "RefinementFailed";
        case ErrorKind::EvaluationFailure: return "EvaluationFailure";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownBasisName: return "UnknownBasisName";
    }
    return "Unknown";
}

std::shared_ptr<const AlgebraDef> AlgebraDef::from_table(
    std::vector<std::string> names, const std::vector<std::vector<std::vector<Rational>>>& table,
    std::vector<int> conj_signs, AlgebraKind kind, int p, int q) {
    const int d = static_cast<int>(names.size());
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "algebra dimension must be positive");
    if (static_cast<int>(table.size()) != d || static_cast<int>(conj_signs.size()) != d)
        throw Error(ErrorKind::InvalidArgument, "table size differs from dimension");

    std::shared_ptr<AlgebraDef> a(new AlgebraDef());
    a->dim_ = d;
    a->names_ = std::move(names);
    a->conj_signs_ = std::move(conj_signs);
    a->kind_ = kind;
    a->p_ = p;
    a->q_ = q;
    a->table_.resize(static_cast<std::size_t>(d) * d);
    a->perm_index_.assign(static_cast<std::size_t>(d) * d, 0);
    a->perm_sign_.assign(static_cast<std::size_t>(d) * d, 0);
    a->signed_perm_ = true;

    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(table[i].size()) != d)
            throw Error(ErrorKind::InvalidArgument, "table row size differs from dimension");
        for (int j = 0; j < d; ++j) {
            const auto& v = table[i][j];
            if (static_cast<int>(v.size()) != d)
                throw Error(ErrorKind::InvalidArgument, "table entry size differs from dimension");
            auto& entries = a->table_[i * d + j];
            for (int k = 0; k < d; ++k)
                if (v[k] != 0) entries.push_back({k, v[k], v[k].get_d()});
            if (entries.size() == 1 && (entries[0].q == 1 || entries[0].q == -1)) {
                a->perm_index_[i * d + j] = entries[0].k;
                a->perm_sign_[i * d + j] = entries[0].q > 0 ? 1 : -1;
            } else {
                a->signed_perm_ = false;
            }
        }
    }
    for (int s : a->conj_signs_)
        if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "conj signs must be +1 or -1");

    // unity
    for (int k = 0; k < d; ++k) {
        for (int side = 0; side < 2; ++side) {
            const auto& e = side ? a->product(k, 0) : a->product(0, k);
            if (e.size() != 1 || e[0].k != k || e[0].q != 1)
                throw Error(ErrorKind::InvalidArgument, "basis element 0 is not the unity");
        }
    }
    if (a->conj_signs_[0] != 1) throw Error(ErrorKind::InvalidArgument, "conjugation must fix the reals");

    const AlgebraDef* raw = a.get();
    auto basis = [&](int k) { return ExactElement::basis(raw, k); };

    // anti-involution on basis pairs suffices by bilinearity
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (conj(basis(i) * basis(j)) != conj(basis(j)) * conj(basis(i)))
                throw Error(ErrorKind::InvalidArgument, "conjugation is not an anti-involution");

    // associativity on basis triples, alternativity via polarization on basis pairs
    bool assoc = true;
    std::vector<ExactElement> prod(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod[i * d + j] = basis(i) * basis(j);
    for (int i = 0; i < d && assoc; ++i)
        for (int j = 0; j < d && assoc; ++j)
            for (int k = 0; k < d && assoc; ++k)
                if (prod[i * d + j] * basis(k) != basis(i) * prod[j * d + k]) assoc = false;
    a->associative_ = assoc;
    if (!assoc) {
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                ExactElement x = basis(i) + basis(j);
                if (i == j) x = basis(i);
                ExactElement xx = x * x;
                for (int k = 0; k < d; ++k) {
                    ExactElement y = basis(k);
                    if (xx * y != x * (x * y) || (y * x) * x != y * xx)
                        throw Error(ErrorKind::InvalidArgument, "multiplication table is not alternative");
                }
            }
    }

    for (int k = 1; k < d; ++k) {
        if (a->conj_signs_[k] >= 0) continue;
        const auto& e = a->product(k, k);
        if (e.size() == 1 && e[0].k == 0 && e[0].q == -1) {
            a->canonical_unit_ = k;
            break;
        }
    }
    return a;
}

std::string AlgebraDef::label() const {
    switch (kind_) {
        case AlgebraKind::Quaternions: return "H";
        case AlgebraKind::Octonions: return "O";
        case AlgebraKind::Clifford: return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
        case AlgebraKind::Custom: return "custom" + std::to_string(dim_);
    }
    return "custom";
}

int AlgebraDef::basis_index(const std::string& name) const {
    for (int k = 0; k < dim_; ++k)
        if (names_[k] == name) return k;
    return -1;
}

bool AlgebraDef::same_as(const AlgebraDef& o) const {
    if (this == &o) return true;
    if (dim_ != o.dim_ || names_ != o.names_ || conj_signs_ != o.conj_signs_) return false;
    for (std::size_t i = 0; i < table_.size(); ++i) {
        const auto& x = table_[i];
        const auto& y = o.table_[i];
        if (x.size() != y.size()) return false;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (x[t].k != y[t].k || x[t].q != y[t].q) return false;
    }
    return true;
}

double AlgebraDef::product_bound() const {
    std::call_once(bound_once_, [this] {
        std::mt19937_64 rng(0x5eed1234ULL);
        std::normal_distribution<double> g(0.0, 1.0);
        double best = 0.0;
        auto unit = [&] {
            std::vector<double> c(dim_);
            double s = 0;
            for (auto& v : c) {
                v = g(rng);
                s += v * v;
            }
            s = std::sqrt(s);
            for (auto& v : c) v /= s;
            return Element(this, std::move(c));
        };
        for (int t = 0; t < 100000; ++t) {
            Element x = unit(), y = unit();
            best = std::max(best, euclidean_norm(x * y));
        }
        bound_ = best * 1.05;
    });
    return bound_;
}

namespace {

std::vector<std::vector<std::vector<Rational>>> empty_table(int d) {
    return std::vector<std::vector<std::vector<Rational>>>(
        d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
}

std::string clifford_name(int mask) {
    if (mask == 0) return "1";
    std::string s = "e";
    for (int b = 0; b < 31; ++b)
        if (mask & (1 << b)) s += std::to_string(b + 1);
    return s;
}

Algebra build_clifford(int p, int q, AlgebraKind kind) {
    const int m = p + q;
    const int d = 1 << m;
    auto t = empty_table(d);
    std::vector<std::string> names(d);
    std::vector<int> conj(d);
    for (int a = 0; a < d; ++a) {
        names[a] = clifford_name(a);
        int g = std::popcount(static_cast<unsigned>(a));
        conj[a] = ((g * (g + 1) / 2) % 2 == 0) ? 1 : -1;
        for (int b = 0; b < d; ++b) {
            int sign = 1;
            // reorder: count pairs (i in a, j in b) with i > j
            for (int i = 0; i < m; ++i) {
                if (!(a & (1 << i))) continue;
                for (int j = 0; j < i; ++j)
                    if (b & (1 << j)) sign = -sign;
            }
            int common = a & b;
            for (int i = 0; i < m; ++i)
                if ((common & (1 << i)) && i >= p) sign = -sign;
            t[a][b][a ^ b] = sign;
        }
    }
    if (kind == AlgebraKind::Quaternions) names = {"1", "i", "j", "k"};
    return AlgebraDef::from_table(std::move(names), t, std::move(conj), kind, p, q);
}

Algebra build_octonions() {
    // quaternion products on indices 0..3 = 1,i,j,k
    const int qi[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int qs[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    auto qconj = [](int a) { return a == 0 ? 1 : -1; };
    auto t = empty_table(8);
    // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) with basis pairs
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int xa = x % 4, ya = y % 4;
            bool xb = x >= 4, yb = y >= 4;
            if (!xb && !yb) {
                t[x][y][qi[xa][ya]] = qs[xa][ya];
            } else if (!xb && yb) {
                // (a,0)(0,d) = (0, d a)
                t[x][y][4 + qi[ya][xa]] = qs[ya][xa];
            } else if (xb && !yb) {
                // (0,b)(c,0) = (0, b conj(c))
                t[x][y][4 + qi[xa][ya]] = qs[xa][ya] * qconj(ya);
            } else {
                // (0,b)(0,d) = (-conj(d) b, 0)
                t[x][y][qi[ya][xa]] = -qs[ya][xa] * qconj(ya);
            }
        }
    std::vector<std::string> names = {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
    std::vector<int> conj = {1, -1, -1, -1, -1, -1, -1, -1};
    return AlgebraDef::from_table(std::move(names), t, std::move(conj), AlgebraKind::Octonions);
}

}  // namespace

Algebra make_algebra(AlgebraKind kind, int p, int q) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, Algebra> cache;
    if (kind == AlgebraKind::Custom) throw Error(ErrorKind::UnsupportedKind, "custom algebras are built from tables");
    if (kind == AlgebraKind::Clifford) {
        if (p < 0 || q < 0) throw Error(ErrorKind::InvalidArgument, "negative signature");
        if (p + q > 6) throw Error(ErrorKind::DimensionTooLarge, "Clifford algebras need p+q <= 6");
    } else {
        p = q = 0;
    }
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(kind), p, q);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    Algebra a;
    switch (kind) {
        case AlgebraKind::Quaternions: a = build_clifford(0, 2, AlgebraKind::Quaternions); break;
        case AlgebraKind::Octonions: a = build_octonions(); break;
        default: a = build_clifford(p, q, AlgebraKind::Clifford); break;
    }
    cache[key] = a;
    return a;
}

Algebra quaternions() { return make_algebra(AlgebraKind::Quaternions); }
Algebra octonions() { return make_algebra(AlgebraKind::Octonions); }
Algebra clifford(int p, int q) { return make_algebra(AlgebraKind::Clifford, p, q); }

Algebra algebra_from_spec(const std::string& spec) {
    if (spec == "H" || spec == "quaternions") return quaternions();
    if (spec == "O" || spec == "octonions") return octonions();
    static const std::regex cl(R"(\s*(?:Cl|clifford)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(spec, m, cl)) return clifford(std::stoi(m[1]), std::stoi(m[2]));
    throw Error(ErrorKind::UnsupportedKind, "unknown algebra '" + spec + "'");
}

}  // namespace hyperslice
