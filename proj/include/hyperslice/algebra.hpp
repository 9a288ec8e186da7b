#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hyperslice/rational.hpp"

namespace hyperslice {

inline constexpr double kDefaultTol = 1e-9;

enum class AlgebraKind { Quaternions, Octonions, Clifford, Custom };
enum class NormKind { Euclidean };

struct TableEntry {
    int k;
    Rational q;
    double d;
};

/// Finite-dimensional real *-algebra given by structure constants.
/// Basis element 0 is the unity; the involution acts diagonally by conj_signs.
class AlgebraDef {
public:
    /// table[i][j] is the coefficient vector of e_i e_j (length dim each).
    static std::shared_ptr<const AlgebraDef> from_table(
        std::vector<std::string> names, const std::vector<std::vector<std::vector<Rational>>>& table,
        std::vector<int> conj_signs, AlgebraKind kind = AlgebraKind::Custom, int p = 0, int q = 0);

    int dim() const noexcept { return dim_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<int>& conj_signs() const noexcept { return conj_signs_; }
    AlgebraKind kind() const noexcept { return kind_; }
    NormKind norm_kind() const noexcept { return NormKind::Euclidean; }
    bool associative() const noexcept { return associative_; }
    int clifford_p() const noexcept { return p_; }
    int clifford_q() const noexcept { return q_; }
    std::string label() const;

    /// Nonzero entries of e_i e_j.
    const std::vector<TableEntry>& product(int i, int j) const { return table_[i * dim_ + j]; }
    /// True when every basis product is plus or minus a single basis element.
    bool signed_permutation() const noexcept { return signed_perm_; }
    int perm_index(int i, int j) const { return perm_index_[i * dim_ + j]; }
    int perm_sign(int i, int j) const { return perm_sign_[i * dim_ + j]; }

    /// Index of the named basis element, or -1.
    int basis_index(const std::string& name) const;
    /// First basis unit e_k with conj sign -1 and e_k^2 = -1, or -1 if none exists.
    int canonical_unit_index() const noexcept { return canonical_unit_; }

    /// Bound B with |xy| <= B|x||y|, estimated on 1e5 deterministic random unit pairs
    /// and multiplied by 1.05. Computed once on first use.
    double product_bound() const;

    bool same_as(const AlgebraDef& other) const;

private:
    AlgebraDef() = default;

    int dim_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<TableEntry>> table_;
    std::vector<int> conj_signs_;
    AlgebraKind kind_ = AlgebraKind::Custom;
    int p_ = 0, q_ = 0;
    bool associative_ = false;
    bool signed_perm_ = false;
    std::vector<int> perm_index_, perm_sign_;
    int canonical_unit_ = -1;
    mutable std::once_flag bound_once_;
    mutable double bound_ = 0.0;
};

using Algebra = std::shared_ptr<const AlgebraDef>;

/// Built-in algebras; repeated calls return the same instance.
Algebra make_algebra(AlgebraKind kind, int p = 0, int q = 0);
Algebra quaternions();
Algebra octonions();
Algebra clifford(int p, int q);

/// Accepts "H", "quaternions", "O", "octonions", "Cl(p,q)".
Algebra algebra_from_spec(const std::string& spec);

}  // namespace hyperslice
