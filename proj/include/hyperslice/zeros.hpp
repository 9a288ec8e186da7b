#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperslice/regularity.hpp"

namespace hyperslice {

/// The sphere S_{alpha + J beta} = {alpha + J beta : J in S_A}.
struct SphericalZero {
    double alpha = 0;
    double beta = 0;
};

struct ZeroReport {
    std::vector<Element> isolated;
    std::vector<SphericalZero> spherical;
    double residual_max = 0;
    /// Candidates from the normal polynomial whose refinement did not reach the residual bound.
    std::vector<std::string> refinement_failures;
};

struct RootOptions {
    std::uint64_t seed = 20240917;
    int sphere_samples = 8;
    int newton_iterations = 60;
};

/// Zeros of p(x) = sum over k of x^k a_k. Algebras: H, O, and Cl(0,m) with paravector coefficients.
/// Throws ConstantPolynomial.
ZeroReport roots_one_var(const OrderedPolynomial& p, const RootOptions& opt = {});

/// Residual bound 1e-8 (1 + sum of coefficient norms) used for every reported zero.
double zero_residual_bound(const OrderedPolynomial& p);

/// Real coefficients of the normal polynomial p * p^c, lowest degree first.
std::vector<Rational> normal_polynomial(const OrderedPolynomial& p);

/// Coefficients b_k(x') of f(x_1, x') = sum over k of x_1^k b_k(x').
OrderedPolynomial restrict_to_first_variable(const OrderedPolynomial& f, const std::vector<Element>& x_rest);

struct FiberRecord {
    std::vector<Element> x_rest;
    /// "whole", "empty-leading-degenerate", "empty", "finite", "spheres" or "mixed".
    std::string type;
    int points = 0;
    int spheres = 0;
    bool leading_degenerate = false;
    ZeroReport report;
};

struct ScanReport {
    std::vector<FiberRecord> fibers;
    std::map<std::string, int> counts;
    std::string csv() const;
};

/// Fiber of the projection (x_1, x') -> x' over each sample x'.
ScanReport zero_scan(const OrderedPolynomial& f, const std::vector<std::vector<Element>>& samples,
                     const RootOptions& opt = {});

}  // namespace hyperslice
