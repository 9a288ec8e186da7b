#pragma once

#include <vector>

#include "hyperslice/element.hpp"

namespace hyperslice {

/// x = alpha + beta J with beta >= 0.
struct ConeDecomposition {
    double alpha = 0;
    double beta = 0;
    Element J;

    Element reconstruct() const { return Element::real(J.algebra(), alpha) + J * beta; }
};

/// Throws NotInQuadraticCone naming the violated condition.
ConeDecomposition cone_decompose(const Element& x, double tol = kDefaultTol);
/// Exact membership test; only beta and J are rounded. Needed near the real axis of
/// algebras whose norm is indefinite, where n(Im x) cancels catastrophically in doubles.
ConeDecomposition cone_decompose(const ExactElement& x);
bool in_quadratic_cone(const Element& x, double tol = kDefaultTol);

/// First imaginary basis unit; throws NotImaginaryUnit for algebras without one.
Element canonical_unit(const AlgebraDef* alg);

bool is_imaginary_unit(const Element& x, double tol = kDefaultTol);

/// x^c / n(x) when n(x) is real, otherwise a linear solve. Throws NotInvertible.
Element invert(const Element& x, double tol = kDefaultTol);
/// Exact inverse x^c / n(x); requires n(x) real and nonzero.
ExactElement invert(const ExactElement& x);

/// [u, v] = u_1(u_2(...(u_m v)...)); the empty sequence gives v.
template <class T>
BasicElement<T> ordered_product(const std::vector<BasicElement<T>>& u, const BasicElement<T>& v) {
    BasicElement<T> r = v;
    for (auto it = u.rbegin(); it != u.rend(); ++it) r = *it * r;
    return r;
}

/// [u^{-1}, w] = u_m^{-1}(...(u_1^{-1} w)...).
Element ordered_inverse_product(const std::vector<Element>& u, const Element& w, double tol = kDefaultTol);

/// [u] = [u_1, ..., u_m]; the empty sequence gives 1.
Element ordered_product(const std::vector<Element>& u, const AlgebraDef* alg);

/// {1, J, J_1, J J_1, ..., J_u, J J_u}, a real basis of A adapted to C_J.
std::vector<Element> splitting_basis(const Element& J, double tol = kDefaultTol);

/// Coordinates of x in the given real basis (least squares).
std::vector<double> coordinates_in_basis(const std::vector<Element>& basis, const Element& x);

}  // namespace hyperslice
