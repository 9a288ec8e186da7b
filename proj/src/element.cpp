#include "hyperslice/element.hpp"

#include <cmath>
#include <sstream>

namespace hyperslice {

double euclidean_norm(const Element& a) {
    double s = 0;
    for (double v : a.coeffs()) s += v * v;
    return std::sqrt(s);
}

double imaginary_size(const Element& a) {
    double m = 0;
    for (int k = 1; k < a.dim(); ++k) m = std::max(m, std::abs(a[k]));
    return m;
}

bool is_real(const Element& a, double tol) { return imaginary_size(a) <= tol; }

Element to_double(const ExactElement& a) {
    std::vector<double> c(a.dim());
    for (int k = 0; k < a.dim(); ++k) c[k] = a[k].get_d();
    return Element(a.algebra(), std::move(c));
}

ExactElement to_exact(const Element& a) {
    std::vector<Rational> c(a.dim());
    for (int k = 0; k < a.dim(); ++k) c[k] = rational_from_double(a[k]);
    return ExactElement(a.algebra(), std::move(c));
}

std::string to_string(const Element& a, int precision) {
    std::ostringstream os;
    os.precision(precision);
    bool first = true;
    const auto& names = a.algebra()->names();
    for (int k = 0; k < a.dim(); ++k) {
        if (a[k] == 0) continue;
        if (!first) os << (a[k] < 0 ? " - " : " + ");
        else if (a[k] < 0) os << "-";
        os << std::abs(a[k]);
        if (k) os << "*" << names[k];
        first = false;
    }
    return first ? "0" : os.str();
}

std::string to_string(const ExactElement& a) {
    std::string s;
    const auto& names = a.algebra()->names();
    for (int k = 0; k < a.dim(); ++k) {
        if (a[k] == 0) continue;
        Rational v = a[k];
        if (!s.empty()) s += v < 0 ? " - " : " + ";
        else if (v < 0) s += "-";
        s += rational_to_string(abs(v));
        if (k) s += "*" + names[k];
    }
    return s.empty() ? "0" : s;
}

Element element_from(const Algebra& alg, std::vector<double> coeffs) {
    return Element(alg.get(), std::move(coeffs));
}

}  // namespace hyperslice
