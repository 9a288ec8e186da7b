#include "hyperslice/json_io.hpp"

#include "hyperslice/expression.hpp"

namespace hyperslice {

namespace {

const char* kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Quaternions: return "quaternions";
        case AlgebraKind::Octonions: return "octonions";
        case AlgebraKind::Clifford: return "clifford";
        case AlgebraKind::Custom: return "custom";
    }
    return "custom";
}

AlgebraKind kind_from_name(const std::string& s) {
    if (s == "quaternions") return AlgebraKind::Quaternions;
    if (s == "octonions") return AlgebraKind::Octonions;
    if (s == "clifford") return AlgebraKind::Clifford;
    return AlgebraKind::Custom;
}

Rational rational_from_json(const Json& v) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "bad rational '" + v.get<std::string>() + "'");
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number()) return rational_from_double(v.get<double>());
    throw Error(ErrorKind::InvalidArgument, "expected a number or a \"p/q\" string");
}

}  // namespace

Json algebra_to_json(const AlgebraDef& alg) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["label"] = alg.label();
    j["kind"] = kind_name(alg.kind());
    j["dim"] = alg.dim();
    if (alg.kind() == AlgebraKind::Clifford) {
        j["p"] = alg.clifford_p();
        j["q"] = alg.clifford_q();
    }
    j["associative"] = alg.associative();
    j["names"] = alg.names();
    j["conj_signs"] = alg.conj_signs();
    Json table = Json::array();
    for (int a = 0; a < alg.dim(); ++a)
        for (int b = 0; b < alg.dim(); ++b) {
            Json terms = Json::array();
            for (const auto& e : alg.product(a, b)) terms.push_back({e.k, rational_to_string(e.q)});
            table.push_back({{"i", a}, {"j", b}, {"terms", terms}});
        }
    j["table"] = table;
    return j;
}

Algebra algebra_from_json(const Json& j) {
    try {
        const auto names = j.at("names").get<std::vector<std::string>>();
        const int d = static_cast<int>(names.size());
        std::vector<std::vector<std::vector<Rational>>> table(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d)));
        for (const auto& entry : j.at("table")) {
            int a = entry.at("i").get<int>(), b = entry.at("j").get<int>();
            if (a < 0 || a >= d || b < 0 || b >= d) throw Error(ErrorKind::IndexOutOfRange, "table index out of range");
            for (const auto& t : entry.at("terms")) {
                int k = t.at(0).get<int>();
                if (k < 0 || k >= d) throw Error(ErrorKind::IndexOutOfRange, "table index out of range");
                table[a][b][k] = rational_from_json(t.at(1));
            }
        }
        AlgebraKind kind = kind_from_name(j.value("kind", std::string("custom")));
        return AlgebraDef::from_table(names, table, j.at("conj_signs").get<std::vector<int>>(), kind, j.value("p", 0),
                                      j.value("q", 0));
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed algebra JSON: ") + e.what());
    }
}

Json element_to_json(const Element& a) { return a.coeffs(); }

Json element_to_json(const ExactElement& a) {
    Json j = Json::array();
    for (const auto& c : a.coeffs()) j.push_back(rational_to_string(c));
    return j;
}

Element element_from_json(const Json& j, const Algebra& alg) {
    if (!j.is_array() || static_cast<int>(j.size()) != alg->dim())
        throw Error(ErrorKind::InvalidArgument, "element needs " + std::to_string(alg->dim()) + " coefficients");
    Element a = Element::zero(alg.get());
    for (int k = 0; k < alg->dim(); ++k) a[k] = to_double(rational_from_json(j[k]));
    return a;
}

Json polynomial_to_json(const OrderedPolynomial& p) {
    Json j;
    j["algebra"] = p.algebra()->label();
    j["n"] = p.n();
    j["expression"] = to_expression(p);
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"exponents", it->first}, {"coefficient", element_to_json(it->second)}});
    j["terms"] = terms;
    return j;
}

Json stem_to_json(const StemPoly& F) {
    Json j;
    j["algebra"] = F.algebra()->label();
    j["n"] = F.n();
    j["variables"] = Json::array();
    for (int h = 1; h <= F.n(); ++h) {
        j["variables"].push_back("alpha" + std::to_string(h));
        j["variables"].push_back("beta" + std::to_string(h));
    }
    Json comps = Json::array();
    for (Subset K = 0; K < F.components().size(); ++K) {
        Json terms = Json::array();
        for (auto it = F[K].terms().rbegin(); it != F[K].terms().rend(); ++it)
            terms.push_back({{"exponents", it->first}, {"coefficient", element_to_json(it->second)}});
        comps.push_back({{"K", subset_name(K)}, {"terms", terms}});
    }
    j["components"] = comps;
    return j;
}

Json zero_report_to_json(const ZeroReport& r) {
    Json j;
    Json iso = Json::array();
    for (const auto& x : r.isolated) iso.push_back(element_to_json(x));
    j["isolated"] = iso;
    Json sph = Json::array();
    for (const auto& s : r.spherical) sph.push_back({{"alpha", s.alpha}, {"beta", s.beta}});
    j["spherical"] = sph;
    j["residual_max"] = r.residual_max;
    j["refinement_failures"] = r.refinement_failures;
    return j;
}

Json cauchy_result_to_json(const CauchyResult& r) {
    Json j;
    j["value"] = element_to_json(r.value);
    if (r.reference) j["reference"] = element_to_json(*r.reference);
    else j["reference"] = nullptr;
    j["abs_error"] = r.abs_error;
    j["N"] = r.samples;
    j["min_abs_delta"] = r.min_abs_delta;
    j["max_inv_delta"] = r.max_inv_delta;
    j["kernel"] = r.associative_kernel ? "associative" : "ordered";
    return j;
}

}  // namespace hyperslice
