#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "hyperslice/expression.hpp"

namespace hyperslice::cli {

namespace {

class ParseFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& s, const std::string& what) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(to_double(parse_rational(item.substr(item.find_first_not_of(' ')))));
        } catch (const std::exception&) {
            throw ParseFailure("bad number '" + item + "' in " + what);
        }
    }
    return v;
}

Json parse_json(const std::string& src, const std::string& what) {
    try {
        return Json::parse(quote_identifiers(src));
    } catch (const Json::exception& e) {
        throw ParseFailure("cannot parse " + what + ": " + e.what());
    }
}

struct Request {
    std::string algebra = "H";
    std::string format = "json";
    std::string poly, poly2, point, points, slice_unit, radii, centers, kernel = "ordered";
    int var = 1;
    bool conj = false;
    int samples = 128;
    int random = 0;
    unsigned long seed = 1;
};

Json header(const std::string& cmd, const Algebra& alg) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = cmd;
    j["algebra"] = alg->label();
    return j;
}

/// Formal derivative of a polynomial in x_h (ordered monomials keep their coefficient on the right).
OrderedPolynomial formal_derivative(const OrderedPolynomial& p, int h) {
    OrderedPolynomial r(p.algebra(), p.n());
    for (const auto& [ell, a] : p.terms()) {
        if (ell[h - 1] == 0) continue;
        Exponents e = ell;
        e[h - 1] -= 1;
        r.add_term(e, a * Rational(ell[h - 1]));
    }
    return r;
}

int dispatch(const std::string& cmd, const Request& q, std::ostream& out) {
    const double tol = default_tolerance();
    Algebra alg = algebra_from_spec(q.algebra);
    Json j = header(cmd, alg);

    if (cmd == "algebra-dump") {
        Json a = algebra_to_json(*alg);
        a["command"] = cmd;
        out << a.dump(2) << '\n';
        return kOk;
    }

    OrderedPolynomial p = parse_expression(q.poly, alg);
    j["poly"] = to_expression(p);

    if (cmd == "eval") {
        SlicePoint x = parse_point(q.point, alg, tol);
        if (x.n() < p.n()) throw Error(ErrorKind::InvalidArgument, "point has fewer coordinates than the polynomial");
        p = parse_expression(q.poly, alg, x.n());
        Element v = eval(SliceFunction(poly_to_stem(p)), x);
        if (q.format == "text") {
            out << to_string(v) << '\n';
            return kOk;
        }
        j["value"] = element_to_json(v);
        j["value_text"] = to_string(v);
    } else if (cmd == "diff") {
        if (q.var < 1 || q.var > p.n()) throw Error(ErrorKind::IndexOutOfRange, "--var outside 1..n");
        StemPoly F = poly_to_stem(p);
        StemPoly D = q.conj ? cr_partial_bar(F, q.var) : cr_partial(F, q.var);
        OrderedPolynomial expected = q.conj ? OrderedPolynomial(alg, p.n()) : formal_derivative(p, q.var);
        j["variable"] = q.var;
        j["conjugate"] = q.conj;
        j["stem"] = stem_to_json(D);
        if (poly_to_stem(expected) == D) j["expression"] = to_expression(expected);
        else j["expression"] = nullptr;
        if (q.format == "text") {
            out << (j["expression"].is_null() ? std::string("<not a polynomial>") : j["expression"].get<std::string>())
                << '\n';
            return kOk;
        }
    } else if (cmd == "regular") {
        StemPoly F = poly_to_stem(p);
        RegularityReport r = is_slice_regular(F);
        j["regular"] = r.regular;
        Json v = Json::array();
        for (const auto& c : r.violations)
            v.push_back({{"K", subset_name(c.K)}, {"h", c.h}, {"equation", c.describe()}});
        j["violations"] = v;
        j["split_holomorphic"] = split_holomorphy_check(F, to_exact(canonical_unit(alg.get()))).holomorphic;
        j["one_variable_regular"] = one_variable_regularity_check(F).regular;
    } else if (cmd == "product") {
        OrderedPolynomial p2 = parse_expression(q.poly2, alg);
        const int n = std::max(p.n(), p2.n());
        p = parse_expression(q.poly, alg, n);
        p2 = parse_expression(q.poly2, alg, n);
        OrderedPolynomial s = star_product(p, p2);
        bool agrees = poly_to_stem(s) == tensor_product(poly_to_stem(p), poly_to_stem(p2));
        if (q.format == "text") {
            out << to_expression(s) << '\n';
            return kOk;
        }
        j["poly2"] = to_expression(p2);
        j["product"] = to_expression(s);
        j["stem_agrees"] = agrees;
    } else if (cmd == "cauchy") {
        SlicePoint x = parse_point(q.point, alg, tol);
        p = parse_expression(q.poly, alg, x.n());
        if (x.n() != p.n()) throw Error(ErrorKind::InvalidArgument, "point arity differs from the polynomial");
        std::vector<double> radii = parse_list(q.radii, "--radii");
        std::vector<double> centers = q.centers.empty() ? std::vector<double>(radii.size(), 0.0)
                                                        : parse_list(q.centers, "--centers");
        if (static_cast<int>(radii.size()) != p.n())
            throw Error(ErrorKind::InvalidArgument, "--radii needs one radius per variable");
        Element J = canonical_unit(alg.get());
        if (q.slice_unit.find(',') != std::string::npos)
            J = parse_element(parse_json("[" + q.slice_unit + "]", "--slice-unit"), alg, true);
        else if (!q.slice_unit.empty())
            J = parse_element(parse_json("\"" + q.slice_unit + "\"", "--slice-unit"), alg, true);
        if (!is_imaginary_unit(J, tol)) throw Error(ErrorKind::NotImaginaryUnit, "--slice-unit is not in S_A");
        BoundaryTorus T = BoundaryTorus::discs(centers, radii, J, q.samples);
        CauchyOptions opt;
        opt.associative_kernel = q.kernel == "associative";
        CauchyResult r = cauchy_reconstruct(SliceFunction(poly_to_stem(p)), T, x, opt);
        Json c = cauchy_result_to_json(r);
        for (auto it = c.begin(); it != c.end(); ++it) j[it.key()] = it.value();
    } else if (cmd == "roots") {
        if (p.n() != 1) throw Error(ErrorKind::InvalidArgument, "roots needs a polynomial in x1 only");
        Json r = zero_report_to_json(roots_one_var(p));
        for (auto it = r.begin(); it != r.end(); ++it) j[it.key()] = it.value();
    } else if (cmd == "scan") {
        if (p.n() < 2) throw Error(ErrorKind::InvalidArgument, "scan needs at least two variables");
        std::vector<std::vector<Element>> samples;
        if (!q.points.empty()) {
            Json pts = parse_json(q.points, "--points");
            if (!pts.is_array()) throw ParseFailure("--points must be an array of tuples");
            for (const auto& t : pts) {
                if (!t.is_array() || static_cast<int>(t.size()) != p.n() - 1)
                    throw Error(ErrorKind::InvalidArgument, "each --points entry needs n-1 elements");
                std::vector<Element> xr;
                for (const auto& e : t) xr.push_back(parse_element(e, alg, false));
                samples.push_back(xr);
            }
        }
        std::mt19937_64 rng(q.seed);
        std::normal_distribution<double> N(0, 1);
        for (int s = 0; s < q.random; ++s) {
            std::vector<Element> xr;
            for (int h = 1; h < p.n(); ++h) {
                Element e = Element::zero(alg.get());
                for (int k = 0; k < e.dim(); ++k) e[k] = N(rng);
                xr.push_back(e);
            }
            samples.push_back(xr);
        }
        ScanReport rep = zero_scan(p, samples);
        if (q.format == "csv") {
            out << rep.csv();
            return kOk;
        }
        Json fibers = Json::array();
        for (const auto& f : rep.fibers) {
            Json xr = Json::array();
            for (const auto& e : f.x_rest) xr.push_back(element_to_json(e));
            Json fj = {{"x_rest", xr},       {"type", f.type},
                       {"points", f.points}, {"spheres", f.spheres},
                       {"leading_degenerate", f.leading_degenerate}};
            fj["report"] = zero_report_to_json(f.report);
            fibers.push_back(fj);
        }
        j["fibers"] = fibers;
        j["counts"] = rep.counts;
    }
    out << j.dump(2) << '\n';
    return kOk;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
    Json e;
    e["schema"] = kSchemaVersion;
    e["error"] = kind;
    e["message"] = message;
    err << e.dump() << '\n';
}

}  // namespace

double default_tolerance() {
    if (const char* s = std::getenv("HYPERSLICE_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && *end == '\0' && v > 0) return v;
    }
    return kDefaultTol;
}

std::string quote_identifiers(const std::string& src) {
    std::string out;
    bool in_string = false;
    for (std::size_t i = 0; i < src.size(); ++i) {
        char c = src[i];
        if (in_string) {
            out += c;
            if (c == '\\' && i + 1 < src.size()) out += src[++i];
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '"') {
            in_string = true;
            out += c;
            continue;
        }
        const bool starts_word = std::isalpha(static_cast<unsigned char>(c)) &&
                                 (i == 0 || !(std::isalnum(static_cast<unsigned char>(src[i - 1])) || src[i - 1] == '.'));
        if (!starts_word) {
            out += c;
            continue;
        }
        std::size_t j = i;
        while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
        std::string word = src.substr(i, j - i);
        if (word == "true" || word == "false" || word == "null") out += word;
        else out += "\"" + word + "\"";
        i = j - 1;
    }
    return out;
}

Element parse_element(const Json& j, const Algebra& alg, bool imaginary_only_allowed) {
    const int d = alg->dim();
    if (j.is_number()) return Element::real(alg.get(), j.get<double>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        int k = alg->basis_index(s);
        if (k >= 0) return Element::basis(alg.get(), k);
        OrderedPolynomial c = parse_expression(s, alg);
        if (c.degree() > 0) throw Error(ErrorKind::InvalidArgument, "expected a constant, got '" + s + "'");
        return to_double(c.coefficient(Exponents(c.n(), 0)));
    }
    if (j.is_array()) {
        if (static_cast<int>(j.size()) == d) return element_from_json(j, alg);
        if (imaginary_only_allowed && static_cast<int>(j.size()) == d - 1) {
            Json full = Json::array({0});
            for (const auto& v : j) full.push_back(v);
            return element_from_json(full, alg);
        }
        throw Error(ErrorKind::InvalidArgument, "coefficient array has the wrong length");
    }
    throw ParseFailure("expected a basis name, a number or a coefficient array");
}

SlicePoint parse_point(const std::string& src, const Algebra& alg, double tol) {
    Json j = parse_json(src, "--point");
    if (!j.is_array() || j.empty()) throw ParseFailure("--point must be a nonempty array of [alpha, beta, J] triples");
    std::vector<double> a, b;
    std::vector<Element> J;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number() || !t[1].is_number())
            throw ParseFailure("each coordinate must be [alpha, beta, J]");
        a.push_back(t[0].get<double>());
        b.push_back(t[1].get<double>());
        Element u = parse_element(t[2], alg, true);
        if (!is_imaginary_unit(u, tol)) throw Error(ErrorKind::NotImaginaryUnit, "J is not an imaginary unit");
        J.push_back(u);
    }
    return SlicePoint::from_parts(a, b, J);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Slice functions of several hypercomplex variables", "hyperslice"};
    app.require_subcommand(1);
    Request q;
    auto common = [&](CLI::App* s, bool poly) {
        s->add_option("--algebra", q.algebra, "H, O or Cl(p,q)")->capture_default_str();
        s->add_option("--format", q.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
        if (poly) s->add_option("--poly", q.poly, "polynomial, e.g. \"(0 i 1) x1^2 x2 + (1)\"")->required();
    };
    auto* ev = app.add_subcommand("eval", "evaluate a polynomial slice function");
    common(ev, true);
    ev->add_option("--point", q.point, "[[alpha,beta,J],...]")->required();
    auto* df = app.add_subcommand("diff", "slice partial derivative");
    common(df, true);
    df->add_option("--var", q.var, "variable index h")->capture_default_str();
    df->add_flag("--conj", q.conj, "derivative with respect to x_h^c");
    auto* rg = app.add_subcommand("regular", "check slice regularity");
    common(rg, true);
    auto* pr = app.add_subcommand("product", "slice tensor (star) product");
    common(pr, true);
    pr->add_option("--poly2", q.poly2, "second factor")->required();
    auto* ca = app.add_subcommand("cauchy", "reconstruct f(x) from boundary values");
    common(ca, true);
    ca->add_option("--point", q.point, "[[alpha,beta,J],...]")->required();
    ca->add_option("--radii", q.radii, "r1,...,rn")->required();
    ca->add_option("--centers", q.centers, "c1,...,cn (default 0)");
    ca->add_option("--samples", q.samples, "samples per circle")->capture_default_str()->check(CLI::PositiveNumber);
    ca->add_option("--slice-unit", q.slice_unit, "basis name or coefficients of J");
    ca->add_option("--kernel", q.kernel, "ordered or associative")->check(CLI::IsMember({"ordered", "associative"}));
    auto* ro = app.add_subcommand("roots", "zeros of a polynomial in x1");
    common(ro, true);
    auto* sc = app.add_subcommand("scan", "fibers of V(f) over sampled x'");
    common(sc, true);
    sc->add_option("--points", q.points, "[[x2,...,xn],...] with elements as names, numbers or arrays");
    sc->add_option("--random", q.random, "number of Gaussian random samples")->check(CLI::NonNegativeNumber);
    sc->add_option("--seed", q.seed, "seed for --random")->capture_default_str();
    auto* ad = app.add_subcommand("algebra-dump", "print the multiplication table");
    common(ad, false);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        report_error(err, "UsageError", e.what());
        return kParseError;
    }
    try {
        for (auto* s : app.get_subcommands()) return dispatch(s->get_name(), q, out);
        return kParseError;
    } catch (const ParseFailure& e) {
        report_error(err, "SyntaxError", e.what());
        return kParseError;
    } catch (const Error& e) {
        report_error(err, e.kind_name(), e.what());
        return e.is_parse_error() ? kParseError : kDomainError;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace hyperslice::cli
