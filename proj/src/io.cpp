#include "lorentz/io.hpp"

#include "lorentz/errors.hpp"
#include "lorentz/hurwitz.hpp"
#include "lorentz/lti.hpp"
#include "lorentz/sequences.hpp"

#include <charconv>
#include <cmath>
#include <complex>

namespace lorentz::io {

using lorentz::to_string;

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t as_size(const Json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

const Json& as_array(const Json& j, const char* what)
{
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

Json number_or_null(double x)
{
    if (!std::isfinite(x)) return nullptr;
    return x;
}

Json scalar_json(const Rational& x) { return to_string(x); }
Json scalar_json(double x) { return number_or_null(x); }

template <class T>
Json coeffs_json(const UniPoly<T>& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(scalar_json(c));
    return a;
}

Json vector_json(const std::vector<double>& v)
{
    Json a = Json::array();
    for (double x : v) a.push_back(number_or_null(x));
    return a;
}

Json complex_json(const std::vector<std::complex<double>>& zs)
{
    Json a = Json::array();
    for (const auto& z : zs) a.push_back(Json::array({number_or_null(z.real()), number_or_null(z.imag())}));
    return a;
}

Json named_verdicts(const std::vector<std::pair<std::string, Verdict>>& vs)
{
    Json o = Json::object();
    for (const auto& [name, v] : vs) o[name] = to_json(v);
    return o;
}

template <class T>
UniPoly<T> as_poly(const std::vector<Rational>& c)
{
    std::vector<T> out;
    for (const auto& x : c) out.push_back(scalar_from_rational<T>(x));
    return UniPoly<T>(std::move(out));
}

template <class T>
std::vector<T> as_vec(const std::vector<Rational>& c)
{
    std::vector<T> out;
    for (const auto& x : c) out.push_back(scalar_from_rational<T>(x));
    return out;
}

template <class T>
MultiForm<T> as_form(const MultiForm<Rational>& f)
{
    if constexpr (is_exact_v<T>) return f;
    else return convert<double>(f);
}

template <class T>
Matrix<T> as_matrix(const Matrix<Rational>& m)
{
    if constexpr (is_exact_v<T>) return m;
    else return convert<double>(m);
}

std::string_view kind_name(ConeKind k)
{
    switch (k) {
    case ConeKind::Orthant: return "orthant";
    case ConeKind::Polyhedral: return "polyhedral";
    case ConeKind::SecondOrder: return "second_order";
    }
    return "polyhedral";
}

Json header(const char* command, const RunConfig& cfg)
{
    Json out;
    out["command"] = command;
    out["config"] = config_json(cfg);
    return out;
}

template <class T>
void unipoly_body(Json& out, const UniPoly<T>& p, const Tolerance& tol)
{
    out["polynomial"] = coeffs_json(p);
    out["degree"] = p.degree_or_throw();
    out["clc"] = {{"non_strict", to_json(is_univariate_clc(p, false, tol))},
                  {"strict", to_json(is_univariate_clc(p, true, tol))}};
    try {
        const auto nc = newton_chain_report(p.coeffs(), tol);
        out["newton_chain"] = {{"hypothesis", to_json(nc.hypothesis)}, {"families", named_verdicts(nc.families)}};
    } catch (const Inapplicable& e) {
        out["newton_chain"] = {{"status", "not-applicable"}, {"index", e.index()}, {"note", e.what()}};
    }
    const StabilityReport sr = stability_report(p, tol);
    out["deciders"] = named_verdicts(sr.deciders);
    out["criteria"] = named_verdicts(sr.criteria);
    out["hurwitz_minors"] = sr.minors;
    out["minor_margin"] = number_or_null(sr.minor_margin);
    out["roots"] = complex_json(sr.roots);
    out["consistent"] = sr.consistent;
}

template <class T>
Json form_reports(const MultiForm<Rational>& fr, const Cone& k, const RunConfig& cfg)
{
    const MultiForm<T> f = as_form<T>(fr);
    const SampleOptions opt{cfg.trials, cfg.seed};
    Json reports = Json::array();
    reports.push_back(to_json(lorentzian_sample_check(f, k, cfg.tol, opt)));
    reports.push_back(to_json(clc_necessary_check(f, k, cfg.tol, opt)));
    auto not_applicable = [](const char* property, const char* why) {
        FormReport r;
        r.property = property;
        r.verdict = make_verdict(Status::NotApplicable, why);
        return to_json(r);
    };
    if (f.d() >= 2) reports.push_back(to_json(hessian_signature_check(f, k, cfg.tol, opt)));
    else reports.push_back(not_applicable("hessian-signature", "degree below 2"));
    if (f.d() >= 1) reports.push_back(to_json(hurwitz_over_cone_check(f, k, cfg.tol, opt)));
    else reports.push_back(not_applicable("hurwitz-over-K", "degree 0"));
    return reports;
}

template <class T>
void lti_body(Json& out, const Matrix<Rational>& mr, const Tolerance& tol)
{
    const LTIReport<T> r = lti_report(as_matrix<T>(mr), tol);
    out["char_poly"] = coeffs_json(r.char_poly);
    out["eigenvalues"] = complex_json(r.eigenvalues);
    out["spectral_abscissa"] = number_or_null(r.spectral_abscissa);
    out["eigen_stable"] = to_json(r.eigen_stable);
    out["routh_hurwitz"] = to_json(r.routh_hurwitz);
    out["criteria"] = named_verdicts(r.criteria);
    out["conclusion"] = to_string(r.conclusion);
    out["consistent"] = r.consistent;
}

template <class T>
void cone_matrix_body(Json& out, const Matrix<Rational>& mr, const Cone& k, const RunConfig& cfg)
{
    const ConeMatrixReport r = perron_frobenius_check(as_matrix<T>(mr), k, cfg.tol, {cfg.trials, cfg.seed});
    out["k_nonnegative"] = to_json(r.k_nonnegative);
    out["k_positive"] = to_json(r.k_positive);
    out["k_irreducible"] = to_json(r.k_irreducible);
    const auto& p = r.perron;
    out["perron"] = {{"rho", number_or_null(p.rho)},
                     {"rho_is_eigenvalue", p.rho_is_eigenvalue},
                     {"rho_positive", p.rho_positive},
                     {"simple", p.simple},
                     {"modulus_tie", p.modulus_tie},
                     {"eigenvector", vector_json(p.eigenvector)},
                     {"eigenvector_in_cone", p.eigenvector_in_cone},
                     {"eigenvector_interior", p.eigenvector_interior},
                     {"unique_semipositive", p.unique_semipositive}};
}

} // namespace

Mode parse_mode(std::string_view text)
{
    if (text == "exact") return Mode::Exact;
    if (text == "float") return Mode::Float;
    if (text == "auto") return Mode::Auto;
    throw InputError("mode must be exact, float or auto");
}

std::string_view to_string(Mode m)
{
    switch (m) {
    case Mode::Exact: return "exact";
    case Mode::Float: return "float";
    case Mode::Auto: return "auto";
    }
    return "auto";
}

Mode resolve(Mode m) { return m == Mode::Auto ? Mode::Exact : m; }

void validate(const RunConfig& cfg)
{
    if (cfg.trials == 0) throw InputError("trials must be positive");
    if (!std::isfinite(cfg.tol.abs) || !std::isfinite(cfg.tol.rel) || cfg.tol.abs < 0 || cfg.tol.rel < 0)
        throw InputError("tolerances must be finite and nonnegative");
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Rational parse_number(const Json& j)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<unsigned long long>())));
        return Rational(mpz_class(std::to_string(j.get<long long>())));
    }
    if (j.is_number_float()) {
        const double d = j.get<double>();
        if (!std::isfinite(d)) throw ParseError("non-finite number");
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, d);
        return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a number or a \"p/q\" string");
}

std::vector<Rational> parse_vector(const Json& j)
{
    std::vector<Rational> out;
    for (const auto& x : as_array(j, "vector")) out.push_back(parse_number(x));
    return out;
}

std::vector<Rational> parse_unipoly(const Json& j) { return parse_vector(field(j, "coeffs")); }

Cone parse_cone(const Json& j)
{
    const Json& t = field(j, "type");
    if (!t.is_string()) throw ParseError("cone type must be a string");
    const std::string type = t.get<std::string>();
    if (type == "orthant") return Cone::orthant(as_size(field(j, "n"), "n"));
    if (type == "second_order") return Cone::second_order(as_size(field(j, "n"), "n"));
    if (type != "polyhedral") throw ParseError("unknown cone type '" + type + "'");
    std::vector<RationalVector> gens, facets;
    for (const auto& g : as_array(field(j, "generators"), "generators")) gens.push_back(parse_vector(g));
    if (auto it = j.find("facets"); it != j.end())
        for (const auto& f : as_array(*it, "facets")) facets.push_back(parse_vector(f));
    if (auto it = j.find("n"); it != j.end()) {
        const std::size_t n = as_size(*it, "n");
        for (const auto& g : gens)
            if (g.size() != n) throw DimensionMismatch("generator length differs from n");
    }
    return Cone::polyhedral(std::move(gens), std::move(facets));
}

MultiForm<Rational> parse_form(const Json& j)
{
    const std::size_t n = as_size(field(j, "n"), "n");
    const std::size_t d = as_size(field(j, "d"), "d");
    MultiForm<Rational> f(n, d);
    for (const auto& term : as_array(field(j, "terms"), "terms")) {
        Exponent e;
        for (const auto& x : as_array(field(term, "exp"), "exp")) e.push_back(static_cast<unsigned>(as_size(x, "exponent")));
        f.add_term(e, parse_number(field(term, "coef")));
    }
    return f;
}

Matrix<Rational> parse_matrix(const Json& j)
{
    const std::size_t n = as_size(field(j, "n"), "n");
    const Json& rows = as_array(field(j, "rows"), "rows");
    if (rows.size() != n) throw DimensionMismatch("matrix has " + std::to_string(rows.size()) + " rows, n = " + std::to_string(n));
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.push_back(parse_vector(row));
    return Matrix<Rational>::from_rows(r);
}

Json to_json(const Verdict& v)
{
    Json o;
    o["status"] = to_string(v.status);
    o["margin"] = number_or_null(v.margin);
    if (!v.note.empty()) o["note"] = v.note;
    if (v.witness) {
        Json w;
        w["indices"] = v.witness->indices;
        Json pts = Json::array();
        for (const auto& p : v.witness->points) pts.push_back(vector_json(p));
        w["points"] = pts;
        w["detail"] = v.witness->detail;
        // on success the witness names the tightest constraint, not a violation
        o[v.holds() ? "binding" : "witness"] = w;
    }
    return o;
}

Json to_json(const FormReport& r)
{
    Json o;
    o["property"] = r.property;
    o["verdict"] = to_json(r.verdict);
    o["samples"] = r.samples;
    o["eigenvalues"] = vector_json(r.eigenvalues);
    o["details"] = named_verdicts(r.details);
    Json counts = Json::object();
    for (const auto& [name, c] : r.counts) counts[name] = c;
    o["counts"] = counts;
    return o;
}

Json config_json(const RunConfig& cfg)
{
    return {{"tol_abs", cfg.tol.abs},
            {"tol_rel", cfg.tol.rel},
            {"trials", cfg.trials},
            {"seed", cfg.seed},
            {"mode", to_string(resolve(cfg.mode))},
            {"requested_mode", to_string(cfg.mode)}};
}

Json cmd_unipoly(const Json& input, const RunConfig& cfg)
{
    validate(cfg);
    const auto coeffs = parse_unipoly(input);
    const UniPoly<Rational> p(coeffs);
    if (p.degree_or_throw() == 0) throw WrongDegree("polynomial of degree 0");
    Json out = header("unipoly", cfg);
    if (resolve(cfg.mode) == Mode::Exact) unipoly_body(out, p, cfg.tol);
    else unipoly_body(out, as_poly<double>(coeffs), cfg.tol);
    return out;
}

Json cmd_form(const Json& form, const std::optional<Json>& cone, const RunConfig& cfg)
{
    validate(cfg);
    const MultiForm<Rational> f = parse_form(form);
    const Cone k = cone ? parse_cone(*cone) : Cone::orthant(f.n());
    if (k.dim() != f.n()) throw DimensionMismatch("form and cone dimensions differ");
    Json out = header("form", cfg);
    out["form"] = {{"n", f.n()}, {"d", f.d()}, {"terms", f.terms().size()}};
    out["cone"] = {{"type", kind_name(k.kind())}, {"n", k.dim()}};
    out["reports"] = resolve(cfg.mode) == Mode::Exact ? form_reports<Rational>(f, k, cfg) : form_reports<double>(f, k, cfg);
    return out;
}

Json cmd_matrix(const Json& matrix, const std::optional<Json>& cone, const RunConfig& cfg)
{
    validate(cfg);
    const Matrix<Rational> m = parse_matrix(matrix);
    Json out = header("matrix", cfg);
    out["n"] = m.size();
    const bool exact = resolve(cfg.mode) == Mode::Exact;
    if (!cone) {
        if (exact) lti_body<Rational>(out, m, cfg.tol);
        else lti_body<double>(out, m, cfg.tol);
        return out;
    }
    const Cone k = parse_cone(*cone);
    if (k.dim() != m.size()) throw DimensionMismatch("matrix and cone dimensions differ");
    out["cone"] = {{"type", kind_name(k.kind())}, {"n", k.dim()}};
    if (exact) cone_matrix_body<Rational>(out, m, k, cfg);
    else cone_matrix_body<double>(out, m, k, cfg);
    return out;
}

Json cmd_restrict(const Json& input, const RunConfig& cfg)
{
    validate(cfg);
    const MultiForm<Rational> f = parse_form(field(input, "form"));
    const auto x = parse_vector(field(input, "x"));
    const auto v = parse_vector(field(input, "v"));
    Json out = header("restrict", cfg);
    if (resolve(cfg.mode) == Mode::Exact)
        out["coeffs"] = coeffs_json(restrict_line(f, x, v, cfg.tol));
    else
        out["coeffs"] = coeffs_json(restrict_line(convert<double>(f), as_vec<double>(x), as_vec<double>(v), cfg.tol));
    return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

} // namespace lorentz::io
