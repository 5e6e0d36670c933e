#include "symcalc/harness.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "symcalc/errors.hpp"
#include "symcalc/gauge.hpp"

namespace symcalc {

double Recipe::param(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

const std::vector<std::string>& catalog_scenarios() {
    static const std::vector<std::string> names = {
        "flat-weyl", "scaled-time", "rotating-frame", "gauged-flat", "conformal",
    };
    return names;
}

const std::vector<std::string>& catalog_gauges() {
    static const std::vector<std::string> names = {
        "const-shear", "diag-exp", "rotation", "shear", "boost",
    };
    return names;
}

namespace {

// "id?k=v&k2=v2" -> Recipe. Values must parse fully as doubles.
Recipe parse_recipe(const std::string& text) {
    Recipe r;
    auto qmark = text.find('?');
    r.id = text.substr(0, qmark);
    if (qmark == std::string::npos) return r;
    std::string rest = text.substr(qmark + 1);
    std::stringstream ss(rest);
    std::string pair;
    while (std::getline(ss, pair, '&')) {
        if (pair.empty()) continue;
        auto eq = pair.find('=');
        if (eq == std::string::npos)
            throw ParseError(text, "expected key=value in \"" + pair + "\"");
        std::string key = pair.substr(0, eq);
        std::string val = pair.substr(eq + 1);
        std::size_t used = 0;
        double parsed = 0;
        try {
            parsed = std::stod(val, &used);
        } catch (const std::exception&) {
            throw ParseError(text, "value of \"" + key + "\" is not a number");
        }
        if (used != val.size())
            throw ParseError(text, "value of \"" + key + "\" is not a number");
        r.params[key] = parsed;
    }
    return r;
}

Recipe recipe_from_json(const nlohmann::json& j, const std::string& where) {
    Recipe r;
    if (!j.contains("id") || !j["id"].is_string())
        throw ParseError(where, "recipe needs a string \"id\"");
    r.id = j["id"].get<std::string>();
    if (j.contains("params")) {
        for (auto& [key, val] : j["params"].items()) {
            if (!val.is_number()) throw ParseError(where, "param \"" + key + "\" is not a number");
            r.params[key] = val.get<double>();
        }
    }
    return r;
}

Scenario scenario_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path, e.what());
    }
    if (!j.contains("recipe")) throw ParseError(path, "scenario needs a \"recipe\" object");
    Scenario sc;
    sc.recipe = recipe_from_json(j["recipe"], path);
    sc.name = j.value("name", sc.recipe.id);
    if (j.contains("gauge")) sc.gauge = recipe_from_json(j["gauge"], path);
    if (j.contains("mass")) sc.mass = j["mass"].get<double>();
    if (j.contains("grid")) sc.grid = j["grid"].get<int>();
    return sc;
}

std::string canonical_id(const std::string& id) {
    // Short aliases for the catalog entries.
    static const std::map<std::string, std::string> aliases = {
        {"s1", "flat-weyl"},   {"s2", "scaled-time"}, {"s3", "rotating-frame"},
        {"s4", "gauged-flat"}, {"s5", "conformal"},
    };
    std::string low;
    for (char c : id) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    auto it = aliases.find(low);
    return it == aliases.end() ? id : it->second;
}

} // namespace

Scenario load_scenario(const std::string& name_or_path) {
    if (name_or_path.find(".json") != std::string::npos || name_or_path.find('/') != std::string::npos)
        return scenario_from_file(name_or_path);
    Scenario sc;
    sc.recipe = parse_recipe(name_or_path);
    sc.recipe.id = canonical_id(sc.recipe.id);
    static const std::vector<std::string> known = {
        "flat-weyl", "scaled-time",  "rotating-frame", "gauged-flat",
        "conformal", "degenerate",   "random",
    };
    bool found = false;
    for (const auto& k : known) found = found || k == sc.recipe.id;
    if (!found) throw UnknownScenario(name_or_path);
    sc.name = name_or_path;
    return sc;
}

namespace {

Matrix2Field zero_matrix() { return Matrix2Field::constant(Mat2::zero()); }

FirstOrderOperator make_flat_weyl(const Recipe& r) {
    std::array<Matrix2Field, 4> E;
    for (int a = 0; a < 4; ++a) E[a] = Matrix2Field::pauli_field(a + 1);
    Matrix2Field S = zero_matrix();
    for (int j = 1; j <= 4; ++j) {
        double c = r.param("s" + std::to_string(j), 0.0);
        if (c != 0.0) S = S + ScalarField::constant(c) * Matrix2Field::pauli_field(j);
    }
    return FirstOrderOperator::from_symbols(E, S);
}

FirstOrderOperator make_scaled_time(const Recipe& r) {
    double a = r.param("a", 0.3);
    std::array<Matrix2Field, 4> E;
    for (int al = 0; al < 3; ++al) E[al] = Matrix2Field::pauli_field(al + 1);
    ScalarField stretch = 1.0 + a * sin(ScalarField::coordinate(0));
    E[3] = stretch * Matrix2Field::pauli_field(4);
    return FirstOrderOperator::from_symbols(E, zero_matrix());
}

FirstOrderOperator make_rotating_frame(const Recipe& r) {
    double omega = r.param("omega", 1.0);
    ScalarField theta = omega * ScalarField::coordinate(3);
    ScalarField c = cos(theta), s = sin(theta);
    std::array<Matrix2Field, 4> E;
    E[0] = c * Matrix2Field::pauli_field(1) + s * Matrix2Field::pauli_field(2);
    E[1] = (-s) * Matrix2Field::pauli_field(1) + c * Matrix2Field::pauli_field(2);
    E[2] = Matrix2Field::pauli_field(3);
    E[3] = Matrix2Field::pauli_field(4);
    return FirstOrderOperator::from_symbols(E, zero_matrix());
}

FirstOrderOperator make_gauged_flat(const Recipe& r) {
    std::array<Matrix2Field, 4> E;
    for (int a = 0; a < 4; ++a) E[a] = Matrix2Field::pauli_field(a + 1);
    FirstOrderOperator base = FirstOrderOperator::from_symbols(E, Matrix2Field::pauli_field(4));
    Recipe g{"diag-exp", {{"lambda", r.param("lambda", 0.3)}}};
    return apply_gauge(base, build_gauge(g));
}

FirstOrderOperator make_conformal(const Recipe& r) {
    double omega = r.param("omega", 2.0);
    double k = r.param("k", 0.0);
    ScalarField factor = ScalarField::constant(omega);
    if (k != 0.0) factor = factor * exp(k * ScalarField::coordinate(1));
    std::array<Matrix2Field, 4> E;
    for (int a = 0; a < 4; ++a) E[a] = factor * Matrix2Field::pauli_field(a + 1);
    return FirstOrderOperator::from_symbols(E, zero_matrix());
}

FirstOrderOperator make_degenerate() {
    // Principal symbol p_4 * s^4: vanishes on a whole hyperplane of momenta.
    std::array<Matrix2Field, 4> E = {zero_matrix(), zero_matrix(), zero_matrix(),
                                     Matrix2Field::pauli_field(4)};
    return FirstOrderOperator::from_symbols(E, zero_matrix());
}

} // namespace

FirstOrderOperator build_operator(const Scenario& sc) {
    const Recipe& r = sc.recipe;
    FirstOrderOperator op = [&] {
        if (r.id == "flat-weyl") return make_flat_weyl(r);
        if (r.id == "scaled-time") return make_scaled_time(r);
        if (r.id == "rotating-frame") return make_rotating_frame(r);
        if (r.id == "gauged-flat") return make_gauged_flat(r);
        if (r.id == "conformal") return make_conformal(r);
        if (r.id == "degenerate") return make_degenerate();
        if (r.id == "random") {
            DetRng rng(static_cast<std::uint64_t>(r.param("seed", 1.0)));
            return random_operator(rng);
        }
        throw UnknownScenario(r.id);
    }();
    if (sc.gauge) op = apply_gauge(op, build_gauge(*sc.gauge));
    return op;
}

GaugeMap build_gauge(const Recipe& r) {
    auto mat = [](ComplexField a, ComplexField b, ComplexField c, ComplexField d) {
        Matrix2Field m = zero_matrix();
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        m.at(1, 0) = c;
        m.at(1, 1) = d;
        return m;
    };
    auto real = [](ScalarField f) { return ComplexField::from_real(f); };
    auto one = ComplexField::constant(1.0);
    auto nil = ComplexField::constant(0.0);

    if (r.id == "identity") return GaugeMap::identity();
    if (r.id == "const-shear") {
        cplx z(r.param("re", 0.3), r.param("im", 0.1));
        return GaugeMap(mat(one, ComplexField::constant(z), nil, one));
    }
    if (r.id == "diag-exp") {
        ScalarField lam = r.param("lambda", 0.3) * sin(ScalarField::coordinate(1));
        return GaugeMap(mat(real(exp(lam)), nil, nil, real(exp(-1.0 * lam))));
    }
    if (r.id == "rotation") {
        ScalarField ang = r.param("phi", 0.25) * ScalarField::coordinate(0);
        return GaugeMap(mat(real(cos(ang)), real(sin(ang)), real(-1.0 * sin(ang)), real(cos(ang))));
    }
    if (r.id == "shear") {
        ScalarField top = r.param("a", 0.4) * sin(ScalarField::coordinate(2));
        return GaugeMap(mat(one, real(top), nil, one));
    }
    if (r.id == "boost") {
        ScalarField t = r.param("eta", 0.2) * sin(ScalarField::coordinate(3));
        ScalarField ch = 0.5 * (exp(t) + exp(-1.0 * t));
        ScalarField sh = 0.5 * (exp(t) - exp(-1.0 * t));
        return GaugeMap(mat(real(ch), real(sh), real(sh), real(ch)));
    }
    if (r.id == "random") {
        DetRng rng(static_cast<std::uint64_t>(r.param("seed", 1.0)));
        return random_gauge(rng);
    }
    throw UnknownScenario("gauge:" + r.id);
}

GaugeMap random_gauge(DetRng& rng) {
    // R = P diag(e^lam, e^-lam) P^-1 for constant P = [[1,a],[b,1]]: det R = 1
    // exactly, and with |a|,|b| <= 0.4 and |lam| <= 0.17 every entry of the
    // generator P diag(lam,-lam) P^-1 stays below 0.5.
    cplx a = rng.complex_box(0.4);
    cplx b = rng.complex_box(0.4);
    cplx det = 1.0 - a * b;

    cplx c0 = rng.complex_box(0.04);
    cplx c1 = rng.complex_box(0.04);
    cplx c2 = rng.complex_box(0.04);
    int ax1 = rng.index(4), ax2 = rng.index(4);
    ComplexField lam = ComplexField::constant(c0) +
                       ComplexField::constant(c1) * ComplexField::from_real(sin(ScalarField::coordinate(ax1))) +
                       ComplexField::constant(c2) * ComplexField::from_real(cos(ScalarField::coordinate(ax2)));

    ComplexField ep = cexp(lam);
    ComplexField em = cexp(-1.0 * lam);

    // Entries of P diag(ep, em) P^-1 written out; P^-1 = [[1,-a],[-b,1]]/det.
    cplx inv = 1.0 / det;
    Matrix2Field R = zero_matrix();
    R.at(0, 0) = ComplexField::constant(inv) * (ep - ComplexField::constant(a * b) * em);
    R.at(0, 1) = ComplexField::constant(inv * a) * (em - ep);
    R.at(1, 0) = ComplexField::constant(inv * b) * (ep - em);
    R.at(1, 1) = ComplexField::constant(inv) * (em - ComplexField::constant(a * b) * ep);
    return GaugeMap(R);
}

FirstOrderOperator random_operator(DetRng& rng) {
    GaugeMap R = random_gauge(rng);

    // Constant invertible mix M = I + 0.2 U keeps the quadratic form within
    // a small congruence of the Minkowski one, so the signature survives.
    Mat4d M = {};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) M.at(i, j) = (i == j ? 1.0 : 0.0) + 0.2 * rng.uniform(-1.0, 1.0);

    ScalarField u = ScalarField::constant(rng.uniform(-0.2, 0.2)) +
                    0.3 * sin(ScalarField::coordinate(rng.index(4)));
    ScalarField conf = exp(u);

    std::array<Matrix2Field, 4> E;
    for (int al = 0; al < 4; ++al) {
        Matrix2Field mix = zero_matrix();
        for (int be = 0; be < 4; ++be)
            mix = mix + ScalarField::constant(M.at(al, be)) * Matrix2Field::pauli_field(be + 1);
        E[al] = conf * (R.R().adjoint() * mix * R.R());
    }

    Matrix2Field S0 = zero_matrix();
    for (int j = 1; j <= 4; ++j)
        S0 = S0 + ScalarField::constant(rng.uniform(-0.5, 0.5)) * Matrix2Field::pauli_field(j);
    Matrix2Field S = R.R().adjoint() * S0 * R.R();

    return FirstOrderOperator::from_symbols(E, S);
}

ScalarField gaussian_window() {
    // Width chosen against the quadrature box: at |x_a| = 5.6 the product of
    // two windows is exp(-31), while the Fourier tail that trapezoid sums
    // alias sits below 1e-9 for the momentum range used here.
    ScalarField s = ScalarField::constant(0.0);
    for (int a = 0; a < 4; ++a) s = s + pow_int(ScalarField::coordinate(a), 2);
    return exp(-0.5 * s);
}

TwoColumnField random_windowed_field(DetRng& rng) {
    ScalarField w = gaussian_window();
    Momentum p{};
    for (int a = 0; a < 4; ++a) p[a] = rng.uniform(-1.0, 1.0);
    ComplexField wave = plane_wave(p);
    TwoColumnField v = TwoColumnField::constant(Vec2c{rng.complex_box(1.0), rng.complex_box(1.0)});
    return w * (wave * v);
}

double fd_oracle(const ScalarField& f, const Point& x, int direction) {
    double h = fd_step(x, direction);
    Point xp = x, xm = x;
    xp[direction] += h;
    xm[direction] -= h;
    return (f.eval(xp) - f.eval(xm)) / (2.0 * h);
}

cplx fd_oracle(const ComplexField& f, const Point& x, int direction) {
    double h = fd_step(x, direction);
    Point xp = x, xm = x;
    xp[direction] += h;
    xm[direction] -= h;
    return (f.eval(xp) - f.eval(xm)) / (2.0 * h);
}

Mat2 fd_oracle(const Matrix2Field& f, const Point& x, int direction) {
    double h = fd_step(x, direction);
    Point xp = x, xm = x;
    xp[direction] += h;
    xm[direction] -= h;
    Mat2 d = f.eval(xp);
    d -= f.eval(xm);
    return (1.0 / (2.0 * h)) * d;
}

} // namespace symcalc
