#include "scw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "scw/chern_weil.hpp"
#include "scw/error.hpp"
#include "scw/io.hpp"
#include "scw/whitney.hpp"

namespace scw::cli {

namespace {

class Report {
public:
    void line(const std::string& s) { out_ << s << "\n"; }
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out_ << "check " << name << ": " << (ok ? "pass" : "FAIL");
        if (!detail.empty()) out_ << " (" << detail << ")";
        out_ << "\n";
        failed_ = failed_ || !ok;
    }
    bool failed() const { return failed_; }
    std::string text() const { return out_.str(); }

private:
    std::ostringstream out_;
    bool failed_ = false;
};

// a reader error tagged with the file it came from
class FileParseError : public std::runtime_error {
public:
    FileParseError(const std::string& path, const ParseError& e) : std::runtime_error(path + ": " + e.what()) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

int parse_count(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError("bad " + what + " '" + s + "'");
}

SetPtr load_space(const std::string& spec) {
    if (spec.empty()) throw UsageError("--space is required");
    if (spec == "two-disk-sphere") return two_disk_sphere();
    if (spec.rfind("simplex:", 0) == 0) {
        const int n = parse_count(spec.substr(8), "simplex dimension");
        if (n < 0 || n > 8) throw UsageError("simplex dimension must be in 0..8");
        return standard_simplex(n);
    }
    if (spec.rfind("boundary-sphere:", 0) == 0) {
        const int n = parse_count(spec.substr(16), "sphere dimension");
        if (n < 0 || n > 7) throw UsageError("sphere dimension must be in 0..7");
        return boundary_sphere(n);
    }
    const std::string text = read_file(spec);
    try {
        auto x = std::make_shared<SimplicialSet>(SimplicialSet::parse(text));
        x->validate();
        return x;
    } catch (const ParseError& e) {
        throw FileParseError(spec, e);
    }
}

struct LoadedBundle {
    Bundle bundle;
    std::string id;
    std::optional<int> clutch;
};

LoadedBundle load_bundle(const JobConfig& c) {
    static const std::regex clutch(R"(clutch(-?\d+))");
    std::smatch m;
    if (std::regex_match(c.bundle, m, clutch)) {
        const int n = parse_count(m[1], "clutching degree");
        return {clutch_bundle(n), c.bundle, n};
    }
    if (c.bundle == "trivial") return {trivial_bundle(load_space(c.space), LieAlgebra::make(c.algebra)), "trivial", {}};
    if (c.bundle.empty()) throw UsageError("--bundle is required");
    const std::string text = read_file(c.bundle);
    try {
        return {parse_bundle(text), std::filesystem::path(c.bundle).stem().string(), {}};
    } catch (const ParseError& e) {
        throw FileParseError(c.bundle, e);
    }
}

Connection load_connection(const JobConfig& c, const Bundle& p) {
    if (c.connection.empty()) return construct_connection(p);
    const std::string text = read_file(c.connection);
    try {
        Connection a = parse_connection(text, p.base());
        if (a.algebra()->name() != p.algebra()->name())
            throw ParseError(1, "connection group " + a.algebra()->name() + " does not match the bundle");
        return a;
    } catch (const ParseError& e) {
        throw FileParseError(c.connection, e);
    }
}

Connection to_float(const Connection& a) {
    Connection b(a.base(), a.algebra());
    const auto& x = *a.base();
    for (int d = 1; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx) b.set({d, idx}, a.at({d, idx}).to_float());
    return b;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string echo(const JobConfig& c) {
    std::ostringstream s;
    s << c.command;
    if (c.command == "betti") s << " --space " << c.space;
    if (c.command == "chern") {
        s << " --bundle " << c.bundle;
        if (!c.connection.empty()) s << " --connection " << c.connection;
        if (c.bundle == "trivial") s << " --space " << c.space << " --algebra " << c.algebra;
        s << " --poly " << c.poly;
    }
    if (c.command == "verify") s << " --suite " << c.suite;
    if (c.command == "clutch") s << " --n " << c.n;
    if (c.command == "horn-fill") s << " --n " << c.n << " --k " << c.k << " --algebra " << c.algebra;
    if (c.command == "reznikov") s << " --order " << c.order << " --probes " << c.probes;
    if (c.command == "generate") {
        s << " --kind " << c.kind;
        if (c.kind == "clutch") s << " --n " << c.n;
        if (c.kind == "trivial") s << " --space " << c.space << " --algebra " << c.algebra;
        if (c.kind == "horn-demo") s << " --n " << c.n << " --k " << c.k << " --algebra " << c.algebra;
        s << " --out " << c.out;
    }
    s << " --mode " << c.mode << " --seed " << c.seed;
    if (c.mode == "float") s << " --tol " << c.tol;
    return s.str();
}

Chain fundamental_cycle(const SetPtr& x) {
    const auto basis = homology_basis(*x, 2);
    if (basis.size() != 1) throw Error(ErrorKind::invalid_argument, "base has no unique 2-cycle");
    return basis[0];
}

// ---------------------------------------------------------------- commands

void cmd_betti(const JobConfig& c, Report& r) {
    const SetPtr x = load_space(c.space);
    r.line("space: " + c.space + " (" + join_ints(x->counts()) + " nondegenerate cells)");
    r.line("betti: " + join_ints(betti_numbers(*x, x->max_dim())));
}

void cmd_chern(const JobConfig& c, Report& r) {
    const LoadedBundle lb = load_bundle(c);
    const Bundle& p = lb.bundle;
    const InvariantPolynomial rho = parse_poly_spec(p.algebra(), c.poly);
    Rng rng(c.seed);
    r.line("bundle: " + lb.id + " (" + p.algebra()->name() + " over cells " + join_ints(p.base()->counts()) + ")");
    const BundleCheck bc = validate_bundle(p, rng, c.tol);
    r.check("bundle.cocycle", bc.ok, bc.message);
    if (!bc.ok) return;
    Connection a = load_connection(c, p);
    const GaugeCheck gc = check_gauge(p, a, rng, c.tol);
    r.check("connection.gauge", gc.ok, gc.ok ? (gc.exact ? "exact" : "sampled") : gc.message);
    if (!gc.ok) return;
    if (c.mode == "float") a = to_float(a);
    const int top = 2 * rho.arity();
    const auto cycles = homology_basis(*p.base(), top);
    const ClassReport report = class_report(rho, a, cycles, lb.id);
    r.line(report.machine_line());
    for (std::size_t i = 0; i < report.pairings.size(); ++i) {
        std::ostringstream s;
        s << "pairing " << i << ": " << report.pairings[i].to_string();
        if (!report.pairings[i].is_exact()) s << " = " << report.pairings[i].real();
        r.line(s.str());
    }
    r.check("class.closed", report.closed);
    if (p.algebra()->name() == "u1" && rho.kind() == InvariantPolynomial::Kind::chern && top == 2 && cycles.size() == 1) {
        const Rational winding = winding_oracle(p, cycles[0]);
        const Scalar& got = report.pairings[0];
        const bool ok = c.mode == "exact" ? got == Scalar(winding) : std::abs(got.real() - winding.get_d()) <= c.tol;
        r.check("winding-oracle", ok, "winding " + winding.get_str());
    }
}

void cmd_clutch(const JobConfig& c, Report& r) {
    if (c.n < -1000 || c.n > 1000) throw UsageError("--n must be in -1000..1000");
    Rng rng(c.seed);
    const Bundle p = clutch_bundle(c.n, Rational(1, 3));
    const Chain z = fundamental_cycle(p.base());
    const auto rho = chern_polynomial(p.algebra(), 1);
    r.check("bundle.cocycle", validate_bundle(p, rng).ok);
    const Rational winding = winding_oracle(p, z);
    r.line("winding: " + winding.get_str());
    for (const auto& [name, a] : {std::pair{"constructed", construct_connection(p)},
                                  std::pair{"random", random_connection(rng, p, 2)}}) {
        const GaugeCheck g = check_gauge(p, a, rng);
        r.check(std::string("gauge.") + name, g.ok && g.exact);
        const Scalar pairing_value = pairing(cw_cochain(rho, a), z);
        r.line(std::string("pairing.") + name + ": " + pairing_value.to_string());
        r.check(std::string("integrality.") + name, pairing_value == Scalar(winding) && winding == c.n);
        const AgreementResult agree = classical_agreement(rho, a, z, 1e-8);
        std::ostringstream s;
        s.precision(12);
        s << "quadrature " << agree.classical;
        r.check(std::string("classical.") + name, agree.ok, s.str());
    }
}

void cmd_horn_fill(const JobConfig& c, Report& r) {
    if (c.n < 1 || c.n > 5 || c.k < 0 || c.k > c.n) throw UsageError("horn needs 1 <= n <= 5 and 0 <= k <= n");
    Rng rng(c.seed);
    const HornPresentation h = horn(c.n, c.k);
    const auto g = LieAlgebra::make(c.algebra);
    Bundle data = c.bundle.empty() ? random_gauge_bundle(rng, h.horn, g, 1) : load_bundle(c).bundle;
    if (!(*data.base() == *h.horn)) throw UsageError("bundle does not live on the horn");
    // reattach to the horn's own set so the filler can use its presentation
    Bundle on_horn(h.horn, data.algebra());
    for (int d = 1; d <= h.horn->max_dim(); ++d)
        for (int idx = 0; idx < h.horn->count(d); ++idx)
            for (int i = 0; i <= d; ++i) on_horn.set_transition({d, idx}, i, data.transition({d, idx}, i));
    r.check("input.cocycle", validate_bundle(on_horn, rng).ok);
    const Bundle filler = horn_fill_bundle(h, on_horn);
    r.check("filler.restriction", restrict_to_horn(h, filler) == on_horn);
    r.check("filler.cocycle", validate_bundle(filler, rng).ok);
}

void cmd_reznikov(const JobConfig& c, Report& r) {
    if (c.order < 2 || c.order > 256) throw UsageError("--order must be in 2..256");
    Rng rng(c.seed);
    const auto su2 = LieAlgebra::make("su2");
    const auto r1 = reznikov_pullback(su2, 1, c.order);
    const auto r2 = reznikov_pullback(su2, 2, c.order);
    std::normal_distribution<double> nd;
    double worst = 0.0, lo = INFINITY, hi = -INFINITY, sum = 0.0;
    for (int t = 0; t < c.probes; ++t) {
        Coords xi;
        for (int a = 0; a < 3; ++a) xi.push_back(Scalar::from_double(nd(rng)));
        worst = std::max(worst, std::abs(r1.evaluate({xi}).to_complex()));
        const Eigen::MatrixXcd m = su2->to_eigen(xi);
        const double norm = (-2.0 * (m * m).trace()).real();
        const double lambda = r2.evaluate({xi, xi}).real() / norm;
        lo = std::min(lo, lambda);
        hi = std::max(hi, lambda);
        sum += lambda;
    }
    const double mean = sum / c.probes;
    std::ostringstream s;
    s.precision(15);
    s << "lambda: " << mean;
    r.line(s.str());
    std::ostringstream a, b;
    a << "max |value| " << worst;
    b << "relative spread " << (hi - lo) / std::abs(mean);
    r.check("reznikov1.vanishes", worst < 1e-10, a.str());
    r.check("reznikov2.proportional", (hi - lo) / std::abs(mean) < 1e-6, b.str());
}

void cmd_generate(const JobConfig& c, Report& r) {
    if (c.out.empty()) throw UsageError("generate needs --out <prefix>");
    Rng rng(c.seed);
    Bundle p;
    std::optional<Connection> a;
    if (c.kind == "clutch") {
        if (c.n < -1000 || c.n > 1000) throw UsageError("--n must be in -1000..1000");
        p = clutch_bundle(c.n);
        a = construct_connection(p);
    } else if (c.kind == "trivial") {
        p = trivial_bundle(load_space(c.space), LieAlgebra::make(c.algebra));
        a = construct_connection(p);
    } else if (c.kind == "horn-demo") {
        if (c.n < 1 || c.n > 5 || c.k < 0 || c.k > c.n) throw UsageError("horn needs 1 <= n <= 5 and 0 <= k <= n");
        const HornPresentation h = horn(c.n, c.k);
        const Bundle data = random_gauge_bundle(rng, h.horn, LieAlgebra::make(c.algebra), 1);
        p = horn_fill_bundle(h, data);
        r.check("filler.restriction", restrict_to_horn(h, p) == data);
        if (p.algebra()->is_abelian()) a = construct_connection(p);
    } else {
        throw UsageError("--kind must be clutch, trivial or horn-demo");
    }
    r.check("bundle.cocycle", validate_bundle(p, rng).ok);
    const std::string bundle_text = serialize_bundle(p);
    const Bundle back = parse_bundle(bundle_text);
    r.check("bundle.round-trip", back == p && serialize_bundle(back) == bundle_text);
    write_file(c.out + ".bundle", bundle_text);
    r.line("wrote " + c.out + ".bundle");
    if (a) {
        r.check("connection.gauge", check_gauge(p, *a, rng).ok);
        const std::string text = serialize_connection(*a);
        r.check("connection.round-trip", parse_connection(text, back.base()) == *a);
        write_file(c.out + ".connection", text);
        r.line("wrote " + c.out + ".connection");
    }
}

// ---------------------------------------------------------------- verify suites

PolyMap random_polymap(Rng& rng, int k, int d, int degree) {
    std::uniform_int_distribution<int> w(0, 4);
    std::vector<std::vector<Rational>> control;
    for (std::size_t j = 0; j < bernstein_indices(k, degree).size(); ++j) {
        std::vector<int> bary(d + 1);
        int total = 0;
        for (auto& b : bary) total += b = w(rng);
        if (total == 0) total = bary[0] = 1;
        std::vector<Rational> pt;
        for (int v = 1; v <= d; ++v) pt.push_back(Rational(bary[v], total));
        for (auto& q : pt) q.canonicalize();
        control.push_back(pt);
    }
    return PolyMap::bernstein(k, d, degree, control);
}

void suite_simplicial(Rng&, Report& r) {
    const std::vector<std::pair<std::string, SetPtr>> spaces = {
        {"boundary-sphere:2", boundary_sphere(2)},
        {"boundary-sphere:3", boundary_sphere(3)},
        {"two-disk-sphere", two_disk_sphere()},
        {"simplex:3", standard_simplex(3)}};
    const std::vector<std::vector<int>> expected = {{1, 0, 1}, {1, 0, 0, 1}, {1, 0, 1}, {1, 0, 0, 0}};
    for (std::size_t s = 0; s < spaces.size(); ++s) {
        const auto& [name, x] = spaces[s];
        bool valid = true;
        try {
            x->validate();
        } catch (const Error&) {
            valid = false;
        }
        r.check("simplicial.identities " + name, valid);
        bool dd = true;
        for (int k = 1; k < x->max_dim(); ++k) dd = dd && (boundary_operator(*x, k) * boundary_operator(*x, k + 1)).is_zero();
        r.check("simplicial.dd " + name, dd);
        r.check("simplicial.betti " + name, betti_numbers(*x, x->max_dim()) == expected[s],
                join_ints(betti_numbers(*x, x->max_dim())));
    }
    const IntervalProduct prism = product_with_interval(two_disk_sphere());
    bool maps = true;
    try {
        prism.product->validate();
        prism.i0.validate();
        prism.i1.validate();
        prism.projection.validate();
        prism.to_interval.validate();
    } catch (const Error&) {
        maps = false;
    }
    r.check("simplicial.prism", maps && betti_numbers(*prism.product, 3) == std::vector<int>{1, 0, 1, 0});
    for (auto [n, k] : {std::pair{2, 1}, {3, 0}}) {
        const HornPresentation h = horn(n, k);
        r.check("simplicial.horn " + std::to_string(n) + "," + std::to_string(k),
                horn_inclusion(h).image({n - 1, 0}).nondegenerate());
    }
}

void suite_polyforms(Rng& rng, Report& r) {
    bool dd = true, leibniz = true, functorial = true, natural = true;
    for (int t = 0; t < 20; ++t) {
        const int p = t % 3, q = (t / 3) % 2;
        const PolyForm a = random_form(rng, 3, p, 2), b = random_form(rng, 3, q, 2);
        dd = dd && d_form(d_form(a)).is_zero();
        const PolyForm sign = p % 2 ? wedge(a, d_form(b)) * Scalar(-1) : wedge(a, d_form(b));
        leibniz = leibniz && d_form(wedge(a, b)) == wedge(d_form(a), b) + sign;
        const PolyMap f = random_polymap(rng, 2, 3, 2), g = random_polymap(rng, 1, 2, 1);
        functorial = functorial && pullback_form(pullback_form(a, f), g) == pullback_form(a, compose(f, g));
        natural = natural && pullback_form(d_form(a), f) == d_form(pullback_form(a, f));
    }
    r.check("polyforms.dd", dd);
    r.check("polyforms.leibniz", leibniz);
    r.check("polyforms.pullback-functorial", functorial);
    r.check("polyforms.pullback-d", natural);
    bool stokes = true;
    for (const auto& x : {boundary_sphere(2), two_disk_sphere()})
        for (int t = 0; t < 10; ++t) {
            const SimplicialForm w = random_simplicial_form(rng, x, t % 2, 1);
            stokes = stokes && integrate_to_cochain(global_d(w)) == coboundary(*x, integrate_to_cochain(w)) &&
                     check_simplicial_form(w).ok;
        }
    r.check("polyforms.stokes", stokes);
}

void suite_liealg(Rng& rng, Report& r) {
    const auto su2 = LieAlgebra::make("su2");
    for (const char* spec : {"symtrace:1", "symtrace:2", "symtrace:3", "chern:1", "chern:2"}) {
        const auto rho = parse_poly_spec(su2, spec);
        const PropertyCheck ad = check_ad_invariance(rho, rng, 200, 1e-9);
        const PropertyCheck sym = check_symmetry(rho, rng, 20);
        std::ostringstream s;
        s << "max defect " << ad.max_defect;
        r.check(std::string("liealg.ad-invariant ") + spec, ad.ok && sym.ok, s.str());
        const Poly diag = diagonal(rho);
        // every invariant linear form on su2 vanishes, so there is nothing to polarize
        const bool round_trip = diag.is_zero() ? rho.entries().empty() : diagonal(polarize(su2, diag)) == diag;
        r.check(std::string("liealg.polarize ") + spec, round_trip);
    }
    bool jacobi = true;
    for (const char* name : {"su2", "so3", "u2", "su3"}) {
        const auto g = LieAlgebra::make(name);
        for (int t = 0; t < 5; ++t) {
            Coords x, y, z;
            for (int a = 0; a < g->dim(); ++a)
                x.emplace_back(random_rational(rng)), y.emplace_back(random_rational(rng)), z.emplace_back(random_rational(rng));
            const Coords j1 = g->bracket(x, g->bracket(y, z)), j2 = g->bracket(y, g->bracket(z, x)),
                         j3 = g->bracket(z, g->bracket(x, y));
            for (int a = 0; a < g->dim(); ++a) jacobi = jacobi && (j1[a] + j2[a] + j3[a]).is_zero();
        }
    }
    r.check("liealg.jacobi", jacobi);
}

void suite_bundles(Rng& rng, Report& r) {
    const auto u1 = LieAlgebra::make("u1"), su2 = LieAlgebra::make("su2");
    bool clutch = true;
    for (int n = -2; n <= 2; ++n) {
        const Bundle p = clutch_bundle(n, Rational(1, 2));
        const GaugeCheck g = check_gauge(p, construct_connection(p), rng);
        clutch = clutch && validate_bundle(p, rng).ok && g.ok && g.exact;
    }
    r.check("bundles.clutch", clutch);
    bool gauge = true;
    for (const auto& x : {boundary_sphere(2), standard_simplex(3)}) {
        const Bundle p = random_gauge_bundle(rng, x, u1);
        gauge = gauge && validate_bundle(p, rng).ok && check_gauge(p, random_connection(rng, p), rng).ok;
        gauge = gauge && validate_bundle(random_gauge_bundle(rng, x, su2), rng).ok;
    }
    r.check("bundles.random-valid", gauge);
    Bundle bad = clutch_bundle(1);
    bad.set_transition({2, 0}, 1, GroupMap::exp_of(u1, {Poly::variable(1, 0)}));
    const BundleCheck located = validate_bundle(bad, rng);
    r.check("bundles.perturbation-detected", !located.ok && located.simplex == SimplexId{2, 0}, located.message);
    bool functorial = true;
    const SetPtr tri = standard_simplex(2), sphere = boundary_sphere(2);
    for (int t = 0; t < 5; ++t) {
        const SimplicialMap f = SimplicialMap::from_vertex_map(tri, sphere, {0, t % 2 ? 1 : 2, 3});
        const SimplicialMap g = SimplicialMap::from_vertex_map(sphere, tri, {0, 1, t % 3 == 0 ? 1 : 2, 2});
        const Bundle q = random_gauge_bundle(rng, tri, t % 2 ? su2 : u1);
        functorial = functorial && same_bundle(pullback_bundle(compose(g, f), q), pullback_bundle(f, pullback_bundle(g, q)), rng);
    }
    r.check("bundles.pullback-functorial", functorial);
    bool horns = true;
    for (auto [n, k] : {std::pair{2, 1}, {3, 0}}) {
        const HornPresentation h = horn(n, k);
        for (int t = 0; t < 3; ++t) {
            const Bundle data = random_gauge_bundle(rng, h.horn, u1, 1);
            const Bundle filler = horn_fill_bundle(h, data);
            horns = horns && restrict_to_horn(h, filler) == data && validate_bundle(filler, rng).ok;
        }
    }
    r.check("bundles.horn-fill", horns);
    const Bundle p = clutch_bundle(1);
    const Connection a1 = random_connection(rng, p), a2 = random_connection(rng, p);
    const Concordance c = concordance(p, a1, a2);
    r.check("bundles.concordance", pullback_connection(c.prism.i0, c.connection) == a1 &&
                                       pullback_connection(c.prism.i1, c.connection) == a2 &&
                                       check_gauge(c.bundle, c.connection, rng).ok);
}

void suite_chern_weil(Rng& rng, Report& r) {
    const auto u1 = LieAlgebra::make("u1"), su2 = LieAlgebra::make("su2");
    const auto c1 = chern_polynomial(u1, 1);
    const Chain z = fundamental_cycle(two_disk_sphere());
    bool integral = true;
    for (int n = -5; n <= 5; ++n) {
        const Bundle p = clutch_bundle(n);
        const Cochain alpha = cw_cochain(c1, construct_connection(p));
        integral = integral && pairing(alpha, z) == Scalar(n) && winding_oracle(p, z) == n &&
                   coboundary(*p.base(), alpha).is_zero();
    }
    r.check("chern_weil.clutch-integrality", integral);
    bool bianchi = true;
    for (int t = 0; t < 20; ++t) {
        LieForm a = LieForm::zero(su2, 2, 1);
        for (auto& c : a.c) c = random_form(rng, 2, 1, 2);
        bianchi = bianchi && bianchi_defect(a).is_zero();
    }
    r.check("chern_weil.bianchi", bianchi);
    bool independent = true;
    const Bundle p = clutch_bundle(1);
    for (int t = 0; t < 3; ++t)
        independent = independent && connection_independence(c1, random_connection(rng, p), random_connection(rng, p)).ok;
    r.check("chern_weil.connection-independence", independent);
    r.check("chern_weil.negative-control",
            !connection_independence(c1, construct_connection(clutch_bundle(2)), construct_connection(clutch_bundle(3))).ok);
    std::vector<std::vector<Simplex>> images(3);
    for (int v = 0; v < 3; ++v) images[0].push_back(Simplex::of({0, v}));
    for (int e = 0; e < 3; ++e) images[1].push_back(Simplex::of({1, e}));
    images[2] = {Simplex::of({2, 0})};
    const SimplicialMap north(standard_simplex(2), p.base(), images);
    r.check("chern_weil.naturality", naturality_check(north, c1, random_connection(rng, p)).ok);
    bool calibrated = true;
    Poly linear(3);
    for (int v = 0; v < 3; ++v) linear += Poly::variable(3, v) * Scalar(v + 1);
    const auto lin = polarize(su2, linear);
    const auto c2 = chern_polynomial(su2, 2);
    for (int t = 0; t < 5; ++t) {
        LieForm a = LieForm::zero(su2, 4, 1);
        for (auto& c : a.c) c = random_form(rng, 4, 1, 1);
        const LieForm f = curvature_form(a);
        calibrated = calibrated && calibration_constant(lin, f) == Scalar(1) &&
                     calibration_constant(c2, f) == Scalar(Rational(1, 6));
    }
    r.check("chern_weil.calibration", calibrated, "k=1: 1, k=2: 1/6");
    r.check("chern_weil.classical-agreement", classical_agreement(c1, random_connection(rng, clutch_bundle(2)), z).ok);
}

void cmd_verify(const JobConfig& c, Report& r) {
    static const std::vector<std::string> known = {"simplicial", "polyforms", "liealg", "bundles", "chern_weil", "reznikov"};
    if (c.suite != "all" && std::find(known.begin(), known.end(), c.suite) == known.end())
        throw UsageError("unknown suite '" + c.suite + "'");
    Rng rng(c.seed);
    auto want = [&](const std::string& s) { return c.suite == "all" || c.suite == s; };
    if (want("simplicial")) suite_simplicial(rng, r);
    if (want("polyforms")) suite_polyforms(rng, r);
    if (want("liealg")) suite_liealg(rng, r);
    if (want("bundles")) suite_bundles(rng, r);
    if (want("chern_weil")) suite_chern_weil(rng, r);
    if (want("reznikov")) {
        JobConfig rc = c;
        rc.order = 16;
        rc.probes = 20;
        cmd_reznikov(rc, r);
    }
}

}  // namespace

JobConfig parse_args(const std::vector<std::string>& args) {
    JobConfig c;
    CLI::App app{"simplicial Chern-Weil toolkit", "scw"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--mode", c.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--seed", c.seed, "seed for every random choice");
    app.add_option("--tol", c.tol, "tolerance of float-mode checks")->check(CLI::PositiveNumber);
    app.add_option("--out", c.out, "report path (generate: file prefix)");

    auto* betti = app.add_subcommand("betti", "rational Betti numbers");
    betti->add_option("--space", c.space)->required();
    auto* chern = app.add_subcommand("chern", "characteristic cochain of a bundle");
    chern->add_option("--bundle", c.bundle)->required();
    chern->add_option("--connection", c.connection);
    chern->add_option("--space", c.space);
    chern->add_option("--algebra", c.algebra);
    chern->add_option("--poly", c.poly);
    auto* verify = app.add_subcommand("verify", "invariant suites");
    verify->add_option("--suite", c.suite);
    auto* clutch = app.add_subcommand("clutch", "clutching integrality for one degree");
    clutch->add_option("--n", c.n);
    auto* hf = app.add_subcommand("horn-fill", "fill a horn of bundle data");
    hf->add_option("--n", c.n);
    hf->add_option("--k", c.k);
    hf->add_option("--algebra", c.algebra);
    hf->add_option("--bundle", c.bundle, "bundle file on the horn; random data when absent");
    auto* rz = app.add_subcommand("reznikov", "quadratic Reznikov pullback on su2");
    rz->add_option("--order", c.order);
    rz->add_option("--probes", c.probes);
    auto* gen = app.add_subcommand("generate", "write bundle and connection files");
    gen->add_option("--kind", c.kind)->required()->check(CLI::IsMember({"clutch", "trivial", "horn-demo"}));
    gen->add_option("--n", c.n);
    gen->add_option("--k", c.k);
    gen->add_option("--space", c.space);
    gen->add_option("--algebra", c.algebra);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    c.command = app.get_subcommands().front()->get_name();
    c.mode_given = app.count("--mode") > 0;
    if (c.command == "reznikov" && !c.mode_given) c.mode = "float";
    if (c.probes < 1) throw UsageError("--probes must be positive");
    return c;
}

RunReport run(const JobConfig& c) {
    Report r;
    r.line("run-report v1");
    r.line("command: " + echo(c));
    RunReport out;
    try {
        if (c.command == "reznikov" && c.mode == "exact")
            throw UsageError("reznikov quadrature is float-only; use --mode float");
        if (c.command == "betti") cmd_betti(c, r);
        else if (c.command == "chern") cmd_chern(c, r);
        else if (c.command == "verify") cmd_verify(c, r);
        else if (c.command == "clutch") cmd_clutch(c, r);
        else if (c.command == "horn-fill") cmd_horn_fill(c, r);
        else if (c.command == "reznikov") cmd_reznikov(c, r);
        else if (c.command == "generate") cmd_generate(c, r);
        else throw UsageError("unknown command '" + c.command + "'");
        out.exit_code = r.failed() ? 1 : 0;
        r.line(std::string("status: ") + (r.failed() ? "fail" : "pass"));
    } catch (const UsageError& e) {
        r.line(std::string("usage error: ") + e.what());
        r.line("status: usage");
        out.exit_code = 2;
    } catch (const FileParseError& e) {
        r.line(std::string("parse error: ") + e.what());
        r.line("status: usage");
        out.exit_code = 2;
    } catch (const ParseError& e) {
        r.line(std::string("parse error: ") + e.what());
        r.line("status: usage");
        out.exit_code = 2;
    } catch (const Error& e) {
        r.line(std::string("error: ") + e.what());
        r.line("status: fail");
        out.exit_code = 1;
    }
    out.text = r.text();
    return out;
}

int main(int argc, const char* const* argv) {
    JobConfig c;
    try {
        c = parse_args(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    const RunReport r = run(c);
    if (c.out.empty() || c.command == "generate") {
        std::cout << r.text;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write '" << c.out << "'\n";
            return 2;
        }
        f << r.text;
    }
    return r.exit_code;
}

}  // namespace scw::cli
