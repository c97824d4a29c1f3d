// One line per acceptance criterion; exits nonzero when any criterion fails.

#include <Eigen/Dense>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "scw/chern_weil.hpp"
#include "scw/cli.hpp"
#include "scw/error.hpp"

using namespace scw;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!out.ok) ++failures;
    std::printf("criterion %2d %s: %s (%s; %.3f s)\n", number, out.ok ? "PASS" : "FAIL", title, out.detail.c_str(), secs);
    std::fflush(stdout);
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

const AlgebraPtr& u1() {
    static const AlgebraPtr g = LieAlgebra::make("u1");
    return g;
}

const AlgebraPtr& su2() {
    static const AlgebraPtr g = LieAlgebra::make("su2");
    return g;
}

LieForm random_lie_form(Rng& rng, const AlgebraPtr& g, int dim, int degree, int poly_degree) {
    LieForm a = LieForm::zero(g, dim, degree);
    for (auto& c : a.c) c = random_form(rng, dim, degree, poly_degree);
    return a;
}

PolyMap random_polymap(Rng& rng, int k, int d, int degree) {
    std::uniform_int_distribution<int> w(0, 3);
    std::vector<std::vector<Rational>> control;
    for (std::size_t j = 0; j < bernstein_indices(k, degree).size(); ++j) {
        std::vector<int> bary(d + 1);
        int total = 0;
        for (auto& b : bary) total += b = w(rng);
        if (total == 0) total = bary[0] = 1;
        std::vector<Rational> pt;
        for (int v = 1; v <= d; ++v) {
            pt.emplace_back(bary[v], total);
            pt.back().canonicalize();
        }
        control.push_back(pt);
    }
    return PolyMap::bernstein(k, d, degree, control);
}

// Ranks from a dense float LU of the normalized boundary matrix, built straight from the face table.
std::vector<int> betti_by_float_lu(const SimplicialSet& x) {
    const int top = x.max_dim();
    std::vector<int> rank(top + 2, 0);
    for (int k = 1; k <= top; ++k) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(x.count(k - 1), x.count(k));
        for (int j = 0; j < x.count(k); ++j)
            for (int i = 0; i <= k; ++i) {
                const Simplex& f = x.face({k, j}, i);
                if (f.nondegenerate()) m(f.base.index, j) += i % 2 ? -1.0 : 1.0;
            }
        rank[k] = m.size() ? static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(m).rank()) : 0;
    }
    std::vector<int> betti;
    for (int k = 0; k <= top; ++k) betti.push_back(x.count(k) - rank[k] - rank[k + 1]);
    return betti;
}

std::string ints(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

bool same_tensor(const InvariantPolynomial& a, const InvariantPolynomial& b) {
    if (a.entries().size() != b.entries().size()) return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (a.entries()[i].index != b.entries()[i].index || !(a.entries()[i].value == b.entries()[i].value)) return false;
    return true;
}

Chain fundamental(const SetPtr& x) { return homology_basis(*x, 2).at(0); }

SimplicialMap north_inclusion(const SetPtr& target) {
    std::vector<std::vector<Simplex>> images(3);
    for (int v = 0; v < 3; ++v) images[0].push_back(Simplex::of({0, v}));
    for (int e = 0; e < 3; ++e) images[1].push_back(Simplex::of({1, e}));
    images[2] = {Simplex::of({2, 0})};
    return SimplicialMap(standard_simplex(2), target, images);
}

}  // namespace

int main() {
    criterion(1, "clutching integrality", [] {
        Outcome out;
        double slowest = 0.0;
        for (int n = -5; n <= 5; ++n) {
            const auto start = Clock::now();
            const cli::RunReport r = cli::run(cli::parse_args({"chern", "--bundle", "clutch" + std::to_string(n), "--poly", "chern:1"}));
            const Bundle p = clutch_bundle(n);
            const Chain z = fundamental(p.base());
            const Scalar value = pairing(cw_cochain(chern_polynomial(u1(), 1), construct_connection(p)), z);
            const bool agree = r.exit_code == 0 && r.text.find("pairings=[" + std::to_string(n) + "]") != std::string::npos &&
                               value == Scalar(n) && winding_oracle(p, z) == n;
            const double t = seconds_since(start);
            slowest = std::max(slowest, t);
            if (!agree || t >= 1.0) {
                out.ok = false;
                out.detail += "n=" + std::to_string(n) + " got " + value.to_string() + "; ";
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "n in -5..5, slowest %.3f s < 1 s", slowest);
        out.detail += buf;
        return out;
    });

    criterion(2, "integration commutes with d", [] {
        Rng rng(2002);
        int checked = 0, bad = 0;
        const auto start = Clock::now();
        for (const SetPtr& x : {boundary_sphere(2), two_disk_sphere()})
            for (int t = 0; t < 50; ++t) {
                const SimplicialForm w = random_simplicial_form(rng, x, t % 3, 1 + t % 3);
                ++checked;
                if (!(integrate_to_cochain(global_d(w)) == coboundary(*x, integrate_to_cochain(w)))) ++bad;
            }
        const double secs = seconds_since(start);
        return Outcome{bad == 0 && secs < 10.0,
                       std::to_string(checked - bad) + "/" + std::to_string(checked) + " forms exact, total < 10 s"};
    });

    criterion(3, "connection independence", [] {
        Rng rng(3003);
        int good = 0;
        const auto start = Clock::now();
        const Bundle clutch = clutch_bundle(1);
        const Bundle trivial = trivial_bundle(boundary_sphere(2), su2());
        const auto c1 = chern_polynomial(u1(), 1), s1 = chern_polynomial(su2(), 1);
        for (int t = 0; t < 20; ++t)
            for (const auto& [p, rho] : {std::pair{&clutch, &c1}, std::pair{&trivial, &s1}}) {
                const Connection a1 = random_connection(rng, *p, 2), a2 = random_connection(rng, *p, 2);
                if (a1 == a2) continue;
                const IndependenceResult r = connection_independence(*rho, a1, a2);
                if (r.ok && r.witness && coboundary(*p->base(), *r.witness) == r.difference) ++good;
            }
        const double secs = seconds_since(start);
        return Outcome{good == 40 && secs < 30.0, std::to_string(good) + "/40 distinct pairs with witness, total < 30 s"};
    });

    criterion(4, "naturality", [] {
        Rng rng(4004);
        const auto rho = chern_polynomial(u1(), 1);
        const Bundle p = clutch_bundle(2);
        const NaturalityResult inc = naturality_check(north_inclusion(p.base()), rho, random_connection(rng, p));
        const SimplicialMap collapse =
            SimplicialMap::from_vertex_map(boundary_sphere(2), standard_simplex(2), {0, 1, 1, 2});
        const Bundle q = random_gauge_bundle(rng, standard_simplex(2), u1());
        const NaturalityResult col = naturality_check(collapse, rho, random_connection(rng, q));
        const bool exact = inc.ok && col.ok && inc.pulled == inc.recomputed && col.pulled == col.recomputed &&
                           inc.pulled.is_exact() && col.pulled.is_exact();
        return Outcome{exact, "inclusion and collapse, exact cochain equality"};
    });

    criterion(5, "horn filling", [] {
        Rng rng(5005);
        int good = 0;
        for (auto [n, k] : {std::pair{2, 1}, {3, 0}}) {
            const HornPresentation h = horn(n, k);
            for (int t = 0; t < 20; ++t) {
                const Bundle data = random_gauge_bundle(rng, h.horn, u1(), 2);
                const Bundle filler = horn_fill_bundle(h, data);
                if (restrict_to_horn(h, filler) == data && validate_bundle(filler, rng).ok) ++good;
            }
        }
        return Outcome{good == 40, std::to_string(good) + "/40 fillers restrict and validate"};
    });

    criterion(6, "exterior calculus", [] {
        Rng rng(6006);
        int dd = 0, leibniz = 0, functorial = 0, bianchi = 0;
        for (int t = 0; t < 100; ++t) {
            const int p = t % 3, q = (t / 3) % 3;
            const PolyForm a = random_form(rng, 4, p, 3), b = random_form(rng, 4, q, 2);
            dd += d_form(d_form(a)).is_zero();
            const PolyForm tail = p % 2 ? wedge(a, d_form(b)) * Scalar(-1) : wedge(a, d_form(b));
            leibniz += d_form(wedge(a, b)) == wedge(d_form(a), b) + tail;
            const PolyForm w = random_form(rng, 3, t % 3, 2);
            const PolyMap f = random_polymap(rng, 2, 3, 1 + t % 2), g = random_polymap(rng, 2, 2, 1);
            functorial += pullback_form(pullback_form(w, f), g) == pullback_form(w, compose(f, g));
            bianchi += bianchi_defect(random_lie_form(rng, t % 2 ? su2() : u1(), 3, 1, 2)).is_zero();
        }
        std::ostringstream s;
        s << "d^2 " << dd << "/100, Leibniz " << leibniz << "/100, pullback " << functorial << "/100, Bianchi "
          << bianchi << "/100, exact";
        return Outcome{dd == 100 && leibniz == 100 && functorial == 100 && bianchi == 100, s.str()};
    });

    criterion(7, "homology", [] {
        Outcome out;
        const std::vector<std::tuple<std::string, SetPtr, std::vector<int>>> cases = {
            {"bdry D3", boundary_sphere(2), {1, 0, 1}},
            {"bdry D4", boundary_sphere(3), {1, 0, 0, 1}},
            {"two_disk_sphere", two_disk_sphere(), {1, 0, 1}}};
        for (const auto& [name, x, want] : cases) {
            const auto exact = betti_numbers(*x, x->max_dim());
            const auto lu = betti_by_float_lu(*x);
            out.ok = out.ok && exact == want && lu == want;
            out.detail += name + " " + ints(exact) + " ";
        }
        out.detail += "oracle agrees";
        return out;
    });

    criterion(8, "invariant polynomials", [] {
        Rng rng(8008);
        Outcome out;
        double worst = 0.0;
        for (const char* spec : {"symtrace:1", "symtrace:2", "symtrace:3", "chern:1", "chern:2"}) {
            const auto rho = parse_poly_spec(su2(), spec);
            const PropertyCheck ad = check_ad_invariance(rho, rng, 1000, 1e-9);
            worst = std::max(worst, ad.max_defect);
            const Poly diag = diagonal(rho);
            const bool round_trip = diag.is_zero() ? rho.entries().empty()
                                                   : same_tensor(polarize(su2(), diag), rho) &&
                                                         diagonal(polarize(su2(), diag)) == diag;
            if (!ad.ok || !round_trip) {
                out.ok = false;
                out.detail += std::string(spec) + " failed; ";
            }
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "1000 probes each, max defect %.2e <= 1e-9, round trip exact", worst);
        out.detail += buf;
        return out;
    });

    criterion(9, "Reznikov pullback", [] {
        Rng rng(9009);
        const auto start = Clock::now();
        const auto r1 = reznikov_pullback(su2(), 1, 32);
        const auto r2 = reznikov_pullback(su2(), 2, 32);
        std::normal_distribution<double> nd;
        double worst = 0.0, lo = INFINITY, hi = -INFINITY;
        for (int t = 0; t < 100; ++t) {
            Coords xi;
            for (int a = 0; a < 3; ++a) xi.push_back(Scalar::from_double(nd(rng)));
            worst = std::max(worst, std::abs(r1.evaluate({xi}).to_complex()));
            const Eigen::MatrixXcd m = su2()->to_eigen(xi);
            const double lambda = r2.evaluate({xi, xi}).real() / (-2.0 * (m * m).trace()).real();
            lo = std::min(lo, lambda);
            hi = std::max(hi, lambda);
        }
        const double spread = (hi - lo) / std::abs(hi);
        const double secs = seconds_since(start);
        char buf[128];
        std::snprintf(buf, sizeof buf, "|reznikov:1| max %.2e < 1e-10, lambda %.12f spread %.2e < 1e-6, order 32", worst,
                      hi, spread);
        return Outcome{worst < 1e-10 && spread < 1e-6 && secs < 30.0, buf};
    });

    criterion(10, "calibration stability", [] {
        Rng rng(1010);
        Poly linear(3);
        for (int v = 0; v < 3; ++v) linear += Poly::variable(3, v) * Scalar(random_rational(rng));
        const auto lin = polarize(su2(), linear);
        const auto c2 = chern_polynomial(su2(), 2);
        std::optional<Scalar> k1, k2;
        bool stable = true;
        for (int t = 0; t < 20; ++t) {
            const LieForm f = curvature_form(random_lie_form(rng, su2(), 4, 1, 1));
            const auto a = calibration_constant(lin, f), b = calibration_constant(c2, f);
            if (!a || !b || !a->is_exact() || !b->is_exact()) {
                stable = false;
                continue;
            }
            if (!k1) k1 = a, k2 = b;
            stable = stable && *a == *k1 && *b == *k2;
        }
        return Outcome{stable, "20 inputs, k=1 constant " + (k1 ? k1->to_string() : "?") + ", k=2 constant " +
                                   (k2 ? k2->to_string() : "?")};
    });

    std::printf("acceptance: %d of 10 criteria failed\n", failures);
    return failures ? 1 : 0;
}
