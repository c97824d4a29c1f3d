#include "scw/group_map.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <sstream>

#include "scw/error.hpp"

namespace scw {

namespace {

bool factor_is_zero(const GroupMap::Factor& f) {
    return std::all_of(f.begin(), f.end(), [](const Poly& p) { return p.is_zero(); });
}

Eigen::MatrixXcd factor_matrix(const LieAlgebra& g, const GroupMap::Factor& f, std::span<const double> point) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(g.matrix_size(), g.matrix_size());
    for (int a = 0; a < g.dim(); ++a)
        if (!f[a].is_zero()) m += g.basis()[a].to_eigen() * f[a].evaluate(point);
    return m;
}

}  // namespace

GroupMap GroupMap::identity(const AlgebraPtr& g, int dim) {
    GroupMap m;
    m.algebra_ = g;
    m.dim_ = dim;
    return m;
}

GroupMap GroupMap::exp_of(const AlgebraPtr& g, Factor log) {
    if (static_cast<int>(log.size()) != g->dim()) fail(ErrorKind::algebra_mismatch, "log does not fit " + g->name());
    GroupMap m = identity(g, log[0].nvars());
    for (const auto& p : log)
        if (p.nvars() != m.dim_) fail(ErrorKind::invalid_argument, "log coordinates live on different simplices");
    m.factors_.push_back(std::move(log));
    m.canonicalize();
    return m;
}

void GroupMap::canonicalize() {
    factors_.erase(std::remove_if(factors_.begin(), factors_.end(), factor_is_zero), factors_.end());
    if (algebra_->is_abelian() && factors_.size() > 1) {
        Factor sum = factors_[0];
        for (std::size_t j = 1; j < factors_.size(); ++j)
            for (std::size_t a = 0; a < sum.size(); ++a) sum[a] += factors_[j][a];
        factors_.clear();
        if (!factor_is_zero(sum)) factors_.push_back(std::move(sum));
    }
}

bool GroupMap::is_exact() const {
    for (const auto& f : factors_)
        for (const auto& p : f)
            if (!p.is_exact()) return false;
    return true;
}

GroupMap GroupMap::inverse() const {
    GroupMap r = identity(algebra_, dim_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        Factor f;
        for (const auto& p : *it) f.push_back(-p);
        r.factors_.push_back(std::move(f));
    }
    return r;
}

GroupMap operator*(const GroupMap& a, const GroupMap& b) {
    if (a.algebra_->name() != b.algebra_->name()) fail(ErrorKind::algebra_mismatch, "product of maps into different groups");
    if (a.dim_ != b.dim_) fail(ErrorKind::invalid_argument, "product of maps on different simplices");
    GroupMap r = a;
    r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
    r.canonicalize();
    return r;
}

GroupMap GroupMap::pullback(const PolyMap& phi) const {
    if (phi.target_dim() != dim_) fail(ErrorKind::invalid_argument, "pullback of a group map along a mismatched map");
    GroupMap r = identity(algebra_, phi.source_dim());
    for (const auto& f : factors_) {
        Factor g;
        for (const auto& p : f) g.push_back(scw::pullback(p, phi));
        r.factors_.push_back(std::move(g));
    }
    r.canonicalize();
    return r;
}

GroupMap GroupMap::pullback(const OrdinalMap& op) const {
    if (op == identity_map(dim_)) return *this;
    return pullback(PolyMap::from_ordinal(op, dim_));
}

Eigen::MatrixXcd GroupMap::evaluate(std::span<const double> point) const {
    const int n = algebra_->matrix_size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    for (const auto& f : factors_) m = m * factor_matrix(*algebra_, f, point).exp();
    return m;
}

std::vector<Coords> GroupMap::log_derivative(std::span<const double> point) const {
    const auto& g = *algebra_;
    const int n = g.matrix_size();
    std::vector<Coords> out(dim_, Coords(g.dim(), Scalar::from_double(0.0)));
    for (int v = 0; v < dim_; ++v) {
        // phi^{-1} d phi = sum_j Ad_{(g_{j+1} .. g_r)^{-1}} (g_j^{-1} d g_j)
        Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(n, n);
        for (const auto& f : factors_) {
            const Eigen::MatrixXcd x = factor_matrix(g, f, point);
            Factor df;
            for (const auto& p : f) df.push_back(p.derivative(v));
            Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
            block.topLeftCorner(n, n) = x;
            block.bottomRightCorner(n, n) = x;
            block.topRightCorner(n, n) = factor_matrix(g, df, point);
            const Eigen::MatrixXcd e = block.exp();
            const Eigen::MatrixXcd gj = e.topLeftCorner(n, n);
            const Eigen::MatrixXcd gj_inv = gj.inverse();
            total = gj_inv * total * gj + gj_inv * e.topRightCorner(n, n);
        }
        out[v] = g.from_eigen(total);
    }
    return out;
}

std::optional<LieForm> GroupMap::exact_log_derivative() const {
    LieForm r = LieForm::zero(algebra_, dim_, 1);
    if (factors_.empty()) return r;
    if (!algebra_->is_abelian()) {
        for (const auto& f : factors_)
            for (const auto& p : f)
                if (!p.is_constant()) return std::nullopt;
        return r;
    }
    for (const auto& f : factors_)
        for (std::size_t a = 0; a < f.size(); ++a) r.c[a] += d_form(PolyForm::function(f[a]));
    return r;
}

bool GroupMap::same_function(const GroupMap& o, Rng& rng, double tol, int samples) const {
    if (algebra_->name() != o.algebra_->name() || dim_ != o.dim_) return false;
    if (*this == o) return true;
    if (algebra_->name() == "u1" && is_exact() && o.is_exact()) {
        Poly diff = Poly(dim_);
        for (const auto& f : factors_) diff += f[0];
        for (const auto& f : o.factors_) diff -= f[0];
        if (!diff.is_constant()) return false;
        const Scalar c = diff.constant_term() * Scalar::tau(-1);
        const auto q = c.as_rational();
        return q && q->get_den() == 1;
    }
    for (int s = 0; s < samples; ++s) {
        const auto p = random_simplex_point(rng, dim_);
        if ((evaluate(p) - o.evaluate(p)).cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

std::string GroupMap::to_string() const {
    if (factors_.empty()) return "id";
    std::ostringstream out;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        out << (j ? " * " : "") << "exp([";
        for (std::size_t a = 0; a < factors_[j].size(); ++a) out << (a ? "; " : "") << factors_[j][a].to_string();
        out << "])";
    }
    return out.str();
}

GroupMap GroupMap::parse(std::string_view text, const AlgebraPtr& g, int dim) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    GroupMap m = identity(g, dim);
    if (text == "id") return m;
    while (!text.empty()) {
        if (text.substr(0, 5) != "exp([") throw ParseError(0, "expected 'exp([' in group map");
        const auto close = text.find("])");
        if (close == std::string_view::npos) throw ParseError(0, "unterminated exp([...])");
        std::string_view body = text.substr(5, close - 5);
        Factor f;
        while (true) {
            const auto semi = body.find(';');
            f.push_back(Poly::parse(trim(body.substr(0, semi)), dim));
            if (semi == std::string_view::npos) break;
            body.remove_prefix(semi + 1);
        }
        if (static_cast<int>(f.size()) != g->dim())
            throw ParseError(0, "exp factor has " + std::to_string(f.size()) + " coordinates, " + g->name() + " needs " +
                                    std::to_string(g->dim()));
        m.factors_.push_back(std::move(f));
        text = trim(text.substr(close + 2));
        if (text.empty()) break;
        if (text.front() != '*') throw ParseError(0, "expected '*' between exp factors");
        text = trim(text.substr(1));
    }
    m.canonicalize();
    return m;
}

std::vector<double> random_simplex_point(Rng& rng, int d) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(d + 1);
    double total = 0;
    for (auto& x : w) total += x = e(rng);
    std::vector<double> p(d);
    for (int j = 0; j < d; ++j) p[j] = w[j + 1] / total;
    return p;
}

}  // namespace scw
