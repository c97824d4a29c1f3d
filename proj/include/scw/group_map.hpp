#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scw/lie_form.hpp"
#include "scw/sampling.hpp"

namespace scw {

/// Map Delta^d -> G written as an ordered product exp(p_1) * .. * exp(p_r),
/// each p_j a Lie-algebra-valued polynomial (one Poly per basis coordinate).
///
/// Stored canonically: zero factors are dropped and, for an abelian algebra,
/// all factors are merged into one. The empty product is the identity.
class GroupMap {
public:
    using Factor = std::vector<Poly>;

    GroupMap() = default;
    static GroupMap identity(const AlgebraPtr& g, int dim);
    static GroupMap exp_of(const AlgebraPtr& g, Factor log);

    const AlgebraPtr& algebra() const { return algebra_; }
    int dim() const { return dim_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool is_identity() const { return factors_.empty(); }
    bool is_exact() const;

    GroupMap inverse() const;
    friend GroupMap operator*(const GroupMap& a, const GroupMap& b);

    GroupMap pullback(const PolyMap& phi) const;
    GroupMap pullback(const OrdinalMap& op) const;

    Eigen::MatrixXcd evaluate(std::span<const double> point) const;
    /// phi^{-1} d phi at a point: entry v holds the coordinates of phi^{-1} d_v phi.
    std::vector<Coords> log_derivative(std::span<const double> point) const;
    /// phi^{-1} d phi as a symbolic form when the algebra is abelian (the sum of
    /// d log) or every factor is constant; nullopt otherwise.
    std::optional<LieForm> exact_log_derivative() const;

    /// Equality as functions: for u1 with exact logs the log difference must be
    /// a constant in tau*Z; otherwise compared at seeded sample points.
    bool same_function(const GroupMap& o, Rng& rng, double tol, int samples = 16) const;

    bool operator==(const GroupMap& o) const { return dim_ == o.dim_ && factors_ == o.factors_; }

    /// `id` or `exp([p_1; ..; p_n]) * exp(...)`.
    std::string to_string() const;
    static GroupMap parse(std::string_view text, const AlgebraPtr& g, int dim);

private:
    void canonicalize();

    AlgebraPtr algebra_;
    int dim_ = 0;
    std::vector<Factor> factors_;
};

/// Uniform random point of Delta^d.
std::vector<double> random_simplex_point(Rng& rng, int d);

}  // namespace scw
