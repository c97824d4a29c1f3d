#pragma once

#include <string>
#include <vector>

#include "scw/bundle.hpp"
#include "scw/lie_form.hpp"
#include "scw/product.hpp"

namespace scw {

/// One Lie-algebra-valued 1-form per nondegenerate simplex, in that simplex's chart.
class Connection {
public:
    Connection() = default;
    /// The zero connection.
    Connection(SetPtr base, AlgebraPtr algebra);

    const SetPtr& base() const { return base_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    const LieForm& at(SimplexId id) const { return forms_.at(id.dim).at(id.index); }
    void set(SimplexId id, LieForm a);
    /// The form on a possibly degenerate simplex: pullback along its collapse.
    LieForm on(const Simplex& x) const;

    bool is_exact() const;
    bool operator==(const Connection& o) const { return forms_ == o.forms_; }
    bool near(const Connection& o, double tol) const;

private:
    SetPtr base_;
    AlgebraPtr algebra_;
    std::vector<std::vector<LieForm>> forms_;
};

struct GaugeCheck {
    bool ok = true;
    bool exact = true;  ///< every face was compared symbolically with exact coefficients
    SimplexId simplex;
    int face = -1;
    double max_defect = 0.0;
    std::string message;
};

/// A_face = Ad_{phi^{-1}}(delta_i^* A_S) + phi^{-1} d phi on every face. Compared
/// symbolically when phi^{-1} d phi has a closed form and Ad_phi is trivial
/// or constant; otherwise at `samples` random points.
GaugeCheck check_gauge(const Bundle& p, const Connection& a, Rng& rng, double tol = 1e-9, int samples = 100);

/// Skeletal construction: each cell gets the Whitney extension of the data its
/// faces prescribe. Requires transitions with a closed-form phi^{-1} d phi and
/// trivial Ad action (abelian group or identity maps).
Connection construct_connection(const Bundle& p);
/// As construct_connection plus a random term on every cell vanishing on its boundary.
Connection random_connection(Rng& rng, const Bundle& p, int max_degree = 1);

/// Restriction of one Lie-valued 1-form on the ambient simplex to every cell of
/// a complex-built base; needs a bundle whose transitions are all identities.
Connection induced_connection(const Bundle& p, const LieForm& global);

Connection pullback_connection(const SimplicialMap& f, const Connection& a);
/// A'_S = Ad_{exp(logs_S)} A_S, matching gauge_change on the bundle.
Connection gauge_change(const Connection& a, const std::vector<std::vector<Coords>>& logs);

struct Concordance {
    IntervalProduct prism;
    Bundle bundle;  ///< pullback along the projection
    Connection connection;
};

/// (1 - t) pr^* A_1 + t pr^* A_2 on the prism over the base.
Concordance concordance(const Bundle& p, const Connection& a1, const Connection& a2);

}  // namespace scw
