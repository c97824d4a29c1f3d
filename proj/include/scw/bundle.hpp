#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scw/chains.hpp"
#include "scw/group_map.hpp"
#include "scw/simplicial_map.hpp"
#include "scw/simplicial_set.hpp"

namespace scw {

/// Simplicial G-bundle in trivialized charts: every nondegenerate simplex
/// carries Delta^d x G, and face i of a d-simplex carries a transition
/// phi : Delta^{d-1} -> G taking the face's chart into the simplex's chart.
class Bundle {
public:
    Bundle() = default;
    /// All transitions identity.
    Bundle(SetPtr base, AlgebraPtr algebra);

    const SetPtr& base() const { return base_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    const GroupMap& transition(SimplexId sigma, int i) const { return transitions_.at(sigma.dim).at(sigma.index).at(i); }
    void set_transition(SimplexId sigma, int i, GroupMap phi);

    /// Structure map of the chart of x o theta into theta^*(chart of x), on
    /// Delta^p for theta : [p] -> [x.dim()]. Degeneracies act trivially.
    GroupMap structure_map(const Simplex& x, const OrdinalMap& theta) const;

    bool operator==(const Bundle& o) const;

private:
    SetPtr base_;
    AlgebraPtr algebra_;
    std::vector<std::vector<std::vector<GroupMap>>> transitions_;  // [dim][index][face]
};

struct BundleCheck {
    bool ok = true;
    SimplexId simplex;
    int i = -1;  ///< the failing pair of faces i < j
    int j = -1;
    std::string message;
};

/// Cocycle condition for every pair of faces i < j of every simplex:
/// (delta_i^* phi_j) Phi^{d_j}_{delta^i} = (delta_{j-1}^* phi_i) Phi^{d_i}_{delta^{j-1}}.
/// Exact for u1 with exact logs, sampled otherwise.
BundleCheck validate_bundle(const Bundle& p, Rng& rng, double tol = 1e-9);

/// Data equality up to function equality of transitions (exact for u1).
bool same_bundle(const Bundle& a, const Bundle& b, Rng& rng, double tol = 1e-9);

Bundle trivial_bundle(const SetPtr& base, const AlgebraPtr& g);
Bundle pullback_bundle(const SimplicialMap& f, const Bundle& p);

/// phi_{S,i} = (delta_i^* c_S) c_face^{-1} for random polynomial-log gauges c.
/// For u1 each transition also picks up a random multiple of tau in its log,
/// so the cocycle holds only modulo the kernel of exp.
Bundle random_gauge_bundle(Rng& rng, const SetPtr& base, const AlgebraPtr& g, int max_degree = 2);

/// Constant gauge change c_S on every chart: phi'_{S,i} = c_S phi_{S,i} c_face^{-1}.
/// `logs` holds one algebra element per nondegenerate simplex, [dim][index].
Bundle gauge_change(const Bundle& p, const std::vector<std::vector<Coords>>& logs);

/// U(1) bundle over two_disk_sphere with Chern number n: the edge 01 of the
/// southern cell is glued by exp(tau q) with q(0) = 0 and q(1) = n, plus
/// `wobble` t (1 - t).
Bundle clutch_bundle(int n, const Rational& wobble = 0);

/// Discrete winding of a U(1) bundle over a 2-cycle z:
/// -sum_c z_c sum_i (-1)^i (q_{c,i}(1) - q_{c,i}(0)), where tau q_{c,i} is the
/// log of the transition on face i of cell c. Requires exact logs.
Rational winding_oracle(const Bundle& p, const Chain& z);

/// Bundle on the simplex extending data on the horn; the missing face's
/// transition into the top cell is the identity.
Bundle horn_fill_bundle(const HornPresentation& h, const Bundle& on_horn);
/// Restriction along the horn inclusion.
Bundle restrict_to_horn(const HornPresentation& h, const Bundle& on_simplex);
SimplicialMap horn_inclusion(const HornPresentation& h);

}  // namespace scw
