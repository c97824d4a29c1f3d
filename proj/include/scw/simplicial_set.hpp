#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scw {

struct SimplexId {
    int dim = 0;
    int index = 0;
    auto operator<=>(const SimplexId&) const = default;
};

/// Vertex images of an order-preserving map [p] -> [n].
using OrdinalMap = std::vector<int>;

OrdinalMap identity_map(int n);
/// The coface [n-1] -> [n] skipping i.
OrdinalMap coface(int n, int i);
/// The codegeneracy [n+1] -> [n] hitting j twice.
OrdinalMap codegeneracy(int n, int j);
/// (outer o inner)(s) = outer[inner[s]].
OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner);
bool is_surjective_onto(const OrdinalMap& m, int n);

/// A (possibly degenerate) simplex: the nondegenerate `base` precomposed with
/// the surjection `collapse` : [dim] -> [base.dim].
struct Simplex {
    SimplexId base;
    OrdinalMap collapse;

    int dim() const { return static_cast<int>(collapse.size()) - 1; }
    bool nondegenerate() const { return dim() == base.dim; }
    bool operator==(const Simplex&) const = default;

    static Simplex of(SimplexId id) { return {id, identity_map(id.dim)}; }
};

/// Normalized degeneracy word s_{j1} s_{j2} ... (j1 > j2 > ...) of a surjection.
std::vector<int> degeneracy_word(const OrdinalMap& collapse);
OrdinalMap surjection_from_word(const std::vector<int>& word, int target_dim);

/// Finite simplicial set presented by its nondegenerate simplices and their
/// faces. Degenerate simplices exist formally as `Simplex` values.
class SimplicialSet {
public:
    SimplicialSet() = default;
    explicit SimplicialSet(std::vector<int> counts);

    /// Ordered simplicial complex on the given vertex lists (closed under faces
    /// automatically). Cells in each dimension are ordered lexicographically.
    static SimplicialSet from_complex(std::vector<std::vector<int>> simplices);

    int max_dim() const { return static_cast<int>(counts_.size()) - 1; }
    int count(int dim) const { return dim >= 0 && dim <= max_dim() ? counts_[dim] : 0; }
    const std::vector<int>& counts() const { return counts_; }
    bool contains(SimplexId id) const { return id.index >= 0 && id.index < count(id.dim); }

    const Simplex& face(SimplexId id, int i) const;
    void set_face(SimplexId id, int i, Simplex target);

    /// x o op for an order-preserving op : [p] -> [x.dim()], normalized.
    Simplex apply(const OrdinalMap& op, const Simplex& x) const;
    Simplex face_of(const Simplex& x, int i) const { return apply(coface(x.dim(), i), x); }

    /// Vertex labels when built from a complex, empty otherwise.
    const std::vector<int>& vertices_of(SimplexId id) const;
    bool has_vertex_labels() const { return !labels_.empty(); }
    /// Lookup by vertex list for complex-built sets.
    std::optional<SimplexId> find(const std::vector<int>& vertices) const;

    /// Throws Error(invariant_violation) naming the first failing identity.
    void validate() const;

    std::string serialize() const;
    static SimplicialSet parse(std::string_view text);

    bool operator==(const SimplicialSet& o) const { return counts_ == o.counts_ && faces_ == o.faces_; }

private:
    std::vector<int> counts_;
    std::vector<std::vector<std::vector<Simplex>>> faces_;  // [dim][index][i]
    std::vector<std::vector<std::vector<int>>> labels_;     // [dim][index] -> vertices
};

using SetPtr = std::shared_ptr<const SimplicialSet>;

SetPtr standard_simplex(int n);
/// Boundary of the (n+1)-simplex, a model of the n-sphere.
SetPtr boundary_sphere(int n);
/// Two 2-cells N (index 0) and S (index 1) glued along their common boundary.
SetPtr two_disk_sphere();

struct HornPresentation {
    int n = 0;
    int k = 0;
    SetPtr horn;
    SetPtr simplex;
    /// Index in `simplex` of each cell of `horn`, per dimension.
    std::vector<std::vector<int>> inclusion;
};

HornPresentation horn(int n, int k);

}  // namespace scw
