#pragma once

#include <vector>

#include "scw/simplicial_set.hpp"

namespace scw {

/// A simplicial map given on nondegenerate generators; images may be degenerate.
class SimplicialMap {
public:
    SimplicialMap() = default;
    SimplicialMap(SetPtr source, SetPtr target, std::vector<std::vector<Simplex>> images);

    static SimplicialMap identity(SetPtr x);
    /// For complex-built sets: send vertex v to vertex_image[v]; must be
    /// order-preserving on every simplex.
    static SimplicialMap from_vertex_map(SetPtr source, SetPtr target, const std::vector<int>& vertex_image);

    const SetPtr& source() const { return source_; }
    const SetPtr& target() const { return target_; }
    const Simplex& image(SimplexId id) const { return images_.at(id.dim).at(id.index); }
    Simplex apply(const Simplex& x) const;

    /// Throws Error(invariant_violation) unless f d_i = d_i f on every generator.
    void validate() const;

    bool operator==(const SimplicialMap& o) const { return images_ == o.images_; }

private:
    SetPtr source_;
    SetPtr target_;
    std::vector<std::vector<Simplex>> images_;
};

/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

}  // namespace scw
