#include "scw/simplicial_map.hpp"

#include <algorithm>

#include "scw/error.hpp"

namespace scw {

SimplicialMap::SimplicialMap(SetPtr source, SetPtr target, std::vector<std::vector<Simplex>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_->max_dim() + 1)
        fail(ErrorKind::invalid_argument, "simplicial map needs images for every dimension");
    for (int d = 0; d <= source_->max_dim(); ++d) {
        if (static_cast<int>(images_[d].size()) != source_->count(d))
            fail(ErrorKind::invalid_argument, "simplicial map needs one image per generator");
        for (const auto& s : images_[d])
            if (s.dim() != d || !target_->contains(s.base) || !is_surjective_onto(s.collapse, s.base.dim))
                fail(ErrorKind::invalid_argument, "simplicial map image has the wrong shape");
    }
}

SimplicialMap SimplicialMap::identity(SetPtr x) {
    std::vector<std::vector<Simplex>> images(x->max_dim() + 1);
    for (int d = 0; d <= x->max_dim(); ++d)
        for (int i = 0; i < x->count(d); ++i) images[d].push_back(Simplex::of({d, i}));
    return SimplicialMap(x, x, std::move(images));
}

SimplicialMap SimplicialMap::from_vertex_map(SetPtr source, SetPtr target, const std::vector<int>& vertex_image) {
    if (!source->has_vertex_labels() || !target->has_vertex_labels())
        fail(ErrorKind::invalid_argument, "vertex maps need complex-built simplicial sets");
    std::vector<std::vector<Simplex>> images(source->max_dim() + 1);
    for (int d = 0; d <= source->max_dim(); ++d) {
        for (int i = 0; i < source->count(d); ++i) {
            std::vector<int> mapped;
            for (int v : source->vertices_of({d, i})) mapped.push_back(vertex_image.at(v));
            if (!std::is_sorted(mapped.begin(), mapped.end()))
                fail(ErrorKind::invalid_argument, "vertex map is not order-preserving on a simplex");
            std::vector<int> distinct = mapped;
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            auto target_id = target->find(distinct);
            if (!target_id) fail(ErrorKind::invalid_argument, "vertex map image is not a simplex of the target");
            OrdinalMap collapse;
            for (int v : mapped)
                collapse.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), v) -
                                                    distinct.begin()));
            images[d].push_back({*target_id, collapse});
        }
    }
    return SimplicialMap(std::move(source), std::move(target), std::move(images));
}

Simplex SimplicialMap::apply(const Simplex& x) const {
    const Simplex& fy = image(x.base);
    return {fy.base, scw::compose(fy.collapse, x.collapse)};
}

void SimplicialMap::validate() const {
    for (int d = 1; d <= source_->max_dim(); ++d) {
        for (int idx = 0; idx < source_->count(d); ++idx) {
            const Simplex& fy = image({d, idx});
            for (int i = 0; i <= d; ++i) {
                const Simplex lhs = apply(source_->face({d, idx}, i));
                const Simplex rhs = target_->face_of(fy, i);
                if (!(lhs == rhs))
                    fail(ErrorKind::invariant_violation, "map does not commute with face " + std::to_string(i) +
                                                             " of " + std::to_string(d) + "." + std::to_string(idx));
            }
        }
    }
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (f.target() != g.source() && !(*f.target() == *g.source()))
        fail(ErrorKind::invalid_argument, "maps do not compose");
    std::vector<std::vector<Simplex>> images(f.source()->max_dim() + 1);
    for (int d = 0; d <= f.source()->max_dim(); ++d)
        for (int i = 0; i < f.source()->count(d); ++i) images[d].push_back(g.apply(f.image({d, i})));
    return SimplicialMap(f.source(), g.target(), std::move(images));
}

}  // namespace scw
