#include "scw/product.hpp"

#include <map>
#include <tuple>

#include "scw/error.hpp"

namespace scw {

namespace {

struct Cell {
    SimplexId base;
    OrdinalMap collapse;  // [p] -> [base.dim]
    OrdinalMap interval;  // [p] -> [1]
};

using CellKey = std::tuple<int, int, OrdinalMap, OrdinalMap>;

CellKey key_of(const Cell& c) { return {c.base.dim, c.base.index, c.collapse, c.interval}; }

}  // namespace

IntervalProduct product_with_interval(const SetPtr& x) {
    const int top = x->max_dim() + 1;
    std::vector<std::map<CellKey, int>> index(top + 1);
    std::vector<std::vector<Cell>> cells(top + 1);

    for (int m = 0; m <= x->max_dim(); ++m) {
        for (int idx = 0; idx < x->count(m); ++idx) {
            const SimplexId y{m, idx};
            // same-dimension cells: interval map with `ones` trailing ones
            for (int ones = 0; ones <= m + 1; ++ones) {
                OrdinalMap w(m + 1);
                for (int s = 0; s <= m; ++s) w[s] = s > m - ones ? 1 : 0;
                Cell c{y, identity_map(m), w};
                index[m].emplace(key_of(c), 0);
            }
            // prism cells: collapse repeats j, interval jumps between j and j+1
            for (int j = 0; j <= m; ++j) {
                OrdinalMap w(m + 2);
                for (int s = 0; s <= m + 1; ++s) w[s] = s > j ? 1 : 0;
                Cell c{y, codegeneracy(m, j), w};
                index[m + 1].emplace(key_of(c), 0);
            }
        }
    }
    std::vector<int> counts(top + 1);
    for (int p = 0; p <= top; ++p) {
        int i = 0;
        for (auto& [key, slot] : index[p]) {
            slot = i++;
            const auto& [bd, bi, collapse, w] = key;
            cells[p].push_back({SimplexId{bd, bi}, collapse, w});
        }
        counts[p] = i;
    }

    SimplicialSet prod(counts);
    for (int p = 1; p <= top; ++p) {
        for (int ci = 0; ci < counts[p]; ++ci) {
            const Cell& c = cells[p][ci];
            for (int i = 0; i <= p; ++i) {
                const OrdinalMap delta = coface(p, i);
                const Simplex xf = x->apply(delta, Simplex{c.base, c.collapse});
                const OrdinalMap wf = compose(c.interval, delta);
                // strip degeneracies common to both coordinates
                OrdinalMap collapse(p, 0);
                OrdinalMap reduced_x{xf.collapse[0]};
                OrdinalMap reduced_w{wf[0]};
                for (int s = 1; s < p; ++s) {
                    const bool repeat = xf.collapse[s] == xf.collapse[s - 1] && wf[s] == wf[s - 1];
                    collapse[s] = collapse[s - 1] + (repeat ? 0 : 1);
                    if (!repeat) {
                        reduced_x.push_back(xf.collapse[s]);
                        reduced_w.push_back(wf[s]);
                    }
                }
                const int q = static_cast<int>(reduced_x.size()) - 1;
                auto it = index[q].find(CellKey{xf.base.dim, xf.base.index, reduced_x, reduced_w});
                if (it == index[q].end()) fail(ErrorKind::invariant_violation, "prism face lookup failed");
                prod.set_face({p, ci}, i, Simplex{{q, it->second}, collapse});
            }
        }
    }
    prod.validate();
    auto product = std::make_shared<const SimplicialSet>(std::move(prod));

    auto interval = standard_simplex(1);
    std::vector<std::vector<Simplex>> proj(top + 1), to_i(top + 1);
    for (int p = 0; p <= top; ++p) {
        for (const Cell& c : cells[p]) {
            proj[p].push_back({c.base, c.collapse});
            if (c.interval.front() == c.interval.back())
                to_i[p].push_back({{0, c.interval.front()}, OrdinalMap(p + 1, 0)});
            else
                to_i[p].push_back({{1, 0}, c.interval});
        }
    }
    std::vector<std::vector<Simplex>> end0(x->max_dim() + 1), end1(x->max_dim() + 1);
    for (int m = 0; m <= x->max_dim(); ++m) {
        for (int idx = 0; idx < x->count(m); ++idx) {
            const OrdinalMap id = identity_map(m);
            end0[m].push_back(Simplex::of({m, index[m].at(CellKey{m, idx, id, OrdinalMap(m + 1, 0)})}));
            end1[m].push_back(Simplex::of({m, index[m].at(CellKey{m, idx, id, OrdinalMap(m + 1, 1)})}));
        }
    }
    IntervalProduct out{product,
                        SimplicialMap(x, product, std::move(end0)),
                        SimplicialMap(x, product, std::move(end1)),
                        SimplicialMap(product, x, std::move(proj)),
                        SimplicialMap(product, interval, std::move(to_i))};
    return out;
}

}  // namespace scw
