#include "scw/simplicial_set.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "scw/error.hpp"

namespace scw {

OrdinalMap identity_map(int n) {
    OrdinalMap m(n + 1);
    for (int i = 0; i <= n; ++i) m[i] = i;
    return m;
}

OrdinalMap coface(int n, int i) {
    OrdinalMap m(n);
    for (int s = 0; s < n; ++s) m[s] = s < i ? s : s + 1;
    return m;
}

OrdinalMap codegeneracy(int n, int j) {
    OrdinalMap m(n + 2);
    for (int s = 0; s <= n + 1; ++s) m[s] = s <= j ? s : s - 1;
    return m;
}

OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner) {
    OrdinalMap m(inner.size());
    for (std::size_t s = 0; s < inner.size(); ++s) m[s] = outer.at(inner[s]);
    return m;
}

bool is_surjective_onto(const OrdinalMap& m, int n) {
    if (m.empty() || m.front() != 0 || m.back() != n) return false;
    for (std::size_t s = 1; s < m.size(); ++s)
        if (m[s] != m[s - 1] && m[s] != m[s - 1] + 1) return false;
    return true;
}

std::vector<int> degeneracy_word(const OrdinalMap& collapse) {
    std::vector<int> word;
    for (int j = static_cast<int>(collapse.size()) - 2; j >= 0; --j)
        if (collapse[j] == collapse[j + 1]) word.push_back(j);
    return word;
}

OrdinalMap surjection_from_word(const std::vector<int>& word, int target_dim) {
    const int p = target_dim + static_cast<int>(word.size());
    for (std::size_t a = 0; a < word.size(); ++a) {
        if (word[a] < 0 || word[a] >= p) fail(ErrorKind::invalid_argument, "degeneracy index out of range");
        if (a > 0 && word[a] >= word[a - 1])
            fail(ErrorKind::invalid_argument, "degeneracy word must be strictly decreasing");
    }
    std::set<int> repeated(word.begin(), word.end());
    OrdinalMap m(p + 1);
    m[0] = 0;
    for (int s = 1; s <= p; ++s) m[s] = m[s - 1] + (repeated.count(s - 1) ? 0 : 1);
    return m;
}

SimplicialSet::SimplicialSet(std::vector<int> counts) : counts_(std::move(counts)) {
    faces_.resize(counts_.size());
    for (std::size_t d = 0; d < counts_.size(); ++d) {
        if (counts_[d] < 0) fail(ErrorKind::invalid_argument, "negative cell count");
        faces_[d].assign(counts_[d], std::vector<Simplex>(d == 0 ? 0 : d + 1));
    }
}

SimplicialSet SimplicialSet::from_complex(std::vector<std::vector<int>> simplices) {
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> stack;
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(ErrorKind::invalid_argument, "complex simplices need distinct vertices");
        stack.push_back(s);
    }
    while (!stack.empty()) {
        auto s = std::move(stack.back());
        stack.pop_back();
        if (!all.insert(s).second || s.size() == 1) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto f = s;
            f.erase(f.begin() + static_cast<long>(i));
            stack.push_back(std::move(f));
        }
    }
    int top = 0;
    for (const auto& s : all) top = std::max(top, static_cast<int>(s.size()) - 1);
    std::vector<std::vector<std::vector<int>>> by_dim(top + 1);
    for (const auto& s : all) by_dim[s.size() - 1].push_back(s);  // std::set order is lexicographic
    std::vector<int> counts;
    for (const auto& v : by_dim) counts.push_back(static_cast<int>(v.size()));
    SimplicialSet x(counts);
    x.labels_ = by_dim;
    for (int d = 1; d <= top; ++d) {
        for (int idx = 0; idx < counts[d]; ++idx) {
            for (int i = 0; i <= d; ++i) {
                auto f = by_dim[d][idx];
                f.erase(f.begin() + i);
                auto target = x.find(f);
                x.set_face({d, idx}, i, Simplex::of(*target));
            }
        }
    }
    return x;
}

const Simplex& SimplicialSet::face(SimplexId id, int i) const {
    if (!contains(id) || id.dim == 0 || i < 0 || i > id.dim)
        fail(ErrorKind::invalid_argument, "face index out of range");
    return faces_[id.dim][id.index][i];
}

void SimplicialSet::set_face(SimplexId id, int i, Simplex target) {
    if (!contains(id) || id.dim == 0 || i < 0 || i > id.dim)
        fail(ErrorKind::invalid_argument, "face index out of range");
    faces_[id.dim][id.index][i] = std::move(target);
}

Simplex SimplicialSet::apply(const OrdinalMap& op, const Simplex& x) const {
    const OrdinalMap mu = compose(x.collapse, op);
    const int m = x.base.dim;
    std::vector<bool> hit(m + 1, false);
    for (int v : mu) hit[v] = true;
    int missing = -1;
    for (int v = 0; v <= m; ++v)
        if (!hit[v]) {
            missing = v;
            break;
        }
    if (missing < 0) return {x.base, mu};
    OrdinalMap rest(mu.size());
    for (std::size_t s = 0; s < mu.size(); ++s) rest[s] = mu[s] > missing ? mu[s] - 1 : mu[s];
    return apply(rest, face(x.base, missing));
}

const std::vector<int>& SimplicialSet::vertices_of(SimplexId id) const {
    static const std::vector<int> empty;
    if (labels_.empty() || !contains(id)) return empty;
    return labels_[id.dim][id.index];
}

std::optional<SimplexId> SimplicialSet::find(const std::vector<int>& vertices) const {
    if (labels_.empty() || vertices.empty()) return std::nullopt;
    const int d = static_cast<int>(vertices.size()) - 1;
    if (d > max_dim()) return std::nullopt;
    const auto& cells = labels_[d];
    auto it = std::lower_bound(cells.begin(), cells.end(), vertices);
    if (it == cells.end() || *it != vertices) return std::nullopt;
    return SimplexId{d, static_cast<int>(it - cells.begin())};
}

void SimplicialSet::validate() const {
    for (int d = 1; d <= max_dim(); ++d) {
        for (int idx = 0; idx < counts_[d]; ++idx) {
            for (int i = 0; i <= d; ++i) {
                const Simplex& f = faces_[d][idx][i];
                const std::string where = "face " + std::to_string(d) + "." + std::to_string(idx) + " " +
                                          std::to_string(i);
                if (f.dim() != d - 1 || !contains(f.base) || !is_surjective_onto(f.collapse, f.base.dim))
                    fail(ErrorKind::invariant_violation, where + " has an invalid target");
            }
        }
    }
    for (int d = 2; d <= max_dim(); ++d) {
        for (int idx = 0; idx < counts_[d]; ++idx) {
            const Simplex x = Simplex::of({d, idx});
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    const Simplex lhs = face_of(face_of(x, j), i);
                    const Simplex rhs = face_of(face_of(x, i), j - 1);
                    if (!(lhs == rhs))
                        fail(ErrorKind::invariant_violation,
                             "simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                                 std::to_string(j - 1) + " d" + std::to_string(i) + " fails on " +
                                 std::to_string(d) + "." + std::to_string(idx));
                }
            }
        }
    }
}

std::string SimplicialSet::serialize() const {
    std::ostringstream out;
    out << "simplicial-set v1\n";
    for (int d = 0; d <= max_dim(); ++d) out << "dim " << d << ": " << counts_[d] << "\n";
    for (int d = 1; d <= max_dim(); ++d)
        for (int idx = 0; idx < counts_[d]; ++idx)
            for (int i = 0; i <= d; ++i) {
                const Simplex& f = faces_[d][idx][i];
                out << "face " << d << "." << idx << " " << i << " -> " << f.base.dim << "." << f.base.index;
                for (int j : degeneracy_word(f.collapse)) out << " s" << j;
                out << "\n";
            }
    return out.str();
}

namespace {

SimplexId parse_id(const std::string& token, int line) {
    const auto dot = token.find('.');
    if (dot == std::string::npos) throw ParseError(line, "expected <dim>.<index>, got '" + token + "'");
    try {
        std::size_t used = 0;
        const int d = std::stoi(token.substr(0, dot), &used);
        if (used != dot) throw ParseError(line, "bad simplex id '" + token + "'");
        const std::string rest = token.substr(dot + 1);
        const int i = std::stoi(rest, &used);
        if (used != rest.size()) throw ParseError(line, "bad simplex id '" + token + "'");
        return {d, i};
    } catch (const std::logic_error&) {
        throw ParseError(line, "bad simplex id '" + token + "'");
    }
}

}  // namespace

SimplicialSet SimplicialSet::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::vector<int> counts;
    std::vector<std::tuple<SimplexId, int, Simplex, int>> records;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!header) {
            if (line != "simplicial-set v1") throw ParseError(line_no, "expected header 'simplicial-set v1'");
            header = true;
            continue;
        }
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "dim") {
            std::string dtok, ctok;
            ls >> dtok >> ctok;
            if (dtok.empty() || dtok.back() != ':') throw ParseError(line_no, "expected 'dim <d>: <count>'");
            const int d = std::stoi(dtok.substr(0, dtok.size() - 1));
            if (d != static_cast<int>(counts.size())) throw ParseError(line_no, "dimensions must be listed in order");
            try {
                counts.push_back(std::stoi(ctok));
            } catch (const std::logic_error&) {
                throw ParseError(line_no, "bad count");
            }
        } else if (kw == "face") {
            std::string src, itok, arrow, dst;
            ls >> src >> itok >> arrow >> dst;
            if (arrow != "->" || dst.empty()) throw ParseError(line_no, "expected 'face <d>.<i> <j> -> <d'>.<i'>'");
            const SimplexId sid = parse_id(src, line_no);
            const SimplexId tid = parse_id(dst, line_no);
            int face_index = 0;
            try {
                face_index = std::stoi(itok);
            } catch (const std::logic_error&) {
                throw ParseError(line_no, "bad face index");
            }
            std::vector<int> word;
            std::string s;
            while (ls >> s) {
                if (s.size() < 2 || s[0] != 's') throw ParseError(line_no, "bad degeneracy token '" + s + "'");
                word.push_back(std::stoi(s.substr(1)));
            }
            Simplex target;
            target.base = tid;
            try {
                target.collapse = surjection_from_word(word, tid.dim);
            } catch (const Error& e) {
                throw ParseError(line_no, e.what());
            }
            records.emplace_back(sid, face_index, std::move(target), line_no);
        } else {
            throw ParseError(line_no, "unknown record '" + kw + "'");
        }
    }
    if (!header) throw ParseError(line_no, "missing header");
    SimplicialSet x(counts);
    std::vector<std::vector<std::vector<bool>>> seen(counts.size());
    for (std::size_t d = 0; d < counts.size(); ++d)
        seen[d].assign(counts[d], std::vector<bool>(d + 1, false));
    for (auto& [sid, i, target, ln] : records) {
        if (!x.contains(sid) || sid.dim == 0 || i < 0 || i > sid.dim)
            throw ParseError(ln, "face record refers to a missing simplex or face");
        if (seen[sid.dim][sid.index][i]) throw ParseError(ln, "duplicate face record");
        seen[sid.dim][sid.index][i] = true;
        x.set_face(sid, i, std::move(target));
    }
    for (std::size_t d = 1; d < counts.size(); ++d)
        for (int idx = 0; idx < counts[d]; ++idx)
            for (std::size_t i = 0; i <= d; ++i)
                if (!seen[d][idx][i])
                    throw ParseError(line_no, "missing face record for " + std::to_string(d) + "." +
                                                  std::to_string(idx) + " " + std::to_string(i));
    try {
        x.validate();
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
    return x;
}

SetPtr standard_simplex(int n) {
    if (n < 0) fail(ErrorKind::invalid_argument, "simplex dimension must be >= 0");
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    return std::make_shared<const SimplicialSet>(SimplicialSet::from_complex({all}));
}

SetPtr boundary_sphere(int n) {
    if (n < 0) fail(ErrorKind::invalid_argument, "sphere dimension must be >= 0");
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n + 1; ++skip) {
        std::vector<int> f;
        for (int v = 0; v <= n + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return std::make_shared<const SimplicialSet>(SimplicialSet::from_complex(facets));
}

SetPtr two_disk_sphere() {
    SimplicialSet x({3, 3, 2});
    // edges in lexicographic order: {01}, {02}, {12}
    const std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
    for (int e = 0; e < 3; ++e) {
        x.set_face({1, e}, 0, Simplex::of({0, edges[e].second}));
        x.set_face({1, e}, 1, Simplex::of({0, edges[e].first}));
    }
    for (int cell = 0; cell < 2; ++cell) {
        x.set_face({2, cell}, 0, Simplex::of({1, 2}));
        x.set_face({2, cell}, 1, Simplex::of({1, 1}));
        x.set_face({2, cell}, 2, Simplex::of({1, 0}));
    }
    return std::make_shared<const SimplicialSet>(std::move(x));
}

HornPresentation horn(int n, int k) {
    if (n < 1 || k < 0 || k > n)
        fail(ErrorKind::invalid_horn, "horn needs n >= 1 and 0 <= k <= n, got n=" + std::to_string(n) +
                                          " k=" + std::to_string(k));
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        if (skip == k) continue;
        std::vector<int> f;
        for (int v = 0; v <= n; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    HornPresentation h;
    h.n = n;
    h.k = k;
    h.horn = std::make_shared<const SimplicialSet>(SimplicialSet::from_complex(facets));
    h.simplex = standard_simplex(n);
    h.inclusion.resize(h.horn->max_dim() + 1);
    for (int d = 0; d <= h.horn->max_dim(); ++d)
        for (int idx = 0; idx < h.horn->count(d); ++idx)
            h.inclusion[d].push_back(h.simplex->find(h.horn->vertices_of({d, idx}))->index);
    return h;
}

}  // namespace scw
