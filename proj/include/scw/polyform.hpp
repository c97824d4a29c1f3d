#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scw/poly.hpp"
#include "scw/simplicial_set.hpp"

namespace scw {

/// Bit v set means dx_{v+1} is a factor; the wedge is taken in increasing index order.
using IndexMask = std::uint32_t;

std::vector<int> mask_indices(IndexMask m);
/// Sign of dx_A ^ dx_B relative to dx_{A|B} (0 when A and B overlap).
int wedge_sign(IndexMask a, IndexMask b);

/// Polynomial differential form on the standard simplex Delta^d, written in
/// the coordinates x1..xd with vertex 0 at the origin and vertex j at e_j.
/// A degree above d is allowed and denotes the zero form.
class PolyForm {
public:
    explicit PolyForm(int dim = 0, int degree = 0);

    static PolyForm function(const Poly& f);
    /// f dx_{i1} ^ ... ^ dx_{ik} (zero-based, any order; sign applied).
    static PolyForm monomial_form(const Poly& f, const std::vector<int>& indices);
    static PolyForm differential(int dim, int v);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::map<IndexMask, Poly>& components() const { return comps_; }
    Poly component(IndexMask m) const;
    void add_component(IndexMask m, const Poly& f);

    bool is_zero() const { return comps_.empty(); }
    bool is_exact() const;
    PolyForm to_float() const;
    int poly_degree() const;

    PolyForm& operator+=(const PolyForm& o);
    PolyForm& operator-=(const PolyForm& o);
    PolyForm& operator*=(const Scalar& c);
    PolyForm operator-() const;
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    friend PolyForm operator*(PolyForm a, const Scalar& c) { return a *= c; }
    friend PolyForm operator*(const Scalar& c, PolyForm a) { return a *= c; }
    /// Multiplication by a function.
    friend PolyForm operator*(const Poly& f, const PolyForm& a);
    friend bool operator==(const PolyForm& a, const PolyForm& b) = default;

    bool near(const PolyForm& o, double tol) const;

    /// `form v1; dim d; deg k;` followed by one `comp i1 .. ik: <poly>` line per
    /// nonzero component in lexicographic index order.
    std::string serialize() const;
    static PolyForm parse(std::string_view text);

private:
    int dim_;
    int degree_;
    std::map<IndexMask, Poly> comps_;
};

PolyForm d_form(const PolyForm& w);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// Exact integral of a top-degree form over Delta^d with its standard orientation.
Scalar integrate_top(const PolyForm& w);

/// Multi-indices alpha in N^{k+1} with |alpha| = m, lexicographically descending.
std::vector<std::vector<int>> bernstein_indices(int k, int m);

/// Polynomial map Delta^k -> Delta^d in Bernstein-Bezier form. Control points
/// are Cartesian points of Delta^d, listed in `bernstein_indices` order.
class PolyMap {
public:
    PolyMap() = default;

    static PolyMap bernstein(int source_dim, int target_dim, int degree, std::vector<std::vector<Rational>> control);
    /// The affine map sending vertex s of Delta^k to vertex images[s] of Delta^d.
    static PolyMap affine(int source_dim, int target_dim, const std::vector<int>& vertex_images);
    static PolyMap from_ordinal(const OrdinalMap& op, int target_dim);
    static PolyMap identity(int d);

    int source_dim() const { return source_dim_; }
    int target_dim() const { return target_dim_; }
    int bernstein_degree() const { return degree_; }
    const std::vector<std::vector<Rational>>& control_points() const { return control_; }
    const std::vector<Poly>& coordinates() const { return coords_; }

    /// Every control point lies in Delta^d, hence so does the image.
    bool control_points_valid() const;
    std::vector<double> evaluate(std::span<const double> point) const;

    friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.coords_ == b.coords_; }

private:
    int source_dim_ = 0;
    int target_dim_ = 0;
    int degree_ = 0;
    std::vector<std::vector<Rational>> control_;
    std::vector<Poly> coords_;
};

/// outer o inner.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

Poly pullback(const Poly& f, const PolyMap& phi);
PolyForm pullback_form(const PolyForm& w, const PolyMap& phi);
/// Pullback along the affine map of an order-preserving op : [p] -> [d].
PolyForm pullback_form(const PolyForm& w, const OrdinalMap& op);

/// Barycentric coordinate t_j on Delta^d as a polynomial in x1..xd.
Poly barycentric(int d, int j);

}  // namespace scw
