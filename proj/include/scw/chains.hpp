#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scw/linalg.hpp"
#include "scw/scalar.hpp"
#include "scw/simplicial_map.hpp"
#include "scw/simplicial_set.hpp"

namespace scw {

/// Normalized chain: coefficients on the nondegenerate simplices of one dimension.
struct Chain {
    int dim = 0;
    std::vector<Scalar> coeffs;
    bool operator==(const Chain&) const = default;
};

struct Cochain {
    int dim = 0;
    std::vector<Scalar> values;

    static Cochain zero(const SimplicialSet& x, int dim) { return {dim, std::vector<Scalar>(x.count(dim))}; }
    bool is_zero() const;
    bool is_exact() const;
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    bool operator==(const Cochain&) const = default;
    bool near(const Cochain& o, double tol) const;
    std::string to_string() const;
};

/// Matrix of the boundary C_k -> C_{k-1} on nondegenerate generators
/// (rows: (k-1)-cells, columns: k-cells). Degenerate faces contribute nothing.
RationalMatrix boundary_operator(const SimplicialSet& x, int k);

/// Rational Betti numbers b_0..b_max_dim.
std::vector<int> betti_numbers(const SimplicialSet& x, int max_dim);

Chain boundary(const SimplicialSet& x, const Chain& c);
Cochain coboundary(const SimplicialSet& x, const Cochain& c);
Scalar pairing(const Cochain& c, const Chain& z);

struct CoboundaryResult {
    std::optional<Cochain> witness;   ///< b with db = c
    std::optional<Chain> certificate;  ///< cycle z with <c, z> != 0
    bool solvable() const { return witness.has_value(); }
};

CoboundaryResult is_coboundary(const SimplicialSet& x, const Cochain& c);

/// Integral cycle representatives of a basis of H_k(X; Q), each primitive with
/// positive leading coefficient.
std::vector<Chain> homology_basis(const SimplicialSet& x, int k);

Cochain pullback_cochain(const SimplicialMap& f, const Cochain& c);
Chain push_chain(const SimplicialMap& f, const Chain& z);

}  // namespace scw
