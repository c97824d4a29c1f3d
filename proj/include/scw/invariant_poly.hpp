#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scw/lie.hpp"
#include "scw/poly.hpp"
#include "scw/sampling.hpp"

namespace scw {

/// Symmetric multilinear functional on a Lie algebra, stored as its full
/// coefficient tensor in the algebra's basis.
class InvariantPolynomial {
public:
    enum class Kind { symtrace, chern, reznikov, polarized };

    struct Entry {
        std::vector<int> index;
        Scalar value;
    };

    InvariantPolynomial(AlgebraPtr algebra, int arity, std::string name, Kind kind, std::vector<Scalar> tensor);

    const AlgebraPtr& algebra() const { return algebra_; }
    int arity() const { return arity_; }
    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }
    bool is_exact() const;

    const Scalar& coefficient(const std::vector<int>& index) const;
    /// Nonzero tensor entries in lexicographic index order.
    const std::vector<Entry>& entries() const { return entries_; }

    Scalar evaluate(const std::vector<Coords>& args) const;

private:
    AlgebraPtr algebra_;
    int arity_;
    std::string name_;
    Kind kind_;
    std::vector<Scalar> tensor_;
    std::vector<Entry> entries_;
};

/// (1/k!) sum over permutations of tr(x_{p1} .. x_{pk}).
InvariantPolynomial sym_trace_poly(const AlgebraPtr& g, int k);
/// Polarized degree-k coefficient of det(I + t X / (i tau)); u(n) and su(n) only.
InvariantPolynomial chern_polynomial(const AlgebraPtr& g, int k);
/// The symmetric multilinear form whose diagonal is the homogeneous
/// polynomial p in the algebra coordinates.
InvariantPolynomial polarize(const AlgebraPtr& g, const Poly& p);
/// x -> rho(x, .., x) as a polynomial in the algebra coordinates.
Poly diagonal(const InvariantPolynomial& rho);

/// su2 only: rho(xi_1, .., xi_k) = integral over the unit sphere of
/// H_{xi_1} .. H_{xi_k} with total area normalized to 1, where H_xi(p) = <xi, p>
/// is the mean-zero Hamiltonian of the rotation generated by xi. Product rule
/// with `order` Gauss-Legendre nodes in z and 2*order equispaced angles.
InvariantPolynomial reznikov_pullback(const AlgebraPtr& g, int k, int order);

/// `symtrace:<k>`, `chern:<k>`, `reznikov:<k>[:order=<n>]` (order 32 by default).
InvariantPolynomial parse_poly_spec(const AlgebraPtr& g, std::string_view spec);

struct PropertyCheck {
    bool ok = true;
    double max_defect = 0.0;
    std::string detail;
};

/// All permutations for arity <= 3, 24 random ones beyond.
PropertyCheck check_symmetry(const InvariantPolynomial& rho, Rng& rng, int samples);
PropertyCheck check_multilinearity(const InvariantPolynomial& rho, Rng& rng, int samples);
/// |rho(Ad_g v) - rho(v)| <= tol * (1 + |rho(v)|) with g = exp(x), x uniform in [-1, 1]^dim.
PropertyCheck check_ad_invariance(const InvariantPolynomial& rho, Rng& rng, int probes, double tol);

}  // namespace scw
