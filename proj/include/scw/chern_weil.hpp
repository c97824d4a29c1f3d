#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scw/chains.hpp"
#include "scw/connection.hpp"
#include "scw/invariant_poly.hpp"
#include "scw/simplicial_form.hpp"

namespace scw {

/// Per-simplex curvature 2-forms of a connection.
struct Curvature {
    SetPtr base;
    AlgebraPtr algebra;
    std::vector<std::vector<LieForm>> forms;  // [dim][index]

    const LieForm& at(SimplexId id) const { return forms.at(id.dim).at(id.index); }
    LieForm on(const Simplex& x) const { return pullback_form(at(x.base), x.collapse); }
};

/// F = dA + (1/2)[A ^ A], the coordinate form of dA + A ^ A.
LieForm curvature_form(const LieForm& a);
Curvature curvature(const Connection& a);
/// dF + [A ^ F]; zero for every A.
LieForm bianchi_defect(const LieForm& a);

/// F_face = Ad_{phi^{-1}}(delta_i^* F_S) on every face, symbolic when the
/// transition acts trivially or by a constant, sampled otherwise.
GaugeCheck check_curvature_covariance(const Bundle& p, const Connection& a, Rng& rng, double tol = 1e-9,
                                      int samples = 100);

/// rho(F, .., F) with the wedge product of forms.
PolyForm cw_wedge_form(const InvariantPolynomial& rho, const LieForm& f);
/// The antisymmetrized evaluation (1/(2k)!) sum_pi sgn(pi) rho(F(v_pi1, v_pi2), ..)
/// computed by brute force over all (2k)! permutations.
PolyForm cw_permutation_form(const InvariantPolynomial& rho, const LieForm& f);
/// c with cw_permutation_form = c * cw_wedge_form; nullopt when the wedge form
/// vanishes. Throws invariant_violation if the two are not proportional.
std::optional<Scalar> calibration_constant(const InvariantPolynomial& rho, const LieForm& f);

enum class CwFormula { wedge, permutation };

SimplicialForm cw_form(const InvariantPolynomial& rho, const Connection& a, CwFormula formula = CwFormula::wedge);
Cochain cw_cochain(const InvariantPolynomial& rho, const Connection& a);

struct ClassReport {
    std::string rho;
    std::string bundle;
    Cochain alpha;
    bool closed = false;
    std::vector<Scalar> pairings;
    std::optional<Cochain> witness;

    /// `class rho=<name> bundle=<id>: closed=yes pairings=[...] witness=<present|absent>`
    std::string machine_line() const;
    std::string human() const;
};

ClassReport class_report(const InvariantPolynomial& rho, const Connection& a, const std::vector<Chain>& cycles,
                         const std::string& bundle_id);

struct IndependenceResult {
    bool ok = false;
    Cochain difference;
    std::optional<Cochain> witness;     ///< db = alpha_1 - alpha_2
    std::optional<Chain> certificate;  ///< cycle on which the difference pairs nonzero
};

IndependenceResult connection_independence(const InvariantPolynomial& rho, const Connection& a1,
                                           const Connection& a2);

struct NaturalityResult {
    bool ok = false;
    Cochain pulled;     ///< f^* alpha(D)
    Cochain recomputed; ///< alpha(f^* D)
};

NaturalityResult naturality_check(const SimplicialMap& f, const InvariantPolynomial& rho, const Connection& a,
                                  double tol = 1e-9);

struct AgreementResult {
    bool ok = false;
    Scalar simplicial;  ///< exact pairing of the cochain with z
    double classical = 0.0;
};

/// Pairing of the cochain with the top cycle z against a numerical integral
/// of rho(F) over the same cells (collapsed-coordinate Gauss rule).
AgreementResult classical_agreement(const InvariantPolynomial& rho, const Connection& a, const Chain& z,
                                    double tol = 1e-8, int order = 12);

}  // namespace scw
