#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scw/chains.hpp"
#include "scw/polyform.hpp"
#include "scw/simplicial_map.hpp"

namespace scw {

/// One PolyForm per nondegenerate simplex. Degenerate simplices carry the
/// pullback along their collapse.
class SimplicialForm {
public:
    SimplicialForm() = default;
    /// The zero form of the given degree.
    SimplicialForm(SetPtr base, int degree);

    const SetPtr& base() const { return base_; }
    int degree() const { return degree_; }

    const PolyForm& at(SimplexId id) const { return forms_.at(id.dim).at(id.index); }
    void set(SimplexId id, PolyForm w);
    PolyForm on(const Simplex& x) const;

    bool is_zero() const;
    bool is_exact() const;

    SimplicialForm& operator+=(const SimplicialForm& o);
    SimplicialForm& operator-=(const SimplicialForm& o);
    friend SimplicialForm operator+(SimplicialForm a, const SimplicialForm& b) { return a += b; }
    friend SimplicialForm operator-(SimplicialForm a, const SimplicialForm& b) { return a -= b; }
    friend SimplicialForm operator*(const Scalar& c, SimplicialForm a);

    bool operator==(const SimplicialForm& o) const { return degree_ == o.degree_ && forms_ == o.forms_; }

private:
    SetPtr base_;
    int degree_ = 0;
    std::vector<std::vector<PolyForm>> forms_;
};

struct FormCheck {
    bool ok = true;
    SimplexId simplex;  ///< the simplex whose face restriction disagrees
    int face = -1;
    std::string message;
};

/// Checks face compatibility exactly on every nondegenerate simplex; reports
/// the first mismatch in (dim, index, face) order. A positive `tol` compares
/// coefficients numerically instead.
FormCheck check_simplicial_form(const SimplicialForm& w, double tol = 0.0);

SimplicialForm global_d(const SimplicialForm& w);
SimplicialForm global_wedge(const SimplicialForm& a, const SimplicialForm& b);
/// (f^*w)_y = w on f(y).
SimplicialForm global_pullback(const SimplicialMap& f, const SimplicialForm& w);

/// The induced form: pull a single form on Delta^d back along every simplex of
/// a complex-built subset of Delta^d given by its vertex lists.
SimplicialForm induced_form(const SetPtr& base, const PolyForm& w);

Cochain integrate_to_cochain(const SimplicialForm& w);

}  // namespace scw
