#pragma once

#include "idec/mesh.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace idec::dec {

using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

enum class Placement { primal, dual };

/// Integrated values of a discrete form. A primal k-cochain lives on the
/// k-simplices; a dual k-cochain lives on the dual cells of the
/// (2-k)-simplices, so dual 0 sits on faces, dual 1 on edges and dual 2 on
/// vertices.
struct Cochain {
    int degree = 0;
    Placement placement = Placement::primal;
    Vector values;

    static Cochain primal(int degree, Vector values) { return {degree, Placement::primal, std::move(values)}; }
    static Cochain dual(int degree, Vector values) { return {degree, Placement::dual, std::move(values)}; }
};

/// Number of carriers for a degree/placement pair on `surface`.
std::size_t carrier_count(const mesh::SimplicialSurface& surface, int degree, Placement placement);

/// Diagonal Hodge stars, primal -> dual: star0 = |*v|, star1 = |*e|/|e|,
/// star2 = 1/|P|.
struct HodgeStars {
    Vector star0;
    Vector star1;
    Vector star2;
    bool signed_entries = false; // built from signed dual lengths

    /// Throws when any entry is zero; negative star1 entries are only accepted
    /// from metrics computed in signed mode.
    static HodgeStars from_metrics(const mesh::DualMetrics& metrics);
};

/// Exterior derivative. Primal uses d0, d1; dual uses d1^T (dual 0 -> 1) and
/// d0^T (dual 1 -> 2) with no extra sign.
Cochain d(const mesh::SimplicialSurface& surface, const Cochain& c);

/// Hodge star between complementary degrees. Going dual -> primal applies the
/// inverse scaling with the sign (-1)^{k(2-k)}, so star(star(c)) = -c on
/// 1-cochains and c otherwise.
Cochain star(const Cochain& c, const HodgeStars& h);

/// d0 and d1 converted to floating point, for assembling operators.
SparseMatrix d0_matrix(const mesh::SimplicialSurface& surface);
SparseMatrix d1_matrix(const mesh::SimplicialSurface& surface);

// Gauge-field utilities. A and J are primal 1-cochains, F a primal 2-cochain.

struct Curvature {
    Cochain F;
    /// dF = 0 is vacuous on a surface (there are no 3-cells), so the check
    /// always passes. Kept so callers can report it.
    bool bianchi_satisfied = true;
};

Curvature curvature(const mesh::SimplicialSurface& surface, const Cochain& A);

/// A + d0 f.
Cochain gauge_transform(const mesh::SimplicialSurface& surface, const Cochain& A, const Cochain& f);

/// The action L(A, J) = -1/2 <dA, dA> + <A, J> with <dA, dA> = (d1 A)^T star2 (d1 A)
/// and <A, J> = A^T star1 J.
double lagrangian(const mesh::SimplicialSurface& surface, const HodgeStars& h, const Cochain& A,
                  const Cochain& J);

/// d1^T star2 d1 A - star1 J, which is -grad L. Zero exactly when A solves the
/// static field equation.
Cochain maxwell_residual(const mesh::SimplicialSurface& surface, const HodgeStars& h,
                         const Cochain& A, const Cochain& J);

/// d0^T star1 J per vertex; nonzero entries violate the continuity equation.
Vector continuity_defect(const mesh::SimplicialSurface& surface, const HodgeStars& h, const Cochain& J);

} // namespace idec::dec
