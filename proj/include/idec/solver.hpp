#pragma once

#include "idec/dec.hpp"
#include "idec/mesh.hpp"

#include <Eigen/SparseCholesky>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace idec::solver {

using dec::SparseMatrix;
using dec::Vector;
using mesh::Index;

inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F/m
inline constexpr double kVacuumPermeability = 1.25663706212e-6; // H/m

/// TE: E is a primal 1-cochain on edges and H a dual 0-cochain on faces.
/// TM: H is a primal 1-cochain on edges and E a dual 0-cochain on faces.
enum class Mode { TE, TM };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Per-element constitutive and conduction coefficients.
///
/// eps and sigma sit with the electric unknown (edges in TE, faces in TM);
/// mu and sigma_m sit with the magnetic unknown (faces in TE, edges in TM).
struct MaterialParams {
    Vector eps;
    Vector mu;
    Vector sigma;
    Vector sigma_m;

    static MaterialParams uniform(Mode mode, const mesh::SimplicialSurface& surface, double eps,
                                  double mu, double sigma = 0.0, double sigma_m = 0.0);
    static MaterialParams vacuum(Mode mode, const mesh::SimplicialSurface& surface);

    /// Builds coefficients from per-face values. Edge-placed coefficients take
    /// the mean of the values on the incident faces.
    static MaterialParams from_face_values(Mode mode, const mesh::SimplicialSurface& surface,
                                           const Vector& eps, const Vector& mu, const Vector& sigma,
                                           const Vector& sigma_m);

    /// Throws unless sizes match the placements and eps, mu > 0, sigma, sigma_m >= 0.
    void validate(Mode mode, const mesh::SimplicialSurface& surface) const;
};

struct FieldState {
    Mode mode = Mode::TE;
    Vector e; // TE: integrated E along edges; TM: E at face circumcenters
    Vector h; // TE: H at face circumcenters; TM: integrated H along edges
    long n = 0;
    double t = 0.0;
};

FieldState zero_state(Mode mode, const mesh::SimplicialSurface& surface);

/// Zero edge field and a Gaussian bump amplitude * exp(-|c(P) - center|^2 / width^2)
/// in the face unknown (H in TE, E in TM). Satisfies both Gauss laws with no charge.
FieldState gaussian_state(Mode mode, const mesh::SimplicialSurface& surface,
                          const mesh::DualMetrics& metrics, const mesh::Vec3& center, double width,
                          double amplitude);

enum class CurrentKind { electric, magnetic };

/// Gaussian current pulse amplitude * exp(-((t - t0) / width)^2), applied as
/// a pointwise density on the listed elements: edges for the current that
/// shares the edge unknown's placement, faces otherwise.
struct SourceSpec {
    enum class Kind { none, gaussian_pulse };

    Kind kind = Kind::none;
    CurrentKind current = CurrentKind::electric;
    double amplitude = 0.0;
    double t0 = 0.0;
    double width = 1.0;
    std::vector<Index> support;

    double value(double t) const;
    /// True when the support lists edges for this mode.
    bool on_edges(Mode mode) const;
    void validate(Mode mode, const mesh::SimplicialSurface& surface) const;
};

enum class LinearSolver { iterative, direct };

struct StepperOptions {
    LinearSolver method = LinearSolver::iterative;
    double tolerance = 1e-10;
    int max_iterations = 0; // 0 selects ceil(10 * sqrt(unknowns))
    bool allow_indefinite = false;
    double jm_sign = 1.0; // sign of the magnetic current term in the update
};

struct SolveStats {
    int iterations = 0;
    double relative_residual = 0.0;
    bool direct = false;
};

/// The implicit update for one polarisation.
///
/// Writing x for the edge unknown and y for the face unknown, one step solves
///
///   (p_x/dt + q_x/2) *1 x' - kappa d1^T y' = (p_x/dt - q_x/2) *1 x - *1 jx
///   kappa d1 x' + (p_y/dt + q_y/2) *2^-1 y' = (p_y/dt - q_y/2) *2^-1 y - *2^-1 jy
///
/// with kappa = +1 in TE (p_x = eps, p_y = mu) and kappa = -1 in TM
/// (p_x = mu, p_y = eps). The edge block is diagonal, so it is eliminated and
/// one symmetric positive definite system in y' remains. In TE the boundary
/// edges are perfect conductors and their unknowns stay at zero.
class ImplicitStepper {
public:
    static ImplicitStepper assemble(Mode mode, const mesh::SimplicialSurface& surface,
                                    const mesh::DualMetrics& metrics, const MaterialParams& materials,
                                    double dt, StepperOptions options = {});

    /// Advances state by one step with sources sampled at t + dt/2. The face
    /// unknown is solved for as an increment over the old value, so the
    /// tolerance applies to the change per step.
    FieldState step(const FieldState& state, std::span<const SourceSpec> sources = {});

    /// 1/2 (x^T p_x *1 x + y^T p_y *2^-1 y).
    double energy(const FieldState& state) const;

    Mode mode() const { return mode_; }
    double dt() const { return dt_; }
    const SparseMatrix& schur_matrix() const { return schur_; }
    const dec::HodgeStars& stars() const { return stars_; }
    const StepperOptions& options() const { return options_; }
    const SolveStats& last_solve() const { return last_; }
    bool indefinite() const { return indefinite_; }
    int max_iterations() const;

    /// The coupled two-field system behind the step, unknowns ordered
    /// (edges, faces). PEC edges appear as identity rows.
    SparseMatrix coupled_matrix() const;
    Vector coupled_rhs(const FieldState& state, std::span<const SourceSpec> sources) const;

    /// Edge-placed and face-placed source cochains at time t.
    std::pair<Vector, Vector> source_cochains(std::span<const SourceSpec> sources, double t) const;

private:
    ImplicitStepper() = default;

    Mode mode_ = Mode::TE;
    double dt_ = 0.0;
    StepperOptions options_;
    std::size_t num_edges_ = 0;
    std::size_t num_faces_ = 0;
    dec::HodgeStars stars_;
    Vector edge_len_;
    Vector face_area_;
    Vector edge_mass_;      // p_x *1, for the energy
    Vector face_mass_;      // p_y *2^-1
    Vector edge_lhs_;       // (p_x/dt + q_x/2) *1
    Vector edge_rhs_;       // (p_x/dt - q_x/2) *1
    Vector face_lhs_;       // (p_y/dt + q_y/2) *2^-1
    Vector face_rhs_;       // (p_y/dt - q_y/2) *2^-1
    Vector edge_free_;      // 1 on edges that are unknowns, 0 on PEC edges
    SparseMatrix d1_;
    SparseMatrix schur_;
    double kappa_ = 1.0;
    bool indefinite_ = false;
    std::shared_ptr<Eigen::SimplicialLDLT<SparseMatrix>> factor_;
    Vector increment_; // warm start for the next solve
    SolveStats last_;
};

/// Discrete Gauss laws for a state.
///
/// TE: per_vertex = d0^T (eps *1 e) - *0 rho (electric); per_face is the
/// magnetic law, identically zero because B is a top form.
/// TM: per_vertex = d0^T (mu *1 h) - *0 rho (magnetic); per_face is the
/// electric law, identically zero.
/// In TE, vertices on the conducting boundary carry induced surface charge
/// and are reported as zero.
struct GaussResiduals {
    Vector per_vertex;
    Vector per_face;
    /// Scale for relative comparisons: max over vertices of the summed
    /// magnitudes of the fluxes entering the vertex law.
    double scale = 0.0;
    double max_abs() const;
};

/// `charge` is a pointwise per-vertex density (electric in TE, magnetic in
/// TM); pass an empty vector for no charge.
GaussResiduals gauss_residuals(const FieldState& state, const mesh::SimplicialSurface& surface,
                               const dec::HodgeStars& stars, const MaterialParams& materials,
                               const Vector& charge = {});

} // namespace idec::solver
