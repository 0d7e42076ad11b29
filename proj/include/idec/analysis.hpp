#pragma once

#include "idec/mesh.hpp"
#include "idec/solver.hpp"

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace idec::analysis {

using mesh::Index;
using solver::Mode;

/// Amplification of the plane-wave ansatz for one face.
struct GrowthFactor {
    double M = 0.0;
    std::array<std::complex<double>, 2> roots;

    double modulus() const { return std::max(std::abs(roots[0]), std::abs(roots[1])); }
};

/// Roots of (1 + M) xi^2 - 2 xi + 1 = 0 from the quadratic formula.
std::array<std::complex<double>, 2> growth_roots(double M);

/// Per-face inputs of the growth factor. `edge_coeff` is the material sitting
/// with the edge unknown (eps in TE), `face_coeff` the one with the face
/// unknown (mu in TE).
struct FaceStencil {
    std::array<double, 3> edge_len;
    std::array<double, 3> dual_edge_len;
    std::array<double, 3> edge_coeff;
    double area = 0.0;
    double face_coeff = 0.0;
};

/// M = dt^2 / (face_coeff |P|) * sum_i (1 - cos(k |*e_i|)) |e_i| / (edge_coeff_i |*e_i|).
/// With uniform materials the prefactor is (c dt)^2 / |P|; the free mode
/// weight of the ansatz is taken as 1.
GrowthFactor growth_factor(const FaceStencil& stencil, double dt, double k);

FaceStencil face_stencil(Index face, const mesh::SimplicialSurface& surface, const mesh::DualMetrics& metrics,
                         const solver::MaterialParams& materials, Mode mode);

GrowthFactor growth_factor(Index face, const mesh::SimplicialSurface& surface, const mesh::DualMetrics& metrics,
                           const solver::MaterialParams& materials, Mode mode, double dt, double k);

struct GrowthSample {
    Index face = 0;
    double k = 0.0;
    double M = 0.0;
    double xi_mod = 0.0;
    double dt = 0.0;
};

struct StabilityOptions {
    std::vector<double> dt_list;
    int k_samples = 64;          // uniform in [0, pi / min |*e|]
    int empirical_steps = 200;   // 0 skips the energy cross-check
    double solver_tolerance = 1e-10; // allowed per-step energy growth
};

struct GrowthFactorReport {
    Mode mode = Mode::TE;
    std::vector<GrowthSample> samples;
    std::vector<double> dt_list;
    int k_samples = 0;
    double k_max = 0.0;
    double min_wave_speed = 0.0;
    double max_wave_speed = 0.0;
    double min_M = 0.0;
    double max_xi = 0.0;
    double max_root_defect = 0.0; // max | |xi| - 1/sqrt(1+M) |
    bool empirical_checked = false;
    double empirical_dt = 0.0;
    int empirical_steps = 0;
    double empirical_max_ratio = 0.0; // max E^{n+1} / E^n

    /// max |xi| <= 1 + 1e-12 and, when run, energy ratio <= 1 + solver tolerance.
    bool stable(double solver_tolerance = 1e-10) const;
    void write_csv(std::ostream& out) const;
    std::string summary(double solver_tolerance = 1e-10) const;
};

/// Evaluates the growth factor of every face over the k grid for each dt,
/// then runs the lossless stepper (direct solves) at the largest dt from a
/// Gaussian bump and records the largest per-step energy ratio.
GrowthFactorReport stability_sweep(Mode mode, const mesh::SimplicialSurface& surface,
                                   const mesh::DualMetrics& metrics, const solver::MaterialParams& materials,
                                   const StabilityOptions& options);

/// Standing mode of the PEC unit square with wave numbers (m pi, n pi).
/// TM: E_z = sin(m pi x) sin(n pi y) cos(w t); TE: H_z = cos(m pi x) cos(n pi y) cos(w t).
struct CavityMode {
    Mode mode = Mode::TM;
    int m = 1;
    int n = 1;
    double eps = 1.0;
    double mu = 1.0;

    double omega() const;
    /// Out-of-plane field (E_z in TM, H_z in TE).
    double face_field(const mesh::Vec3& p, double t) const;
    /// In-plane field (H in TM, E in TE).
    mesh::Vec3 edge_field(const mesh::Vec3& p, double t) const;
};

/// Face values at circumcenters, edge cochains by the midpoint rule.
solver::FieldState project(const CavityMode& oracle, const mesh::SimplicialSurface& surface,
                           const mesh::DualMetrics& metrics, double t);

/// sqrt(sum_e *1 (x - x')^2 + sum_f |P| (y - y')^2).
double field_error(const solver::FieldState& a, const solver::FieldState& b, const mesh::DualMetrics& metrics);

struct ConvergenceRun {
    double h = 0.0;
    double dt = 0.0;
    long steps = 0;
    double error = 0.0;
};

struct ConvergenceOptions {
    CavityMode oracle;
    double final_time = 0.5;
    /// Joint refinement: dt on the coarsest mesh, scaled with h on the others.
    double joint_coarse_dt = 0.03125;
    /// Time-only refinement on the finest mesh.
    std::vector<double> temporal_dts = {0.025, 0.0125, 0.00625};
    solver::LinearSolver method = solver::LinearSolver::direct;
};

struct ConvergenceReport {
    std::vector<ConvergenceRun> joint;
    std::vector<ConvergenceRun> temporal;
    double joint_order = 0.0;
    double temporal_order = 0.0;

    void write_csv(std::ostream& out) const;
    std::string summary() const;
};

/// Least-squares slope of log(error) against log(step).
double fitted_order(const std::vector<double>& step, const std::vector<double>& error);

/// Largest edge length.
double mesh_size(const mesh::DualMetrics& metrics);

/// Throws unless each mesh contains every vertex of the previous one and h decreases.
void require_nested(const std::vector<mesh::SimplicialSurface>& family);

ConvergenceReport convergence_study(const std::vector<mesh::SimplicialSurface>& family,
                                    const ConvergenceOptions& options);

} // namespace idec::analysis
