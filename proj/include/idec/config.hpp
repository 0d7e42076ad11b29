#pragma once

#include "idec/mesh.hpp"
#include "idec/solver.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace idec::cli {

using mesh::Index;

/// Flat `key = value` text. `#` starts a comment, keys are dotted, and a key
/// may appear once. Relative paths resolve against the file's directory.
class ConfigFile {
public:
    static ConfigFile parse(std::istream& in, std::filesystem::path base_dir, std::string origin = "config");
    static ConfigFile load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::string text(const std::string& key) const;
    std::string text(const std::string& key, const std::string& fallback) const;
    double number(const std::string& key) const;
    double number(const std::string& key, double fallback) const;
    long integer(const std::string& key, long fallback) const;
    bool boolean(const std::string& key, bool fallback) const;
    std::filesystem::path path(const std::string& key) const;
    std::vector<double> numbers(const std::string& key) const;
    std::vector<Index> indices(const std::string& key) const;
    std::vector<std::string> words(const std::string& key) const;

    /// Distinct `<name>` segments of keys shaped `prefix.<name>.<rest>`.
    std::vector<std::string> sections(const std::string& prefix) const;
    const std::map<std::string, std::string>& values() const { return values_; }
    const std::filesystem::path& base_dir() const { return base_dir_; }

private:
    [[noreturn]] void fail(const std::string& key, const std::string& what) const;

    std::map<std::string, std::string> values_;
    std::map<std::string, int> lines_;
    std::filesystem::path base_dir_;
    std::string origin_;
};

struct Region {
    std::string name;
    std::vector<Index> faces;
    std::optional<double> eps, mu, sigma, sigma_m;
};

struct MaterialSpec {
    double eps = solver::kVacuumPermittivity;
    double mu = solver::kVacuumPermeability;
    double sigma = 0.0;
    double sigma_m = 0.0;
    std::vector<Region> regions;

    /// Per-face values with regions applied in name order.
    solver::MaterialParams build(solver::Mode mode, const mesh::SimplicialSurface& surface) const;
};

struct InitSpec {
    enum class Kind { zero, gaussian };
    Kind kind = Kind::zero;
    mesh::Vec3 center = mesh::Vec3::Zero();
    double width = 1.0;
    double amplitude = 1.0;
    bool abort_on_violation = true;
};

struct OutputSpec {
    std::filesystem::path dir = "output";
    long cadence = 1;
    bool vtk = true;
    bool csv = true;
};

struct StabilitySpec {
    std::vector<double> dt_factors = {1e-3, 1.0, 1e3}; // multiples of min |*e| / max c
    int k_samples = 64;
    int empirical_steps = 200;
};

struct ConvergenceSpec {
    std::vector<std::filesystem::path> meshes;
    solver::Mode mode = solver::Mode::TM;
    int m = 1;
    int n = 1;
    double final_time = 0.5;
    double coarse_dt = 0.03125;
    std::vector<double> temporal_dts = {0.025, 0.0125, 0.00625};
};

struct RunConfig {
    std::filesystem::path mesh_path;
    solver::Mode mode = solver::Mode::TE;
    std::optional<double> dt;     // seconds
    std::optional<double> dt_cfl; // multiples of min |*e| / max c
    long steps = 0;
    MaterialSpec materials;
    solver::SourceSpec source;
    InitSpec init;
    std::vector<Index> probe_edges;
    std::vector<Index> probe_faces;
    OutputSpec output;
    solver::StepperOptions stepper;
    bool allow_non_well_centered = false;
    StabilitySpec stability;
    ConvergenceSpec convergence;

    /// Reads every recognised key; unknown keys are an error.
    static RunConfig from_file(const ConfigFile& file);
    static RunConfig load(const std::filesystem::path& path);

    /// Checks element indices and ranges against the loaded mesh.
    void validate(const mesh::SimplicialSurface& surface) const;
    /// dt in seconds, resolving dt_cfl against the mesh and materials.
    double time_step(const mesh::SimplicialSurface& surface, const mesh::DualMetrics& metrics,
                     const solver::MaterialParams& materials) const;
};

/// min |*e| / max wave speed, the explicit-scheme step scale.
double explicit_step_scale(solver::Mode mode, const mesh::SimplicialSurface& surface,
                           const mesh::DualMetrics& metrics, const solver::MaterialParams& materials);

} // namespace idec::cli
