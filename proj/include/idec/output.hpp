#pragma once

#include "idec/mesh.hpp"
#include "idec/solver.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace idec::output {

/// Per-face vector from an edge 1-cochain (values along the canonical edge
/// direction), evaluating the Whitney interpolant at the face barycenter.
std::vector<mesh::Vec3> whitney_barycenter(const mesh::SimplicialSurface& surface, const solver::Vector& edge_cochain);

/// Legacy ASCII VTK unstructured grid with the face unknown as cell scalars
/// and the reconstructed edge field as cell vectors.
void write_vtk(std::ostream& out, const mesh::SimplicialSurface& surface, const solver::FieldState& state);

/// edge_id,tail,head,value and face_id,value tables of the raw unknowns.
void write_edge_csv(std::ostream& out, const mesh::SimplicialSurface& surface, const solver::Vector& values);
void write_face_csv(std::ostream& out, const solver::Vector& values);

/// Shortest round-trip decimal form.
std::string format_double(double v);

/// Writes through a temporary file and a rename.
void write_file(const std::filesystem::path& path, const std::string& contents);

} // namespace idec::output
