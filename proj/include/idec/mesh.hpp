#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/SparseCore>

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace idec::mesh {

using Vec3 = Eigen::Vector3d;
using Index = std::size_t;
using IncidenceMatrix = Eigen::SparseMatrix<int, Eigen::RowMajor>;

/// An edge stored with its canonical orientation, tail < head.
struct Edge {
    Index tail;
    Index head;
};

/// Oriented triangle surface with the two incidence matrices of its complex.
///
/// Edges are numbered in lexicographic order of (tail, head). Faces keep the
/// winding they were given; a face (a, b, c) has boundary a -> b -> c -> a.
/// `d0` is edges x vertices (+1 at the head, -1 at the tail) and `d1` is
/// faces x edges (+1 where the canonical edge direction agrees with the face
/// boundary). Immutable once built.
class SimplicialSurface {
public:
    /// Builds the complex, rejecting non-manifold edges, inconsistent winding
    /// across interior edges, repeated corners and unreferenced vertices.
    static SimplicialSurface from_triangles(std::vector<Vec3> vertices,
                                            std::vector<std::array<Index, 3>> faces);

    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::array<Index, 3>>& faces() const { return faces_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_faces() const { return faces_.size(); }
    long euler_characteristic() const;

    const IncidenceMatrix& d0() const { return d0_; }
    const IncidenceMatrix& d1() const { return d1_; }

    /// Edges of face f in boundary order (a,b), (b,c), (c,a).
    const std::array<Index, 3>& face_edges(Index f) const { return face_edges_[f]; }
    /// Sign of d1[f, face_edges(f)[k]].
    const std::array<int, 3>& face_edge_signs(Index f) const { return face_edge_signs_[f]; }
    /// One or two incident faces; the second slot is `npos` on the boundary.
    const std::array<Index, 2>& edge_faces(Index e) const { return edge_faces_[e]; }

    bool is_boundary_edge(Index e) const { return edge_faces_[e][1] == npos; }
    bool is_boundary_vertex(Index v) const { return boundary_vertex_[v]; }
    const std::vector<Index>& boundary_edges() const { return boundary_edges_; }
    bool closed() const { return boundary_edges_.empty(); }

    static constexpr Index npos = static_cast<Index>(-1);

private:
    std::vector<Vec3> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::array<Index, 3>> faces_;
    std::vector<std::array<Index, 3>> face_edges_;
    std::vector<std::array<int, 3>> face_edge_signs_;
    std::vector<std::array<Index, 2>> edge_faces_;
    std::vector<Index> boundary_edges_;
    std::vector<bool> boundary_vertex_;
    IncidenceMatrix d0_;
    IncidenceMatrix d1_;
};

/// Reads `v x y z` and `f i j k` records; every other record is ignored.
/// Face tokens may carry `/vt/vn` suffixes and negative (relative) indices.
SimplicialSurface parse_obj(std::istream& in);
SimplicialSurface load_obj(const std::filesystem::path& path);

/// Primal and circumcentric dual measures.
struct DualMetrics {
    std::vector<double> edge_len;         // |e|
    std::vector<double> face_area;        // |P|
    std::vector<double> dual_edge_len;    // |*e|, polyline c(P1) - c(e) - c(P2)
    std::vector<double> dual_vertex_area; // |*v|
    std::vector<Vec3> face_circumcenter;  // c(P)
    std::vector<Vec3> edge_midpoint;      // c(e)
    std::vector<bool> well_centered;      // c(P) inside or on the closed face
    bool signed_lengths = false;

    std::size_t non_well_centered_count() const;
};

/// Computes every measure used by the discrete operators.
///
/// Without `allow_non_well_centered` a face whose circumcenter lies outside
/// it is an error. With it, each dual edge segment is signed: negative when
/// c(P) is on the far side of e from the opposite vertex, and the dual vertex
/// kites inherit that sign. A zero dual length on an interior edge is always
/// an error.
DualMetrics compute_dual_metrics(const SimplicialSurface& surface,
                                 bool allow_non_well_centered = false);

/// Summary printed by `check-mesh`.
struct MeshReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    std::size_t boundary_edges = 0;
    long euler = 0;
    double min_edge_len = 0.0;
    double max_edge_len = 0.0;
    double min_dual_edge_len = 0.0;
    std::size_t non_well_centered = 0;
    std::size_t zero_dual_edges = 0;
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
    std::string to_text() const;
};

MeshReport check_mesh(const SimplicialSurface& surface);

} // namespace idec::mesh
