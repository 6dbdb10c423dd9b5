#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "tml/analysis.hpp"
#include "tml/surface.hpp"

namespace tml {

struct MeshVertex {
    double x1 = 0, x4 = 0;
    std::array<double, 3> X{};
};

// One connected component of the domain, identified by the sign pattern of
// (x1+x4 - p_i) over the factor-1 lines followed by (x1-x4 - q_j) over the
// factor-2 lines.
struct MeshComponent {
    std::string key;  // e.g. "+-" ; empty when there are no lines
    std::vector<MeshVertex> vertices;
    std::vector<std::array<int, 3>> triangles;  // local 0-based indices
};

struct MeshResult {
    std::vector<MeshComponent> components;  // first-seen scan order
    int grid_n = 0;
    int excluded = 0;  // grid nodes inside exclusion bands
};

MeshResult build_mesh(const SurfaceModel& m, const Box& box, int grid_n);

// Floats at 12 significant digits throughout.
std::string format_coord(double v);

void write_obj(const MeshComponent& c, std::ostream& os);
void write_samples_csv(const MeshResult& mesh, std::ostream& os);

// One OBJ per component (stem_component0.obj, ...) plus stem_samples.csv;
// returns the written paths.
std::vector<std::string> write_mesh_files(const MeshResult& mesh, const std::string& dir,
                                          const std::string& stem);

void write_singular_csv(const SingularCurve& sing, std::ostream& os);

} // namespace tml
