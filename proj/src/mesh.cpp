#include "tml/mesh.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "tml/errors.hpp"

namespace tml {

std::string format_coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

MeshResult build_mesh(const SurfaceModel& m, const Box& box, int grid_n) {
    if (grid_n < 2) throw ConfigError("grid resolution must be >= 2");
    MeshResult out;
    out.grid_n = grid_n;

    auto sign_key = [&](double x1, double x4) {
        std::string k;
        k.reserve(m.lines1().size() + m.lines2().size());
        for (double p : m.lines1()) k.push_back(x1 + x4 > p ? '+' : '-');
        for (double q : m.lines2()) k.push_back(x1 - x4 > q ? '+' : '-');
        return k;
    };

    int n = grid_n;
    std::vector<int> comp_of(n * n, -1);    // component index per node
    std::vector<int> local_idx(n * n, -1);  // index inside its component
    std::map<std::string, int> comp_index;

    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double x1 = box.x1_min + i * (box.x1_max - box.x1_min) / (n - 1);
            double x4 = box.x4_min + j * (box.x4_max - box.x4_min) / (n - 1);
            int node = j * n + i;
            if (m.in_exclusion_band(x1, x4)) {
                ++out.excluded;
                continue;
            }
            std::string key = sign_key(x1, x4);
            auto it = comp_index.find(key);
            int ci;
            if (it == comp_index.end()) {
                ci = static_cast<int>(out.components.size());
                comp_index.emplace(key, ci);
                out.components.push_back({key, {}, {}});
            } else {
                ci = it->second;
            }
            MeshVertex v;
            v.x1 = x1;
            v.x4 = x4;
            v.X = m.eval_timelike(x1, x4);
            comp_of[node] = ci;
            local_idx[node] = static_cast<int>(out.components[ci].vertices.size());
            out.components[ci].vertices.push_back(v);
        }

    for (int j = 0; j + 1 < n; ++j)
        for (int i = 0; i + 1 < n; ++i) {
            int a = j * n + i, b = j * n + i + 1;
            int c = (j + 1) * n + i + 1, d = (j + 1) * n + i;
            int ci = comp_of[a];
            if (ci < 0 || comp_of[b] != ci || comp_of[c] != ci || comp_of[d] != ci)
                continue;
            auto& tris = out.components[ci].triangles;
            tris.push_back({local_idx[a], local_idx[b], local_idx[c]});
            tris.push_back({local_idx[a], local_idx[c], local_idx[d]});
        }
    return out;
}

void write_obj(const MeshComponent& c, std::ostream& os) {
    os << "# domain component sign pattern: " << (c.key.empty() ? "(none)" : c.key) << "\n";
    for (const auto& v : c.vertices)
        os << "v " << format_coord(v.X[0]) << ' ' << format_coord(v.X[1]) << ' '
           << format_coord(v.X[2]) << "\n";
    for (const auto& t : c.triangles)
        os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << "\n";
}

void write_samples_csv(const MeshResult& mesh, std::ostream& os) {
    os << "component,x1,x4,X1,X2,X3\n";
    for (size_t ci = 0; ci < mesh.components.size(); ++ci)
        for (const auto& v : mesh.components[ci].vertices)
            os << ci << ',' << format_coord(v.x1) << ',' << format_coord(v.x4) << ','
               << format_coord(v.X[0]) << ',' << format_coord(v.X[1]) << ','
               << format_coord(v.X[2]) << "\n";
}

std::vector<std::string> write_mesh_files(const MeshResult& mesh, const std::string& dir,
                                          const std::string& stem) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::vector<std::string> written;
    for (size_t ci = 0; ci < mesh.components.size(); ++ci) {
        std::string path = (fs::path(dir) / (stem + "_component" + std::to_string(ci) +
                                             ".obj")).string();
        std::ofstream os(path);
        if (!os) throw Error("cannot open " + path);
        write_obj(mesh.components[ci], os);
        written.push_back(path);
    }
    std::string csv = (fs::path(dir) / (stem + "_samples.csv")).string();
    std::ofstream os(csv);
    if (!os) throw Error("cannot open " + csv);
    write_samples_csv(mesh, os);
    written.push_back(csv);
    return written;
}

void write_singular_csv(const SingularCurve& sing, std::ostream& os) {
    os << "polyline,x1,x4\n";
    for (size_t k = 0; k < sing.polylines.size(); ++k)
        for (const auto& v : sing.polylines[k])
            os << k << ',' << format_coord(v[0]) << ',' << format_coord(v[1]) << "\n";
}

} // namespace tml
