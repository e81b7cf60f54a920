#ifndef OESV_IO_HPP_
#define OESV_IO_HPP_

#include <map>
#include <string>
#include <vector>

#include "oesv/field.hpp"
#include "oesv/mesh.hpp"

namespace oesv {

/// Column names for the components of `num_comp`-component fields in `dim`
/// dimensions (u; rho, momentum, energy; rho, momentum_x, momentum_y, energy).
std::vector<std::string> component_names(int dim, int num_comp);

/// (x, components) at k+1 equispaced points per cell, including both cell
/// ends, so discontinuities show as repeated x values. k = 0 samples the
/// centre.
void write_solution_csv(const Mesh1D& mesh, const Field& u, const std::vector<std::string>& names,
                        const std::string& path);

/// Legacy ASCII STRUCTURED_POINTS file with one CELL_DATA scalar per
/// component holding the cell averages.
void write_vtk_averages(const Mesh2D& mesh, const Field& u, const std::vector<std::string>& names,
                        const std::string& path);
/// Same format on the (k+1)-refined grid, each sub-square holding the
/// polynomial value at its centre.
void write_vtk_nodal(const Mesh2D& mesh, const Field& u, const std::vector<std::string>& names,
                     const std::string& path);

struct VtkGrid {
  int nx = 0, ny = 0;  // cells
  double x0 = 0, y0 = 0, dx = 0, dy = 0;
  std::map<std::string, std::vector<double>> cell_data;
};
/// Reads files produced by the writers above; throws IoError on malformed
/// input.
VtkGrid read_vtk(const std::string& path);

/// Creates the directory (and parents) if needed; throws IoError.
void ensure_directory(const std::string& dir);

}  // namespace oesv

#endif  // OESV_IO_HPP_
