#ifndef OESV_PROJECTION_HPP_
#define OESV_PROJECTION_HPP_

#include <functional>
#include <span>

#include "oesv/field.hpp"
#include "oesv/mesh.hpp"

namespace oesv {

/// Component-valued functions used as initial data and exact solutions.
using Function1D = std::function<void(double x, std::span<double> out)>;
using Function2D = std::function<void(double x, double y, std::span<double> out)>;

Function1D scalar_function(std::function<double(double)> f);
Function2D scalar_function(std::function<double(double, double)> f);

/// Cellwise L2 projection onto V^k using an n-point Gauss rule per direction
/// (n <= 0 selects k+2).
Field l2_project(const Mesh1D& mesh, int num_comp, const Function1D& f, int n = 0);
Field l2_project(const Mesh2D& mesh, int num_comp, const Function2D& f, int n = 0);

/// Interpolation at the k interior subdivision points and the right end
/// point of each cell (tensor product of those points in 2D).
Field pstar_project(const Mesh1D& mesh, int num_comp, const Function1D& f);
Field pstar_project(const Mesh2D& mesh, int num_comp, const Function2D& f);

}  // namespace oesv

#endif  // OESV_PROJECTION_HPP_
