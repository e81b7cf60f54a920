#ifndef OESV_NORMS_HPP_
#define OESV_NORMS_HPP_

#include "oesv/field.hpp"
#include "oesv/mesh.hpp"

namespace oesv {

/// <v, w>_* summed over cells and components.
double star_inner(const Mesh1D& mesh, const Field& v, const Field& w);
double star_inner(const Mesh2D& mesh, const Field& v, const Field& w);
double star_norm(const Mesh1D& mesh, const Field& v);
double star_norm(const Mesh2D& mesh, const Field& v);

/// Plain L2 norm computed from the modal coefficients.
double l2_norm(const Mesh1D& mesh, const Field& v);
double l2_norm(const Mesh2D& mesh, const Field& v);

/// ([[v]], [[w]]): sum of interface jump products. In 2D the faces are
/// integrated with a (k+1)-point Gauss rule. With periodic = false the
/// domain boundary carries no jump.
double jump_inner(const Mesh1D& mesh, const Field& v, const Field& w, bool periodic = true);
double jump_inner(const Mesh2D& mesh, const Field& v, const Field& w, bool periodic_x = true,
                  bool periodic_y = true);
double jump_seminorm(const Mesh1D& mesh, const Field& v, bool periodic = true);
double jump_seminorm(const Mesh2D& mesh, const Field& v, bool periodic_x = true,
                     bool periodic_y = true);

/// Total mass sum_K |K| * average, per component.
std::vector<double> total_mass(const Mesh1D& mesh, const Field& v);
std::vector<double> total_mass(const Mesh2D& mesh, const Field& v);

}  // namespace oesv

#endif  // OESV_NORMS_HPP_
