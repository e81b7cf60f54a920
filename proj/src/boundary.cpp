#include "oesv/boundary.hpp"

#include "oesv/errors.hpp"

namespace oesv {

std::string to_string(BcKind kind) {
  switch (kind) {
    case BcKind::Periodic: return "periodic";
    case BcKind::Outflow: return "outflow";
    case BcKind::Reflective: return "reflective";
    case BcKind::Inflow: return "inflow";
    case BcKind::DoubleMachTop: return "double_mach_top";
    case BcKind::DoubleMachBottom: return "double_mach_bottom";
  }
  return "?";
}

BcKind parse_bc_kind(const std::string& name) {
  if (name == "periodic") return BcKind::Periodic;
  if (name == "outflow") return BcKind::Outflow;
  if (name == "reflective") return BcKind::Reflective;
  if (name == "inflow") return BcKind::Inflow;
  if (name == "double_mach_top") return BcKind::DoubleMachTop;
  if (name == "double_mach_bottom") return BcKind::DoubleMachBottom;
  throw ValidationError("unknown boundary kind '" + name + "'");
}

namespace {
void check_pair(const BoundaryCondition& a, const BoundaryCondition& b, const char* axis) {
  const bool pa = a.kind == BcKind::Periodic, pb = b.kind == BcKind::Periodic;
  if (pa != pb) {
    throw ValidationError(std::string("periodic boundary on one ") + axis +
                          " side requires periodic on the opposite side");
  }
  for (const auto* bc : {&a, &b}) {
    if (bc->kind == BcKind::Inflow && !bc->inflow) {
      throw ValidationError("inflow boundary without a prescribed state");
    }
  }
}
}  // namespace

void Boundaries1D::validate() const { check_pair(left, right, "x"); }

void Boundaries2D::validate() const {
  check_pair(left, right, "x");
  check_pair(bottom, top, "y");
}

}  // namespace oesv
