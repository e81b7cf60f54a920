#include "oesv/time_integration.hpp"

#include <algorithm>

namespace oesv {

double RKScheme::row_sum_defect() const {
  double worst = 0.0;
  for (const auto& row : c) {
    double s = 0.0;
    for (double x : row) s += x;
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

double RKScheme::amplification(double z) const {
  const int ns = stages();
  std::vector<double> u(ns + 1);
  u[0] = 1.0;
  for (int l = 0; l < ns; ++l) {
    double v = 0.0;
    for (int k = 0; k <= l; ++k) v += c[l][k] * u[k] + z * d[l][k] * u[k];
    u[l + 1] = v;
  }
  return u[ns];
}

RKScheme builtin_scheme(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char ch) { return std::toupper(ch); });
  if (n == "SSPRK2") {
    return {"SSPRK2", 2, {{1.0}, {0.5, 0.5}}, {{1.0}, {0.0, 0.5}}};
  }
  if (n == "SSPRK3") {
    return {"SSPRK3",
            3,
            {{1.0}, {0.75, 0.25}, {1.0 / 3.0, 0.0, 2.0 / 3.0}},
            {{1.0}, {0.0, 0.25}, {0.0, 0.0, 2.0 / 3.0}}};
  }
  if (n == "RK4") {
    return {"RK4",
            4,
            {{1.0}, {1.0, 0.0}, {1.0, 0.0, 0.0}, {-1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0}},
            {{0.5}, {0.0, 0.5}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0, 1.0 / 6.0}}};
  }
  throw UnknownScheme("unknown RK scheme '" + name + "' (known: SSPRK2, SSPRK3, RK4)");
}

RKScheme scheme_for_order(int order) {
  if (order <= 2) return builtin_scheme("SSPRK2");
  if (order == 3) return builtin_scheme("SSPRK3");
  return builtin_scheme("RK4");
}

std::vector<std::string> builtin_scheme_names() { return {"SSPRK2", "SSPRK3", "RK4"}; }

}  // namespace oesv
