#include "oesv/oe_filter.hpp"

#include <fstream>
#include <iomanip>

namespace oesv {

void write_damping_csv(const DampingReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << std::setprecision(17);
  out << "cell,m,delta,exponent";
  for (int f = 0; f < r.faces_per_cell; ++f) out << ",sigma_face" << f;
  out << '\n';
  for (int i = 0; i < r.num_cells; ++i) {
    for (int m = 0; m <= r.k; ++m) {
      out << i << ',' << m << ',' << r.delta_at(i, m) << ',' << r.exponent_at(i, m);
      for (int f = 0; f < r.faces_per_cell; ++f) out << ',' << r.sigma_at(i, f, m);
      out << '\n';
    }
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace oesv
