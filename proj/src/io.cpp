#include "oesv/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oesv/basis.hpp"
#include "oesv/errors.hpp"

namespace oesv {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.precision(17);
  return out;
}

void close_out(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed");
}

double eval2(const Field& u, int cell, int comp, double xi, double eta) {
  const int k = u.k();
  const auto m = u.modes(cell, comp);
  double v = 0.0;
  for (int b = 0; b <= k; ++b) {
    double row = 0.0;
    for (int a = 0; a <= k; ++a) row += m[a + (k + 1) * b] * legendre(a, xi);
    v += row * legendre(b, eta);
  }
  return v;
}

void vtk_header(std::ofstream& out, int nx, int ny, double x0, double y0, double dx, double dy) {
  out << "# vtk DataFile Version 3.0\n"
      << "oesv solution\n"
      << "ASCII\n"
      << "DATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << nx + 1 << ' ' << ny + 1 << " 1\n"
      << "ORIGIN " << x0 << ' ' << y0 << " 0\n"
      << "SPACING " << dx << ' ' << dy << " 1\n"
      << "CELL_DATA " << static_cast<long>(nx) * ny << '\n';
}

}  // namespace

std::vector<std::string> component_names(int dim, int num_comp) {
  if (num_comp == 1) return {"u"};
  if (dim == 1 && num_comp == 3) return {"rho", "momentum", "energy"};
  if (dim == 2 && num_comp == 4) return {"rho", "momentum_x", "momentum_y", "energy"};
  std::vector<std::string> n;
  for (int c = 0; c < num_comp; ++c) n.push_back("u" + std::to_string(c));
  return n;
}

void write_solution_csv(const Mesh1D& mesh, const Field& u, const std::vector<std::string>& names,
                        const std::string& path) {
  auto out = open_out(path);
  out << "x";
  for (const auto& n : names) out << ',' << n;
  out << '\n';
  const int k = u.k();
  for (int i = 0; i < mesh.num_cells(); ++i) {
    for (int j = 0; j <= k; ++j) {
      const double xi = k == 0 ? 0.0 : -1.0 + 2.0 * j / k;
      out << mesh.to_physical(i, xi);
      for (int c = 0; c < u.num_comp(); ++c) {
        double v = 0.0;
        for (int l = 0; l <= k; ++l) v += u(i, c, l) * legendre(l, xi);
        out << ',' << v;
      }
      out << '\n';
    }
  }
  close_out(out, path);
}

void write_vtk_averages(const Mesh2D& mesh, const Field& u, const std::vector<std::string>& names,
                        const std::string& path) {
  auto out = open_out(path);
  vtk_header(out, mesh.nx(), mesh.ny(), mesh.domain().x0, mesh.domain().y0, mesh.hx(), mesh.hy());
  for (int c = 0; c < u.num_comp(); ++c) {
    out << "SCALARS " << names[c] << " double 1\nLOOKUP_TABLE default\n";
    for (int cell = 0; cell < mesh.num_cells(); ++cell) out << u(cell, c, 0) << '\n';
  }
  close_out(out, path);
}

void write_vtk_nodal(const Mesh2D& mesh, const Field& u, const std::vector<std::string>& names,
                     const std::string& path) {
  const int n1 = u.k() + 1;
  const int nx = mesh.nx() * n1, ny = mesh.ny() * n1;
  auto out = open_out(path);
  vtk_header(out, nx, ny, mesh.domain().x0, mesh.domain().y0, mesh.hx() / n1, mesh.hy() / n1);
  for (int c = 0; c < u.num_comp(); ++c) {
    out << "SCALARS " << names[c] << " double 1\nLOOKUP_TABLE default\n";
    for (int gy = 0; gy < ny; ++gy) {
      const int iy = gy / n1;
      const double eta = -1.0 + (2.0 * (gy % n1) + 1.0) / n1;
      for (int gx = 0; gx < nx; ++gx) {
        const int ix = gx / n1;
        const double xi = -1.0 + (2.0 * (gx % n1) + 1.0) / n1;
        out << eval2(u, mesh.index(ix, iy), c, xi, eta) << '\n';
      }
    }
  }
  close_out(out, path);
}

VtkGrid read_vtk(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  auto bad = [&](const std::string& why) { return IoError("malformed VTK file '" + path + "': " + why); };
  std::string line;
  if (!std::getline(in, line) || line.rfind("# vtk DataFile", 0) != 0) throw bad("missing header");
  std::getline(in, line);
  if (!std::getline(in, line) || line != "ASCII") throw bad("expected ASCII");
  VtkGrid g;
  long ncells = -1;
  std::string word;
  while (in >> word) {
    if (word == "DATASET") {
      in >> word;
      if (word != "STRUCTURED_POINTS") throw bad("unsupported dataset " + word);
    } else if (word == "DIMENSIONS") {
      int nz = 0;
      in >> g.nx >> g.ny >> nz;
      g.nx -= 1;
      g.ny -= 1;
    } else if (word == "ORIGIN") {
      double z;
      in >> g.x0 >> g.y0 >> z;
    } else if (word == "SPACING") {
      double z;
      in >> g.dx >> g.dy >> z;
    } else if (word == "CELL_DATA") {
      in >> ncells;
      if (ncells != static_cast<long>(g.nx) * g.ny) throw bad("CELL_DATA count mismatch");
    } else if (word == "SCALARS") {
      std::string name, type;
      int ncomp = 1;
      in >> name >> type;
      std::getline(in, line);
      std::istringstream rest(line);
      if (rest >> ncomp && ncomp != 1) throw bad("only 1-component scalars are supported");
      in >> word >> type;
      if (word != "LOOKUP_TABLE") throw bad("expected LOOKUP_TABLE");
      if (ncells < 0) throw bad("SCALARS before CELL_DATA");
      std::vector<double> v(ncells);
      for (auto& x : v) {
        if (!(in >> x)) throw bad("truncated scalar " + name);
      }
      g.cell_data[name] = std::move(v);
    } else {
      throw bad("unexpected token " + word);
    }
    if (!in) throw bad("read failure after " + word);
  }
  return g;
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());
}

}  // namespace oesv
