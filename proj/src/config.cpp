#include "oesv/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "oesv/errors.hpp"
#include "oesv/subdivision.hpp"
#include "oesv/time_integration.hpp"

namespace oesv {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};
using Section = std::map<std::string, Entry>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

const std::map<std::string, std::vector<std::string>>& known_keys() {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"run",
       {"benchmark", "k", "family", "c", "scheme", "cfl", "t_final", "nx", "ny", "filter",
        "multi_index", "fixed_tau", "seed", "paper_scale", "max_steps"}},
      {"problem",
       {"equation", "domain", "initial", "gamma", "velocity", "bc_left", "bc_right", "bc_bottom",
        "bc_top"}},
      {"output",
       {"dir", "prefix", "csv", "vtk", "nodal_vtk", "summary", "history", "damping"}},
  };
  return keys;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Section> sections) : s_(std::move(sections)) {}

  const Entry* find(const std::string& sec, const std::string& key) const {
    auto it = s_.find(sec);
    if (it == s_.end()) return nullptr;
    auto kt = it->second.find(key);
    return kt == it->second.end() ? nullptr : &kt->second;
  }
  bool has(const std::string& sec, const std::string& key) const {
    const Entry* e = find(sec, key);
    return e && lower(e->value) != "auto";
  }
  bool has_section(const std::string& sec) const {
    auto it = s_.find(sec);
    return it != s_.end() && !it->second.empty();
  }
  int line_of(const std::string& sec) const {
    auto it = s_.find(sec);
    if (it == s_.end() || it->second.empty()) return 0;
    int l = 1 << 30;
    for (const auto& [k, e] : it->second) l = std::min(l, e.line);
    return l;
  }

  void fail(const std::string& sec, const std::string& key, const std::string& why) {
    const Entry* e = find(sec, key);
    std::ostringstream os;
    os << "line " << (e ? e->line : 0) << ": key '" << key << "': " << why;
    diag_.push_back(os.str());
  }
  void fail_line(int line, const std::string& key, const std::string& why) {
    std::ostringstream os;
    os << "line " << line << ": key '" << key << "': " << why;
    diag_.push_back(os.str());
  }

  void str(const std::string& sec, const std::string& key, std::string& out) {
    if (has(sec, key)) out = find(sec, key)->value;
  }
  void integer(const std::string& sec, const std::string& key, long& out) {
    if (!has(sec, key)) return;
    const std::string& v = find(sec, key)->value;
    long x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) {
      fail(sec, key, "expected an integer, got '" + v + "'");
      return;
    }
    out = x;
  }
  void integer(const std::string& sec, const std::string& key, int& out) {
    long x = out;
    integer(sec, key, x);
    out = static_cast<int>(x);
  }
  void number(const std::string& sec, const std::string& key, double& out) {
    if (!has(sec, key)) return;
    const std::string& v = find(sec, key)->value;
    std::vector<double> xs;
    if (!numbers(v, xs) || xs.size() != 1) {
      fail(sec, key, "expected a number, got '" + v + "'");
      return;
    }
    out = xs[0];
  }
  void flag(const std::string& sec, const std::string& key, bool& out) {
    if (!has(sec, key)) return;
    const std::string v = lower(find(sec, key)->value);
    if (v == "on" || v == "true" || v == "yes" || v == "1") {
      out = true;
    } else if (v == "off" || v == "false" || v == "no" || v == "0") {
      out = false;
    } else {
      fail(sec, key, "expected on/off, got '" + v + "'");
    }
  }
  static bool numbers(const std::string& v, std::vector<double>& out) {
    std::istringstream is(v);
    std::string tok;
    while (is >> tok) {
      double x = 0.0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc() || p != tok.data() + tok.size()) return false;
      out.push_back(x);
    }
    return true;
  }

  const std::vector<std::string>& diagnostics() const { return diag_; }

 private:
  std::map<std::string, Section> s_;
  std::vector<std::string> diag_;
};

std::string join(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) {
    if (!s.empty()) s += '\n';
    s += l;
  }
  return s;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* onoff(bool b) { return b ? "on" : "off"; }

constexpr int kMaxDegree1D = 10;
constexpr int kMaxDegree2D = 6;

}  // namespace

RunConfig parse_config(const std::string& text) {
  std::map<std::string, Section> sections;
  std::vector<std::string> syntax;
  std::istringstream in(text);
  std::string raw, current;
  int line = 0;
  const auto& keys = known_keys();
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const auto hash = s.find_first_of("#;");
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') {
        syntax.push_back("line " + std::to_string(line) + ": unterminated section header");
        continue;
      }
      current = lower(trim(s.substr(1, s.size() - 2)));
      if (!keys.count(current)) {
        syntax.push_back("line " + std::to_string(line) + ": unknown section [" + current +
                         "] (expected run, problem, output)");
        current.clear();
        continue;
      }
      sections[current];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      syntax.push_back("line " + std::to_string(line) + ": expected key = value");
      continue;
    }
    const std::string key = lower(trim(s.substr(0, eq)));
    const std::string value = trim(s.substr(eq + 1));
    if (current.empty()) {
      syntax.push_back("line " + std::to_string(line) + ": key '" + key +
                       "': outside of any section");
      continue;
    }
    const auto& allowed = keys.at(current);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      syntax.push_back("line " + std::to_string(line) + ": key '" + key +
                       "': unknown in section [" + current + "]");
      continue;
    }
    if (value.empty()) {
      syntax.push_back("line " + std::to_string(line) + ": key '" + key + "': empty value");
      continue;
    }
    auto& sec = sections[current];
    if (sec.count(key)) {
      syntax.push_back("line " + std::to_string(line) + ": key '" + key +
                       "': duplicate (first at line " + std::to_string(sec[key].line) + ")");
      continue;
    }
    sec[key] = {value, line};
  }
  if (!syntax.empty()) throw ParseError(join(syntax));

  Reader r(std::move(sections));
  RunConfig cfg;
  r.str("run", "benchmark", cfg.benchmark);
  r.integer("run", "k", cfg.k);
  r.str("run", "family", cfg.family);
  cfg.family = lower(cfg.family);
  r.number("run", "c", cfg.c);
  r.str("run", "scheme", cfg.scheme);
  r.number("run", "cfl", cfg.cfl);
  r.number("run", "t_final", cfg.t_final);
  r.integer("run", "nx", cfg.nx);
  r.integer("run", "ny", cfg.ny);
  r.flag("run", "filter", cfg.filter);
  r.str("run", "multi_index", cfg.multi_index);
  cfg.multi_index = lower(cfg.multi_index);
  if (cfg.multi_index != "total" && cfg.multi_index != "max") {
    r.fail("run", "multi_index", "must be total or max");
  }
  r.flag("run", "fixed_tau", cfg.fixed_tau);
  long seed = static_cast<long>(cfg.seed);
  r.integer("run", "seed", seed);
  if (seed < 0) r.fail("run", "seed", "must be non-negative");
  cfg.seed = static_cast<std::uint64_t>(seed);
  r.flag("run", "paper_scale", cfg.paper_scale);
  r.integer("run", "max_steps", cfg.max_steps);
  if (cfg.max_steps < 0) r.fail("run", "max_steps", "must be non-negative");

  r.str("output", "dir", cfg.out_dir);
  r.str("output", "prefix", cfg.prefix);
  r.flag("output", "csv", cfg.csv);
  r.flag("output", "vtk", cfg.vtk);
  r.flag("output", "nodal_vtk", cfg.nodal_vtk);
  r.flag("output", "summary", cfg.summary);
  r.flag("output", "history", cfg.history);
  r.flag("output", "damping", cfg.damping);

  int dim = 1;
  double default_cfl_factor = 1.0;
  double default_t = 1.0;
  MeshSize default_mesh{64, 64};
  std::string default_scheme = "SSPRK3";

  if (!cfg.benchmark.empty()) {
    const auto names = benchmark_names();
    if (std::find(names.begin(), names.end(), cfg.benchmark) == names.end()) {
      std::string list;
      for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
      r.fail("run", "benchmark", "unknown benchmark '" + cfg.benchmark + "'; known: " + list);
      throw ValidationError(join(r.diagnostics()));
    }
    if (r.has_section("problem")) {
      r.fail_line(r.line_of("problem"), "problem",
                  "a [problem] section cannot be combined with a benchmark");
    }
    const Problem p = benchmark(cfg.benchmark);
    dim = p.dim();
    if (!r.has("run", "k")) cfg.k = p.k;
    default_cfl_factor = p.cfl_factor;
    default_t = p.t_final;
    default_mesh = p.mesh_size(cfg.paper_scale);
    cfg.equation = to_string(p.equation);
  } else {
    if (!r.has("problem", "equation")) {
      r.fail_line(0, "equation", "required: either [run] benchmark or [problem] equation");
      throw ValidationError(join(r.diagnostics()));
    }
    cfg.equation = lower(r.find("problem", "equation")->value);
    EquationKind kind = EquationKind::Advection1D;
    try {
      kind = parse_equation_kind(cfg.equation);
    } catch (const ValidationError& e) {
      r.fail("problem", "equation", e.what());
      throw ValidationError(join(r.diagnostics()));
    }
    dim = dimension(kind);
    if (dim == 1) cfg.domain = {0.0, 1.0, 0.0, 0.0};
    if (r.has("problem", "domain")) {
      std::vector<double> xs;
      if (!Reader::numbers(r.find("problem", "domain")->value, xs) ||
          xs.size() != static_cast<std::size_t>(2 * dim)) {
        r.fail("problem", "domain",
               dim == 1 ? "expected 'x0 x1'" : "expected 'x0 x1 y0 y1'");
      } else {
        cfg.domain = {xs[0], xs[1], dim == 2 ? xs[2] : 0.0, dim == 2 ? xs[3] : 0.0};
        if (!(cfg.domain.x1 > cfg.domain.x0) ||
            (dim == 2 && !(cfg.domain.y1 > cfg.domain.y0))) {
          r.fail("problem", "domain", "empty interval");
        }
      }
    }
    if (!r.has("problem", "initial")) {
      r.fail_line(r.line_of("problem"), "initial", "required for an inline problem");
    } else {
      cfg.initial = r.find("problem", "initial")->value;
      try {
        named_initial_condition(cfg.initial, kind, 1.4);
      } catch (const Error& e) {
        r.fail("problem", "initial", e.what());
      }
    }
    r.number("problem", "gamma", cfg.gamma);
    if (!(cfg.gamma > 1.0)) r.fail("problem", "gamma", "must exceed 1");
    if (r.has("problem", "velocity")) {
      std::vector<double> xs;
      if (!Reader::numbers(r.find("problem", "velocity")->value, xs) ||
          xs.size() != static_cast<std::size_t>(dim)) {
        r.fail("problem", "velocity", dim == 1 ? "expected 'b'" : "expected 'bx by'");
      } else {
        cfg.velocity_x = xs[0];
        cfg.velocity_y = dim == 2 ? xs[1] : 0.0;
      }
    } else if (dim == 1) {
      cfg.velocity_y = 0.0;
    }
    for (auto [key, field] :
         {std::pair{"bc_left", &cfg.bc_left}, std::pair{"bc_right", &cfg.bc_right},
          std::pair{"bc_bottom", &cfg.bc_bottom}, std::pair{"bc_top", &cfg.bc_top}}) {
      if (!r.has("problem", key)) continue;
      if (dim == 1 && (std::string(key) == "bc_bottom" || std::string(key) == "bc_top")) {
        r.fail("problem", key, "not used by a 1D problem");
        continue;
      }
      *field = lower(r.find("problem", key)->value);
      if (*field != "periodic" && *field != "outflow" && *field != "reflective") {
        r.fail("problem", key, "expected periodic, outflow or reflective");
      }
    }
    if ((cfg.bc_left == "periodic") != (cfg.bc_right == "periodic")) {
      r.fail("problem", r.has("problem", "bc_left") ? "bc_left" : "bc_right",
             "periodic must be set on both left and right");
    }
    if (dim == 2 && (cfg.bc_bottom == "periodic") != (cfg.bc_top == "periodic")) {
      r.fail("problem", r.has("problem", "bc_bottom") ? "bc_bottom" : "bc_top",
             "periodic must be set on both bottom and top");
    }
    if (dim == 1) cfg.bc_bottom = cfg.bc_top = "periodic";
  }

  try {
    parse_family(cfg.family);
  } catch (const ValidationError& e) {
    r.fail("run", "family", e.what());
  }
  const int kmax = dim == 1 ? kMaxDegree1D : kMaxDegree2D;
  if (cfg.k < 0 || cfg.k > kmax) {
    r.fail("run", "k", "must lie in [0, " + std::to_string(kmax) + "]");
  }
  if (cfg.filter && cfg.k < 1) r.fail("run", "k", "k >= 1 is required when filter = on");
  if (!r.has("run", "cfl")) cfg.cfl = default_cfl_factor / (2.0 * cfg.k + 1.0);
  if (!(cfg.cfl > 0.0)) r.fail("run", "cfl", "must be positive");
  if (!r.has("run", "t_final")) cfg.t_final = default_t;
  if (!(cfg.t_final > 0.0)) r.fail("run", "t_final", "must be positive");
  if (!r.has("run", "nx")) cfg.nx = default_mesh.nx;
  if (dim == 1) {
    if (r.has("run", "ny")) r.fail("run", "ny", "not used by a 1D problem");
    cfg.ny = 1;
  } else if (!r.has("run", "ny")) {
    if (!r.has("run", "nx")) {
      cfg.ny = default_mesh.ny;
    } else if (cfg.benchmark.empty()) {
      cfg.ny = cfg.nx;
    } else {
      // Keep the benchmark aspect ratio when only nx is given.
      cfg.ny = std::max(2, static_cast<int>(static_cast<long>(cfg.nx) * default_mesh.ny /
                                            default_mesh.nx));
    }
  }
  if (cfg.nx < 2) r.fail("run", "nx", "mesh size must be >= 2");
  if (dim == 2 && cfg.ny < 2) r.fail("run", "ny", "mesh size must be >= 2");
  if (cfg.scheme.empty() || lower(cfg.scheme) == "auto") {
    cfg.scheme = cfg.benchmark.empty() ? default_scheme
                                       : benchmark(cfg.benchmark).default_scheme(cfg.k);
  }
  try {
    cfg.scheme = builtin_scheme(cfg.scheme).name;
  } catch (const UnknownScheme& e) {
    r.fail("run", "scheme", e.what());
  }
  if (cfg.prefix.find('/') != std::string::npos) r.fail("output", "prefix", "must not contain '/'");

  if (!r.diagnostics().empty()) throw ValidationError(join(r.diagnostics()));
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str());
}

std::string echo_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "[run]\n";
  if (!cfg.benchmark.empty()) os << "benchmark = " << cfg.benchmark << '\n';
  os << "k = " << cfg.k << '\n'
     << "family = " << cfg.family << '\n'
     << "c = " << fmt(cfg.c) << '\n'
     << "scheme = " << cfg.scheme << '\n'
     << "cfl = " << fmt(cfg.cfl) << '\n'
     << "t_final = " << fmt(cfg.t_final) << '\n'
     << "nx = " << cfg.nx << '\n';
  const bool two_d = dimension(parse_equation_kind(cfg.equation)) == 2;
  if (two_d) os << "ny = " << cfg.ny << '\n';
  os << "filter = " << onoff(cfg.filter) << '\n';
  if (two_d) os << "multi_index = " << cfg.multi_index << '\n';
  os << "fixed_tau = " << onoff(cfg.fixed_tau) << '\n'
     << "seed = " << cfg.seed << '\n'
     << "paper_scale = " << onoff(cfg.paper_scale) << '\n'
     << "max_steps = " << cfg.max_steps << '\n';
  if (cfg.benchmark.empty()) {
    os << "\n[problem]\n"
       << "equation = " << cfg.equation << '\n'
       << "domain = " << fmt(cfg.domain.x0) << ' ' << fmt(cfg.domain.x1);
    if (two_d) os << ' ' << fmt(cfg.domain.y0) << ' ' << fmt(cfg.domain.y1);
    os << '\n'
       << "initial = " << cfg.initial << '\n'
       << "gamma = " << fmt(cfg.gamma) << '\n'
       << "velocity = " << fmt(cfg.velocity_x);
    if (two_d) os << ' ' << fmt(cfg.velocity_y);
    os << '\n'
       << "bc_left = " << cfg.bc_left << '\n'
       << "bc_right = " << cfg.bc_right << '\n';
    if (two_d) os << "bc_bottom = " << cfg.bc_bottom << '\n' << "bc_top = " << cfg.bc_top << '\n';
  }
  os << "\n[output]\n"
     << "dir = " << cfg.out_dir << '\n'
     << "prefix = " << cfg.prefix << '\n'
     << "csv = " << onoff(cfg.csv) << '\n'
     << "vtk = " << onoff(cfg.vtk) << '\n'
     << "nodal_vtk = " << onoff(cfg.nodal_vtk) << '\n'
     << "summary = " << onoff(cfg.summary) << '\n'
     << "history = " << onoff(cfg.history) << '\n'
     << "damping = " << onoff(cfg.damping) << '\n';
  return os.str();
}

RunConfig benchmark_config(const std::string& name, bool paper_scale) {
  std::string text = "[run]\nbenchmark = " + name + "\npaper_scale = " + onoff(paper_scale) + "\n";
  try {
    return parse_config(text);
  } catch (const ValidationError&) {
    benchmark(name);
    throw;
  }
}

Problem resolve_problem(const RunConfig& cfg) {
  if (!cfg.benchmark.empty()) return benchmark(cfg.benchmark);
  Problem p;
  p.name = "inline";
  p.equation = parse_equation_kind(cfg.equation);
  p.description = "inline " + cfg.equation + " problem, initial condition " + cfg.initial;
  p.gamma = cfg.gamma;
  p.velocity = {cfg.velocity_x, cfg.velocity_y};
  p.domain = cfg.domain;
  p.k = cfg.k;
  p.desk_mesh = p.paper_mesh = {cfg.nx, cfg.ny};
  p.t_final = cfg.t_final;
  p.initial = named_initial_condition(cfg.initial, p.equation, cfg.gamma);
  p.init_points = cfg.k + 4;
  if (cfg.initial != "constant") {
    const Problem ref = benchmark(cfg.initial);
    p.smooth = ref.smooth;
    const bool same_velocity = dimension(p.equation) == 1 ? ref.velocity[0] == p.velocity[0]
                                                          : ref.velocity == p.velocity;
    const bool advection =
        p.equation == EquationKind::Advection1D || p.equation == EquationKind::Advection2D;
    if (ref.gamma == cfg.gamma && (!advection || same_velocity)) {
      p.exact = ref.exact;
      p.watch_lo = ref.watch_lo;
      p.watch_hi = ref.watch_hi;
    } else {
      p.watch_lo = p.watch_hi = std::nan("");
    }
  } else {
    p.exact = [init = p.initial](double x, double y, double, std::span<double> out) {
      init(x, y, out);
    };
    p.watch_lo = p.watch_hi = std::nan("");
  }
  auto bc = [](const std::string& s) {
    if (s == "outflow") return BoundaryCondition::outflow();
    if (s == "reflective") return BoundaryCondition::reflective();
    return BoundaryCondition::periodic();
  };
  p.bc1 = {bc(cfg.bc_left), bc(cfg.bc_right)};
  p.bc2 = {bc(cfg.bc_left), bc(cfg.bc_right), bc(cfg.bc_bottom), bc(cfg.bc_top)};
  return p;
}

}  // namespace oesv
