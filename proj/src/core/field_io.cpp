#include "pbb/core/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "pbb/core/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "field serialization assumes a little-endian host");

namespace pbb {

namespace {

constexpr char kMagic[4] = {'P', 'B', 'F', '1'};

std::uint32_t layout_tag(Layout layout) {
  switch (layout) {
    case Layout::CellAverage: return 0;
    case Layout::ModalDG: return 1;
    case Layout::Nodal: return 2;
    case Layout::SpectralComplex: return 3;
  }
  return 0;
}

Layout layout_from_tag(std::uint32_t tag) {
  switch (tag) {
    case 0: return Layout::CellAverage;
    case 1: return Layout::ModalDG;
    case 2: return Layout::Nodal;
    case 3: return Layout::SpectralComplex;
  }
  fail(ErrorCode::IoFailure, "unknown layout tag " + std::to_string(tag));
}

void put_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t get_u32(std::istream& is) {
  std::uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  require(static_cast<bool>(is), ErrorCode::IoFailure, "truncated field file");
  return v;
}

double get_f64(std::istream& is) {
  double v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  require(static_cast<bool>(is), ErrorCode::IoFailure, "truncated field file");
  return v;
}

Field make_field(Layout layout, int order, int components, Grid1D grid) {
  switch (layout) {
    case Layout::CellAverage: return Field::cell_average(std::move(grid), components);
    case Layout::ModalDG: return Field::modal_dg(std::move(grid), order);
    case Layout::Nodal: return Field::nodal(std::move(grid));
    case Layout::SpectralComplex:
      fail(ErrorCode::IoFailure, "spectral layout requires a 2D grid");
  }
  fail(ErrorCode::IoFailure, "unreachable layout");
}

Field make_field2d(Layout layout, Grid2D grid) {
  switch (layout) {
    case Layout::CellAverage: return Field::cell_average2d(grid);
    case Layout::Nodal: return Field::nodal2d(grid);
    case Layout::SpectralComplex: return Field::spectral2d(grid);
    case Layout::ModalDG: fail(ErrorCode::IoFailure, "modal layout requires a 1D grid");
  }
  fail(ErrorCode::IoFailure, "unreachable layout");
}

}  // namespace

void write_field_binary(const Field& field, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  require(static_cast<bool>(os), ErrorCode::IoFailure, "cannot open " + path.string());
  os.write(kMagic, 4);
  put_u32(os, layout_tag(field.layout()));
  put_u32(os, static_cast<std::uint32_t>(field.dg_order()));
  put_u32(os, static_cast<std::uint32_t>(field.components()));
  put_u32(os, static_cast<std::uint32_t>(field.dim()));
  if (field.dim() == 1) {
    const Grid1D& g = field.grid1();
    put_u32(os, static_cast<std::uint32_t>(g.n_cells()));
    put_u32(os, g.uniform_spacing() ? 1u : 0u);
    put_f64(os, g.x_min());
    put_f64(os, g.x_max());
    if (!g.uniform_spacing())
      for (int i = 0; i <= g.n_cells(); ++i) put_f64(os, g.edge(i));
  } else {
    const Grid2D& g = field.grid2();
    put_u32(os, static_cast<std::uint32_t>(g.nx()));
    put_u32(os, static_cast<std::uint32_t>(g.ny()));
    put_u32(os, g.periodic_x() ? 1u : 0u);
    put_u32(os, g.periodic_y() ? 1u : 0u);
    put_f64(os, g.x_min());
    put_f64(os, g.x_max());
    put_f64(os, g.y_min());
    put_f64(os, g.y_max());
  }
  if (field.is_spectral()) {
    const Eigen::ArrayXcd& v = field.cvalues();
    put_u32(os, static_cast<std::uint32_t>(2 * v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      put_f64(os, v(i).real());
      put_f64(os, v(i).imag());
    }
  } else {
    const Eigen::ArrayXd& v = field.values();
    put_u32(os, static_cast<std::uint32_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) put_f64(os, v(i));
  }
  require(static_cast<bool>(os), ErrorCode::IoFailure, "write failed: " + path.string());
}

Field read_field_binary(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  require(static_cast<bool>(is), ErrorCode::IoFailure, "cannot open " + path.string());
  char magic[4] = {};
  is.read(magic, 4);
  require(static_cast<bool>(is) && std::memcmp(magic, kMagic, 4) == 0, ErrorCode::IoFailure,
          "not a PBF1 field file: " + path.string());
  const Layout layout = layout_from_tag(get_u32(is));
  const int order = static_cast<int>(get_u32(is));
  const int components = static_cast<int>(get_u32(is));
  const int dim = static_cast<int>(get_u32(is));

  Field field = [&] {
    if (dim == 1) {
      const int n = static_cast<int>(get_u32(is));
      const bool uniform = get_u32(is) != 0;
      const double x0 = get_f64(is), x1 = get_f64(is);
      if (uniform) return make_field(layout, order, components, Grid1D::uniform(x0, x1, n));
      Eigen::ArrayXd edges(n + 1);
      for (int i = 0; i <= n; ++i) edges(i) = get_f64(is);
      return make_field(layout, order, components, Grid1D::from_edges(std::move(edges)));
    }
    require(dim == 2, ErrorCode::IoFailure, "bad dimension in field file");
    const int nx = static_cast<int>(get_u32(is));
    const int ny = static_cast<int>(get_u32(is));
    const bool px = get_u32(is) != 0, py = get_u32(is) != 0;
    const double x0 = get_f64(is), x1 = get_f64(is), y0 = get_f64(is), y1 = get_f64(is);
    return make_field2d(layout, Grid2D::uniform(x0, x1, y0, y1, nx, ny, px, py));
  }();

  const std::uint32_t count = get_u32(is);
  if (field.is_spectral()) {
    require(count == 2 * static_cast<std::uint32_t>(field.cvalues().size()),
            ErrorCode::IoFailure, "payload size mismatch");
    for (Eigen::Index i = 0; i < field.cvalues().size(); ++i) {
      const double re = get_f64(is), im = get_f64(is);
      field.cvalues()(i) = {re, im};
    }
  } else {
    require(count == static_cast<std::uint32_t>(field.values().size()), ErrorCode::IoFailure,
            "payload size mismatch");
    for (Eigen::Index i = 0; i < field.values().size(); ++i) field.values()(i) = get_f64(is);
  }
  return field;
}

void write_field_csv(const Field& field, const std::filesystem::path& path,
                     const std::string& config_digest, const std::string& tool_version) {
  std::ofstream os(path);
  require(static_cast<bool>(os), ErrorCode::IoFailure, "cannot open " + path.string());
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  os << "pbf_csv,1\n";
  if (!config_digest.empty()) os << "config_digest," << config_digest << "\n";
  if (!tool_version.empty()) os << "tool_version," << tool_version << "\n";
  os << "layout," << to_string(field.layout()) << "\n";
  os << "order," << field.dg_order() << "\n";
  os << "components," << field.components() << "\n";
  os << "dim," << field.dim() << "\n";
  if (field.dim() == 1) {
    const Grid1D& g = field.grid1();
    os << "n_cells," << g.n_cells() << "\n";
    os << "x_min," << g.x_min() << "\n";
    os << "x_max," << g.x_max() << "\n";
    os << "uniform," << (g.uniform_spacing() ? 1 : 0) << "\n";
    if (!g.uniform_spacing()) {
      os << "edges\n";
      for (int i = 0; i <= g.n_cells(); ++i) os << g.edge(i) << "\n";
    }
  } else {
    const Grid2D& g = field.grid2();
    os << "nx," << g.nx() << "\n";
    os << "ny," << g.ny() << "\n";
    os << "periodic_x," << (g.periodic_x() ? 1 : 0) << "\n";
    os << "periodic_y," << (g.periodic_y() ? 1 : 0) << "\n";
    os << "x_min," << g.x_min() << "\n";
    os << "x_max," << g.x_max() << "\n";
    os << "y_min," << g.y_min() << "\n";
    os << "y_max," << g.y_max() << "\n";
  }
  os << "dof\n";
  if (field.is_spectral()) {
    for (Eigen::Index i = 0; i < field.cvalues().size(); ++i)
      os << field.cvalues()(i).real() << "," << field.cvalues()(i).imag() << "\n";
  } else {
    for (Eigen::Index i = 0; i < field.values().size(); ++i) os << field.values()(i) << "\n";
  }
  require(static_cast<bool>(os), ErrorCode::IoFailure, "write failed: " + path.string());
}

Field read_field_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  require(static_cast<bool>(is), ErrorCode::IoFailure, "cannot open " + path.string());
  auto next = [&is, &path]() {
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), ErrorCode::IoFailure,
            "truncated field csv: " + path.string());
    return line;
  };
  auto value_of = [](const std::string& line, const char* key) {
    const auto comma = line.find(',');
    require(comma != std::string::npos && line.substr(0, comma) == key, ErrorCode::IoFailure,
            "expected '" + std::string(key) + "' row, got '" + line + "'");
    return line.substr(comma + 1);
  };

  require(next() == "pbf_csv,1", ErrorCode::IoFailure, "not a field csv: " + path.string());
  std::string line = next();
  while (line.rfind("config_digest,", 0) == 0 || line.rfind("tool_version,", 0) == 0) line = next();
  const std::string layout_name = value_of(line, "layout");
  Layout layout = Layout::CellAverage;
  if (layout_name == "CellAverage")
    layout = Layout::CellAverage;
  else if (layout_name == "ModalDG")
    layout = Layout::ModalDG;
  else if (layout_name == "Nodal")
    layout = Layout::Nodal;
  else if (layout_name == "SpectralComplex")
    layout = Layout::SpectralComplex;
  else
    fail(ErrorCode::IoFailure, "unknown layout " + layout_name);
  const int order = std::stoi(value_of(next(), "order"));
  const int components = std::stoi(value_of(next(), "components"));
  const int dim = std::stoi(value_of(next(), "dim"));

  Field field = [&] {
    if (dim == 1) {
      const int n = std::stoi(value_of(next(), "n_cells"));
      const double x0 = std::stod(value_of(next(), "x_min"));
      const double x1 = std::stod(value_of(next(), "x_max"));
      const bool uniform = std::stoi(value_of(next(), "uniform")) != 0;
      if (uniform) return make_field(layout, order, components, Grid1D::uniform(x0, x1, n));
      require(next() == "edges", ErrorCode::IoFailure, "expected edges block");
      Eigen::ArrayXd edges(n + 1);
      for (int i = 0; i <= n; ++i) edges(i) = std::stod(next());
      return make_field(layout, order, components, Grid1D::from_edges(std::move(edges)));
    }
    const int nx = std::stoi(value_of(next(), "nx"));
    const int ny = std::stoi(value_of(next(), "ny"));
    const bool px = std::stoi(value_of(next(), "periodic_x")) != 0;
    const bool py = std::stoi(value_of(next(), "periodic_y")) != 0;
    const double x0 = std::stod(value_of(next(), "x_min"));
    const double x1 = std::stod(value_of(next(), "x_max"));
    const double y0 = std::stod(value_of(next(), "y_min"));
    const double y1 = std::stod(value_of(next(), "y_max"));
    return make_field2d(layout, Grid2D::uniform(x0, x1, y0, y1, nx, ny, px, py));
  }();

  require(next() == "dof", ErrorCode::IoFailure, "expected dof block");
  if (field.is_spectral()) {
    for (Eigen::Index i = 0; i < field.cvalues().size(); ++i) {
      const std::string line = next();
      const auto comma = line.find(',');
      require(comma != std::string::npos, ErrorCode::IoFailure, "expected re,im pair");
      field.cvalues()(i) = {std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))};
    }
  } else {
    for (Eigen::Index i = 0; i < field.values().size(); ++i) field.values()(i) = std::stod(next());
  }
  return field;
}

}  // namespace pbb
