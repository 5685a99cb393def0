#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stqm/errors.hpp"
#include "stqm/experiment.hpp"
#include "stqm/geometry.hpp"
#include "stqm/io.hpp"
#include "stqm/oracle.hpp"
#include "stqm/propagator.hpp"

namespace py = pybind11;

namespace {

using ComplexArray = py::array_t<stqm::Complex, py::array::c_style | py::array::forcecast>;

// Fields cross the boundary as (ny, nx) arrays, row j holding y = y0 + j dy.
ComplexArray to_array(const stqm::ComplexField& f) {
  const auto& g = f.grid();
  ComplexArray out({static_cast<py::ssize_t>(g.ny()), static_cast<py::ssize_t>(g.nx())});
  std::copy(f.values().begin(), f.values().end(), out.mutable_data());
  return out;
}

stqm::ComplexField from_array(const stqm::Grid2D& g, const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != g.ny() || a.shape(1) != g.nx()) {
    throw stqm::ConfigError("array shape does not match the grid (expected (ny, nx))");
  }
  return stqm::ComplexField(g, std::vector<stqm::Complex>(a.data(), a.data() + a.size()));
}

stqm::ExperimentConfig parse(const std::string& doc) { return stqm::config_from_json(nlohmann::json::parse(doc)); }

}  // namespace

PYBIND11_MODULE(_stqm, m) {
  m.doc() = "Retarded/advanced split-step simulation of a two-detector beam-splitter experiment.";

  py::register_exception<stqm::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<stqm::GeometryError>(m, "GeometryError", PyExc_RuntimeError);
  py::register_exception<stqm::IoError>(m, "IoError", PyExc_OSError);

  py::class_<stqm::Grid2D>(m, "Grid2D")
      .def(py::init<int, int, double, double, double, double>(), py::arg("nx"), py::arg("ny"), py::arg("dx"),
           py::arg("dy"), py::arg("x0"), py::arg("y0"))
      .def_property_readonly("nx", &stqm::Grid2D::nx)
      .def_property_readonly("ny", &stqm::Grid2D::ny)
      .def_property_readonly("dx", &stqm::Grid2D::dx)
      .def_property_readonly("dy", &stqm::Grid2D::dy)
      .def_property_readonly("x0", &stqm::Grid2D::x0)
      .def_property_readonly("y0", &stqm::Grid2D::y0);

  py::class_<stqm::GaussianSpec>(m, "GaussianSpec")
      .def(py::init<double, double, double, double, double>(), py::arg("cx"), py::arg("cy"), py::arg("sigma"),
           py::arg("kx"), py::arg("ky"))
      .def_readwrite("cx", &stqm::GaussianSpec::cx)
      .def_readwrite("cy", &stqm::GaussianSpec::cy)
      .def_readwrite("sigma", &stqm::GaussianSpec::sigma)
      .def_readwrite("kx", &stqm::GaussianSpec::kx)
      .def_readwrite("ky", &stqm::GaussianSpec::ky);

  m.def(
      "gaussian_packet",
      [](const stqm::Grid2D& g, const stqm::GaussianSpec& s) { return to_array(stqm::gaussian_packet(g, s)); },
      py::arg("grid"), py::arg("spec"));

  m.def(
      "oracle_field",
      [](const stqm::Grid2D& g, const stqm::GaussianSpec& s, double t) {
        return to_array(stqm::oracle_field(g, s, t));
      },
      py::arg("grid"), py::arg("spec"), py::arg("t"));

  m.def(
      "oracle_sigma", [](const stqm::GaussianSpec& s, double t) { return stqm::oracle_free_gaussian(s, t).sigma; },
      py::arg("spec"), py::arg("t"));

  m.def(
      "propagate",
      [](const stqm::Grid2D& g, const ComplexArray& a, double duration) {
        return to_array(stqm::propagate(from_array(g, a), duration));
      },
      py::arg("grid"), py::arg("field"), py::arg("duration"), "Free evolution by exp(-i H duration).");

  m.def(
      "rotate_quarter_turns",
      [](const stqm::Grid2D& g, const ComplexArray& a, double px, double py_, int turns) {
        return to_array(stqm::rotate_quarter_turns(from_array(g, a), {px, py_}, turns));
      },
      py::arg("grid"), py::arg("field"), py::arg("px"), py::arg("py"), py::arg("turns"));

  m.def(
      "inner_product",
      [](const stqm::Grid2D& g, const ComplexArray& a, const ComplexArray& b) {
        return stqm::inner_product(from_array(g, a), from_array(g, b));
      },
      py::arg("grid"), py::arg("a"), py::arg("b"));

  m.def(
      "validate_config", [](const std::string& doc) { return stqm::validate_config(parse(doc)); },
      py::arg("config_json"), "Returns warnings; raises ConfigError when invalid.");
  m.def(
      "effective_config", [](const std::string& doc) { return stqm::config_to_json(parse(doc)).dump(); },
      py::arg("config_json"));
  m.def(
      "run_experiment",
      [](const std::string& doc) {
        const stqm::ExperimentConfig c = parse(doc);
        stqm::RunArtifacts a;
        {
          py::gil_scoped_release release;
          a = stqm::run_experiment(c);
        }
        return stqm::report_to_json(a.report).dump();
      },
      py::arg("config_json"), "Runs the experiment and returns the report as JSON text.");
  m.def(
      "run_to_directory",
      [](const std::string& doc, const std::string& out_dir, int stride) {
        py::gil_scoped_release release;
        const stqm::ExperimentConfig c = parse(doc);
        stqm::write_artifacts(stqm::run_experiment(c), c, out_dir, stride);
      },
      py::arg("config_json"), py::arg("out_dir"), py::arg("stride") = 1);
  m.def(
      "verify",
      [](const std::string& doc) {
        const stqm::ExperimentConfig c = parse(doc);
        py::gil_scoped_release release;
        return stqm::verify_to_json(stqm::verify(c)).dump();
      },
      py::arg("config_json"));
  m.def(
      "oracle_predictions", [](const std::string& doc) { return stqm::oracle_predictions(parse(doc)).dump(); },
      py::arg("config_json"));

  m.attr("__version__") = STQM_VERSION;
}
