#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "capdisc/covering.hpp"
#include "capdisc/discrepancy.hpp"
#include "capdisc/errors.hpp"
#include "capdisc/point_sets.hpp"
#include "capdisc/polar_analysis.hpp"

namespace py = pybind11;
using namespace capdisc;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_array(const PointSet& ps) {
  Array out({static_cast<py::ssize_t>(ps.size()), py::ssize_t{3}});
  auto m = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < m.shape(0); ++i) {
    const auto& p = ps[static_cast<std::size_t>(i)];
    m(i, 0) = p.x();
    m(i, 1) = p.y();
    m(i, 2) = p.z();
  }
  return out;
}

PointSet from_array(const Array& a) {
  if (a.ndim() != 2 || a.shape(1) != 3) throw py::value_error("points must have shape (t, 3)");
  auto m = a.unchecked<2>();
  std::vector<UnitVector> pts;
  pts.reserve(static_cast<std::size_t>(m.shape(0)));
  for (py::ssize_t i = 0; i < m.shape(0); ++i) pts.push_back(UnitVector::from_components(m(i, 0), m(i, 1), m(i, 2)));
  return PointSet(std::move(pts), {});
}

py::tuple vec(const UnitVector& v) { return py::make_tuple(v.x(), v.y(), v.z()); }

py::dict directed_dict(const DirectedResult& r) {
  py::dict d;
  d["direction"] = vec(r.direction);
  d["value"] = r.value;
  d["witness_height"] = r.witness_height;
  d["witness_inclusive"] = r.witness_inclusive;
  return d;
}

py::dict outcome_dict(const CoverOutcome& o) {
  py::dict d;
  d["status"] = std::string(to_string(o.status));
  d["n_dd"] = o.counters.n_dd;
  d["n_cc"] = o.counters.n_cc;
  d["n_orbits"] = o.counters.n_orbits;
  d["records"] = o.records.size();
  d["not_covered"] = o.not_covered.size();
  d["max_directed_value"] = o.max_directed_value;
  d["r_min_global"] = o.r_min_global;
  d["r_min_median"] = o.r_min_median;
  d["total_s"] = o.timings.total;
  d["counterexample"] = o.counterexample ? py::object(directed_dict(*o.counterexample)) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_capdisc, m) {
  m.doc() = "Cap discrepancy of point sets on the unit sphere";

  py::register_exception<NonUnitPoint>(m, "NonUnitPoint", PyExc_ValueError);
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_ValueError);

  m.def("polar_to_cartesian", [](double theta, double phi) { return vec(polar_to_cartesian({theta, phi})); },
        py::arg("theta"), py::arg("phi"));

  m.def(
      "generate",
      [](const std::string& structure, int n, std::uint64_t seed) {
        const auto g = parse_generator(structure);
        if (!g || *g == Generator::file) throw py::value_error("unknown structure " + structure);
        if (*g == Generator::random) {
          if (n < 1) throw py::value_error("n must be >= 1");
          return to_array(generate_random_uniform(static_cast<std::size_t>(n), seed));
        }
        return to_array(*g == Generator::polar ? generate_polar(n) : generate_twisted_polar(n));
      },
      py::arg("structure"), py::arg("n"), py::arg("seed") = 1, "Point set as a (t, 3) array.");

  m.def(
      "directed_discrepancy",
      [](const Array& points, double theta, double phi) {
        const auto ps = from_array(points);
        return directed_dict(directed_discrepancy(project(ps, polar_to_cartesian({theta, phi}))));
      },
      py::arg("points"), py::arg("theta"), py::arg("phi"));

  m.def(
      "confidence_radius",
      [](const Array& points, double theta, double phi, double d) {
        const auto ps = from_array(points);
        const auto ball = confidence_radius(project(ps, polar_to_cartesian({theta, phi})), d);
        return py::make_tuple(ball.radius, ball.k);
      },
      py::arg("points"), py::arg("theta"), py::arg("phi"), py::arg("d"), "(radius, k); raises on d < Dis + 1/t.");

  m.def(
      "naive_discrepancy",
      [](const Array& points, std::size_t limit) {
        NaiveOptions options;
        options.size_limit = limit;
        const auto r = naive_discrepancy(from_array(points), options);
        py::dict d;
        d["value"] = r.value;
        d["axis"] = vec(r.witness.axis);
        d["height"] = r.witness.height;
        d["witness_inclusive"] = r.witness_inclusive;
        return d;
      },
      py::arg("points"), py::arg("limit") = 400);

  m.def(
      "cover_region",
      [](const Array& points, double d, double phi_min, double phi_max, double theta_min, double theta_max,
         int threads) {
        CoverParams params;
        params.d = d;
        params.region = {phi_min, phi_max, theta_min, theta_max};
        params.threads = threads;
        const auto ps = from_array(points);
        CoverOutcome outcome;
        {
          py::gil_scoped_release release;
          outcome = cover_region(ps, params);
        }
        return outcome_dict(outcome);
      },
      py::arg("points"), py::arg("d"), py::arg("phi_min") = 0.0, py::arg("phi_max") = kHalfPi,
      py::arg("theta_min") = 0.0, py::arg("theta_max") = kTwoPi, py::arg("threads") = 1);

  m.def("north_pole_directed", &north_pole_directed, py::arg("n"));
  m.def("north_pole_local_radius", &north_pole_local_radius, py::arg("n"));
  m.def(
      "orbit_sums", [](int n) { return orbit_sums(n).s; }, py::arg("n"));

  m.def(
      "conjecture_check",
      [](int n, const std::string& structure, int threads) {
        ConjectureOptions options;
        const auto g = parse_generator(structure);
        if (!g || (*g != Generator::polar && *g != Generator::twisted_polar))
          throw py::value_error("structure must be polar or twisted");
        options.structure = *g;
        options.base.threads = threads;
        ConjectureResult r;
        {
          py::gil_scoped_release release;
          r = conjecture_check(n, options);
        }
        auto d = outcome_dict(r.outcome);
        d["n"] = n;
        d["t"] = r.t;
        d["d"] = r.d;
        d["phi_max"] = r.region.phi_max;
        return d;
      },
      py::arg("n"), py::arg("structure") = "twisted", py::arg("threads") = 1);
}
