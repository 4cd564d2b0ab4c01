#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "arcwalk/errors.hpp"
#include "arcwalk/exact_two.hpp"
#include "arcwalk/genchi2.hpp"
#include "arcwalk/large_n.hpp"
#include "arcwalk/monte_carlo.hpp"
#include "arcwalk/recursion.hpp"
#include "arcwalk/support.hpp"
#include "arcwalk/version.hpp"

namespace py = pybind11;
using namespace arcwalk;

namespace {

template<class T>
py::array_t<double> to_array(const std::vector<T>& v)
{
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::array_t<double> to_array(std::span<const double> v)
{
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Distributions of 2-D random walks with uniformly restricted step angles";
    m.attr("__version__") = std::string(version);

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<GridError>(m, "GridError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<EmptyInputError>(m, "EmptyInputError", PyExc_ValueError);

    py::class_<WalkConfig>(m, "WalkConfig")
        .def_property_readonly("n_steps", &WalkConfig::n_steps)
        .def_property_readonly("max_angle", &WalkConfig::max_angle)
        .def_property_readonly("extended", &WalkConfig::extended)
        .def("with_steps", &WalkConfig::with_steps)
        .def("__repr__", [](const WalkConfig& c) {
            return "WalkConfig(n_steps=" + std::to_string(c.n_steps()) + ", max_angle=" + std::to_string(c.max_angle()) + ")";
        });
    m.def(
        "config",
        [](int n, double a, bool extended) {
            return validate_config(n, a, extended ? AngleRange::extended : AngleRange::restricted);
        },
        py::arg("n_steps"), py::arg("max_angle"), py::arg("extended") = false);

    py::class_<MomentSet>(m, "MomentSet")
        .def_readonly("mean_x", &MomentSet::mean_x)
        .def_readonly("mean_y", &MomentSet::mean_y)
        .def_readonly("var_x", &MomentSet::var_x)
        .def_readonly("var_y", &MomentSet::var_y)
        .def_readonly("cov_xy", &MomentSet::cov_xy);
    m.def("clt_moments", &clt_moments);

    py::class_<ExactTwoStep>(m, "ExactTwoStep")
        .def(py::init<const WalkConfig&>())
        .def("cdf_radius", py::vectorize(&ExactTwoStep::cdf_radius))
        .def("pdf_radius", py::vectorize(&ExactTwoStep::pdf_radius))
        .def("cdf_angle", py::vectorize(&ExactTwoStep::cdf_angle))
        .def("pdf_angle", py::vectorize(&ExactTwoStep::pdf_angle))
        .def("conditional_cdf_radius_given_angle", &ExactTwoStep::conditional_cdf_radius_given_angle,
             py::arg("r"), py::arg("theta"))
        .def("joint_pdf", py::vectorize(&ExactTwoStep::joint_pdf));

    m.def("min_radius", py::overload_cast<const WalkConfig&>(&min_radius));
    m.def("uniqueness_threshold", &uniqueness_threshold);
    m.def("is_radius_function_of_angle", &is_radius_function_of_angle);

    py::class_<SupportBoundary>(m, "SupportBoundary")
        .def(py::init<const WalkConfig&>())
        .def_property_readonly("min_radius", &SupportBoundary::min_radius)
        .def_property_readonly("radius_is_function_of_angle", &SupportBoundary::radius_is_function_of_angle)
        .def("outer_boundary",
             [](const SupportBoundary& s, double phi) {
                 auto p = s.outer_boundary(phi);
                 return py::make_tuple(p.radius, p.angle);
             })
        .def("inner_boundary",
             [](const SupportBoundary& s, double t) {
                 auto b = s.inner_boundary(t);
                 return py::make_tuple(b.point.radius, b.point.angle, b.segment_index, b.local_angle);
             })
        .def("contains", [](const SupportBoundary& s, double r, double theta,
                            double tol) { return s.contains({r, theta}, tol); },
             py::arg("r"), py::arg("theta"), py::arg("tol") = 0.0);

    py::class_<JointLaw>(m, "JointLaw")
        .def_property_readonly("config", &JointLaw::config)
        .def("density", &JointLaw::density);
    py::class_<ArcLaw, JointLaw>(m, "ArcLaw").def(py::init<const WalkConfig&>());
    py::class_<ExactTwoStepLaw, JointLaw>(m, "ExactTwoStepLaw").def(py::init<const WalkConfig&>());
    py::class_<PolarGridDistribution, JointLaw>(m, "PolarGridDistribution")
        .def_property_readonly("radii", [](const PolarGridDistribution& g) { return to_array(g.radii()); })
        .def_property_readonly("angles", [](const PolarGridDistribution& g) { return to_array(g.angles()); })
        .def_property_readonly("values",
                               [](const PolarGridDistribution& g) {
                                   auto arr = to_array(g.values());
                                   arr.resize({g.radii().size(), g.angles().size()});
                                   return arr;
                               })
        .def_property_readonly("normalization", &PolarGridDistribution::normalization)
        .def_property_readonly("raw_mass", &PolarGridDistribution::raw_mass)
        .def("mass", &PolarGridDistribution::mass)
        .def("marginal_radius", [](const PolarGridDistribution& g) { return to_array(g.marginal_radius()); })
        .def("marginal_angle", [](const PolarGridDistribution& g) { return to_array(g.marginal_angle()); })
        .def("cdf_radius", &PolarGridDistribution::cdf_radius)
        .def("cdf_angle", &PolarGridDistribution::cdf_angle);

    m.def(
        "compute_joint",
        [](const WalkConfig& cfg, int grid_r, int grid_theta, int phi_nodes, int threads) {
            GridOptions opts;
            opts.radial_nodes = grid_r;
            opts.angle_nodes = grid_theta;
            opts.phi_nodes = phi_nodes;
            opts.threads = threads;
            py::gil_scoped_release release;
            return compute_joint(cfg, opts);
        },
        py::arg("cfg"), py::arg("grid_r") = 400, py::arg("grid_theta") = 400, py::arg("phi_nodes") = 64,
        py::arg("threads") = 0);
    m.def(
        "propagate",
        [](const JointLaw& prev, int grid_r, int grid_theta, int phi_nodes) {
            GridOptions opts;
            opts.radial_nodes = grid_r;
            opts.angle_nodes = grid_theta;
            opts.phi_nodes = phi_nodes;
            return propagate(prev, opts);
        },
        py::arg("prev"), py::arg("grid_r") = 400, py::arg("grid_theta") = 400, py::arg("phi_nodes") = 64);
    m.def("cdf_radius_recursive", &cdf_radius_recursive, py::arg("r"), py::arg("prev"));
    m.def("cdf_angle_approx", &cdf_angle_approx, py::arg("theta"), py::arg("prev"));
    m.def("pdf_angle_approx", &pdf_angle_approx, py::arg("theta"), py::arg("prev"));

    m.def("normal_cdf", py::vectorize(&normal_cdf));
    m.def("normal_pdf", py::vectorize(&normal_pdf));
    py::class_<GeneralizedChiSquare>(m, "GeneralizedChiSquare")
        .def(py::init([](std::vector<double> w, std::vector<int> k, std::vector<double> lam, double s, double mu) {
                 return GeneralizedChiSquare({std::move(w), std::move(k), std::move(lam), s, mu});
             }),
             py::arg("weights"), py::arg("dofs"), py::arg("noncentralities"), py::arg("gaussian_sd") = 0.0,
             py::arg("offset") = 0.0)
        .def("mean", &GeneralizedChiSquare::mean)
        .def("variance", &GeneralizedChiSquare::variance)
        .def("cdf", py::vectorize(&GeneralizedChiSquare::cdf))
        .def("pdf", py::vectorize(&GeneralizedChiSquare::pdf));

    py::class_<LargeNModel>(m, "LargeNModel")
        .def(py::init<const WalkConfig&>())
        .def_property_readonly("moments", &LargeNModel::moments)
        .def("cdf_radius", py::vectorize(&LargeNModel::cdf_radius))
        .def("pdf_radius", py::vectorize(&LargeNModel::pdf_radius))
        .def("cdf_angle", py::vectorize(&LargeNModel::cdf_angle))
        .def("pdf_angle", py::vectorize(&LargeNModel::pdf_angle))
        .def("joint_pdf", &LargeNModel::joint_pdf, py::arg("r"), py::arg("theta"), py::arg("truncate") = false)
        .def("support_mass", &LargeNModel::support_mass);

    m.def(
        "sample_walk",
        [](const WalkConfig& cfg, std::int64_t count, std::uint64_t seed, int threads) {
            std::optional<SampleBatch> batch;
            {
                py::gil_scoped_release release;
                batch = sample_walk(cfg, count, seed, threads);
            }
            return py::make_tuple(to_array(batch->radii()), to_array(batch->angles()));
        },
        py::arg("cfg"), py::arg("count"), py::arg("seed"), py::arg("threads") = 0,
        "Endpoints of `count` walks as (radii, angles) arrays.");
    m.def(
        "ks_distance",
        [](std::vector<double> values, const std::function<double(double)>& cdf) {
            return ks_distance(empirical_cdf(std::move(values)), cdf);
        },
        py::arg("values"), py::arg("cdf"));
}
