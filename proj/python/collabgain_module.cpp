#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "collabgain/bounds.hpp"
#include "collabgain/energy_resource.hpp"
#include "collabgain/error.hpp"
#include "collabgain/geometry.hpp"
#include "collabgain/rate_alloc.hpp"
#include "collabgain/relay_select.hpp"
#include "collabgain/rootfind.hpp"
#include "collabgain/sweep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace collabgain;

PYBIND11_MODULE(collabgain, m) {
    m.doc() = "Collaboration gains, rate-energy duality and relay selection for two-user "
              "decode-and-forward networks";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<DeadLinkError>(m, "DeadLinkError", base.ptr());
    py::register_exception<SolverError>(m, "SolverError", base.ptr());
    py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());

    py::enum_<ProtocolKind>(m, "ProtocolKind")
        .value("NCP", ProtocolKind::NCP)
        .value("CP", ProtocolKind::CP);

    py::class_<LinkGains>(m, "LinkGains")
        .def(py::init<double, double, double>(), "h12"_a, "h13"_a, "h23"_a)
        .def_property_readonly("h12", &LinkGains::h12)
        .def_property_readonly("h13", &LinkGains::h13)
        .def_property_readonly("h23", &LinkGains::h23)
        .def("__repr__", [](const LinkGains& g) {
            std::ostringstream os;
            os << "LinkGains(h12=" << g.h12() << ", h13=" << g.h13() << ", h23=" << g.h23() << ")";
            return os.str();
        });

    py::class_<OperatingPoint>(m, "OperatingPoint")
        .def(py::init<double, double>(), "epsilon"_a, "k"_a)
        .def_property_readonly("epsilon", &OperatingPoint::epsilon)
        .def_property_readonly("k", &OperatingPoint::k);

    py::class_<Allocation>(m, "Allocation")
        .def_readonly("protocol", &Allocation::protocol)
        .def_readonly("beta", &Allocation::beta)
        .def_readonly("base_rate", &Allocation::base_rate)
        .def_readonly("rate2", &Allocation::rate2)
        .def_readonly("sum_rate", &Allocation::sum_rate);

    py::class_<GainReport>(m, "GainReport")
        .def_readonly("gain", &GainReport::gain)
        .def_readonly("ncp", &GainReport::ncp)
        .def_readonly("cp", &GainReport::cp)
        .def_readonly("collaborate", &GainReport::collaborate);

    py::class_<EnergySolution>(m, "EnergySolution")
        .def_readonly("protocol", &EnergySolution::protocol)
        .def_readonly("epsilon_min", &EnergySolution::epsilon_min)
        .def_readonly("beta", &EnergySolution::beta);

    py::class_<ResourceUsage>(m, "ResourceUsage")
        .def_readonly("protocol", &ResourceUsage::protocol)
        .def_readonly("beta1", &ResourceUsage::beta1)
        .def_readonly("beta2", &ResourceUsage::beta2)
        .def_readonly("total", &ResourceUsage::total);

    py::class_<BoundPair>(m, "BoundPair")
        .def_readonly("lower", &BoundPair::lower)
        .def_readonly("upper", &BoundPair::upper)
        .def_readonly("beta_at_bound", &BoundPair::beta_at_bound)
        .def_readonly("degenerate", &BoundPair::degenerate);

    m.def("rate_curve", &rate_curve, "h"_a, "eps"_a, "beta"_a);
    m.def("solve_monotone",
          [](const py::function& f, double lo, double hi, double abs_tol, int max_iter) {
              auto g = [&](double x) { return f(x).cast<double>(); };
              return rootfind::find_root(g, lo, hi, abs_tol, max_iter);
          },
          "f"_a, "lo"_a, "hi"_a, "abs_tol"_a = rootfind::kDefaultAbsTol, "max_iter"_a = rootfind::kDefaultMaxIter);

    m.def("ncp_allocate", &ncp_allocate, "gains"_a, "op"_a);
    m.def("cp_allocate", &cp_allocate, "gains"_a, "op"_a);
    m.def("collaboration_gain", &collaboration_gain, "gains"_a, "op"_a);

    m.def("min_tern", &min_tern, "protocol"_a, "gains"_a, "k"_a, "rate"_a);
    m.def("energy_gain", &energy_gain, "gains"_a, "k"_a, "rate"_a);
    m.def("feasible", &feasible, "protocol"_a, "gains"_a, "op"_a, "rate"_a);
    m.def("resource_usage", &resource_usage, "protocol"_a, "gains"_a, "op"_a, "rate"_a);

    m.def("ncp_bounds_high_tern", &ncp_bounds_high_tern, "gains"_a, "op"_a);
    m.def("cp_bounds_high_tern", &cp_bounds_high_tern, "gains"_a, "op"_a);
    m.def("ncp_bounds_low_tern", &ncp_bounds_low_tern, "gains"_a, "op"_a);
    m.def("cp_bounds_low_tern", &cp_bounds_low_tern, "gains"_a, "op"_a);
    m.def("low_tern_gain_limit", &low_tern_gain_limit, "gains"_a, "k"_a);
    m.def("high_tern_gain_limit", &high_tern_gain_limit, "k"_a);
    m.def("small_k_gain_slope", &small_k_gain_slope, "gains"_a, "eps"_a);

    m.def("gains_from_placement",
          [](std::pair<double, double> s, std::pair<double, double> d, std::pair<double, double> r, double eta) {
              return gains_from_placement(
                  Placement{{s.first, s.second}, {d.first, d.second}, {r.first, r.second}, eta});
          },
          "source"_a, "destination"_a, "relay"_a, "eta"_a);
    m.def("collinear_gains", &collinear_gains, "d"_a, "eta"_a);
    m.def("optimal_relay_location", &optimal_relay_location, "k"_a, "eta"_a);
    m.def("max_geometric_gain", &max_geometric_gain, "k"_a, "eta"_a);

    m.def("sweep_csv",
          [](const std::string& kind, double epsilon, double eta, double k, std::optional<double> rate,
             std::optional<std::tuple<double, double, double>> d_axis) {
              const auto parsed = parse_sweep_kind(kind);
              if (!parsed) throw ValidationError("unknown sweep kind " + kind);
              SweepConfig c;
              c.kind = *parsed;
              c.epsilon = epsilon;
              c.eta = eta;
              c.k = k;
              c.rate = rate;
              if (d_axis) c.d = GridAxis{std::get<0>(*d_axis), std::get<1>(*d_axis), std::get<2>(*d_axis)};
              std::ostringstream out;
              write_csv(out, sweep(c));
              return out.str();
          },
          "kind"_a, "epsilon"_a, "eta"_a, "k"_a, "rate"_a = py::none(), "d_axis"_a = py::none(),
          "Run a one-dimensional or plane sweep and return the CSV text.");

    py::class_<RelayCandidate>(m, "RelayCandidate")
        .def(py::init<std::string, double, double>(), "id"_a, "h_sr"_a, "h_rd"_a)
        .def_readonly("id", &RelayCandidate::id)
        .def_readonly("h_sr", &RelayCandidate::h_sr)
        .def_readonly("h_rd", &RelayCandidate::h_rd);

    py::class_<SelectionDecision>(m, "SelectionDecision")
        .def_readonly("protocol", &SelectionDecision::protocol)
        .def_readonly("relay_id", &SelectionDecision::relay_id)
        .def_readonly("criterion_value", &SelectionDecision::criterion_value)
        .def_readonly("exact_gain", &SelectionDecision::exact_gain)
        .def_readonly("high_tern_hint", &SelectionDecision::high_tern_hint);

    m.def("rate_energy_score", &rate_energy_score, "h_sd"_a, "candidate"_a, "k"_a);
    m.def("select_relay_rate", &select_relay_rate, "h_sd"_a, "candidates"_a, "op"_a, "exhaustive"_a = false);
    m.def("select_relay_resource", &select_relay_resource, "h_sd"_a, "candidates"_a, "op"_a, "rate"_a);
}
