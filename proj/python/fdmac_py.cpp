#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdmac/analytic.hpp"
#include "fdmac/simulator.hpp"
#include "fdmac/stats.hpp"

namespace py = pybind11;
using namespace fdmac;

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Throughput theory and slot simulator for a full-duplex access point";

  py::register_exception<InvalidConfig>(mod, "InvalidConfig", PyExc_ValueError);
  py::register_exception<EmptyNetwork>(mod, "EmptyNetwork", PyExc_ValueError);

  py::class_<NetworkConfig>(mod, "NetworkConfig")
      .def(py::init([](int m, int n, double p_ap, double p_fd, double p_hd) {
             return NetworkConfig{m, n, p_ap, p_fd, p_hd};
           }),
           py::arg("fd_count"), py::arg("hd_count"), py::arg("p_ap"), py::arg("p_fd"),
           py::arg("p_hd"))
      .def_readwrite("fd_count", &NetworkConfig::fd_count)
      .def_readwrite("hd_count", &NetworkConfig::hd_count)
      .def_readwrite("p_ap", &NetworkConfig::p_ap)
      .def_readwrite("p_fd", &NetworkConfig::p_fd)
      .def_readwrite("p_hd", &NetworkConfig::p_hd)
      .def("station_count", &NetworkConfig::station_count)
      .def(py::self == py::self)
      .def("__repr__", [](const NetworkConfig& c) {
        return "NetworkConfig(fd_count=" + std::to_string(c.fd_count) +
               ", hd_count=" + std::to_string(c.hd_count) + ", p_ap=" + std::to_string(c.p_ap) +
               ", p_fd=" + std::to_string(c.p_fd) + ", p_hd=" + std::to_string(c.p_hd) + ")";
      });

  py::class_<ThroughputReport>(mod, "ThroughputReport")
      .def_readonly("head_fraction", &ThroughputReport::head_fraction)
      .def_readonly("hd_down", &ThroughputReport::hd_down)
      .def_readonly("hd_up", &ThroughputReport::hd_up)
      .def_readonly("fd_down", &ThroughputReport::fd_down)
      .def_readonly("fd_up", &ThroughputReport::fd_up)
      .def_readonly("sum", &ThroughputReport::sum);

  py::class_<Violation>(mod, "Violation")
      .def_property_readonly("kind", [](const Violation& v) { return to_string(v.kind); })
      .def_readonly("message", &Violation::message);

  mod.def("validate", &validate, py::arg("config"));
  mod.def("head_fraction", &head_fraction, py::arg("config"));
  mod.def("throughputs", &throughputs, py::arg("config"));
  mod.def("dca_config", &dca_config, py::arg("fd_count"), py::arg("hd_count"));
  mod.def("fairness_config", &fairness_config, py::arg("fd_count"), py::arg("hd_count"));
  mod.def("dca_gain", &dca_gain, py::arg("fd_count"), py::arg("hd_count"));

  py::enum_<BacklogPolicy>(mod, "BacklogPolicy")
      .value("saturated", BacklogPolicy::saturated)
      .value("fixed", BacklogPolicy::fixed);

  py::class_<SimStats>(mod, "SimStats")
      .def_readonly("fd_count", &SimStats::fd_count)
      .def_readonly("hd_count", &SimStats::hd_count)
      .def_readonly("total_slots", &SimStats::total_slots)
      .def_readonly("fd_down", &SimStats::fd_down)
      .def_readonly("fd_up", &SimStats::fd_up)
      .def_readonly("hd_down", &SimStats::hd_down)
      .def_readonly("hd_up", &SimStats::hd_up)
      .def_readonly("ap_wins", &SimStats::ap_wins)
      .def_readonly("ap_wins_hd_head", &SimStats::ap_wins_hd_head)
      .def_readonly("fd_wins_no_packet", &SimStats::fd_wins_no_packet)
      .def("total_down", &SimStats::total_down)
      .def("total_up", &SimStats::total_up)
      .def(py::self == py::self);

  py::class_<Simulation>(mod, "Simulation")
      .def(py::init([](const NetworkConfig& c, std::optional<std::size_t> capacity,
                       std::uint64_t seed, std::uint64_t warmup, BacklogPolicy backlog) {
             return Simulation(c, SimOptions{capacity, seed, warmup, backlog});
           }),
           py::arg("config"), py::arg("capacity") = py::none(), py::arg("seed") = 0,
           py::arg("warmup") = 0, py::arg("backlog") = BacklogPolicy::saturated)
      .def(
          "step", [](Simulation& s, std::uint64_t slots) {
            for (std::uint64_t i = 0; i < slots; ++i) s.step();
          },
          py::arg("slots") = 1)
      .def_property_readonly("stats", &Simulation::stats)
      .def_property_readonly("capacity", &Simulation::capacity)
      .def_property_readonly("queue_size", [](const Simulation& s) { return s.queue().size(); })
      .def_property_readonly("slots_played", &Simulation::slots_played);

  mod.def("default_capacity", &default_capacity, py::arg("config"));
  mod.def("run", &run, py::arg("config"), py::arg("slots"), py::arg("warmup"),
          py::arg("capacity"), py::arg("seed"), py::arg("backlog") = BacklogPolicy::saturated,
          py::call_guard<py::gil_scoped_release>());
  mod.def("empirical_report", &empirical_report, py::arg("stats"), py::arg("config"));

  py::class_<FlowEstimate>(mod, "FlowEstimate")
      .def_readonly("mean", &FlowEstimate::mean)
      .def_readonly("std_error", &FlowEstimate::std_error);
  mod.def("estimate", &estimate, py::arg("count"), py::arg("total"));

  py::class_<FlowComparison>(mod, "FlowComparison")
      .def_readonly("flow", &FlowComparison::flow)
      .def_readonly("applicable", &FlowComparison::applicable)
      .def_readonly("theory", &FlowComparison::theory)
      .def_readonly("empirical", &FlowComparison::empirical)
      .def_readonly("z", &FlowComparison::z)
      .def_readonly("passed", &FlowComparison::pass);

  py::class_<ComparisonResult>(mod, "ComparisonResult")
      .def_readonly("flows", &ComparisonResult::flows)
      .def_readonly("z_max", &ComparisonResult::z_max)
      .def_readonly("passed", &ComparisonResult::pass)
      .def("flow", &ComparisonResult::flow, py::arg("name"),
           py::return_value_policy::reference_internal);
  mod.def("compare", &compare, py::arg("theory"), py::arg("stats"), py::arg("config"),
          py::arg("z_max") = kDefaultZMax);
}
