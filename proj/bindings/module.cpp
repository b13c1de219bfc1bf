// Copyright 2026 The CLDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>
#include <vector>

#include "cldp/baseline.hpp"
#include "cldp/errors.hpp"
#include "cldp/sweep.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cooperative LDP mechanism for multi-user time series";

  py::register_exception<cldp::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<cldp::IndexOutOfRange>(m, "IndexOutOfRange",
                                                PyExc_IndexError);
  py::register_exception<cldp::LengthMismatch>(m, "LengthMismatch",
                                               PyExc_ValueError);
  py::register_exception<cldp::ShapeMismatch>(m, "ShapeMismatch",
                                              PyExc_ValueError);
  py::register_exception<cldp::UserCountMismatch>(m, "UserCountMismatch",
                                                  PyExc_ValueError);
  py::register_exception<cldp::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<cldp::FileNotFound>(m, "FileNotFound",
                                             PyExc_FileNotFoundError);
  py::register_exception<cldp::MissingColumn>(m, "MissingColumn",
                                              PyExc_KeyError);
  py::register_exception<cldp::EmptyInput>(m, "EmptyInput", PyExc_ValueError);
  py::register_exception<cldp::ParseError>(m, "ParseError", PyExc_ValueError);

  py::enum_<cldp::NoiseMode>(m, "NoiseMode")
      .value("SHUFFLE", cldp::NoiseMode::kShuffle)
      .value("TOSS", cldp::NoiseMode::kToss);

  py::class_<cldp::CldpConfig>(m, "CldpConfig")
      .def(py::init<>())
      .def_readwrite("num_users", &cldp::CldpConfig::num_users)
      .def_readwrite("tossing_space", &cldp::CldpConfig::tossing_space)
      .def_readwrite("window_size", &cldp::CldpConfig::window_size)
      .def_readwrite("amplitude", &cldp::CldpConfig::amplitude)
      .def_readwrite("period", &cldp::CldpConfig::period)
      .def_readwrite("mode", &cldp::CldpConfig::mode)
      .def_readwrite("master_seed", &cldp::CldpConfig::master_seed)
      .def_readwrite("randomize_assignment",
                     &cldp::CldpConfig::randomize_assignment)
      .def("validate", &cldp::CldpConfig::validate);

  py::class_<cldp::PartitionAssignment>(m, "PartitionAssignment")
      .def_readonly("user_index", &cldp::PartitionAssignment::user_index)
      .def_readonly("interval_start",
                    &cldp::PartitionAssignment::interval_start)
      .def_readonly("interval_end", &cldp::PartitionAssignment::interval_end);

  py::class_<cldp::TossingGrid>(m, "TossingGrid")
      .def_readonly("user_index", &cldp::TossingGrid::user_index)
      .def_readonly("points", &cldp::TossingGrid::points)
      .def_readonly("amplitudes", &cldp::TossingGrid::amplitudes);

  py::class_<cldp::NoiseVector>(m, "NoiseVector")
      .def_readonly("user_index", &cldp::NoiseVector::user_index)
      .def_readonly("values", &cldp::NoiseVector::values);

  py::class_<cldp::UserSeries>(m, "UserSeries")
      .def(py::init<>())
      .def(py::init([](int user_index, std::vector<double> samples) {
             cldp::UserSeries s;
             s.user_index = user_index;
             s.samples = std::move(samples);
             return s;
           }),
           py::arg("user_index"), py::arg("samples"))
      .def_readwrite("user_index", &cldp::UserSeries::user_index)
      .def_readwrite("samples", &cldp::UserSeries::samples);

  py::class_<cldp::PerturbedSeries>(m, "PerturbedSeries")
      .def_readonly("user_index", &cldp::PerturbedSeries::user_index)
      .def_readonly("samples", &cldp::PerturbedSeries::samples)
      .def_readonly("noise_used", &cldp::PerturbedSeries::noise_used)
      .def_readonly("dropped_samples", &cldp::PerturbedSeries::dropped_samples);

  py::class_<cldp::AggregateReport>(m, "AggregateReport")
      .def_readonly("per_timestamp_sum", &cldp::AggregateReport::per_timestamp_sum)
      .def_readonly("per_timestamp_mean",
                    &cldp::AggregateReport::per_timestamp_mean)
      .def_readonly("per_window_total", &cldp::AggregateReport::per_window_total)
      .def_readonly("residual_noise_per_window",
                    &cldp::AggregateReport::residual_noise_per_window)
      .def_readonly("dropped_samples", &cldp::AggregateReport::dropped_samples)
      .def_readonly("num_users", &cldp::AggregateReport::num_users)
      .def_readonly("window_size", &cldp::AggregateReport::window_size);

  py::class_<cldp::PrivacyReport>(m, "PrivacyReport")
      .def_readonly("tossing_space", &cldp::PrivacyReport::tossing_space)
      .def_readonly("window_size", &cldp::PrivacyReport::window_size)
      .def_readonly("num_users", &cldp::PrivacyReport::num_users)
      .def_readonly("amplitude", &cldp::PrivacyReport::amplitude)
      .def_readonly("epsilon_constant", &cldp::PrivacyReport::epsilon_constant)
      .def_readonly("epsilon_proxy", &cldp::PrivacyReport::epsilon_proxy)
      .def_readonly("break_probability_log10",
                    &cldp::PrivacyReport::break_probability_log10)
      .def_readonly("break_probability", &cldp::PrivacyReport::break_probability);

  py::enum_<cldp::SynthSignal>(m, "SynthSignal")
      .value("CONSTANT", cldp::SynthSignal::kConstant)
      .value("SINUSOID", cldp::SynthSignal::kSinusoid)
      .value("RANDOM_WALK", cldp::SynthSignal::kRandomWalk);

  py::class_<cldp::SynthSpec>(m, "SynthSpec")
      .def(py::init<>())
      .def_readwrite("num_users", &cldp::SynthSpec::num_users)
      .def_readwrite("samples_per_user", &cldp::SynthSpec::samples_per_user)
      .def_readwrite("signal", &cldp::SynthSpec::signal)
      .def_readwrite("level", &cldp::SynthSpec::level)
      .def_readwrite("amplitude", &cldp::SynthSpec::amplitude)
      .def_readwrite("period", &cldp::SynthSpec::period)
      .def_readwrite("step_std", &cldp::SynthSpec::step_std)
      .def_readwrite("seed", &cldp::SynthSpec::seed);

  py::class_<cldp::RawDataset>(m, "RawDataset")
      .def(py::init<>())
      .def(py::init([](std::string column_name, std::vector<double> values) {
             cldp::RawDataset d;
             d.column_name = std::move(column_name);
             d.values = std::move(values);
             d.source = "synthetic";
             return d;
           }),
           py::arg("column_name"), py::arg("values"))
      .def_readwrite("column_name", &cldp::RawDataset::column_name)
      .def_readwrite("values", &cldp::RawDataset::values)
      .def_readwrite("rows_skipped", &cldp::RawDataset::rows_skipped)
      .def_readwrite("source", &cldp::RawDataset::source);

  py::class_<cldp::SplitResult>(m, "SplitResult")
      .def_readonly("users", &cldp::SplitResult::users)
      .def_readonly("dropped_samples", &cldp::SplitResult::dropped_samples);

  py::class_<cldp::LaplaceConfig>(m, "LaplaceConfig")
      .def(py::init<>())
      .def_readwrite("epsilon", &cldp::LaplaceConfig::epsilon)
      .def_readwrite("sensitivity", &cldp::LaplaceConfig::sensitivity)
      .def_readwrite("seed", &cldp::LaplaceConfig::seed);

  m.def("partition_interval", &cldp::partition_interval, py::arg("user_index"),
        py::arg("cfg"));
  m.def("tossing_grid", &cldp::tossing_grid, py::arg("user_index"),
        py::arg("cfg"));
  m.def("sample_noise_vector", &cldp::sample_noise_vector,
        py::arg("user_index"), py::arg("cfg"), py::arg("window_index") = 0);
  m.def("assign_partitions", &cldp::assign_partitions, py::arg("cfg"));

  m.def(
      "perturb_window",
      [](const std::vector<double>& window, const cldp::NoiseVector& noise) {
        return cldp::perturb_window(window, noise);
      },
      py::arg("window"), py::arg("noise"));
  m.def("perturb_user_series", &cldp::perturb_user_series, py::arg("series"),
        py::arg("cfg"), py::arg("partition_of_user"));

  m.def("aggregate", &cldp::aggregate, py::arg("users"), py::arg("cfg"));
  m.def("aggregate_with_truth", &cldp::aggregate_with_truth, py::arg("users"),
        py::arg("originals"), py::arg("cfg"));
  m.def(
      "residual",
      [](const std::vector<double>& truth, const std::vector<double>& noisy) {
        return cldp::residual(truth, noisy);
      },
      py::arg("true_aggregate"), py::arg("noisy_aggregate"));

  m.def(
      "mse",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return cldp::mse(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def("epsilon_proxy", &cldp::epsilon_proxy, py::arg("tossing_space"),
        py::arg("window_size"), py::arg("num_users"), py::arg("amplitude"),
        py::arg("epsilon_constant") = 1.0);
  m.def("break_probability_log10", &cldp::break_probability_log10,
        py::arg("tossing_space"), py::arg("window_size"), py::arg("num_users"));
  m.def("privacy_report", &cldp::privacy_report, py::arg("tossing_space"),
        py::arg("window_size"), py::arg("num_users"), py::arg("amplitude"),
        py::arg("epsilon_constant") = 1.0);
  m.def(
      "aggregate_error",
      [](const cldp::AggregateReport& report,
         const std::vector<double>& true_window_totals) {
        return cldp::aggregate_error(report, true_window_totals);
      },
      py::arg("report"), py::arg("true_window_totals"));

  m.def("load_power_csv", &cldp::load_power_csv, py::arg("path"),
        py::arg("column_name"));
  m.def("split_users", &cldp::split_users, py::arg("data"),
        py::arg("num_users"));
  m.def("synth_series", &cldp::synth_series, py::arg("spec"));
  m.def("export_csv", &cldp::export_csv, py::arg("data"), py::arg("path"));
  m.def("import_csv", &cldp::import_csv, py::arg("path"));

  m.def("laplace_perturb", &cldp::laplace_perturb, py::arg("series"),
        py::arg("cfg"));
}
