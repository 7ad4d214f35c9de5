// Copyright 2026 The qnn-cancer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnn/arch.hpp"
#include "qnn/data.hpp"
#include "qnn/qsim.hpp"
#include "qnn/train.hpp"

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace qnn;

namespace {

std::vector<train::LabeledInput> labeled(const std::vector<arch::InputAngles> &inputs,
                                         const std::vector<int> &labels) {
    if (inputs.size() != labels.size()) {
        throw std::invalid_argument("inputs and labels differ in length");
    }
    std::vector<train::LabeledInput> out;
    out.reserve(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        out.push_back({inputs[i], labels[i]});
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statevector quantum classifier core";

    py::register_exception<data::DataError>(m, "DataError", PyExc_ValueError);

    // qsim
    py::enum_<qsim::GateKind>(m, "GateKind")
        .value("RY", qsim::GateKind::RY)
        .value("RZ", qsim::GateKind::RZ)
        .value("U3", qsim::GateKind::U3)
        .value("CX", qsim::GateKind::CX);

    py::class_<qsim::Gate>(m, "Gate")
        .def_static("ry", &qsim::Gate::ry, py::arg("qubit"), py::arg("theta"))
        .def_static("rz", &qsim::Gate::rz, py::arg("qubit"), py::arg("phi"))
        .def_static("u3", &qsim::Gate::u3, py::arg("qubit"), py::arg("theta"),
                    py::arg("phi"), py::arg("lam"))
        .def_static("cx", &qsim::Gate::cx, py::arg("control"), py::arg("target"))
        .def_readonly("kind", &qsim::Gate::kind)
        .def_readonly("target", &qsim::Gate::target)
        .def_readonly("control", &qsim::Gate::control)
        .def_readonly("angles", &qsim::Gate::angles)
        .def(py::self == py::self)
        .def("__repr__", [](const qsim::Gate &g) { return qsim::to_string(g); });

    py::class_<qsim::StateVector>(m, "StateVector")
        .def(py::init<std::size_t>(), py::arg("n_qubits"))
        .def_static("from_amplitudes", &qsim::StateVector::from_amplitudes)
        .def_property_readonly("n_qubits", &qsim::StateVector::n_qubits)
        .def("amplitudes",
             [](const qsim::StateVector &s) {
                 const auto a = s.amplitudes();
                 return std::vector<qsim::Complex>(a.begin(), a.end());
             })
        .def("apply", py::overload_cast<const qsim::Gate &>(&qsim::StateVector::apply))
        .def("apply_all",
             [](qsim::StateVector &s, const std::vector<qsim::Gate> &gates) { s.apply(gates); })
        .def("reset", &qsim::StateVector::reset)
        .def("norm_squared", &qsim::StateVector::norm_squared)
        .def("prob_one", &qsim::StateVector::prob_one, py::arg("qubit"))
        .def("sample", &qsim::StateVector::sample, py::arg("shots"), py::arg("seed"));

    m.def("new_zero_state", &qsim::new_zero_state, py::arg("n_qubits"));
    m.def("apply_gate", &qsim::apply_gate, py::arg("state"), py::arg("gate"));
    m.def("prob_one", &qsim::prob_one, py::arg("state"), py::arg("qubit"));
    m.def(
        "dense_oracle",
        [](std::size_t n, const std::vector<qsim::Gate> &gates) {
            return qsim::dense_oracle(n, gates);
        },
        py::arg("n_qubits"), py::arg("gates"));

    // arch
    py::enum_<arch::Topology>(m, "Topology")
        .value("PartialChain", arch::Topology::PartialChain)
        .value("FullyEntangled", arch::Topology::FullyEntangled);
    m.def("parse_topology", &arch::parse_topology);

    py::class_<arch::Architecture>(m, "Architecture")
        .def(py::init<arch::Topology, std::size_t, std::size_t>(), py::arg("topology"),
             py::arg("n_qubits"), py::arg("n_layers"))
        .def_property_readonly("topology", &arch::Architecture::topology)
        .def_property_readonly("n_qubits", &arch::Architecture::n_qubits)
        .def_property_readonly("n_layers", &arch::Architecture::n_layers)
        .def("params_per_layer", &arch::Architecture::params_per_layer)
        .def("param_count", &arch::Architecture::param_count);
    m.def("param_count", &arch::param_count);

    py::class_<arch::ParamVector>(m, "ParamVector")
        .def(py::init<const arch::Architecture &, std::vector<double>>(), py::arg("arch"),
             py::arg("values"))
        .def_static("zeros", &arch::ParamVector::zeros)
        .def("values",
             [](const arch::ParamVector &p) {
                 const auto v = p.values();
                 return std::vector<double>(v.begin(), v.end());
             })
        .def("__len__", &arch::ParamVector::size)
        .def("__getitem__", [](const arch::ParamVector &p, std::size_t k) {
            if (k >= p.size()) throw py::index_error();
            return p[k];
        });

    py::class_<arch::InputAngles>(m, "InputAngles")
        .def(py::init<std::vector<double>>(), py::arg("angles"))
        .def("angles",
             [](const arch::InputAngles &a) {
                 const auto v = a.angles();
                 return std::vector<double>(v.begin(), v.end());
             })
        .def("__len__", &arch::InputAngles::size);

    m.def("build_circuit", &arch::build_circuit, py::arg("arch"), py::arg("input"),
          py::arg("params"));
    m.def("forward", &arch::forward, py::arg("arch"), py::arg("input"), py::arg("params"));

    // data
    py::class_<data::Sample>(m, "Sample")
        .def(py::init<>())
        .def_readwrite("features", &data::Sample::features)
        .def_readwrite("label", &data::Sample::label);
    py::class_<data::FeatureBounds>(m, "FeatureBounds")
        .def_readonly("mins", &data::FeatureBounds::mins)
        .def_readonly("maxs", &data::FeatureBounds::maxs);
    py::class_<data::Split>(m, "Split")
        .def_readonly("train", &data::Split::train)
        .def_readonly("test", &data::Split::test);

    m.def("load_wbc_csv", &data::load_wbc_csv, py::arg("path"));
    m.def(
        "compute_bounds",
        [](const std::vector<data::Sample> &s) { return data::compute_bounds(s); },
        py::arg("samples"));
    m.def("encode", &data::encode, py::arg("sample"), py::arg("bounds"));
    m.def("encode_feature", &data::encode_feature, py::arg("x"), py::arg("lo"), py::arg("hi"));
    m.def(
        "split",
        [](const std::vector<data::Sample> &s, std::size_t n) { return data::split(s, n); },
        py::arg("samples"), py::arg("train_count"));

    // train
    py::enum_<train::ParamInit>(m, "ParamInit")
        .value("Zeros", train::ParamInit::Zeros)
        .value("Uniform", train::ParamInit::Uniform);

    py::class_<train::TrainConfig>(m, "TrainConfig")
        .def(py::init<>())
        .def_readwrite("initial_rate", &train::TrainConfig::initial_rate)
        .def_readwrite("decay_factor", &train::TrainConfig::decay_factor)
        .def_readwrite("decay_patience", &train::TrainConfig::decay_patience)
        .def_readwrite("fd_step", &train::TrainConfig::fd_step)
        .def_readwrite("epochs", &train::TrainConfig::epochs)
        .def_readwrite("loss_clip_epsilon", &train::TrainConfig::loss_clip_epsilon)
        .def_readwrite("seed", &train::TrainConfig::seed)
        .def_readwrite("init", &train::TrainConfig::init)
        .def_readwrite("record_params", &train::TrainConfig::record_params)
        .def_readwrite("workers", &train::TrainConfig::workers)
        .def("validate", &train::TrainConfig::validate);

    m.def("loss", &train::loss, py::arg("expected"), py::arg("predicted"),
          py::arg("clip_epsilon") = 1e-10);
    m.def(
        "finite_diff_gradient",
        [](const arch::Architecture &a, const arch::InputAngles &in, int expected,
           const arch::ParamVector &p, double fd_step, double clip_epsilon,
           std::size_t workers) {
            return train::finite_diff_gradient(a, in, expected, p,
                                               {fd_step, clip_epsilon, workers});
        },
        py::arg("arch"), py::arg("input"), py::arg("expected"), py::arg("params"),
        py::arg("fd_step") = 0.01, py::arg("clip_epsilon") = 1e-10, py::arg("workers") = 1);
    m.def(
        "step",
        [](const arch::ParamVector &p, const std::vector<double> &g, double rate) {
            return train::step(p, g, rate);
        },
        py::arg("params"), py::arg("grad"), py::arg("rate"));
    m.def("initial_params", &train::initial_params, py::arg("arch"), py::arg("init"),
          py::arg("seed"));

    py::class_<train::TrainTrace>(m, "TrainTrace")
        .def_readonly("loss", &train::TrainTrace::loss)
        .def_readonly("sample", &train::TrainTrace::sample)
        .def_readonly("rate", &train::TrainTrace::rate)
        .def_readonly("params", &train::TrainTrace::params)
        .def("iterations", &train::TrainTrace::iterations)
        .def("decay_events", &train::TrainTrace::decay_events);
    py::class_<train::TrainResult>(m, "TrainResult")
        .def_readonly("params", &train::TrainResult::params)
        .def_readonly("trace", &train::TrainResult::trace);

    m.def(
        "train_online",
        [](const arch::Architecture &a, const std::vector<arch::InputAngles> &inputs,
           const std::vector<int> &labels, const train::TrainConfig &config,
           const arch::ParamVector &init) {
            const auto set = labeled(inputs, labels);
            py::gil_scoped_release release;
            return train::train_online(a, set, config, init);
        },
        py::arg("arch"), py::arg("inputs"), py::arg("labels"), py::arg("config"),
        py::arg("init"));

    py::class_<train::ThresholdFraction>(m, "ThresholdFraction")
        .def_readonly("threshold", &train::ThresholdFraction::threshold)
        .def_readonly("fraction", &train::ThresholdFraction::fraction);
    py::class_<train::Evaluation>(m, "Evaluation")
        .def_readonly("loss", &train::Evaluation::loss)
        .def_readonly("prediction", &train::Evaluation::prediction)
        .def_readonly("label", &train::Evaluation::label)
        .def_readonly("average_loss", &train::Evaluation::average_loss)
        .def_readonly("accuracy", &train::Evaluation::accuracy)
        .def_readonly("above", &train::Evaluation::above);

    m.def(
        "evaluate",
        [](const arch::Architecture &a, const arch::ParamVector &p,
           const std::vector<arch::InputAngles> &inputs, const std::vector<int> &labels,
           const std::vector<double> &thresholds, double clip_epsilon) {
            return train::evaluate(a, p, labeled(inputs, labels), thresholds, clip_epsilon);
        },
        py::arg("arch"), py::arg("params"), py::arg("inputs"), py::arg("labels"),
        py::arg("thresholds") = std::vector<double>{0.01, 0.05},
        py::arg("clip_epsilon") = 1e-10);
}
