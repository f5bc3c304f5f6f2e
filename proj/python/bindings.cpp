// Copyright 2026 The GSRP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings: configuration-driven runs, the scene simulator, the
// closed-form beamformer PSDs and the golden scenarios.

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "gsrp/beamformers.hpp"
#include "gsrp/pipeline.hpp"
#include "gsrp/scenarios.hpp"
#include "gsrp/wav.hpp"
#include "gsrp/weighting.hpp"

namespace py = pybind11;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;
using RArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

gsrp::ComplexVector to_vector(const CArray& a) {
  if (a.ndim() != 1) throw gsrp::DimensionMismatch("expected a 1-D complex array");
  return gsrp::ComplexVector(a.data(), a.data() + a.size());
}

gsrp::HermitianMatrix to_hermitian(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw gsrp::DimensionMismatch("expected a square complex matrix");
  const auto n = static_cast<std::size_t>(a.shape(0));
  return gsrp::HermitianMatrix::from_upper(
      gsrp::ComplexMatrix(n, n, std::vector<gsrp::Complex>(a.data(), a.data() + a.size())));
}

void check_dim(const gsrp::ComplexVector& d, const gsrp::HermitianMatrix& m) {
  if (d.size() != m.dim()) throw gsrp::DimensionMismatch("steering vector and matrix sizes differ");
}

RArray audio_to_array(const gsrp::MultichannelAudio& audio) {
  const auto m = audio.num_channels(), n = audio.num_samples();
  RArray out({m, n});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t i = 0; i < n; ++i) view(c, i) = audio.channels[c][i];
  return out;
}

gsrp::MultichannelAudio array_to_audio(const RArray& a, double sample_rate) {
  if (a.ndim() != 2) throw gsrp::DimensionMismatch("expected a (channels, samples) array");
  gsrp::MultichannelAudio audio;
  audio.sample_rate = sample_rate;
  const auto view = a.unchecked<2>();
  audio.channels.assign(a.shape(0), std::vector<double>(a.shape(1)));
  for (py::ssize_t c = 0; c < a.shape(0); ++c)
    for (py::ssize_t i = 0; i < a.shape(1); ++i) audio.channels[c][i] = view(c, i);
  return audio;
}

py::tuple vec3(const gsrp::Vec3& p) { return py::make_tuple(p.x, p.y, p.z); }

py::object location(const gsrp::Location& loc) {
  if (loc.kind == gsrp::LocationKind::azimuth) return py::float_(loc.azimuth_deg);
  return vec3(loc.point);
}

gsrp::Location to_location(const py::handle& h) {
  if (py::isinstance<py::float_>(h) || py::isinstance<py::int_>(h)) return gsrp::Location::angle(h.cast<double>());
  const auto v = h.cast<std::vector<double>>();
  if (v.size() != 3) throw gsrp::DimensionMismatch("a position needs three coordinates");
  return gsrp::Location::at({v[0], v[1], v[2]});
}

gsrp::RunConfig config_from_text(const std::string& text, const std::optional<std::filesystem::path>& base_dir) {
  return gsrp::parse_run_config(gsrp::Config::parse(text, base_dir.value_or(std::filesystem::path{})));
}

py::dict report_dict(const gsrp::RunReport& r) {
  py::list frames;
  for (const auto& f : r.frames) {
    py::dict d;
    d["frame"] = f.frame;
    d["time_s"] = f.time_s;
    d["estimate"] = location(f.estimate);
    d["truth"] = f.truth ? location(*f.truth) : py::none();
    d["error"] = f.error;
    frames.append(d);
  }
  py::dict out;
  out["frames"] = frames;
  out["frames_evaluated"] = r.frames_evaluated;
  out["speech_frames"] = r.speech_frames;
  out["mle"] = r.mle;
  out["q25"] = r.q25;
  out["q75"] = r.q75;
  out["average_map"] = py::array(py::cast(r.average_map.values));
  out["last_map"] = py::array(py::cast(r.last_map.values));
  out["snr_db_average"] = r.snr_db_average;
  out["snr_db_closest"] = r.snr_db_closest;
  out["csv"] = gsrp::report_csv(r);
  return out;
}

}  // namespace

PYBIND11_MODULE(_gsrp, m) {
  m.doc() = "Generalized steered response power localization";

  py::register_exception<gsrp::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<gsrp::DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<gsrp::NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<gsrp::RunConfig>(m, "RunConfig")
      .def_readonly("name", &gsrp::RunConfig::name)
      .def_property_readonly("beamformer", [](const gsrp::RunConfig& c) { return std::string(to_string(c.beamformer)); })
      .def_property_readonly("weighting", [](const gsrp::RunConfig& c) { return std::string(to_string(c.weighting)); })
      .def_property_readonly("num_mics", [](const gsrp::RunConfig& c) { return c.geometry.size(); })
      .def_property_readonly("has_scene", [](const gsrp::RunConfig& c) { return c.scene.has_value(); })
      .def("set_seed", [](gsrp::RunConfig& c, std::uint64_t seed) {
        if (!c.scene) throw gsrp::ConfigError("configuration has no simulated scene");
        c.scene->seed = seed;
      });

  m.def("load_config", [](const std::filesystem::path& p) { return gsrp::load_run_config(p); }, py::arg("path"));
  m.def("parse_config", &config_from_text, py::arg("text"), py::arg("base_dir") = py::none());
  m.def(
      "nearfield_config",
      [](const std::string& beamformer, double source_s) {
        return gsrp::nearfield_config(gsrp::parse_beamformer(beamformer), source_s);
      },
      py::arg("beamformer"), py::arg("source_s") = 0.15);

  m.def(
      "localize",
      [](const gsrp::RunConfig& c) {
        gsrp::RunReport r;
        {
          py::gil_scoped_release release;
          r = gsrp::localize_run(c);
        }
        return report_dict(r);
      },
      py::arg("config"), "Run a configuration end to end; returns per-frame estimates and summary errors.");

  m.def(
      "simulate",
      [](const gsrp::RunConfig& c) {
        if (!c.scene) throw gsrp::ConfigError("configuration has no simulated scene");
        gsrp::SceneOutput s;
        {
          py::gil_scoped_release release;
          s = gsrp::simulate(*c.scene);
        }
        py::dict out;
        out["samples"] = audio_to_array(s.samples);
        out["clean"] = audio_to_array(s.clean);
        out["sample_rate"] = s.samples.sample_rate;
        out["source_position"] = vec3(s.source_position);
        out["source_azimuth_deg"] = s.source_azimuth_deg;
        out["noise_only_samples"] = s.noise_only_samples;
        out["snr_db_average"] = s.snr_db_average;
        out["snr_db_closest"] = s.snr_db_closest;
        return out;
      },
      py::arg("config"));

  m.def("read_wav", [](const std::filesystem::path& p) {
    const auto a = gsrp::read_wav(p);
    return py::make_tuple(audio_to_array(a), a.sample_rate);
  });
  m.def(
      "write_wav",
      [](const RArray& samples, double sample_rate, const std::filesystem::path& p) {
        gsrp::write_wav(array_to_audio(samples, sample_rate), p);
      },
      py::arg("samples"), py::arg("sample_rate"), py::arg("path"));

  m.def(
      "compute_error", [](const py::handle& est, const py::handle& truth) {
        return gsrp::compute_error(to_location(est), to_location(truth));
      },
      py::arg("estimate"), py::arg("truth"),
      "Euclidean distance for (x, y, z) positions, wrapped degrees for azimuths.");
  m.def("quantile", &gsrp::quantile, py::arg("values"), py::arg("q"));

  m.def("ds_psd", [](const CArray& d, const CArray& scm) {
    const auto dv = to_vector(d);
    const auto s = to_hermitian(scm);
    check_dim(dv, s);
    return gsrp::ds_psd(dv, s);
  });
  m.def("mvdr_psd", [](const CArray& d, const CArray& scm, const CArray& ncm) {
    const auto dv = to_vector(d);
    const auto s = to_hermitian(scm), n = to_hermitian(ncm);
    check_dim(dv, s);
    check_dim(dv, n);
    return gsrp::mvdr_psd(dv, s, gsrp::hermitian_inverse(n));
  });
  m.def("mpdr_psd", [](const CArray& d, const CArray& scm) {
    const auto dv = to_vector(d);
    const auto s = to_hermitian(scm);
    check_dim(dv, s);
    return gsrp::mpdr_psd(dv, s, gsrp::hermitian_inverse(s));
  });
  m.def(
      "mvcnr_psd",
      [](const CArray& d, const CArray& scm, const CArray& ncm, double zeta) {
        const auto dv = to_vector(d);
        const auto s = to_hermitian(scm), n = to_hermitian(ncm);
        check_dim(dv, s);
        check_dim(dv, n);
        return gsrp::mvcnr_psd(dv, s, gsrp::hermitian_inverse(n), zeta);
      },
      py::arg("d"), py::arg("scm"), py::arg("ncm"), py::arg("zeta") = 1.0);
  m.def(
      "nmf_psd",
      [](const CArray& d, const CArray& scm, double sigma_v2, double zeta) {
        const auto dv = to_vector(d);
        const auto s = to_hermitian(scm);
        check_dim(dv, s);
        return gsrp::nmf_psd(dv, s, sigma_v2, zeta);
      },
      py::arg("d"), py::arg("scm"), py::arg("sigma_v2"), py::arg("zeta") = 1.0);
  m.def(
      "mpcnr_psd",
      [](const CArray& d, const CArray& scm, const CArray& ncm, double zeta) {
        const auto dv = to_vector(d);
        const auto s = to_hermitian(scm), n = to_hermitian(ncm);
        check_dim(dv, s);
        check_dim(dv, n);
        return gsrp::mpcnr_psd(dv, gsrp::hermitian_inverse(s), gsrp::hermitian_inverse(n), s, zeta);
      },
      py::arg("d"), py::arg("scm"), py::arg("ncm"), py::arg("zeta") = 1.0);
  m.def("zeta2_flat", [](const CArray& ncm, const CArray& scm) {
    return gsrp::zeta2_flat(gsrp::hermitian_inverse(to_hermitian(ncm)), to_hermitian(scm));
  });
  m.def("zeta2_frob", [](double sigma_v2, const CArray& scm) { return gsrp::zeta2_frob(sigma_v2, to_hermitian(scm)); });

  m.def("golden_names", &gsrp::golden_names);
  m.def(
      "run_golden",
      [](const std::string& name) {
        gsrp::GoldenResult g;
        {
          py::gil_scoped_release release;
          g = gsrp::run_golden(name);
        }
        py::list checks;
        for (const auto& a : g.assertions) {
          py::dict d;
          d["check"] = a.check;
          d["name"] = a.name;
          d["passed"] = a.passed;
          d["value"] = a.value;
          d["limit"] = a.limit;
          d["detail"] = a.detail;
          checks.append(d);
        }
        py::dict out;
        out["name"] = g.name;
        out["passed"] = g.passed();
        out["seconds"] = g.seconds;
        out["assertions"] = checks;
        return out;
      },
      py::arg("name"));
}
