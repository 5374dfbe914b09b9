// pybind11 module exposing the toolkit's main operations.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permcode/certify.hpp"
#include "permcode/contraction.hpp"
#include "permcode/distance.hpp"
#include "permcode/finite_field.hpp"
#include "permcode/groups.hpp"

namespace py = pybind11;
using namespace permcode;

namespace {

py::dict certificate_to_dict(const BoundCertificate& cert) {
  py::dict d;
  d["family"] = family_name(cert.family);
  d["q"] = cert.q;
  d["m"] = cert.m;
  d["n"] = cert.n;
  d["claimed_d"] = cert.claimed_d;
  d["size"] = cert.size;
  d["min_hd_exact"] =
      cert.min_hd_exact ? py::cast(*cert.min_hd_exact) : py::none();
  py::list hypotheses;
  for (const auto& h : cert.hypotheses) {
    py::dict item;
    item["text"] = h.text;
    item["pass"] = h.pass;
    hypotheses.append(item);
  }
  d["hypotheses"] = hypotheses;
  d["field_modulus"] = cert.field_modulus;
  d["status"] = status_name(cert.status);
  if (cert.companion) {
    py::dict companion;
    companion["n"] = cert.companion->n;
    companion["d"] = cert.companion->d;
    companion["size"] = cert.companion->size;
    d["companion"] = companion;
  } else {
    d["companion"] = py::none();
  }
  return d;
}

CertifyOptions make_options(long long exact_cutoff, int threads) {
  CertifyOptions opts;
  opts.exact_cutoff = exact_cutoff;
  opts.threads = threads;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_permcode, m) {
  m.doc() = "permutation contraction calculus, finite-field group "
            "generators, and Hamming-distance bound certificates";

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("degree"))
      .def_static("from_cycles", &Permutation::from_cycles, py::arg("degree"),
                  py::arg("cycles"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", &Permutation::images)
      .def("__call__", &Permutation::operator(), py::arg("x"))
      .def("preimage_of", &Permutation::preimage_of, py::arg("y"))
      .def("is_identity", &Permutation::is_identity)
      .def("cycles",
           [](const Permutation& sigma) { return cycle_decomposition(sigma).cycles; })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const Permutation& sigma) {
             size_t h = 1469598103934665603ULL;
             for (int v : sigma.images())
               h = (h ^ static_cast<size_t>(v)) * 1099511628211ULL;
             return h;
           })
      .def("__repr__", [](const Permutation& sigma) {
        return "Permutation(" + format_cycles(sigma) + ", degree=" +
               std::to_string(sigma.degree()) + ")";
      })
      .def("__str__",
           [](const Permutation& sigma) { return format_image_table(sigma); });

  m.def("parse_permutation", &parse_permutation, py::arg("text"),
        py::arg("degree") = 0);
  m.def("compose", &compose, py::arg("first"), py::arg("second"));
  m.def("inverse", &inverse, py::arg("sigma"));
  m.def("quotient", &quotient, py::arg("sigma"), py::arg("tau"));
  m.def("hamming_distance", &hamming_distance, py::arg("sigma"), py::arg("tau"));
  m.def("fixed_point_count", &fixed_point_count, py::arg("sigma"));

  m.def("contract", &contract, py::arg("sigma"));
  m.def("contract_m", &contract_m, py::arg("sigma"), py::arg("m"));
  m.def("delta", &delta, py::arg("sigma"), py::arg("tau"));
  m.def("delta_ct", &delta_ct, py::arg("sigma"), py::arg("tau"));
  m.def(
      "classify",
      [](const Permutation& sigma, const Permutation& tau) {
        const DeltaClass dc = classify(sigma, tau);
        py::dict d;
        d["line"] = dc.line;
        d["delta_hd"] = dc.delta_hd;
        d["i"] = dc.context.i;
        d["j"] = dc.context.j;
        d["a"] = dc.context.a;
        d["b"] = dc.context.b;
        d["c"] = dc.context.c;
        d["d"] = dc.context.d;
        return d;
      },
      py::arg("sigma"), py::arg("tau"));
  m.def(
      "predict_decomposition",
      [](const Permutation& sigma, const Permutation& tau) {
        const ChiPrediction pred = predict_decomposition(sigma, tau);
        py::dict d;
        d["omega"] = pred.omega.symbols;
        d["pi"] = pred.pi.symbols;
        d["omega_equals_pi"] = pred.omega_equals_pi;
        d["chi"] = pred.chi;
        d["rho"] = pred.rho.cycles;
        return d;
      },
      py::arg("sigma"), py::arg("tau"));
  m.def("has_no_short_odd_cycle", &has_no_short_odd_cycle, py::arg("pi"),
        py::arg("m"));
  m.def("construct_odd_cycle_witness", &construct_odd_cycle_witness,
        py::arg("sigma"), py::arg("tau"), py::arg("factors"));
  m.def(
      "check_multi_contraction_bound",
      [](const Permutation& sigma, const Permutation& tau, int m) {
        const auto report = check_multi_contraction_bound(sigma, tau, m);
        py::dict d;
        d["applicable"] = report.applicable;
        d["drop"] = report.drop;
        d["bound_holds"] = report.bound_holds;
        return d;
      },
      py::arg("sigma"), py::arg("tau"), py::arg("m"));

  py::class_<FieldSpec>(m, "FieldSpec")
      .def(py::init<int, int>(), py::arg("p"), py::arg("k"))
      .def_property_readonly("p", &FieldSpec::p)
      .def_property_readonly("k", &FieldSpec::k)
      .def_property_readonly("q", &FieldSpec::q)
      .def_property_readonly("modulus", &FieldSpec::modulus)
      .def("add", &FieldSpec::add)
      .def("sub", &FieldSpec::sub)
      .def("neg", &FieldSpec::neg)
      .def("mul", &FieldSpec::mul)
      .def("inv", &FieldSpec::inv)
      .def("pow", &FieldSpec::pow)
      .def("frobenius", &FieldSpec::frobenius);

  py::class_<PermutationArray>(m, "PermutationArray")
      .def_readonly("degree", &PermutationArray::degree)
      .def_readonly("members", &PermutationArray::members)
      .def("__len__", &PermutationArray::size)
      .def("contains", &PermutationArray::contains);

  m.def("make_array",
        [](int degree, std::vector<Permutation> members) {
          return make_array(degree, std::move(members));
        },
        py::arg("degree"), py::arg("members"));
  m.def("agl1", &agl1, py::arg("q"));
  m.def("pgl2", &pgl2, py::arg("q"));
  m.def("agammal1", &agammal1, py::arg("q"));
  m.def("pgammal2", &pgammal2, py::arg("q"));

  m.def("min_hamming_distance", &min_hamming_distance, py::arg("array"),
        py::arg("threads") = 0);
  m.def("group_min_distance", &group_min_distance, py::arg("group"),
        py::arg("trust_closure") = false);
  m.def(
      "contract_array",
      [](const PermutationArray& P, int m, bool compute_hd, int threads) {
        auto [contracted, report] = contract_array(P, m, compute_hd, threads);
        py::dict r;
        r["size_before"] = report.size_before;
        r["size_after"] = report.size_after;
        r["duplicates_merged"] = report.duplicates_merged;
        r["min_hd_before"] =
            report.min_hd_before ? py::cast(*report.min_hd_before) : py::none();
        r["min_hd_after"] =
            report.min_hd_after ? py::cast(*report.min_hd_after) : py::none();
        return py::make_tuple(contracted, r);
      },
      py::arg("array"), py::arg("m"), py::arg("compute_hd") = false,
      py::arg("threads") = 0);
  m.def("verify_size_preservation", &verify_size_preservation, py::arg("array"),
        py::arg("m"));
  m.def(
      "check_hd_increase_conditions",
      [](const PermutationArray& P) {
        const auto out = check_hd_increase_conditions(P);
        py::dict d;
        d["condition1"] = out.condition1;
        d["condition2"] = out.condition2;
        d["increased"] = out.increased;
        return d;
      },
      py::arg("array"));
  m.def(
      "verify_array_contraction_bound",
      [](const PermutationArray& P, int m, int threads) {
        const auto out = verify_array_contraction_bound(P, m, threads);
        py::dict d;
        d["hypothesis_holds"] = out.hypothesis_holds;
        d["conclusions_hold"] = out.conclusions_hold;
        return d;
      },
      py::arg("array"), py::arg("m"), py::arg("threads") = 0);

  m.def(
      "certify_agl",
      [](int q, int m, long long exact_cutoff, int threads) {
        return certificate_to_dict(certify_agl(q, m, make_options(exact_cutoff, threads)));
      },
      py::arg("q"), py::arg("m"), py::arg("exact_cutoff") = 30000,
      py::arg("threads") = 0);
  m.def(
      "certify_pgl_two_contractions",
      [](int q, long long exact_cutoff, int threads) {
        return certificate_to_dict(
            certify_pgl_two_contractions(q, make_options(exact_cutoff, threads)));
      },
      py::arg("q"), py::arg("exact_cutoff") = 30000, py::arg("threads") = 0);
  m.def(
      "certify_semilinear",
      [](int q, int m, bool projective, long long exact_cutoff, int threads) {
        return certificate_to_dict(certify_semilinear(
            q, m, projective, make_options(exact_cutoff, threads)));
      },
      py::arg("q"), py::arg("m"), py::arg("projective"),
      py::arg("exact_cutoff") = 30000, py::arg("threads") = 0);
}
