// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the main operations: groups, duals, transforms, and
// the experiment drivers. Reports cross the boundary as plain dicts
// (via their JSON form) so python callers get stable, serializable output.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaborlab/funcspec.hpp"
#include "gaborlab/json_io.hpp"

namespace py = pybind11;
using namespace gaborlab;

namespace {

py::object json_to_py(const ordered_json& j) {
  const py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

GroupFunction make_function(const FiniteGroup& g, const std::vector<Complex>& values) {
  CVec v(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<int>(i)] = values[i];
  return {g, std::move(v)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gabor (windowed Fourier) transform laboratory on finite groups";

  py::register_exception<Error>(m, "GaborlabError");

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den") = 1)
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__float__", &Rational::to_double)
      .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static(
          "from_mult_table",
          [](std::vector<std::vector<int>> t, const std::string& name) {
            return FiniteGroup::from_mult_table(std::move(t), name);
          },
          py::arg("table"), py::arg("name") = "")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("abelian", &FiniteGroup::is_abelian)
      .def_property_readonly("validation_mode", &FiniteGroup::validation_mode)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("conjugacy_classes", &FiniteGroup::conjugacy_classes)
      .def("center", &FiniteGroup::center)
      .def("mult_table", &FiniteGroup::mult_table)
      .def("same_as", &FiniteGroup::same_as)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<FiniteGroup " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("named_group", &named_group, py::arg("spec"), py::arg("order_cap") = 256);
  m.def("direct_product", &direct_product, py::arg("a"), py::arg("b"), py::arg("order_cap") = 256);

  py::class_<Subgroup>(m, "Subgroup")
      .def_readonly("elements", &Subgroup::elements)
      .def_readonly("is_normal", &Subgroup::is_normal)
      .def_property_readonly("parent", [](const Subgroup& s) { return s.parent; })
      .def("__repr__", [](const Subgroup& s) {
        return "<Subgroup of order " + std::to_string(s.elements.size()) + ">";
      });

  m.def("make_subgroup", &make_subgroup);
  m.def("trivial_subgroup", &trivial_subgroup);
  m.def("full_subgroup", &full_subgroup);
  m.def("generated_closure", &generated_closure);
  m.def("all_subgroups", &all_subgroups, py::arg("group"), py::arg("order_cap") = 64);
  m.def("normal_subgroups", &normal_subgroups, py::arg("group"), py::arg("order_cap") = 64);
  m.def("subgroup_as_group", &subgroup_as_group);

  py::class_<QuotientGroup>(m, "QuotientGroup")
      .def_readonly("cosets", &QuotientGroup::cosets)
      .def_readonly("coset_of", &QuotientGroup::coset_of)
      .def_readonly("quotient", &QuotientGroup::quotient);
  m.def("quotient_group", &quotient_group);

  py::class_<Character>(m, "Character")
      .def("value", &Character::value)
      .def("values", &Character::values)
      .def("pointwise_product", &Character::pointwise_product)
      .def("inverse", &Character::inverse);

  py::class_<Irrep>(m, "Irrep")
      .def_readonly("dim", &Irrep::dim)
      .def_readonly("label", &Irrep::label)
      .def("matrix", [](const Irrep& p, int x) { return p.mats.at(x); })
      .def("character", &Irrep::character);

  py::class_<UnitaryDual>(m, "UnitaryDual")
      .def_property_readonly("group", &UnitaryDual::group)
      .def("__len__", &UnitaryDual::size)
      .def("irrep", &UnitaryDual::irrep, py::return_value_policy::reference_internal)
      .def("degree", &UnitaryDual::degree)
      .def("plancherel_weight", &UnitaryDual::plancherel_weight)
      .def("sum_degrees", &UnitaryDual::sum_degrees)
      .def("sum_squared_degrees", &UnitaryDual::sum_squared_degrees)
      .def("characters", &UnitaryDual::characters)
      .def("character_index", &UnitaryDual::character_index);

  m.def("abelian_characters", &abelian_characters);
  m.def("regular_decomposition", &regular_decomposition, py::arg("group"), py::arg("seed") = 0,
        py::arg("max_retries") = 8, py::arg("tol") = 1e-9);
  m.def("unitary_dual", &unitary_dual, py::arg("group"), py::arg("seed") = 0);
  m.def(
      "dual_verify",
      [](const UnitaryDual& d, double tol) {
        const DualReport rep = dual_verify(d, tol);
        py::dict out;
        out["all_pass"] = rep.all_pass;
        out["max_residual"] = rep.max_residual;
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict e;
          e["check"] = c.name;
          e["pass"] = c.pass;
          e["residual"] = c.residual;
          checks.append(e);
        }
        out["checks"] = checks;
        return out;
      },
      py::arg("dual"), py::arg("tol") = 1e-9);

  py::class_<GroupFunction>(m, "GroupFunction")
      .def(py::init(&make_function), py::arg("group"), py::arg("values"))
      .def_property_readonly("group", &GroupFunction::group)
      .def("values", &GroupFunction::values)
      .def("value", &GroupFunction::value)
      .def("norm2", &GroupFunction::norm2)
      .def("norm2_squared", &GroupFunction::norm2_squared)
      .def("is_zero", &GroupFunction::is_zero)
      .def("support", &GroupFunction::support, py::arg("eps") = 1e-9)
      .def("haar_support_measure", &GroupFunction::haar_support_measure, py::arg("eps") = 1e-9);

  m.def("indicator", py::overload_cast<const FiniteGroup&, const std::vector<int>&>(&indicator));
  m.def("delta", &delta);
  m.def("constant_one", &constant_one);
  m.def(
      "parse_function_spec",
      [](const std::string& spec, const FiniteGroup& g, std::uint64_t seed) {
        Rng rng(seed);
        const ParsedFunction p = parse_function_spec(spec, g, rng);
        return py::make_tuple(p.fn, p.canonical_spec);
      },
      py::arg("spec"), py::arg("group"), py::arg("seed") = 0);

  py::class_<OperatorField>(m, "OperatorField")
      .def("block", &OperatorField::block)
      .def("__len__", &OperatorField::size)
      .def("weighted_hs_norm_squared", &OperatorField::weighted_hs_norm_squared)
      .def("support", &OperatorField::support, py::arg("eps") = 1e-9)
      .def("plancherel_support_measure", &OperatorField::plancherel_support_measure,
           py::arg("eps") = 1e-9);

  m.def("fourier_transform", &fourier_transform);
  m.def("inverse_fourier", &inverse_fourier);

  py::class_<Annihilator>(m, "Annihilator")
      .def_readonly("members", &Annihilator::members)
      .def_readonly("subgroup", &Annihilator::subgroup);
  m.def("annihilator", &annihilator, py::arg("subgroup"), py::arg("dual"), py::arg("tol") = 1e-9);
  m.def("annihilator_measure", &annihilator_measure);

  py::class_<GaborField>(m, "GaborField")
      .def("block", &GaborField::block)
      .def("h2_norm", &GaborField::h2_norm)
      .def("h2_norm_squared", &GaborField::h2_norm_squared)
      .def_property_readonly("window_norm", &GaborField::window_norm);

  m.def("gabor_transform", &gabor_transform);
  m.def("windowed_slice", &windowed_slice);
  m.def("translate", &translate);
  m.def("modulate", &modulate);
  m.def("gabor_reconstruct", &gabor_reconstruct);

  py::class_<GaborSupport>(m, "GaborSupport")
      .def_readonly("threshold", &GaborSupport::threshold)
      .def_readonly("points", &GaborSupport::points)
      .def_readonly("measure", &GaborSupport::measure);
  m.def("support_measure", &support_measure, py::arg("field"), py::arg("threshold") = 1e-9);

  py::class_<CovarianceResidual>(m, "CovarianceResidual")
      .def_readonly("translation", &CovarianceResidual::translation)
      .def_readonly("modulation", &CovarianceResidual::modulation);
  m.def("covariance_check", &covariance_check);

  py::class_<KernelMatrix>(m, "KernelMatrix")
      .def("grid_size", &KernelMatrix::grid_size)
      .def("entry", &KernelMatrix::entry)
      .def("materialized", &KernelMatrix::materialized)
      .def("reproducing_residual", &KernelMatrix::reproducing_residual);
  m.def("kernel_matrix", &kernel_matrix, py::arg("psi"), py::arg("dual"),
        py::arg("materialize_cap") = 4096);

  // Experiment drivers; results as dicts mirroring the CLI JSON schema.
  auto report_out = [](const QupReport& r) { return json_to_py(qup_report_to_json(r)); };
  m.def(
      "weak_qup_witness",
      [report_out](const FiniteGroup& g, std::uint64_t seed) {
        QupOptions opt;
        opt.seed = seed;
        return report_out(weak_qup_witness(g, opt));
      },
      py::arg("group"), py::arg("seed") = 0);
  m.def(
      "abelian_lower_bound_scan",
      [report_out](const FiniteGroup& g, int trials, std::uint64_t seed) {
        return report_out(abelian_lower_bound_scan(g, trials, seed));
      },
      py::arg("group"), py::arg("trials") = 100, py::arg("seed") = 0);
  m.def(
      "subgroup_gabor_profile",
      [report_out](const FiniteGroup& g, const Subgroup& h) {
        return report_out(subgroup_gabor_profile(g, h));
      },
      py::arg("group"), py::arg("subgroup"));
  m.def(
      "restriction_inequality_check",
      [report_out](const FiniteGroup& g, const Subgroup& h, int trials, std::uint64_t seed) {
        return report_out(restriction_inequality_check(g, h, trials, seed));
      },
      py::arg("group"), py::arg("subgroup"), py::arg("trials") = 100, py::arg("seed") = 0);
  m.def(
      "qup_report_suite",
      [](const std::vector<std::string>& specs, int trials, std::uint64_t seed) {
        QupOptions opt;
        opt.trials = trials;
        opt.seed = seed;
        py::list out;
        for (const auto& r : qup_report_suite(specs, opt)) out.append(json_to_py(qup_report_to_json(r)));
        return out;
      },
      py::arg("specs"), py::arg("trials") = 100, py::arg("seed") = 0);

  m.attr("__version__") = "0.1.0";
}
