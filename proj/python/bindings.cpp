#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "selest/column_io.hpp"
#include "selest/dataset.hpp"
#include "selest/error.hpp"
#include "selest/estimator.hpp"
#include "selest/histogram.hpp"
#include "selest/mcv.hpp"
#include "selest/oracle.hpp"
#include "selest/ranges.hpp"
#include "selest/stats.hpp"
#include "selest/sweep.hpp"

namespace py = pybind11;
using namespace selest;  // NOLINT

namespace {

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

void bind_statistics(py::module_& m) {
  py::class_<EquiDepthHistogram>(m, "EquiDepthHistogram")
      .def(py::init<std::vector<double>>(), py::arg("bounds"))
      .def_property_readonly("bounds", [](const EquiDepthHistogram& h) { return to_vector(h.bounds()); })
      .def_property_readonly("bin_count", &EquiDepthHistogram::bin_count)
      .def("cdf", &EquiDepthHistogram::cdf, py::arg("c"))
      .def("cdf_left", &EquiDepthHistogram::cdf_left, py::arg("c"))
      .def("pdf", &EquiDepthHistogram::pdf, py::arg("c"))
      .def("__eq__", [](const EquiDepthHistogram& a, const EquiDepthHistogram& b) { return a == b; })
      .def("__repr__", [](const EquiDepthHistogram& h) {
        return "EquiDepthHistogram(" + py::repr(py::cast(to_vector(h.bounds()))).cast<std::string>() + ")";
      });

  m.def(
      "build_equi_depth",
      [](const std::vector<double>& values, std::size_t bins) { return build_equi_depth(values, bins); },
      py::arg("values"), py::arg("bin_count"));

  py::class_<MostCommonValues>(m, "MostCommonValues")
      .def(py::init<>())
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("values"), py::arg("fractions"))
      .def_property_readonly("values", [](const MostCommonValues& mcv) { return to_vector(mcv.values()); })
      .def_property_readonly("fractions", [](const MostCommonValues& mcv) { return to_vector(mcv.fractions()); })
      .def("total_fraction", &MostCommonValues::total_fraction)
      .def("__len__", &MostCommonValues::size)
      .def("__eq__", [](const MostCommonValues& a, const MostCommonValues& b) { return a == b; });

  m.def(
      "build_mcv", [](const std::vector<double>& values, std::size_t max_entries) { return build_mcv(values, max_entries); },
      py::arg("values"), py::arg("max_entries"));

  py::class_<AttributeStats>(m, "AttributeStats")
      .def(py::init<>())
      .def_readwrite("null_frac", &AttributeStats::null_frac)
      .def_readwrite("mcv", &AttributeStats::mcv)
      .def_readwrite("histogram", &AttributeStats::histogram)
      .def_readwrite("row_count", &AttributeStats::row_count)
      .def_readwrite("statistics_target", &AttributeStats::statistics_target)
      .def("mcv_fraction", &AttributeStats::mcv_fraction)
      .def("histogram_fraction", &AttributeStats::histogram_fraction)
      .def("__eq__", [](const AttributeStats& a, const AttributeStats& b) { return a == b; });

  m.def(
      "analyze_column",
      [](const std::vector<NullableScalar>& values, std::uint32_t target, std::uint64_t seed,
         std::optional<std::size_t> sample_cap) {
        return sample_cap ? analyze_column(values, target, seed, *sample_cap) : analyze_column(values, target, seed);
      },
      py::arg("values"), py::arg("statistics_target"), py::arg("seed") = 0, py::arg("sample_cap") = py::none());
  m.def("save_stats", &save_stats, py::arg("stats"));
  m.def("load_stats", &load_stats, py::arg("document"));
}

void bind_estimators(py::module_& m) {
  py::enum_<ScalarOp>(m, "ScalarOp")
      .value("LT", ScalarOp::kLt)
      .value("LE", ScalarOp::kLe)
      .value("GT", ScalarOp::kGt)
      .value("GE", ScalarOp::kGe)
      .value("EQ", ScalarOp::kEq);

  m.def(
      "restriction_selectivity",
      [](const AttributeStats& s, double c, ScalarOp op) { return restriction_selectivity(s, c, op).value(); },
      py::arg("stats"), py::arg("c"), py::arg("op"));
  m.def(
      "join_lt_hist",
      [](const EquiDepthHistogram& hx, const EquiDepthHistogram& hy) { return join_lt_hist(hx, hy).value(); },
      py::arg("hx"), py::arg("hy"));
  m.def(
      "join_selectivity",
      [](const AttributeStats& sx, const AttributeStats& sy, ScalarOp op) { return join_selectivity(sx, sy, op).value(); },
      py::arg("sx"), py::arg("sy"), py::arg("op"));
}

void bind_ranges(py::module_& m) {
  py::class_<RangeValue>(m, "RangeValue")
      .def_static("parse", [](const std::string& text) { return parse_range_literal(text); }, py::arg("text"))
      .def_static("make", &RangeValue::make, py::arg("lower"), py::arg("upper"), py::arg("lower_closed") = true,
                  py::arg("upper_closed") = false)
      .def_static("make_empty", &RangeValue::make_empty)
      .def_readonly("lower", &RangeValue::lower)
      .def_readonly("upper", &RangeValue::upper)
      .def_readonly("lower_closed", &RangeValue::lower_closed)
      .def_readonly("upper_closed", &RangeValue::upper_closed)
      .def_readonly("empty", &RangeValue::empty)
      .def("__eq__", [](const RangeValue& a, const RangeValue& b) { return a == b; })
      .def("__str__", [](const RangeValue& r) { return format_range_literal(r); });

  py::enum_<RangeOp>(m, "RangeOp")
      .value("STRICTLY_LEFT", RangeOp::kStrictlyLeft)
      .value("STRICTLY_RIGHT", RangeOp::kStrictlyRight)
      .value("NO_EXTEND_RIGHT", RangeOp::kNoExtendRight)
      .value("NO_EXTEND_LEFT", RangeOp::kNoExtendLeft)
      .value("OVERLAPS", RangeOp::kOverlaps);

  py::enum_<NoExtendLeftReading>(m, "NoExtendLeftReading")
      .value("PRINTED", NoExtendLeftReading::kPrinted)
      .value("CONVENTIONAL", NoExtendLeftReading::kConventional);

  py::class_<RangeStats>(m, "RangeStats")
      .def(py::init<>())
      .def_readwrite("null_frac", &RangeStats::null_frac)
      .def_readwrite("empty_frac", &RangeStats::empty_frac)
      .def_readwrite("lower_inf_frac", &RangeStats::lower_inf_frac)
      .def_readwrite("upper_inf_frac", &RangeStats::upper_inf_frac)
      .def_readwrite("lower_stats", &RangeStats::lower_stats)
      .def_readwrite("upper_stats", &RangeStats::upper_stats)
      .def_readwrite("row_count", &RangeStats::row_count)
      .def_readwrite("statistics_target", &RangeStats::statistics_target)
      .def("__eq__", [](const RangeStats& a, const RangeStats& b) { return a == b; });

  m.def(
      "analyze_range_column",
      [](const std::vector<NullableRange>& values, std::uint32_t target, std::uint64_t seed,
         std::optional<std::size_t> sample_cap) {
        return analyze_range_column(values, target, seed, sample_cap.value_or(values.size() + 1));
      },
      py::arg("values"), py::arg("statistics_target"), py::arg("seed") = 0, py::arg("sample_cap") = py::none());
  m.def(
      "range_join_selectivity",
      [](const RangeStats& sx, const RangeStats& sy, RangeOp op, NoExtendLeftReading reading) {
        return range_join_selectivity(sx, sy, op, reading).value();
      },
      py::arg("sx"), py::arg("sy"), py::arg("op"), py::arg("reading") = NoExtendLeftReading::kPrinted);
  m.def("save_range_stats", &save_range_stats, py::arg("stats"));
  m.def("load_range_stats", &load_range_stats, py::arg("document"));
}

void bind_oracle_and_harness(py::module_& m) {
  py::class_<ExactCount>(m, "ExactCount")
      .def_readonly("qualifying", &ExactCount::qualifying)
      .def_readonly("total", &ExactCount::total)
      .def_property_readonly("selectivity", &ExactCount::selectivity);

  m.def(
      "exact_restriction",
      [](const std::vector<NullableScalar>& values, double c, ScalarOp op) { return exact_restriction(values, c, op); },
      py::arg("values"), py::arg("c"), py::arg("op"));
  m.def(
      "exact_join",
      [](const std::vector<NullableScalar>& xs, const std::vector<NullableScalar>& ys, ScalarOp op) {
        return exact_join(xs, ys, op);
      },
      py::arg("xs"), py::arg("ys"), py::arg("op"));
  m.def(
      "exact_range_join",
      [](const std::vector<NullableRange>& xs, const std::vector<NullableRange>& ys, RangeOp op) {
        return exact_range_join(xs, ys, op);
      },
      py::arg("xs"), py::arg("ys"), py::arg("op"));

  m.def(
      "generate_dataset",
      [](const std::string& kind, std::size_t rows, std::uint64_t seed) -> py::object {
        const auto column = generate_dataset(parse_dataset_kind(kind), rows, seed);
        if (const auto* scalars = std::get_if<ScalarColumn>(&column)) return py::cast(*scalars);
        return py::cast(std::get<RangeColumn>(column));
      },
      py::arg("kind"), py::arg("rows") = 0, py::arg("seed") = 0);

  py::class_<ExperimentRow>(m, "ExperimentRow")
      .def_readonly("statistics_target", &ExperimentRow::statistics_target)
      .def_readonly("estimate", &ExperimentRow::estimate)
      .def_readonly("exact", &ExperimentRow::exact)
      .def_readonly("error", &ExperimentRow::error)
      .def_readonly("est_time_us", &ExperimentRow::est_time_us)
      .def_readonly("build_time_us", &ExperimentRow::build_time_us);

  m.def(
      "run_scalar_sweep",
      [](const std::vector<NullableScalar>& xs, const std::vector<NullableScalar>& ys, ScalarOp op,
         const std::vector<std::uint32_t>& targets, std::uint64_t seed) {
        return run_scalar_sweep(xs, ys, op, targets, seed);
      },
      py::arg("xs"), py::arg("ys"), py::arg("op"), py::arg("targets"), py::arg("seed") = 0);
  m.def(
      "run_range_sweep",
      [](const std::vector<NullableRange>& xs, const std::vector<NullableRange>& ys, RangeOp op,
         const std::vector<std::uint32_t>& targets, std::uint64_t seed) {
        return run_range_sweep(xs, ys, op, targets, seed);
      },
      py::arg("xs"), py::arg("ys"), py::arg("op"), py::arg("targets"), py::arg("seed") = 0);
}

}  // namespace

PYBIND11_MODULE(_selest, m) {
  m.doc() = "Selectivity estimation for inequality restrictions and joins";

  auto base = py::register_exception<Error>(m, "SelestError", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<InsufficientStatistics>(m, "InsufficientStatistics", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<UnsupportedOperator>(m, "UnsupportedOperator", base.ptr());

  bind_statistics(m);
  bind_estimators(m);
  bind_ranges(m);
  bind_oracle_and_harness(m);
}
