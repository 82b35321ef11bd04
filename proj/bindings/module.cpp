#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <sstream>

#include "subsum/baselines.hpp"
#include "subsum/enumerate.hpp"
#include "subsum/errors.hpp"
#include "subsum/gen.hpp"
#include "subsum/greedy.hpp"
#include "subsum/io.hpp"
#include "subsum/positions.hpp"
#include "subsum/probe.hpp"
#include "subsum/report.hpp"

namespace py = pybind11;
using namespace subsum;

namespace {

Deadline deadline_from(std::optional<double> budget_ms) {
  if (!budget_ms) return {};
  return Deadline::after(std::chrono::milliseconds(static_cast<long long>(*budget_ms)));
}

std::string join_values(std::span<const std::int64_t> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_subsum, m) {
  m.doc() = "exact and heuristic subset-sum solvers";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Instance>(m, "Instance")
      .def(py::init<std::int64_t, std::vector<std::int64_t>>(), py::arg("target"),
           py::arg("weights"))
      .def_property_readonly("target", &Instance::target)
      .def_property_readonly("weights",
                             [](const Instance& inst) {
                               return std::vector<std::int64_t>(inst.weights().begin(),
                                                                inst.weights().end());
                             })
      .def("__len__", &Instance::size)
      .def("weight", &Instance::weight, py::arg("index"))
      .def("__repr__", [](const Instance& inst) {
        return "Instance(target=" + std::to_string(inst.target()) + ", weights=[" +
               join_values(inst.weights()) + "])";
      });

  py::class_<SubsetSolution>(m, "SubsetSolution")
      .def(py::init<const Instance&, std::vector<std::size_t>>(), py::arg("instance"),
           py::arg("indices"))
      .def_property_readonly("indices", &SubsetSolution::indices)
      .def_property_readonly("values", &SubsetSolution::values)
      .def(py::self == py::self)
      .def("__repr__", [](const SubsetSolution& s) {
        return "SubsetSolution(values=[" + join_values(s.values()) + "])";
      });

  py::class_<EnumerationResult>(m, "EnumerationResult")
      .def_readonly("solutions", &EnumerationResult::solutions)
      .def_readonly("positions", &EnumerationResult::positions)
      .def_readonly("truncated", &EnumerationResult::truncated)
      .def_readonly("timed_out", &EnumerationResult::timed_out)
      .def_readonly("ops", &EnumerationResult::ops)
      .def_readonly("peak_residuals", &EnumerationResult::peak_residuals);

  py::class_<ProbeResult>(m, "ProbeResult")
      .def_readonly("solution", &ProbeResult::solution)
      .def_readonly("rounds_used", &ProbeResult::rounds_used)
      .def_readonly("timed_out", &ProbeResult::timed_out)
      .def_readonly("ops", &ProbeResult::ops);

  py::class_<GreedyResult>(m, "GreedyResult")
      .def_readonly("solution", &GreedyResult::solution)
      .def_readonly("variance", &GreedyResult::variance)
      .def_readonly("degenerate", &GreedyResult::degenerate)
      .def_readonly("rounds_used", &GreedyResult::rounds_used)
      .def_readonly("beam_truncated", &GreedyResult::beam_truncated)
      .def_readonly("timed_out", &GreedyResult::timed_out)
      .def_readonly("ops", &GreedyResult::ops);

  py::class_<DpResult>(m, "DpResult")
      .def_readonly("decision", &DpResult::decision)
      .def_readonly("cell_lookups", &DpResult::cell_lookups);

  py::class_<TrackedResidual>(m, "TrackedResidual")
      .def(py::init([](std::int64_t value, std::vector<std::size_t> chosen, std::size_t round) {
             return TrackedResidual{value, std::move(chosen), round};
           }),
           py::arg("value"), py::arg("chosen"), py::arg("round"))
      .def_readonly("value", &TrackedResidual::value)
      .def_readonly("chosen", &TrackedResidual::chosen)
      .def_readonly("round", &TrackedResidual::round);

  py::class_<SumsetSet>(m, "SumsetSet")
      .def(py::init<std::int64_t>(), py::arg("cap"))
      .def_static(
          "from_values",
          [](const std::vector<std::int64_t>& values, std::int64_t cap) {
            return SumsetSet::from_values(values, cap);
          },
          py::arg("values"), py::arg("cap"))
      .def(py::self == py::self)
      .def("insert", &SumsetSet::insert, py::arg("value"))
      .def("contains", &SumsetSet::contains, py::arg("value"))
      .def("__contains__", &SumsetSet::contains)
      .def("__len__", &SumsetSet::count)
      .def_property_readonly("cap", &SumsetSet::cap)
      .def("values", &SumsetSet::values);

  m.def(
      "solve_all",
      [](const Instance& inst, std::size_t max_n, std::uint64_t chunk_size,
         std::optional<std::uint64_t> solution_limit, std::optional<double> budget_ms) {
        EnumerationConfig config;
        config.max_n = max_n;
        config.chunk_size = chunk_size;
        config.solution_limit = solution_limit;
        return solve_all(inst, config, deadline_from(budget_ms));
      },
      py::arg("instance"), py::arg("max_n") = EnumerationConfig{}.max_n,
      py::arg("chunk_size") = EnumerationConfig{}.chunk_size,
      py::arg("solution_limit") = std::nullopt, py::arg("budget_ms") = std::nullopt,
      "Enumerate every solution in position order.");

  m.def(
      "solve_probabilistic",
      [](const Instance& inst, std::size_t piece_length, std::uint64_t repeat_times,
         std::uint64_t seed, std::optional<double> budget_ms) {
        ProbeConfig config;
        config.piece_length = piece_length;
        config.repeat_times = repeat_times;
        config.seed = seed;
        return solve_probabilistic(inst, config, deadline_from(budget_ms));
      },
      py::arg("instance"), py::arg("piece_length"), py::arg("repeat_times") = 1,
      py::arg("seed") = 0, py::arg("budget_ms") = std::nullopt,
      "Sampled search; a missing solution proves nothing.");

  m.def(
      "solve_greedy",
      [](const Instance& inst, std::optional<std::size_t> round_bound,
         std::optional<std::size_t> beam_limit, std::optional<double> budget_ms) {
        GreedyConfig config;
        if (round_bound) config.round_bound = *round_bound;
        config.beam_limit = beam_limit;
        return solve_greedy(inst, config, deadline_from(budget_ms));
      },
      py::arg("instance"), py::arg("round_bound") = std::nullopt,
      py::arg("beam_limit") = std::nullopt, py::arg("budget_ms") = std::nullopt,
      "Prune and merge sweep over positive weights.");

  m.def("bellman_run", &bellman_run, py::arg("instance"));
  m.def("bellman_decides", &bellman_decides, py::arg("instance"));
  m.def("brute_force_all", &brute_force_all, py::arg("instance"));

  m.def("decode_position", &decode_position, py::arg("k"), py::arg("n"));
  m.def(
      "position_of",
      [](const std::vector<std::size_t>& subset, std::size_t n) {
        return position_of(subset, n);
      },
      py::arg("subset"), py::arg("n"));
  m.def("residual_at", &residual_at, py::arg("instance"), py::arg("k"));

  m.def(
      "sample_variance",
      [](const std::vector<std::int64_t>& values) { return sample_variance(values); },
      py::arg("values"));
  m.def(
      "prune_and_merge",
      [](const std::vector<std::int64_t>& weights, std::vector<TrackedResidual> residuals,
         std::int64_t w, std::size_t index) {
        return prune_and_merge(weights, std::move(residuals), w, index);
      },
      py::arg("weights"), py::arg("residuals"), py::arg("w"), py::arg("index"));

  m.def("capped_sumset", &capped_sumset, py::arg("a"), py::arg("b"), py::arg("t"));
  m.def(
      "color_coding",
      [](const std::vector<std::int64_t>& z, std::int64_t t, std::size_t k, double delta,
         std::uint64_t seed) {
        ColorCodingConfig config;
        config.k = k;
        config.delta = delta;
        config.seed = seed;
        return color_coding(z, t, config);
      },
      py::arg("z"), py::arg("t"), py::arg("k") = 1, py::arg("delta") = 0.25,
      py::arg("seed") = 0);

  m.def(
      "gen_random",
      [](std::size_t n, unsigned bit_length, std::uint64_t seed) {
        GenSpec spec;
        spec.n = n;
        spec.bit_length = bit_length;
        spec.seed = seed;
        return gen_random(spec);
      },
      py::arg("n"), py::arg("bit_length") = 20, py::arg("seed") = 0);
  m.def(
      "gen_planted",
      [](std::size_t n, std::size_t planted_size, unsigned bit_length, std::uint64_t seed) {
        GenSpec spec;
        spec.n = n;
        spec.bit_length = bit_length;
        spec.planted_size = planted_size;
        spec.seed = seed;
        return gen_planted(spec);
      },
      py::arg("n"), py::arg("planted_size"), py::arg("bit_length") = 20, py::arg("seed") = 0);

  m.def("parse_instance_text", &parse_instance_text, py::arg("text"));
  m.def("parse_instance_json", &parse_instance_json, py::arg("text"));
  m.def("serialize_instance_text", &serialize_instance_text, py::arg("instance"));
  m.def("serialize_instance_json", &serialize_instance_json, py::arg("instance"));
  m.def("instance_digest", &instance_digest, py::arg("instance"));
}
