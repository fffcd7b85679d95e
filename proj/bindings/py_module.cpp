#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "rsslocate/errors.hpp"
#include "rsslocate/montecarlo.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace rsslocate;

PYBIND11_MODULE(_core, m) {
    m.doc() = "RSS-based localization of a stationary transmitter from a single "
              "mobile receiver when the path-loss exponent is unknown";

    py::register_exception<InsufficientDataError>(m, "InsufficientDataError");
    py::register_exception<RankDeficientError>(m, "RankDeficientError");
    py::register_exception<DegenerateGeometryError>(m, "DegenerateGeometryError");

    py::class_<Rng>(m, "Rng", "Explicitly seeded random source; derive() forks substreams")
        .def(py::init<std::uint64_t>(), "seed"_a)
        .def("next_u64", &Rng::next_u64)
        .def("bounded", &Rng::bounded, "n"_a)
        .def("uniform01", &Rng::uniform01)
        .def("gaussian", &Rng::gaussian, "mean"_a, "stddev"_a)
        .def("derive", &Rng::derive, "salt"_a)
        .def_property_readonly("seed", &Rng::seed);

    py::class_<Vec2>(m, "Vec2")
        .def(py::init<>())
        .def(py::init<double, double>(), "x"_a, "y"_a)
        .def_readwrite("x", &Vec2::x)
        .def_readwrite("y", &Vec2::y)
        .def("__repr__", [](const Vec2& v) {
            std::ostringstream out;
            out << "Vec2(" << v.x << ", " << v.y << ")";
            return out.str();
        });
    m.def("distance", &distance, "a"_a, "b"_a, "Euclidean distance in meters");

    py::class_<GridPosition>(m, "GridPosition")
        .def(py::init<>())
        .def(py::init<int, int>(), "x"_a, "y"_a)
        .def_readwrite("x", &GridPosition::x)
        .def_readwrite("y", &GridPosition::y)
        .def(py::self == py::self)
        .def("__repr__", [](const GridPosition& p) {
            std::ostringstream out;
            out << "GridPosition(" << p.x << ", " << p.y << ")";
            return out.str();
        });

    py::class_<PathLossParams>(m, "PathLossParams",
                               "Log-distance channel with lognormal shadowing")
        .def(py::init<double, double, double, double>(), "r0"_a = -27.0, "n"_a = 3.0,
             "sigma"_a = 3.0, "d0"_a = 1.0)
        .def_readwrite("r0", &PathLossParams::r0)
        .def_readwrite("n", &PathLossParams::n)
        .def_readwrite("sigma", &PathLossParams::sigma)
        .def_readwrite("d0", &PathLossParams::d0)
        .def("validate", &PathLossParams::validate);

    py::class_<RssMeasurement>(m, "RssMeasurement")
        .def_readwrite("position", &RssMeasurement::position)
        .def_readwrite("rss", &RssMeasurement::rss)
        .def_readwrite("linear_power", &RssMeasurement::linear_power);

    m.def("linear_power", &linear_power, "rss_dbm"_a, "dBm to linear power, 10^(rss/10)");
    m.def("make_measurement", &make_measurement, "position"_a, "rss_dbm"_a);
    m.def("rss_mean", &rss_mean, "params"_a, "distance_m"_a,
          "Mean RSS at a distance (zero shadow noise)");
    m.def("sample_rss", &sample_rss, "params"_a, "distance_m"_a, "rng"_a,
          "Mean RSS plus one shadow-noise draw");
    m.def("rss_log_density", &rss_log_density, "params"_a, "rss_dbm"_a, "distance_m"_a,
          "Log of the Gaussian density of an RSS value at a distance");
    m.def("ml_distance", &ml_distance, "params"_a, "rss_dbm"_a, "n_assumed"_a,
          "Maximum-likelihood distance under an assumed exponent");

    py::enum_<Strategy>(m, "Strategy")
        .value("Random", Strategy::Random)
        .value("CornerTour", Strategy::CornerTour);
    m.def("strategy_name", &strategy_name, "strategy"_a);

    py::class_<GridMap>(m, "GridMap")
        .def(py::init<int, double>(), "width_cells"_a = 45, "cell_size"_a = 1.0)
        .def_readwrite("width_cells", &GridMap::width_cells)
        .def_readwrite("cell_size", &GridMap::cell_size)
        .def("validate", &GridMap::validate)
        .def("contains", &GridMap::contains, "p"_a)
        .def("to_meters", &GridMap::to_meters, "p"_a)
        .def("corners", &GridMap::corners);

    py::class_<Trajectory>(m, "Trajectory")
        .def(py::init<>())
        .def_readwrite("positions", &Trajectory::positions)
        .def_readwrite("strategy", &Trajectory::strategy);

    m.def("random_walk", &random_walk, "map"_a, "start"_a, "steps"_a, "rng"_a,
          "Uniform in-bounds 4-neighbor walk; never stays put");
    m.def("nearest_corner", &nearest_corner, "map"_a, "pos"_a);
    m.def("corner_tour", &corner_tour, "map"_a, "start"_a, "steps"_a,
          "Staircase to the nearest corner, then counter-clockwise perimeter laps");

    py::class_<PleGrid>(m, "PleGrid")
        .def(py::init<double, double, double>(), "n_min"_a = 1.0, "n_max"_a = 5.0,
             "step"_a = 0.1)
        .def_readwrite("n_min", &PleGrid::n_min)
        .def_readwrite("n_max", &PleGrid::n_max)
        .def_readwrite("step", &PleGrid::step)
        .def("candidates", &PleGrid::candidates);

    py::class_<ThetaEstimate>(m, "ThetaEstimate")
        .def_readwrite("x", &ThetaEstimate::x)
        .def_readwrite("y", &ThetaEstimate::y)
        .def_readwrite("s", &ThetaEstimate::s)
        .def_readwrite("n_used", &ThetaEstimate::n_used)
        .def_readwrite("condition_diagnostic", &ThetaEstimate::condition_diagnostic);

    py::class_<PleSearchResult>(m, "PleSearchResult")
        .def_readwrite("n_opt", &PleSearchResult::n_opt)
        .def_readwrite("estimate", &PleSearchResult::estimate)
        .def_readwrite("cost_curve", &PleSearchResult::cost_curve);

    m.def("build_system", &build_system, "measurements"_a, "p0"_a, "n_j"_a,
          "Linearized system (A, b) over the measurement history");
    m.def("solve_lsq", &solve_lsq, "a"_a, "b"_a, "Least-squares solution via SVD");
    m.def("estimate_position", &estimate_position, "measurements"_a, "p0"_a, "n_j"_a);
    m.def("discrepancy_cost", &discrepancy_cost, "measurements"_a, "p0"_a, "n_j"_a,
          "Summed squared gap between the two distance estimates");
    m.def("min_cost_index", &min_cost_index, "cost_curve"_a);
    m.def("ple_grid_search", &ple_grid_search, "measurements"_a, "p0"_a,
          "grid"_a = PleGrid{}, "Bounded grid search over the exponent candidates");

    py::class_<TrialConfig>(m, "TrialConfig")
        .def(py::init<>())
        .def_readwrite("map", &TrialConfig::map)
        .def_readwrite("duration_s", &TrialConfig::duration_s)
        .def_readwrite("channel", &TrialConfig::channel)
        .def_readwrite("strategy", &TrialConfig::strategy)
        .def_readwrite("seed", &TrialConfig::seed)
        .def("validate", &TrialConfig::validate);

    py::class_<TrialResult>(m, "TrialResult")
        .def_readwrite("true_bs", &TrialResult::true_bs)
        .def_readwrite("trajectory", &TrialResult::trajectory)
        .def_readwrite("measurements", &TrialResult::measurements)
        .def_readwrite("estimate", &TrialResult::estimate)
        .def_readwrite("position_error_m", &TrialResult::position_error_m)
        .def_readwrite("failed", &TrialResult::failed)
        .def_readwrite("failure_reason", &TrialResult::failure_reason);

    m.def("random_position", &random_position, "map"_a, "rng"_a);
    m.def("place_entities", &place_entities, "map"_a, "rng"_a,
          "Uniform transmitter and receiver start; never coincident");
    m.def("run_trial", &run_trial, "config"_a, py::call_guard<py::gil_scoped_release>(),
          "One placement-to-localization trial, deterministic in the seed");
    m.def("run_trial_with_trajectory", &run_trial_with_trajectory, "config"_a, "trajectory"_a,
          py::call_guard<py::gil_scoped_release>());

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("ple_values", &SweepSpec::ple_values)
        .def_readwrite("sigma_values", &SweepSpec::sigma_values)
        .def_readwrite("r0_values", &SweepSpec::r0_values)
        .def_readwrite("trials_per_cell", &SweepSpec::trials_per_cell)
        .def_readwrite("strategies", &SweepSpec::strategies)
        .def_readwrite("base_seed", &SweepSpec::base_seed)
        .def_readwrite("map", &SweepSpec::map)
        .def_readwrite("duration_s", &SweepSpec::duration_s)
        .def("validate", &SweepSpec::validate);

    py::class_<CellStats>(m, "CellStats")
        .def_readwrite("true_n", &CellStats::true_n)
        .def_readwrite("sigma", &CellStats::sigma)
        .def_readwrite("r0", &CellStats::r0)
        .def_readwrite("strategy", &CellStats::strategy)
        .def_readwrite("mean_n_opt", &CellStats::mean_n_opt)
        .def_readwrite("rms_error_m", &CellStats::rms_error_m)
        .def_readwrite("errors", &CellStats::errors)
        .def_readwrite("n_opts", &CellStats::n_opts)
        .def_readwrite("failed_trials", &CellStats::failed_trials)
        .def_readwrite("total_trials", &CellStats::total_trials)
        .def_readwrite("flagged", &CellStats::flagged);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readwrite("cells", &SweepResult::cells)
        .def(
            "find",
            [](const SweepResult& self, double true_n, double sigma, double r0,
               Strategy strategy) -> std::optional<CellStats> {
                const CellStats* cell = self.find(true_n, sigma, r0, strategy);
                if (cell == nullptr) return std::nullopt;
                return *cell;
            },
            "true_n"_a, "sigma"_a, "r0"_a, "strategy"_a);

    py::class_<CdfSeries>(m, "CdfSeries")
        .def_readwrite("points", &CdfSeries::points);

    m.def("sweep_trial_config", &sweep_trial_config, "spec"_a, "true_n"_a, "sigma"_a, "r0"_a,
          "strategy"_a, "trial_index"_a);
    m.def("run_sweep", &run_sweep, "spec"_a, "jobs"_a = 0,
          py::call_guard<py::gil_scoped_release>(),
          "Monte Carlo batch over the spec's parameter cells");
    m.def("rms_error", &rms_error, "errors"_a);
    m.def("mean_ple", &mean_ple, "n_opts"_a);
    m.def("empirical_cdf", &empirical_cdf, "errors"_a);
    m.def("cdf_at", &cdf_at, "sorted_errors"_a, "value"_a);
}
