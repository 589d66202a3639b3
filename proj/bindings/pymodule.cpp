#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cartelfringe/config.hpp"
#include "cartelfringe/fringe.hpp"
#include "cartelfringe/horizon.hpp"
#include "cartelfringe/oracle.hpp"
#include "cartelfringe/params.hpp"
#include "cartelfringe/phases.hpp"
#include "cartelfringe/strategy.hpp"
#include "cartelfringe/sweep.hpp"
#include "cartelfringe/trajectory.hpp"

namespace py = pybind11;
using namespace cfm;

PYBIND11_MODULE(cartelfringe, m) {
    m.doc() = "Cartel-versus-fringe resource market solver";

    py::register_exception<InfeasibleError>(m, "InfeasibleError");
    py::register_exception<ConfigError>(m, "ConfigError");

    py::class_<MarketParams>(m, "MarketParams")
        .def(py::init([](double alpha, double beta, double b, double k_c, double k_f,
                         double r, double s0_c, double s0_f, double m_f, double m_c) {
                 return MarketParams{alpha, beta, b, k_c, k_f, r, s0_c, s0_f, m_f, m_c};
             }),
             py::arg("alpha") = 225.5, py::arg("beta") = 4.3, py::arg("b") = 102.5,
             py::arg("k_c") = 18.0, py::arg("k_f") = 62.5, py::arg("r") = 0.028,
             py::arg("s0_c") = 1212.0, py::arg("s0_f") = 619.5, py::arg("m_f") = 28.0,
             py::arg("m_c") = 50.0)
        .def_readwrite("alpha", &MarketParams::alpha)
        .def_readwrite("beta", &MarketParams::beta)
        .def_readwrite("b", &MarketParams::b)
        .def_readwrite("k_c", &MarketParams::k_c)
        .def_readwrite("k_f", &MarketParams::k_f)
        .def_readwrite("r", &MarketParams::r)
        .def_readwrite("s0_c", &MarketParams::s0_c)
        .def_readwrite("s0_f", &MarketParams::s0_f)
        .def_readwrite("m_f", &MarketParams::m_f)
        .def_readwrite("m_c", &MarketParams::m_c);

    py::class_<Condition>(m, "Condition")
        .def_readonly("holds", &Condition::holds)
        .def_readonly("slack", &Condition::slack);

    py::class_<AssumptionReport>(m, "AssumptionReport")
        .def_readonly("a1_double_cap", &AssumptionReport::a1_double_cap)
        .def_readonly("a2_double_kf", &AssumptionReport::a2_double_kf)
        .def_readonly("a3_share_lb_positive", &AssumptionReport::a3_share_lb_positive)
        .def_readonly("a4_resource_order", &AssumptionReport::a4_resource_order)
        .def_readonly("a5_pending", &AssumptionReport::a5_pending)
        .def_readonly("a5_interior_share", &AssumptionReport::a5_interior_share)
        .def("all_hold", &AssumptionReport::all_hold);

    m.def("validate", &validate, py::arg("params"));
    m.def("evaluate_a5", &evaluate_a5, py::arg("params"), py::arg("t_c"));
    m.def("price", &price, py::arg("q_c"), py::arg("q_f_total"), py::arg("params"));
    m.def("load_config", &load_config, py::arg("path"));

    py::enum_<ReactionKind>(m, "ReactionKind")
        .value("Zero", ReactionKind::Zero)
        .value("Full", ReactionKind::Full)
        .value("Empty", ReactionKind::Empty);
    py::class_<FringeReaction>(m, "FringeReaction")
        .def_readonly("kind", &FringeReaction::kind)
        .def_readonly("value", &FringeReaction::value);
    m.def("jsrf", &jsrf, py::arg("q_c"), py::arg("s_f"), py::arg("params"));
    m.def("fringe_depletion_time", &fringe_depletion_time, py::arg("params"));
    m.def("firm_payoff", &firm_payoff, py::arg("t"), py::arg("price_path"),
          py::arg("extraction"), py::arg("capacity_share"), py::arg("params"));

    py::enum_<PhaseLabel>(m, "PhaseLabel")
        .value("F", PhaseLabel::F)
        .value("C", PhaseLabel::C)
        .value("S", PhaseLabel::S)
        .value("L", PhaseLabel::L);
    py::class_<Costate>(m, "Costate").def_readonly("gamma_c", &Costate::gamma_c);
    m.def("deter_control", &deter_control, py::arg("params"));
    m.def("deter_depletion", &deter_depletion, py::arg("params"));
    m.def("limit_price_control", &limit_price_control, py::arg("params"));
    m.def("wait_depletion", &wait_depletion, py::arg("params"));
    m.def("costate_share", &costate_share, py::arg("t_f"), py::arg("t_c"), py::arg("params"));
    m.def("share_control", &share_control, py::arg("t"), py::arg("t_f"), py::arg("t_c"),
          py::arg("params"));
    m.def("share_lower_bound", &share_lower_bound, py::arg("params"));
    m.def("share_upper_bound", &share_upper_bound, py::arg("params"));

    py::class_<HorizonSolution>(m, "HorizonSolution")
        .def_readonly("t_c", &HorizonSolution::t_c)
        .def_readonly("residual", &HorizonSolution::residual)
        .def_readonly("iterations", &HorizonSolution::iterations)
        .def_readonly("bracket", &HorizonSolution::bracket);
    m.def("tau_c", &tau_c, py::arg("t"), py::arg("params"));
    m.def("solve_t_c", &solve_t_c, py::arg("params"));

    py::enum_<StrategyClass>(m, "StrategyClass")
        .value("Deter", StrategyClass::Deter)
        .value("Share", StrategyClass::Share)
        .value("Wait", StrategyClass::Wait);
    py::class_<PhaseSpan>(m, "PhaseSpan")
        .def_readonly("phase", &PhaseSpan::phase)
        .def_readonly("start", &PhaseSpan::start)
        .def_readonly("end", &PhaseSpan::end);
    py::class_<StrategyOutcome>(m, "StrategyOutcome")
        .def_readonly("class_id", &StrategyOutcome::class_id)
        .def_readonly("has_value", &StrategyOutcome::has_value)
        .def_readonly("profit", &StrategyOutcome::profit)
        .def_readonly("depletion_cartel", &StrategyOutcome::depletion_cartel)
        .def_readonly("depletion_fringe", &StrategyOutcome::depletion_fringe)
        .def_readonly("feasible", &StrategyOutcome::feasible)
        .def_readonly("reason", &StrategyOutcome::reason)
        .def_readonly("schedule", &StrategyOutcome::schedule)
        .def_readonly("t_c", &StrategyOutcome::t_c);
    py::class_<StrategyComparison>(m, "StrategyComparison")
        .def_readonly("outcomes", &StrategyComparison::outcomes)
        .def_readonly("best", &StrategyComparison::best)
        .def_readonly("tie", &StrategyComparison::tie)
        .def_readonly("margins", &StrategyComparison::margins);
    m.def("profit_deter", &profit_deter, py::arg("params"));
    m.def("profit_share", &profit_share, py::arg("params"));
    m.def("profit_wait", &profit_wait, py::arg("params"));
    m.def("select_strategy", &select_strategy, py::arg("params"));

    py::class_<PriceJump>(m, "PriceJump")
        .def_readonly("t", &PriceJump::t)
        .def_readonly("p_left", &PriceJump::p_left)
        .def_readonly("p_right", &PriceJump::p_right);
    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("t", &Trajectory::t)
        .def_readonly("phase", &Trajectory::phase)
        .def_readonly("q_c", &Trajectory::q_c)
        .def_readonly("q_f_total", &Trajectory::q_f_total)
        .def_readonly("p", &Trajectory::p)
        .def_readonly("s_c", &Trajectory::s_c)
        .def_readonly("s_f", &Trajectory::s_f)
        .def_readonly("cum_profit", &Trajectory::cum_profit)
        .def_readonly("jumps", &Trajectory::jumps);
    m.def("render", &render, py::arg("outcome"), py::arg("params"), py::arg("n_points"));

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("check", &OracleReport::check)
        .def_readonly("closed_form", &OracleReport::closed_form)
        .def_readonly("oracle_value", &OracleReport::oracle_value)
        .def_readonly("rel_gap", &OracleReport::rel_gap)
        .def_readonly("tolerance", &OracleReport::tolerance)
        .def_readonly("pass_", &OracleReport::pass);
    m.def("verify_share_optimality", &verify_share_optimality, py::arg("params"),
          py::arg("n_steps") = 2000, py::arg("n_starts") = 10, py::arg("seed") = 0);
    m.def("verify_fringe_nash", &verify_fringe_nash, py::arg("outcome"), py::arg("params"),
          py::arg("seed") = 0, py::arg("n_schedules") = 100);
    m.def("run_all_checks", &run_all_checks, py::arg("params"), py::arg("seed"));

    py::class_<AxisSpec>(m, "AxisSpec")
        .def(py::init([](std::string name, double lo, double hi, int n) {
                 return AxisSpec{std::move(name), lo, hi, n};
             }),
             py::arg("name"), py::arg("lo"), py::arg("hi"), py::arg("n"))
        .def_readonly("name", &AxisSpec::name)
        .def_readonly("lo", &AxisSpec::lo)
        .def_readonly("hi", &AxisSpec::hi)
        .def_readonly("n", &AxisSpec::n);
    py::class_<SweepCell>(m, "SweepCell")
        .def_readonly("coords", &SweepCell::coords)
        .def_readonly("pi1", &SweepCell::pi1)
        .def_readonly("pi2", &SweepCell::pi2)
        .def_readonly("pi3", &SweepCell::pi3)
        .def_readonly("best", &SweepCell::best)
        .def_readonly("valid", &SweepCell::valid)
        .def_readonly("reason", &SweepCell::reason);
    py::class_<SweepGrid>(m, "SweepGrid")
        .def_readonly("axes", &SweepGrid::axes)
        .def_readonly("cells", &SweepGrid::cells);
    py::class_<RegionBoundary>(m, "RegionBoundary")
        .def_readonly("name", &RegionBoundary::name)
        .def_readonly("points", &RegionBoundary::points)
        .def_readonly("tol_kc", &RegionBoundary::tol_kc);
    m.def("sweep_1d", &sweep_1d, py::arg("axis"), py::arg("base"));
    m.def("classify_regions", &classify_regions, py::arg("kf_axis"), py::arg("kc_axis"),
          py::arg("base"));
    m.def("trace_boundary", &trace_boundary, py::arg("class_i"), py::arg("class_j"),
          py::arg("kf_axis"), py::arg("base"));
}
