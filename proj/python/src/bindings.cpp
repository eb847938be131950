#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "probgems/probgems.hpp"

namespace py = pybind11;
using namespace probgems;

namespace {

ExactNumber to_exact(const py::object& value) {
  if (py::isinstance<py::str>(value)) return ExactNumber::parse(value.cast<std::string>());
  if (py::isinstance<py::int_>(value)) return ExactNumber(Rational(value.cast<std::int64_t>()));
  return ExactNumber(value.cast<double>());
}

QuadraticIrrational to_quadratic(const py::object& value) {
  if (py::isinstance<py::str>(value)) return QuadraticIrrational::parse(value.cast<std::string>());
  const auto t = value.cast<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>>();
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t)};
}

py::dict bracket_dict(const TailBracket& b) {
  py::dict d;
  d["lower"] = b.lower;
  d["upper"] = b.upper;
  d["k_used"] = b.k_used;
  d["converged"] = b.converged;
  d["terminal"] = b.terminal;
  d["lead_term_log"] = b.lead_term_log.value;
  return d;
}

py::object big_to_py(const BigInt& x) { return py::int_(py::str(x.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified bounds and exact oracles for classical probability and number theory";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<MethodInapplicable>(m, "MethodInapplicable", domain.ptr());
  auto numeric = py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<NotConverged>(m, "NotConverged", numeric.ptr());

  m.def("log_binom_pmf", [](std::int64_t n, std::int64_t k, double p) { return log_binom_pmf(n, k, p).value; },
        py::arg("n"), py::arg("k"), py::arg("p"));
  m.def("binom_tail_exact", [](std::int64_t n, std::int64_t l, double p) { return binom_tail_exact(n, l, p).probability; },
        py::arg("n"), py::arg("l"), py::arg("p"), "P(S_n > l) by direct summation.");
  m.def(
      "bracket_tail",
      [](std::int64_t n, std::int64_t l, double p, double tol, std::optional<std::int64_t> k_max) {
        return bracket_dict(bracket_tail(TailQuery::make(n, l, p), tol, k_max));
      },
      py::arg("n"), py::arg("l"), py::arg("p"), py::arg("tol") = 1e-10, py::arg("k_max") = py::none());
  m.def("convergents",
        [](std::int64_t n, std::int64_t l, double p, double tol) {
          ConvergentTrace trace;
          bracket_tail(TailQuery::make(n, l, p), tol, std::nullopt, &trace);
          return std::make_pair(trace.c_values, trace.d_values);
        },
        py::arg("n"), py::arg("l"), py::arg("p"), py::arg("tol") = 1e-10);
  m.def("bahadur_tail", [](std::int64_t n, std::int64_t j, double p) { return bahadur_tail(n, j, p); }, py::arg("n"),
        py::arg("j"), py::arg("p"), "P(S_n >= j) from the hypergeometric representation.");

  m.def("bernoulli_n_bound",
        [](const py::object& p, const py::object& eps, const py::object& eta) {
          return bernoulli_n_bound(LlnQuery::make(to_exact(p), to_exact(eps), to_exact(eta)));
        },
        py::arg("p"), py::arg("eps"), py::arg("eta"));
  m.def("bernoulli_alpha",
        [](const py::object& p, const py::object& eps, const py::object& eta) {
          return bernoulli_alpha(LlnQuery::make(to_exact(p), to_exact(eps), to_exact(eta)));
        },
        py::arg("p"), py::arg("eps"), py::arg("eta"));
  m.def("cantelli_n", &cantelli_n, py::arg("eps"), py::arg("eta"));

  m.def("dispersion_q",
        [](std::vector<std::int64_t> counts, std::int64_t s, double p) {
          return dispersion_q(CountVector(std::move(counts), s), p);
        },
        py::arg("counts"), py::arg("s"), py::arg("p"));
  m.def("empirical_q_hat",
        [](std::vector<std::int64_t> counts, std::int64_t s) { return empirical_q_hat(CountVector(std::move(counts), s)); },
        py::arg("counts"), py::arg("s"));
  m.def("moments_q_hat",
        [](std::int64_t n, std::int64_t s, double p) {
          const auto mom = moments_q_hat(n, s, p);
          py::dict d;
          d["mean"] = mom.mean;
          d["variance"] = mom.variance;
          d["bound"] = mom.bound;
          d["simple_bound"] = mom.simple_bound ? py::object(py::float_(*mom.simple_bound)) : py::object(py::none());
          return d;
        },
        py::arg("n"), py::arg("s"), py::arg("p"));
  m.def("expected_d",
        [](const std::vector<std::vector<double>>& rows) {
          const auto rep = expected_d(TrialMatrix::from_rows(rows));
          py::dict d;
          d["d"] = rep.d;
          d["d_formula"] = rep.d_formula;
          d["regime"] = to_string(rep.regime);
          return d;
        },
        py::arg("rows"));

  m.def("run_probability",
        [](std::int64_t n, std::int64_t r, const py::object& p, const std::string& method) {
          const auto spec = RunSpec::make(n, r, to_exact(p));
          if (method == "recursive") return run_prob_recursive(spec);
          if (method == "beta") return run_prob_beta(spec);
          if (method == "demoivre") return run_prob_demoivre(spec);
          if (method == "oracle") return run_prob_oracle(spec);
          throw py::value_error("method must be recursive, beta, demoivre or oracle");
        },
        py::arg("n"), py::arg("r"), py::arg("p"), py::arg("method") = "recursive");

  m.def("ruin_bounds_fair",
        [](std::int64_t a, std::int64_t b, std::int64_t alpha, std::int64_t beta, double p) {
          const auto r = ruin_bounds_fair(RuinGame::make(a, b, alpha, beta, p));
          return std::make_pair(r.lower, r.upper);
        },
        py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("beta"), py::arg("p"));
  m.def("ruin_exact",
        [](std::int64_t a, std::int64_t b, std::int64_t alpha, std::int64_t beta, double p, double tol) {
          return ruin_exact_chain(RuinGame::make(a, b, alpha, beta, p), tol).a_ruined;
        },
        py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("beta"), py::arg("p"), py::arg("tol") = 1e-12);
  m.def("ruin_roots",
        [](std::int64_t alpha, std::int64_t beta, double p) {
          return ruin_root_equation(RuinGame::make(alpha, beta, alpha, beta, p)).roots;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("p"));

  m.def("bernstein_bound",
        [](double variance_sum, double c, double t) { return bernstein_bound(BernsteinInput::make(variance_sum, c, t)); },
        py::arg("variance_sum"), py::arg("c"), py::arg("t"));
  m.def("simulate_uniform_sum_tail",
        [](std::int64_t n, double m, double t, std::int64_t samples, std::uint64_t seed) {
          const auto r = simulate_uniform_sum_tail(n, m, t, samples, seed);
          return std::make_pair(r.estimate, r.standard_error);
        },
        py::arg("n"), py::arg("m"), py::arg("t"), py::arg("samples"), py::arg("seed"));

  m.def("shuffle_order", &shuffle_order, py::arg("two_n"));
  m.def("perfect_in_shuffle",
        [](std::vector<std::uint32_t> order) { return perfect_in_shuffle(Deck::from_order(std::move(order))).order(); },
        py::arg("order"));
  m.def("monge_shuffle",
        [](std::vector<std::uint32_t> order) { return monge_shuffle(Deck::from_order(std::move(order))).order(); },
        py::arg("order"));

  m.def("beatty_spectrum",
        [](const py::object& alpha, std::int64_t horizon) { return make_spectrum(to_quadratic(alpha), horizon).values; },
        py::arg("alpha"), py::arg("horizon"));
  m.def("beatty_pair_check",
        [](const py::object& alpha, std::int64_t horizon) {
          const auto rep = beatty_pair_check(to_quadratic(alpha), horizon);
          py::dict d;
          d["disjoint"] = rep.disjoint;
          d["covers"] = rep.covers;
          d["beta"] = rep.exact_beta ? py::object(py::str(rep.exact_beta->to_string())) : py::object(py::none());
          d["first_collision"] = rep.first_collision ? py::object(py::int_(*rep.first_collision)) : py::object(py::none());
          d["first_gap"] = rep.first_gap ? py::object(py::int_(*rep.first_gap)) : py::object(py::none());
          return d;
        },
        py::arg("alpha"), py::arg("horizon"));
  m.def("triple_witness",
        [](const py::object& a, const py::object& b, const py::object& c, std::int64_t horizon) {
          const auto w = triple_spectrum_search({to_quadratic(a), to_quadratic(b), to_quadratic(c)}, horizon);
          return w.value;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("horizon"));
  m.def("wythoff_cold", &wythoff_cold, py::arg("count"));

  m.def("partition_exact", [](std::uint32_t n) { return big_to_py(partition_exact(n)); }, py::arg("n"));
  m.def("partition_asymptotic",
        [](std::uint32_t n) {
          const auto est = partition_asymptotic(n);
          py::dict d;
          d["log_simple"] = est.log_simple;
          d["log_refined"] = est.log_refined;
          return d;
        },
        py::arg("n"));
}
