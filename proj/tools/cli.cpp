#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "probgems/probgems.hpp"

namespace probgems::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Envelope {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  Json provenance = Json::array();
  Json warnings = Json::array();
  std::optional<Json> error;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["provenance"] = provenance;
    j["warnings"] = warnings;
    if (error) j["error"] = *error;
    return j;
  }
};

ExactNumber parse_number(const std::string& flag, const std::string& text) {
  try {
    return ExactNumber::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& prefix, int digits,
             std::vector<std::pair<std::string, std::string>>& rows) {
  auto child = [&](const std::string& key) { return prefix.empty() ? key : prefix + "." + key; };
  switch (j.type()) {
    case Json::value_t::object:
      for (const auto& [key, value] : j.items()) flatten(value, child(key), digits, rows);
      break;
    case Json::value_t::array:
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], child(std::to_string(i)), digits, rows);
      break;
    case Json::value_t::number_float:
      rows.emplace_back(prefix, format_number(j.get<double>(), digits));
      break;
    case Json::value_t::string:
      rows.emplace_back(prefix, j.get<std::string>());
      break;
    default:
      rows.emplace_back(prefix, j.dump());
  }
}

void emit(const Envelope& env, const std::string& format, std::ostream& out) {
  const Json j = env.to_json();
  if (format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  const bool csv = format == "csv";
  flatten(j, "", csv ? 17 : 6, rows);
  std::ostringstream buf;
  if (csv) buf << "key,value\n";
  for (const auto& [key, value] : rows) {
    if (csv)
      buf << csv_escape(key) << ',' << csv_escape(value) << '\n';
    else
      buf << key << ": " << value << '\n';
  }
  out << buf.str();
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  return fields;
}

// Header-less CSV, one series per row.
std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_fields(line));
  }
  return rows;
}

std::int64_t parse_count(const std::string& text) {
  const ExactNumber v = parse_number("count", text);
  if (boost::multiprecision::denominator(v.exact()) != 1) throw UsageError("count '" + text + "' is not an integer");
  return boost::multiprecision::numerator(v.exact()).convert_to<std::int64_t>();
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

struct Globals {
  std::string format = "json";
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified bounds and exact oracles for classical probability and number theory", "probgems"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--tol", g.tol, "Tolerance (relative bracket width, residual, ...)");
  app.add_option("--seed", g.seed, "Seed for Monte Carlo subcommands");

  // Every leaf subcommand registers a handler; the selected one runs after parsing.
  std::map<const CLI::App*, std::function<void(Envelope&)>> handlers;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    return parent->add_subcommand(name, desc);
  };

  // ---- tail -----------------------------------------------------------------
  std::int64_t n = 0, l = 0, j = 0, r = 0, k_max = 0, count = 0, horizon = 0, deck = 0, times = 1;
  std::int64_t a = 0, b = 0, alpha = 0, beta = 0, s = 0, mc_n = 0, samples = 1'000'000;
  int moment_k = 10;
  std::string p_text, eps_text, eta_text, method = "all", counts_path, m_inline, matrix_path;
  std::string alpha_text, alphas_text, dist = "uniform";
  double b2 = 0, c_const = 0, m_bound = 0, t = 0, sigma = 1;
  bool two_sided = false;

  auto* tail = leaf(&app, "tail", "Continued-fraction bracket for P(S_n > l), l > np");
  tail->add_option("--n", n, "Number of trials")->required();
  tail->add_option("--l", l, "Threshold l")->required();
  tail->add_option("--p", p_text, "Success probability (decimal or a/b)")->required();
  tail->add_option("--k-max", k_max, "Deepest coefficient index");
  handlers[tail] = [&](Envelope& env) {
    const double p = parse_number("--p", p_text).value();
    const double tol = g.tol.value_or(1e-10);
    std::optional<std::int64_t> kmax;
    if (tail->count("--k-max")) kmax = k_max;
    const auto query = TailQuery::make(n, l, p);
    const auto br = bracket_tail(query, tol, kmax);
    env.result["lower"] = br.lower;
    env.result["upper"] = br.upper;
    env.result["k_used"] = br.k_used;
    env.result["converged"] = br.converged;
    env.result["terminal"] = br.terminal;
    env.result["lead_term_log"] = br.lead_term_log.value;
    env.result["exact"] = binom_tail_exact(n, l, p).probability;
    env.provenance = {"continued-fraction forward recursion", "exact summation oracle"};
    if (!br.converged) env.warnings.push_back("bracket did not reach the tolerance within k-max");
  };

  auto* bahadur = leaf(&app, "bahadur", "P(S_n >= j) from the hypergeometric F(n+1,1;j+1;p) representation");
  bahadur->add_option("--n", n)->required();
  bahadur->add_option("--j", j)->required();
  bahadur->add_option("--p", p_text)->required();
  handlers[bahadur] = [&](Envelope& env) {
    const double p = parse_number("--p", p_text).value();
    env.result["probability"] = bahadur_tail(n, j, p);
    env.result["exact"] = binom_tail_exact(n, j - 1, p).probability;
    env.provenance = {"hypergeometric series", "exact summation oracle"};
  };

  // ---- lln ------------------------------------------------------------------
  auto* lln = app.add_subcommand("lln", "Law-of-large-numbers sample sizes");
  lln->require_subcommand(1);
  auto* bern = leaf(lln, "bernoulli", "Sample size from the block/geometric-series argument");
  bern->add_option("--p", p_text)->required();
  bern->add_option("--eps", eps_text)->required();
  bern->add_option("--eta", eta_text)->required();
  bern->add_flag("--two-sided", two_sided, "Also report the two-sided size (certified at level 2*eta)");
  handlers[bern] = [&](Envelope& env) {
    const auto q = LlnQuery::make(parse_number("--p", p_text), parse_number("--eps", eps_text),
                                  parse_number("--eta", eta_text));
    env.result["alpha"] = bernoulli_alpha(q);
    env.result["n"] = bernoulli_n_bound(q);
    env.provenance = {"exact rational power comparison"};
    if (two_sided) {
      const auto ts = bernoulli_two_sided(q);
      env.result["two_sided_n"] = ts.n;
      env.result["two_sided_level"] = to_double(ts.certified_level);
      env.warnings.push_back("two-sided level 2*eta is a union-bound convention");
    }
  };
  auto* cant = leaf(lln, "cantelli", "Smallest N > (2/eps^2) ln(4/(eps^2 eta)) + 2");
  cant->add_option("--eps", eps_text)->required();
  cant->add_option("--eta", eta_text)->required();
  handlers[cant] = [&](Envelope& env) {
    env.result["n"] = cantelli_n(parse_number("--eps", eps_text).value(), parse_number("--eta", eta_text).value());
    env.provenance = {"closed form"};
  };

  // ---- lexis ----------------------------------------------------------------
  auto* lexis = app.add_subcommand("lexis", "Lexis dispersion coefficients");
  lexis->require_subcommand(1);
  auto read_counts = [&](CLI::App* cmd) {
    std::vector<std::string> fields;
    if (cmd->count("--counts")) {
      for (const auto& row : read_csv(counts_path)) fields.insert(fields.end(), row.begin(), row.end());
    } else if (cmd->count("--m")) {
      fields = split_fields(m_inline);
    } else {
      throw UsageError("need --counts FILE or --m LIST");
    }
    std::vector<std::int64_t> m;
    for (const auto& f : fields) m.push_back(parse_count(f));
    return CountVector(std::move(m), s);
  };
  auto add_count_opts = [&](CLI::App* cmd) {
    cmd->add_option("--counts", counts_path, "CSV of per-series success counts");
    cmd->add_option("--m", m_inline, "Inline comma-separated counts");
    cmd->add_option("--s", s, "Trials per series")->required();
  };
  auto* lq = leaf(lexis, "q", "Coefficient of dispersion Q for known p");
  add_count_opts(lq);
  lq->add_option("--p", p_text)->required();
  handlers[lq] = [&](Envelope& env) {
    env.result["q"] = dispersion_q(read_counts(lq), parse_number("--p", p_text).value());
    env.provenance = {"closed form"};
  };
  auto* lqh = leaf(lexis, "qhat", "Empirical coefficient Q-hat");
  add_count_opts(lqh);
  handlers[lqh] = [&](Envelope& env) {
    const auto counts = read_counts(lqh);
    env.result["q_hat"] = empirical_q_hat(counts);
    const auto m = counts.total_successes();
    if (m == 0 || m == counts.total_trials()) env.warnings.push_back("M is 0 or N; Q-hat = 1 by definition");
    env.provenance = {"closed form"};
  };
  auto* lm = leaf(lexis, "moments", "Exact mean/variance of Q-hat in the Bernoulli case");
  lm->add_option("--n", n, "Number of series")->required();
  lm->add_option("--s", s, "Trials per series")->required();
  lm->add_option("--p", p_text)->required();
  handlers[lm] = [&](Envelope& env) {
    const auto mom = moments_q_hat(n, s, parse_number("--p", p_text).value());
    env.result["mean"] = mom.mean;
    env.result["variance"] = mom.variance;
    env.result["bound"] = mom.bound;
    env.result["simple_bound"] = mom.simple_bound ? Json(*mom.simple_bound) : Json(nullptr);
    env.provenance = {"finite binomial-weighted sum"};
  };
  auto* ld = leaf(lexis, "d", "Expected dispersion D and regime from a p_ij matrix");
  ld->add_option("--matrix", matrix_path, "CSV, one series per row")->required();
  handlers[ld] = [&](Envelope& env) {
    std::vector<std::vector<double>> rows;
    for (const auto& row : read_csv(matrix_path)) {
      std::vector<double> vals;
      for (const auto& f : row) vals.push_back(parse_number("--matrix", f).value());
      rows.push_back(std::move(vals));
    }
    const auto rep = expected_d(TrialMatrix::from_rows(rows));
    env.result["d"] = rep.d;
    env.result["d_formula"] = rep.d_formula;
    env.result["regime"] = to_string(rep.regime);
    env.provenance = {"exact expectation", "three-term decomposition"};
  };

  // ---- runs -----------------------------------------------------------------
  auto* runs = leaf(&app, "runs", "Probability of a run of r successes in n trials");
  runs->add_option("--n", n)->required();
  runs->add_option("--r", r)->required();
  runs->add_option("--p", p_text)->required();
  runs->add_option("--method", method)->check(CLI::IsMember({"recursive", "beta", "demoivre", "oracle", "all"}));
  handlers[runs] = [&](Envelope& env) {
    const auto spec = RunSpec::make(n, r, parse_number("--p", p_text));
    const bool all = method == "all";
    if (all || method == "recursive") {
      env.result["recursive"] = run_prob_recursive(spec);
      env.provenance.push_back("difference-equation recursion");
    }
    if (all || method == "beta") {
      env.result["beta"] = run_prob_beta(spec);
      env.provenance.push_back("generating-function coefficients");
    }
    if (all || method == "demoivre") {
      env.result["demoivre"] = run_prob_demoivre(spec);
      env.provenance.push_back("power-series division");
    }
    if (all || method == "oracle") {
      env.result["oracle"] = run_prob_oracle(spec);
      env.provenance.push_back("dynamic program");
    }
  };

  // ---- ruin -----------------------------------------------------------------
  auto* ruin = app.add_subcommand("ruin", "Gambler's ruin with unequal stakes");
  ruin->require_subcommand(1);
  auto add_game = [&](CLI::App* cmd) {
    cmd->add_option("--a", a, "A's fortune")->required();
    cmd->add_option("--b", b, "B's fortune")->required();
    cmd->add_option("--alpha", alpha, "A's stake")->required();
    cmd->add_option("--beta", beta, "B's stake")->required();
    cmd->add_option("--p", p_text, "A's win probability")->required();
  };
  auto game = [&] { return RuinGame::make(a, b, alpha, beta, parse_number("--p", p_text).value()); };
  auto* rb = leaf(ruin, "bounds", "Ruin bounds for a fair game");
  add_game(rb);
  handlers[rb] = [&](Envelope& env) {
    const auto bounds = ruin_bounds_fair(game());
    env.result["lower"] = bounds.lower;
    env.result["upper"] = bounds.upper;
    env.provenance = {"fair-game inequalities"};
  };
  auto* re = leaf(ruin, "exact", "Ruin probabilities from the absorbing chain");
  add_game(re);
  handlers[re] = [&](Envelope& env) {
    const auto res = ruin_exact_chain(game(), g.tol.value_or(1e-12));
    env.result["a_ruined"] = res.a_ruined;
    env.result["b_ruined"] = res.b_ruined;
    env.result["residual"] = res.residual;
    env.provenance = {"banded elimination"};
  };
  auto* rr = leaf(ruin, "roots", "Roots of p z^(alpha+beta) - z^alpha + q");
  add_game(rr);
  handlers[rr] = [&](Envelope& env) {
    const auto rep = ruin_root_equation(game());
    Json roots = Json::array();
    for (const auto& z : rep.roots) roots.push_back(complex_json(z));
    env.result["roots"] = roots;
    env.result["max_residual"] = rep.max_residual;
    env.provenance = {"deflation", "companion eigenvalues", "Newton polishing"};
  };

  // ---- bernstein ------------------------------------------------------------
  auto* bernstein = app.add_subcommand("bernstein", "Bernstein's inequality");
  bernstein->require_subcommand(1);
  auto* bb = leaf(bernstein, "bound", "2 exp(-t^2 / (2 B^2 + 2 c t))");
  bb->add_option("--b2", b2, "Variance of the sum")->required();
  bb->add_option("--c", c_const, "Moment-growth constant");
  bb->add_option("--m", m_bound, "Uniform bound |X_j| <= M (c = M/3)");
  bb->add_option("--t", t, "Threshold")->required();
  bb->add_option("--mc-n", mc_n, "Simulate sums of this many uniform(-M, M) terms (needs --seed and --m)");
  bb->add_option("--samples", samples, "Monte Carlo sample count");
  handlers[bb] = [&](Envelope& env) {
    const bool has_c = bb->count("--c") > 0, has_m = bb->count("--m") > 0;
    if (has_c == has_m) throw UsageError("give exactly one of --c or --m");
    const auto input = has_m ? BernsteinInput::bounded(b2, m_bound, t) : BernsteinInput::make(b2, c_const, t);
    env.result["c"] = input.c;
    env.result["bound"] = bernstein_bound(input);
    env.provenance = {"closed form"};
    if (bb->count("--mc-n")) {
      if (!g.seed) throw UsageError("Monte Carlo needs --seed");
      if (!has_m) throw UsageError("Monte Carlo simulates uniform(-M, M) terms; give --m");
      const auto mc = simulate_uniform_sum_tail(mc_n, m_bound, t, samples, *g.seed);
      env.result["mc_estimate"] = mc.estimate;
      env.result["mc_standard_error"] = mc.standard_error;
      env.result["mc_samples"] = mc.samples;
      env.provenance.push_back("seeded Monte Carlo");
    }
  };
  auto* bc = leaf(bernstein, "check", "Check E|X|^k <= k! sigma^2/2 c^(k-2) for k = 3..k-max");
  bc->add_option("--dist", dist)->check(CLI::IsMember({"uniform", "two-point"}));
  bc->add_option("--m", m_bound, "Half-width of uniform(-M, M)");
  bc->add_option("--sigma", sigma, "Magnitude of the two-point +-sigma variable");
  bc->add_option("--c", c_const, "Constant c (default M/3 or sigma)");
  bc->add_option("--k-max", moment_k);
  handlers[bc] = [&](Envelope& env) {
    double var = 0, c = 0;
    MomentFn fn;
    if (dist == "uniform") {
      if (!(m_bound > 0)) throw UsageError("uniform check needs --m > 0");
      var = m_bound * m_bound / 3.0;
      c = bc->count("--c") ? c_const : m_bound / 3.0;
      const double mb = m_bound;
      fn = [mb](std::size_t, int k) { return uniform_abs_moment(mb, k); };
    } else {
      var = sigma * sigma;
      c = bc->count("--c") ? c_const : sigma;
      const double sg = sigma;
      fn = [sg](std::size_t, int k) { return std::pow(sg, k); };
    }
    const auto rep = moment_condition_check({var}, c, fn, moment_k);
    env.result["c"] = c;
    env.result["all_hold"] = rep.all_hold;
    Json rows = Json::array();
    for (const auto& e : rep.entries)
      rows.push_back(Json{{"k", e.k}, {"moment", e.moment}, {"allowance", e.allowance}, {"holds", e.holds}});
    env.result["entries"] = rows;
    env.provenance = {"closed-form moments"};
  };

  // ---- shuffle --------------------------------------------------------------
  auto* shuffle = app.add_subcommand("shuffle", "Perfect and Monge shuffles");
  shuffle->require_subcommand(1);
  auto* so = leaf(shuffle, "order", "In-shuffles needed to restore a deck of 2n cards");
  so->add_option("--deck", deck, "Deck size 2n")->required();
  handlers[so] = [&](Envelope& env) {
    if (deck < 2) throw DomainError("deck size must be even and positive");
    env.result["order"] = shuffle_order(static_cast<std::uint64_t>(deck));
    env.provenance = {"multiplicative order of 2 mod 2n+1"};
  };
  auto deck_cmd = [&](const std::string& name, const std::string& desc, Deck (*fn)(const Deck&)) {
    auto* cmd = leaf(shuffle, name, desc);
    cmd->add_option("--deck", deck, "Deck size 2n")->required();
    cmd->add_option("--times", times, "Number of shuffles to apply");
    handlers[cmd] = [&, fn, name](Envelope& env) {
      if (deck < 2 || deck % 2) throw DomainError("deck size must be even and positive");
      if (times < 0) throw DomainError("--times must be non-negative");
      Deck d(static_cast<std::size_t>(deck));
      for (std::int64_t i = 0; i < times; ++i) d = fn(d);
      env.result["order_after"] = d.order();
      env.result["identity"] = d.is_identity();
      env.result["permutation_order"] = iteration_order(static_cast<std::size_t>(deck), fn);
      env.provenance = {name + " shuffle", "iteration until identity"};
    };
  };
  deck_cmd("perfect", "Apply perfect in-shuffles", &perfect_in_shuffle);
  deck_cmd("monge", "Apply over-under (Monge) shuffles", &monge_shuffle);

  // ---- beatty ---------------------------------------------------------------
  auto* beatty = app.add_subcommand("beatty", "Beatty spectra");
  beatty->require_subcommand(1);
  auto parse_alpha = [](const std::string& text) -> std::variant<QuadraticIrrational, long double> {
    try {
      return QuadraticIrrational::parse(text);
    } catch (const std::invalid_argument&) {
      return static_cast<long double>(parse_number("alpha", text).value());
    }
  };
  auto* bp = leaf(beatty, "pair", "Disjoint cover by the spectra of alpha and alpha/(alpha-1)");
  bp->add_option("--alpha", alpha_text, "phi, sqrt(D), (A+B*sqrt(D))/C, a/b or a decimal")->required();
  bp->add_option("--horizon", horizon)->required();
  handlers[bp] = [&](Envelope& env) {
    const auto av = parse_alpha(alpha_text);
    const auto rep = std::visit([&](const auto& x) { return beatty_pair_check(x, horizon); }, av);
    env.result["alpha"] = static_cast<double>(rep.alpha);
    env.result["beta"] = static_cast<double>(rep.beta);
    if (rep.exact_beta) env.result["beta_exact"] = rep.exact_beta->to_string();
    env.result["disjoint"] = rep.disjoint;
    env.result["covers"] = rep.covers;
    env.result["first_collision"] = rep.first_collision ? Json(*rep.first_collision) : Json(nullptr);
    env.result["first_gap"] = rep.first_gap ? Json(*rep.first_gap) : Json(nullptr);
    env.result["inconclusive"] = rep.inconclusive;
    env.provenance = {std::holds_alternative<QuadraticIrrational>(av) ? "exact quadratic floors"
                                                                     : "extended-precision floors"};
    if (rep.inconclusive) env.warnings.push_back("some floors were within 1e-9 of an integer");
  };
  auto* bt = leaf(beatty, "triple", "Smallest integer missed or doubly covered by three spectra");
  bt->add_option("--alphas", alphas_text, "Three comma-separated values")->required();
  bt->add_option("--horizon", horizon)->required();
  handlers[bt] = [&](Envelope& env) {
    const auto fields = split_fields(alphas_text);
    if (fields.size() != 3) throw UsageError("--alphas needs exactly three values");
    std::vector<std::variant<QuadraticIrrational, long double>> vals;
    for (const auto& f : fields) vals.push_back(parse_alpha(f));
    TripleWitness w;
    if (std::all_of(vals.begin(), vals.end(),
                    [](const auto& v) { return std::holds_alternative<QuadraticIrrational>(v); })) {
      w = triple_spectrum_search({std::get<QuadraticIrrational>(vals[0]), std::get<QuadraticIrrational>(vals[1]),
                                  std::get<QuadraticIrrational>(vals[2])},
                                 horizon);
      env.provenance = {"exact quadratic floors"};
    } else {
      std::array<long double, 3> reals{};
      for (std::size_t i = 0; i < 3; ++i)
        reals[i] = std::visit(
            [](const auto& x) -> long double {
              if constexpr (std::is_same_v<std::decay_t<decltype(x)>, QuadraticIrrational>)
                return x.value();
              else
                return x;
            },
            vals[i]);
      w = triple_spectrum_search(reals, horizon);
      env.provenance = {"extended-precision floors"};
    }
    for (const auto& v : vals)
      if (std::visit([](const auto& x) -> long double {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, QuadraticIrrational>)
              return x.value();
            else
              return x;
          }, v) <= 1.0L)
        throw DomainError("every alpha must exceed 1");
    env.result["witness"] = w.value ? Json(*w.value) : Json(nullptr);
    env.result["kind"] = w.value ? (w.kind == WitnessKind::Missed ? "missed" : "doubly-covered") : "none";
    env.result["inconclusive"] = w.inconclusive;
  };
  auto* bw = leaf(beatty, "wythoff", "Cold positions of Wythoff's game");
  bw->add_option("--count", count)->required();
  handlers[bw] = [&](Envelope& env) {
    Json pairs = Json::array();
    for (const auto& [x, y] : wythoff_cold(count)) pairs.push_back(Json::array({x, y}));
    env.result["cold"] = pairs;
    env.provenance = {"exact golden-ratio floors"};
  };

  // ---- partition ------------------------------------------------------------
  auto* partition = app.add_subcommand("partition", "Partition numbers");
  partition->require_subcommand(1);
  auto* pe = leaf(partition, "exact", "p(n) by the pentagonal-number recurrence");
  pe->add_option("--n", n)->required();
  handlers[pe] = [&](Envelope& env) {
    if (n < 0) throw DomainError("n must be non-negative");
    env.result["p"] = partition_exact(static_cast<std::uint32_t>(n)).str();
    env.provenance = {"pentagonal recurrence"};
  };
  auto* pa = leaf(partition, "asymptotic", "Leading-order and shifted estimates of p(n)");
  pa->add_option("--n", n)->required();
  handlers[pa] = [&](Envelope& env) {
    if (n < 1) throw DomainError("n must be positive");
    const auto est = partition_asymptotic(static_cast<std::uint32_t>(n));
    env.result["simple"] = static_cast<double>(est.simple);
    env.result["refined"] = static_cast<double>(est.refined);
    env.result["log_simple"] = est.log_simple;
    env.result["log_refined"] = est.log_refined;
    env.provenance = {"log-space evaluation"};
    if (n <= 20000) {
      const double log_exact = log_big(partition_exact(static_cast<std::uint32_t>(n)));
      env.result["log_exact"] = log_exact;
      env.result["refined_over_exact"] = std::exp(est.log_refined - log_exact);
      env.provenance.push_back("pentagonal recurrence");
    }
  };

  // ---- dispatch -------------------------------------------------------------
  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const CLI::App* selected = nullptr;
  std::string name;
  for (const CLI::App* cur = &app;;) {
    auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
    name += (name.empty() ? "" : " ") + cur->get_name();
    selected = cur;
  }
  const auto it = handlers.find(selected);
  if (it == handlers.end()) {
    err << "usage error: incomplete command '" << name << "'\n";
    return 2;
  }

  Envelope env;
  env.command = name;
  for (const auto* opt : selected->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string key = opt->get_name();
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    env.inputs[key] = opt->as<std::string>();
  }
  if (g.tol) env.inputs["tol"] = *g.tol;
  if (g.seed) env.inputs["seed"] = *g.seed;

  try {
    it->second(env);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    const char* type = dynamic_cast<const MethodInapplicable*>(&e) ? "method_inapplicable"
                       : dynamic_cast<const DomainError*>(&e)      ? "domain_error"
                       : dynamic_cast<const NotConverged*>(&e)     ? "not_converged"
                       : dynamic_cast<const NumericError*>(&e)     ? "numeric_error"
                                                                   : "error";
    env.result = Json::object();
    env.error = Json{{"type", type}, {"message", e.what()}};
    emit(env, g.format, out);
    err << "error: " << e.what() << '\n';
    return 1;
  }
  emit(env, g.format, out);
  return 0;
}

}  // namespace probgems::cli
