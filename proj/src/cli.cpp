#include "streamsub/cli.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <memory>
#include <set>
#include <optional>

#include <CLI11.hpp>

#include "streamsub/alpha_pool.hpp"
#include "streamsub/errors.hpp"
#include "streamsub/generator.hpp"
#include "streamsub/instance.hpp"
#include "streamsub/iterated.hpp"
#include "streamsub/lemma_suite.hpp"
#include "streamsub/offline.hpp"
#include "streamsub/randomized.hpp"
#include "streamsub/report.hpp"
#include "streamsub/rng.hpp"
#include "streamsub/streaming_greedy.hpp"

namespace streamsub {
namespace {

// Stream-id for the shuffle permutation; fixed so the delivery order is a
// function of --seed alone and stays identical across --trials.
constexpr std::uint64_t kShuffleStream = 0xA11CE;

std::size_t ceil_to_size(const Rat& r, const char* what) {
  if (r <= 0) throw PreconditionError(std::string(what) + " must be positive");
  const boost::multiprecision::cpp_int num = numerator(r);
  const boost::multiprecision::cpp_int den = denominator(r);
  boost::multiprecision::cpp_int q = num / den;
  if (num % den != 0) ++q;
  if (q > 100000000)
    throw PreconditionError(std::string(what) + " works out to " +
                            q.str() + ", which is unreasonably large");
  return q.convert_to<std::size_t>();
}

std::string ids_str(const IdVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

struct RunConfig {
  std::string algorithm;
  bool alpha_auto = false;
  Rat alpha;
  Rat beta;
  Rat epsilon;
  Rat gamma;
  bool cardinality = false;
  std::size_t capacity = 1;
  bool capacity_overridden = false;
  std::string offline_kind;
  std::uint64_t seed = 0;
  int trials = 1;
  StreamOrder order = StreamOrder::given;
  IdVec stream;
};

struct TrialOutput {
  Outcome out;
  std::size_t taken = 0;
  IdVec taken_ids;  // deterministic fixed-threshold greedy only
  std::optional<std::size_t> buffer_peak;
  std::optional<std::size_t> selections;
  std::optional<Json> pool_json;
  std::optional<Json> logs;
  std::uint64_t identity_checks = 0;
};

OfflineFn make_offline(const std::string& kind,
                       const InstrumentedOracle& oracle, const Matchoid& m,
                       std::uint64_t seed) {
  if (kind == "greedy")
    return [&oracle, &m](const IdVec& g) {
      return offline_greedy(oracle, m, g);
    };
  if (kind == "random-greedy")
    return [&oracle, &m, seed](const IdVec& g) {
      return offline_random_greedy(oracle, m, g, seed);
    };
  if (kind == "exact")
    return [&oracle, &m](const IdVec& g) {
      return exact_bruteforce(oracle, m, g);
    };
  throw PreconditionError("unknown offline solver '" + kind + "'");
}

Json pool_to_json(const PoolOutcome& po, const AlphaPool& pool) {
  Json rows = Json::array();
  for (const PoolInstanceRow& r : po.instances)
    rows.push_back(Json{{"exponent", r.exponent},
                        {"alpha", rat_to_json(r.alpha)},
                        {"value", r.outcome.value},
                        {"ids", r.outcome.ids},
                        {"taken", r.taken}});
  const PoolStats& st = pool.stats();
  Json j{{"instances", rows},
         {"live_cap", pool.live_cap()},
         {"stats", Json{{"live_peak", st.live_peak},
                        {"retained_peak", st.retained_peak},
                        {"created", st.created},
                        {"retired", st.retired},
                        {"killed", st.killed}}}};
  if (po.any) j["best_alpha"] = rat_to_json(po.best_alpha);
  if (pool.has_z()) {
    j["z"] = pool.z();
    j["z_value"] = pool.z_value();
  }
  return j;
}

TrialOutput run_trial(const InstanceBundle& b,
                      const InstrumentedOracle& oracle, const RunConfig& rc,
                      std::uint64_t trial_seed) {
  const Matchoid& m = b.matchoid;
  const int k = m.k();
  TrialOutput t;

  if (rc.algorithm == "offline-greedy" ||
      rc.algorithm == "offline-random-greedy" || rc.algorithm == "exact") {
    OfflineResult r;
    if (rc.algorithm == "offline-greedy")
      r = offline_greedy(oracle, m, b.universe);
    else if (rc.algorithm == "offline-random-greedy")
      r = offline_random_greedy(oracle, m, b.universe, trial_seed);
    else
      r = exact_bruteforce(oracle, m, b.universe);
    t.out = {r.ids, r.value};
    t.taken = r.ids.size();
    return t;
  }

  OfflineFn off =
      make_offline(rc.offline_kind, oracle, m, derive_seed(trial_seed, 77));

  if (!rc.alpha_auto) {
    std::unique_ptr<StreamAlgo> algo;
    const StreamingGreedy* greedy_view = nullptr;
    const RandomizedGreedy* rand_view = nullptr;
    const CardinalityRandomized* card_view = nullptr;
    if (rc.algorithm == "greedy") {
      auto g = std::make_unique<StreamingGreedy>(
          m, oracle, GreedyParams{rc.alpha, rc.beta});
      greedy_view = g.get();
      algo = std::move(g);
    } else if (rc.algorithm == "iterated") {
      algo = std::make_unique<IteratedGreedy>(
          m, oracle, GreedyParams{rc.alpha, rc.beta}, off);
    } else if (rc.algorithm == "randomized" && rc.cardinality) {
      auto g = std::make_unique<CardinalityRandomized>(
          m, oracle, rc.alpha, rc.capacity, trial_seed, off);
      card_view = g.get();
      algo = std::move(g);
    } else if (rc.algorithm == "randomized") {
      auto g = std::make_unique<RandomizedGreedy>(
          m, oracle, GreedyParams{rc.alpha, rc.beta}, rc.capacity, trial_seed,
          off);
      rand_view = g.get();
      algo = std::move(g);
    } else {
      throw PreconditionError("unknown algorithm '" + rc.algorithm + "'");
    }
    for (ElemId e : rc.stream) algo->process(e);
    t.out = algo->finish();
    t.taken = algo->taken_count();
    t.identity_checks = algo->identity_checks();
    if (greedy_view != nullptr) {
      t.taken_ids = sorted_copy(greedy_view->state().taken_ids());
      t.logs = greedy_view->state().logs_to_json();
    }
    if (rand_view != nullptr) {
      t.buffer_peak = rand_view->buffer_peak();
      t.selections = rand_view->selections();
    }
    if (card_view != nullptr) {
      t.buffer_peak = card_view->buffer_peak();
      t.selections = card_view->selections();
    }
    return t;
  }

  const GridConfig grid = rc.cardinality ? cardinality_grid(rc.epsilon, k)
                                         : matchoid_grid(rc.epsilon, k);
  std::size_t budget;
  if (rc.algorithm == "greedy")
    budget = static_cast<std::size_t>(k);
  else if (rc.algorithm == "iterated")
    budget = static_cast<std::size_t>(2 * k) +
             ceil_to_size(Rat(k) / grid.low_coef, "pool budget");
  else
    budget = static_cast<std::size_t>(k) + rc.capacity;

  InstanceFactory factory =
      [&](const Rat& alpha, std::uint64_t sub_seed) -> std::unique_ptr<StreamAlgo> {
    if (rc.algorithm == "greedy")
      return std::make_unique<StreamingGreedy>(m, oracle,
                                               GreedyParams{alpha, rc.beta});
    if (rc.algorithm == "iterated")
      return std::make_unique<IteratedGreedy>(m, oracle,
                                              GreedyParams{alpha, rc.beta}, off);
    if (rc.cardinality)
      return std::make_unique<CardinalityRandomized>(m, oracle, alpha,
                                                     rc.capacity, sub_seed, off);
    return std::make_unique<RandomizedGreedy>(
        m, oracle, GreedyParams{alpha, rc.beta}, rc.capacity, sub_seed, off);
  };

  AlphaPool pool(grid, factory, oracle, trial_seed, k, budget);
  for (ElemId e : rc.stream) pool.step(e);
  const PoolOutcome po = pool.finish();
  if (po.any) {
    t.out = po.best;
    for (const PoolInstanceRow& row : po.instances)
      if (row.alpha == po.best_alpha) t.taken = row.taken;
  } else {
    t.out = Outcome{{}, oracle.eval({})};
  }
  t.identity_checks = pool.stats().identity_checks;
  t.pool_json = pool_to_json(po, pool);
  return t;
}

double rat_approx(const Rat& r) { return to_double(r); }

// Advisory post-run certification against the exact optimum.  Statistical
// checks use a three-standard-error slack; everything else is exact rational
// arithmetic.  Appends to `checks`, clears `all_ok` on any failure.
Json build_bound_check(const InstanceBundle& b, const RunConfig& rc,
                       const std::vector<TrialOutput>& ts, std::size_t best,
                       const InstrumentedOracle& verify, bool& all_ok) {
  const Matchoid& m = b.matchoid;
  const int k = m.k(), p = m.p();
  const OfflineResult opt = exact_bruteforce(verify, m, b.universe);
  const bool monotone = b.fn->is_monotone();

  Json checks = Json::array();
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(Json{{"name", name}, {"satisfied", ok}, {"detail", detail}});
    if (!ok) all_ok = false;
  };

  bool within = true;
  for (const TrialOutput& t : ts)
    if (t.out.value > opt.value) within = false;
  add("value-at-most-opt", within,
      "every trial value is at most OPT=" + std::to_string(opt.value));

  const TrialOutput& bt = ts[best];
  const std::size_t T = ts.size();
  Rat mean_r = 0;
  double vmin = 0, vmax = 0;
  for (std::size_t i = 0; i < T; ++i) {
    mean_r += Rat(ts[i].out.value);
    const double v = static_cast<double>(ts[i].out.value);
    if (i == 0) vmin = vmax = v;
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  mean_r /= Rat(static_cast<long long>(T));
  const double mean_d = rat_approx(mean_r);
  double var = 0;
  for (const TrialOutput& t : ts) {
    const double d = static_cast<double>(t.out.value) - mean_d;
    var += d * d;
  }
  const double sd = T >= 2 ? std::sqrt(var / static_cast<double>(T - 1)) : 0.0;
  const double slack = T >= 2 ? 3.0 * sd / std::sqrt(static_cast<double>(T)) : 0.0;
  const double opt_d = static_cast<double>(opt.value);

  const Rat one_plus_b = Rat(1) + rc.beta;
  const std::size_t general_cap_floor = ceil_to_size(
      Rat(4) * Rat(k) / (rc.epsilon * rc.epsilon), "default capacity");
  const std::size_t card_cap_floor =
      ceil_to_size(Rat(k) / rc.epsilon, "default capacity");

  if (rc.algorithm == "greedy") {
    if (!rc.alpha_auto) {
      if (rc.alpha > 0)
        add("taken-budget",
            Rat(static_cast<long long>(bt.taken)) * rc.alpha <= Rat(opt.value),
            std::to_string(bt.taken) + " acceptances at alpha=" +
                rat_to_string(rc.alpha) + " fit under OPT");
      if (rc.beta > 0) {
        IdVec un = bt.taken_ids;
        for (ElemId e : opt.ids)
          if (!contains(un, e)) un.push_back(e);
        const Val f_union = verify.eval(un);
        const Rat cap = rc.beta * Rat(k) * rc.alpha +
                        one_plus_b * one_plus_b * Rat(p) * Rat(bt.out.value);
        add("union-cap", rc.beta * Rat(f_union) <= cap,
            "f(optimum united with taken)=" + std::to_string(f_union) +
                " within the exchange cap");
        if (monotone)
          add("monotone-ratio", rc.beta * Rat(opt.value) <= cap,
              "OPT within k alpha + (1+beta)^2/beta p f(S)");
      }
    } else {
      bool budgets = true;
      if (bt.pool_json) {
        for (const Json& row : (*bt.pool_json)["instances"]) {
          const Rat a = rat_from_json(row.at("alpha"));
          if (Rat(static_cast<long long>(
                  row.at("taken").get<std::size_t>())) * a > Rat(opt.value))
            budgets = false;
        }
      }
      add("taken-budget-pool", budgets,
          "every live threshold instance respected its acceptance budget");
      if (monotone && rc.beta > 0 && bt.pool_json &&
          bt.pool_json->contains("best_alpha"))
        add("pool-ratio",
            one_plus_b * one_plus_b * Rat(p) * Rat(bt.out.value) >=
                rc.beta * (Rat(1) - rc.epsilon / 2) * Rat(opt.value),
            "(1+beta)^2 p f >= beta (1 - eps/2) OPT via the covered guess");
    }
  } else if (rc.algorithm == "iterated") {
    if (monotone && rc.beta > 0) {
      const Rat coef =
          Rat(2) * one_plus_b * one_plus_b / rc.beta * Rat(p) + Rat(1) / rc.gamma;
      const Rat loss = rc.alpha_auto ? rc.epsilon * Rat(opt.value) / 2
                                     : Rat(k) * rc.alpha;
      add(rc.alpha_auto ? "iterated-pool-floor" : "iterated-floor",
          coef * Rat(bt.out.value) >= Rat(opt.value) - loss,
          "(2 (1+beta)^2 p / beta + 1/gamma) f covers OPT minus the "
          "threshold loss");
    }
  } else if (rc.algorithm == "randomized" && !rc.cardinality) {
    if (!rc.alpha_auto && rc.alpha > 0)
      add("taken-budget",
          Rat(static_cast<long long>(bt.taken)) * rc.alpha <= Rat(opt.value),
          "best-trial acceptances fit under OPT");
    if (T >= 2 && rc.beta > 0 && rc.capacity >= general_cap_floor) {
      const double coef =
          rat_approx(one_plus_b * one_plus_b / rc.beta) * p +
          1.0 / rat_approx(rc.gamma);
      const double kalpha = rc.alpha_auto
                                ? rat_approx(rc.epsilon) * opt_d / 2
                                : static_cast<double>(k) * rat_approx(rc.alpha);
      const double eps_d = rat_approx(rc.epsilon);
      const double lhs = (rc.alpha_auto ? 1.0 - 1.5 * eps_d : 1.0 - eps_d) * opt_d;
      add(rc.alpha_auto ? "expected-value-pool" : "expected-value",
          lhs <= kalpha + coef * (mean_d + slack),
          "mean over trials carries the sampled-deletion guarantee");
    }
  } else if (rc.algorithm == "randomized" && rc.cardinality) {
    if (!rc.alpha_auto)
      add("value-floor",
          Rat(bt.out.value) >=
              Rat(static_cast<long long>(bt.taken)) * rc.alpha,
          "kept elements each cleared alpha");
    if (rc.alpha_auto && T >= 2 && rc.capacity >= card_cap_floor) {
      const double eps_d = rat_approx(rc.epsilon);
      const double bound =
          (1.0 - 2.0 * eps_d) / (2.0 + std::exp(1.0)) * opt_d;
      add("expected-value-cardinality", mean_d + slack >= bound,
          "mean over trials reaches (1-2 eps)/(2+e) OPT within slack");
    }
  } else if (rc.algorithm == "offline-greedy") {
    if (monotone)
      add("greedy-ratio", Rat(p + 1) * Rat(bt.out.value) >= Rat(opt.value),
          "(p+1) f >= OPT");
  } else if (rc.algorithm == "offline-random-greedy") {
    const bool single_uniform =
        m.num_matroids() == 1 &&
        dynamic_cast<const UniformMatroid*>(&m.matroid(0)) != nullptr;
    if (single_uniform && T >= 2)
      add("expected-random-greedy", mean_d + slack >= 0.36 * opt_d,
          "mean over trials reaches 9/25 OPT within slack");
  } else if (rc.algorithm == "exact") {
    add("exact-matches", bt.out.value == opt.value,
        "enumeration agrees with the verification optimum");
  }

  return Json{{"opt", opt.value}, {"satisfied", all_ok}, {"checks", checks}};
}

int run_generate(const std::string& kind, int n, int k, std::uint64_t seed,
                 const std::string& out) {
  const GeneratedInstance gen = generate_instance(kind, n, k, seed);
  write_instance(gen, out);
  std::cout << "wrote " << out << ".function.json and " << out
            << ".constraint.json\n";
  if (!gen.warning.empty()) std::cerr << "warning: " << gen.warning << "\n";
  return 0;
}

int run_selftest(int instances, std::uint64_t seed, const std::string& dir) {
  SuiteConfig cfg;
  cfg.instances_per_class = instances;
  cfg.seed = seed;
  cfg.reproducer_dir = dir;
  const SuiteResult r = check_lemma_suite(cfg);
  for (const auto& [name, c] : r.ledger) {
    std::cout << name;
    for (std::size_t i = name.size(); i < 28; ++i) std::cout << ' ';
    std::cout << c.checked << " checked, " << c.violations << " violated\n";
  }
  std::cout << "total: " << r.total_checked() << " checks, "
            << r.total_violations() << " violations\n";
  for (const std::string& path : r.reproducer_paths)
    std::cout << "reproducer: " << path << "\n";
  if (r.total_violations() != 0) {
    std::cerr << "self-test FAILED\n";
    return 2;
  }
  std::cout << "self-test passed\n";
  return 0;
}

struct CliOptions {
  std::string function_path, constraint_path;
  std::string algorithm = "greedy";
  std::string alpha_text = "auto";
  std::string beta_text = "1";
  std::string epsilon_text = "1/4";
  std::string gamma_text;
  std::string offline_kind = "greedy";
  std::string order_text = "given";
  std::string script_path;
  std::optional<IdVec> script_ids;  // beats script_path when set
  std::uint64_t seed = 0;
  int trials = 1;
  bool cardinality = false;
  std::size_t capacity = 0;
  bool capacity_set = false;
  bool verify = false;
  std::string report_path;
  bool timing = false;
  bool memoize = false;
};

RunReport execute(const InstanceBundle& b, const CliOptions& o,
                  bool& bounds_ok) {
  const auto t0 = std::chrono::steady_clock::now();
  const Matchoid& m = b.matchoid;
  const int k = m.k(), p = m.p();

  RunConfig rc;
  rc.algorithm = o.algorithm;
  // The flag interface enforces membership via CLI11; the options interface
  // must match (without this an unknown name would fall through the pool
  // factory and silently run as randomized).
  static const std::set<std::string> kAlgorithms = {
      "greedy",         "randomized",            "iterated",
      "offline-greedy", "offline-random-greedy", "exact"};
  if (!kAlgorithms.count(rc.algorithm))
    throw PreconditionError("unknown algorithm '" + rc.algorithm + "'");
  rc.seed = o.seed;
  rc.trials = o.trials;
  rc.offline_kind = o.offline_kind;
  rc.cardinality = o.cardinality;
  rc.epsilon = parse_rat(o.epsilon_text);
  if (!(rc.epsilon > 0) || !(rc.epsilon < 1))
    throw PreconditionError("--epsilon must lie strictly between 0 and 1");
  rc.beta = parse_rat(o.beta_text);
  if (rc.beta < 0) throw PreconditionError("--beta must be non-negative");
  if (o.alpha_text == "auto") {
    rc.alpha_auto = true;
  } else {
    rc.alpha = parse_rat(o.alpha_text);
    if (rc.alpha < 0) throw PreconditionError("--alpha must be non-negative");
  }
  if (o.gamma_text.empty()) {
    // Default to the ratio of the box that actually produces the answer: the
    // --offline choice for streaming algorithms, the algorithm itself when it
    // IS an offline solver.
    std::string box = rc.offline_kind;
    if (rc.algorithm == "exact")
      box = "exact";
    else if (rc.algorithm == "offline-greedy")
      box = "greedy";
    else if (rc.algorithm == "offline-random-greedy")
      box = "random-greedy";
    if (box == "exact")
      rc.gamma = 1;
    else if (box == "greedy")
      rc.gamma = Rat(1) / Rat(p + 1);
    else
      rc.gamma = Rat(9) / 25;
  } else {
    rc.gamma = parse_rat(o.gamma_text);
    if (!(rc.gamma > 0) || rc.gamma > 1)
      throw PreconditionError("--gamma must lie in (0, 1]");
  }
  if (rc.cardinality && rc.algorithm != "randomized")
    throw PreconditionError(
        "--cardinality applies only to --algorithm randomized");
  if (rc.cardinality)
    rc.beta = 0;  // the specialization never exchanges
  if (o.capacity_set) {
    if (o.capacity == 0) throw PreconditionError("--capacity must be >= 1");
    rc.capacity = o.capacity;
    rc.capacity_overridden = true;
  } else if (rc.cardinality) {
    rc.capacity = ceil_to_size(Rat(k) / rc.epsilon, "buffer capacity");
  } else {
    rc.capacity = ceil_to_size(Rat(4) * Rat(k) / (rc.epsilon * rc.epsilon),
                               "buffer capacity");
  }

  rc.order = stream_order_from_string(o.order_text);
  IdVec script;
  if (rc.order == StreamOrder::script) {
    if (o.script_ids)
      script = *o.script_ids;
    else if (!o.script_path.empty())
      script = load_json_file(o.script_path).get<IdVec>();
    else
      throw PreconditionError("--stream-order script needs --stream-script");
  } else if (!o.script_path.empty() || o.script_ids) {
    throw PreconditionError(
        "--stream-script requires --stream-order script");
  }
  rc.stream = make_stream(b.universe, rc.order,
                          derive_seed(rc.seed, kShuffleStream),
                          rc.order == StreamOrder::script ? &script : nullptr);

  InstrumentedOracle algo_oracle(*b.fn, o.memoize);
  std::vector<TrialOutput> trials;
  trials.reserve(static_cast<std::size_t>(rc.trials));
  for (int t = 0; t < rc.trials; ++t)
    trials.push_back(run_trial(b, algo_oracle, rc,
                               derive_seed(rc.seed, 1 + static_cast<std::uint64_t>(t))));
  std::size_t best = 0;
  for (std::size_t i = 1; i < trials.size(); ++i)
    if (trials[i].out.value > trials[best].out.value) best = i;
  const TrialOutput& bt = trials[best];

  RunReport rep;
  rep.algorithm = rc.algorithm + (rc.cardinality ? "-cardinality" : "");
  rep.params = Json{{"alpha", rc.alpha_auto ? Json("auto") : rat_to_json(rc.alpha)},
                    {"beta", rat_to_json(rc.beta)},
                    {"epsilon", rat_to_json(rc.epsilon)},
                    {"gamma", rat_to_json(rc.gamma)},
                    {"offline", rc.offline_kind},
                    {"seed", rc.seed},
                    {"trials", rc.trials},
                    {"cardinality", rc.cardinality},
                    {"memoize", o.memoize}};
  if (rc.algorithm == "randomized") rep.params["capacity"] = rc.capacity;
  rep.constraint_summary = Json{{"p", p},
                                {"k", k},
                                {"q", m.num_matroids()},
                                {"n", b.universe.size()}};
  rep.stream_info = Json{{"order", stream_order_to_string(rc.order)},
                         {"n", rc.stream.size()},
                         {"passes", 1}};
  if (rc.order == StreamOrder::shuffled)
    rep.stream_info["shuffle_seed"] = derive_seed(rc.seed, kShuffleStream);
  rep.result_ids = bt.out.ids;
  rep.result_value = Rat(bt.out.value);
  rep.taken = bt.taken;
  rep.buffer_peak = bt.buffer_peak;
  rep.selections = bt.selections;
  rep.pool = bt.pool_json;
  rep.logs = bt.logs;
  rep.identity_checks = 0;
  for (const TrialOutput& t : trials) rep.identity_checks += t.identity_checks;
  if (rc.trials > 1) {
    Rat mean = 0;
    Val vmin = trials[0].out.value, vmax = trials[0].out.value;
    for (const TrialOutput& t : trials) {
      mean += Rat(t.out.value);
      vmin = std::min(vmin, t.out.value);
      vmax = std::max(vmax, t.out.value);
    }
    mean /= Rat(static_cast<long long>(rc.trials));
    const double mean_d = to_double(mean);
    double var = 0;
    for (const TrialOutput& t : trials) {
      const double d = static_cast<double>(t.out.value) - mean_d;
      var += d * d;
    }
    Json tj{{"count", rc.trials},
            {"mean", rat_to_json(mean)},
            {"stddev", std::sqrt(var / static_cast<double>(rc.trials - 1))},
            {"min", vmin},
            {"max", vmax},
            {"best_trial", best}};
    if (rc.trials <= 64) {
      Json values = Json::array();
      for (const TrialOutput& t : trials) values.push_back(t.out.value);
      tj["values"] = values;
    }
    rep.trials = tj;
  }

  InstrumentedOracle verify_oracle(*b.fn);
  if (o.verify) {
    rep.bound_check =
        build_bound_check(b, rc, trials, best, verify_oracle, bounds_ok);
    rep.verification_calls = verify_oracle.calls();
  }
  rep.algorithm_calls = algo_oracle.calls();
  rep.cache_hits = algo_oracle.cache_hits();
  if (o.timing) {
    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
  }
  return rep;
}

int run_main(const CliOptions& o) {
  InstanceBundle b = load_bundle(o.function_path, o.constraint_path);
  bool bounds_ok = true;
  const RunReport rep = execute(b, o, bounds_ok);
  const Json rj = report_to_json(rep);
  if (!o.report_path.empty()) write_json_file(o.report_path, rj);

  std::cout << "algorithm=" << rep.algorithm << " n=" << b.universe.size()
            << " p=" << b.matchoid.p() << " k=" << b.matchoid.k()
            << " value=" << rat_to_string(rep.result_value)
            << " ids=" << ids_str(rep.result_ids)
            << " taken=" << rep.taken
            << " oracle_calls=" << rep.algorithm_calls << "\n";
  if (rep.trials)
    std::cout << "trials=" << (*rep.trials)["count"] << " mean="
              << rat_to_string(rat_from_json((*rep.trials)["mean"]))
              << " best_trial=" << (*rep.trials)["best_trial"] << "\n";
  if (rep.bound_check) {
    for (const Json& c : (*rep.bound_check)["checks"])
      std::cout << "bound-check " << c["name"].get<std::string>() << ": "
                << (c["satisfied"].get<bool>() ? "ok" : "FAILED") << "\n";
    std::cout << "bound-checks "
              << (bounds_ok ? "all satisfied" : "FAILED") << "\n";
  }
  if (!o.report_path.empty())
    std::cout << "report written to " << o.report_path << "\n";
  return bounds_ok ? 0 : 2;
}

// Accepts strings (same grammar as the flags), integers, or {num, den}
// objects for the rational-valued options.
std::string option_text(const Json& options, const char* key,
                        const std::string& fallback) {
  if (!options.contains(key)) return fallback;
  const Json& v = options.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_object()) return rat_to_string(rat_from_json(v));
  throw PreconditionError(std::string("option '") + key +
                          "' must be a string, integer, or {num, den}");
}

}  // namespace

Json run_from_json(const Json& function_json, const Json& constraint_json,
                   const Json& options) {
  if (!options.is_object())
    throw PreconditionError("options must be a JSON object");
  InstanceBundle b = make_bundle(function_from_json(function_json),
                                 matchoid_from_json(constraint_json));
  CliOptions o;
  o.algorithm = option_text(options, "algorithm", o.algorithm);
  o.alpha_text = option_text(options, "alpha", o.alpha_text);
  o.beta_text = option_text(options, "beta", o.beta_text);
  o.epsilon_text = option_text(options, "epsilon", o.epsilon_text);
  o.gamma_text = option_text(options, "gamma", o.gamma_text);
  o.offline_kind = option_text(options, "offline", o.offline_kind);
  o.order_text = option_text(options, "stream_order", o.order_text);
  if (options.contains("stream_script"))
    o.script_ids = options.at("stream_script").get<IdVec>();
  o.seed = options.value("seed", std::uint64_t{0});
  o.trials = options.value("trials", 1);
  if (o.trials < 1) throw PreconditionError("trials must be >= 1");
  o.cardinality = options.value("cardinality", false);
  if (options.contains("capacity")) {
    o.capacity = options.at("capacity").get<std::size_t>();
    o.capacity_set = true;
  }
  o.verify = options.value("verify", false);
  o.timing = options.value("timing", false);
  o.memoize = options.value("memoize", false);
  for (const auto& [key, val] : options.items()) {
    static const std::set<std::string> known = {
        "algorithm", "alpha",       "beta",     "epsilon",      "gamma",
        "offline",   "stream_order", "stream_script", "seed",  "trials",
        "cardinality", "capacity",  "verify",   "timing",       "memoize"};
    if (!known.count(key))
      throw PreconditionError("unknown option '" + key + "'");
  }
  bool bounds_ok = true;
  const RunReport rep = execute(b, o, bounds_ok);
  return report_to_json(rep);
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Single-pass submodular maximization under p-matchoid "
               "constraints"};
  app.name("streamsub");

  CliOptions o;
  bool selftest = false;
  int selftest_instances = 10;
  std::string selftest_dir;

  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  std::string g_kind, g_out;
  int g_n = 8, g_k = 2;
  std::uint64_t g_seed = 0;
  gen->add_option("--kind", g_kind, "Instance family")
      ->required()
      ->check(CLI::IsMember(generator_kinds()));
  gen->add_option("--n", g_n, "Number of elements")->required();
  gen->add_option("--k", g_k, "Constraint size parameter")->required();
  gen->add_option("--seed", g_seed, "Generator seed");
  gen->add_option("--out", g_out, "Output path prefix")->required();

  app.add_option("--function", o.function_path, "Function JSON file");
  app.add_option("--constraint", o.constraint_path, "Constraint JSON file");
  app.add_option("--algorithm", o.algorithm, "Algorithm to run")
      ->check(CLI::IsMember({"greedy", "randomized", "iterated",
                             "offline-greedy", "offline-random-greedy",
                             "exact"}));
  app.add_option("--alpha", o.alpha_text,
                 "Acceptance threshold (rational, or 'auto' for the "
                 "threshold pool)");
  app.add_option("--beta", o.beta_text, "Exchange slack (rational >= 0)");
  app.add_option("--epsilon", o.epsilon_text,
                 "Accuracy parameter in (0,1); drives pool grids and "
                 "default capacities");
  app.add_option("--gamma", o.gamma_text,
                 "Offline solver guarantee in (0,1]; defaults per --offline");
  app.add_option("--offline", o.offline_kind,
                 "Offline black box for buffered/iterated finishes")
      ->check(CLI::IsMember({"greedy", "random-greedy", "exact"}));
  app.add_option("--seed", o.seed, "Master seed");
  app.add_option("--trials", o.trials, "Independent repetitions")
      ->check(CLI::PositiveNumber);
  app.add_option("--stream-order", o.order_text, "Delivery order")
      ->check(CLI::IsMember({"given", "reversed", "shuffled", "script",
                             "adversarial-script"}));
  app.add_option("--stream-script", o.script_path,
                 "JSON id array replayed as the stream");
  app.add_flag("--cardinality", o.cardinality,
               "Use the buffered cardinality specialization");
  auto* cap = app.add_option("--capacity", o.capacity,
                             "Buffer capacity override (randomized only)");
  app.add_flag("--verify", o.verify,
               "Exhaustively certify the run against the exact optimum");
  app.add_option("--report", o.report_path, "Write the JSON run report here");
  app.add_flag("--timing", o.timing, "Attach wall time to the report");
  app.add_flag("--memoize", o.memoize, "Cache oracle evaluations");
  app.add_flag("--selftest", selftest, "Run the property suite and exit");
  app.add_option("--selftest-instances", selftest_instances,
                 "Instances per generator class for --selftest")
      ->check(CLI::PositiveNumber);
  app.add_option("--selftest-dir", selftest_dir,
                 "Where --selftest writes shrunken reproducers");

  std::vector<const char*> argv;
  argv.push_back("streamsub");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  o.capacity_set = cap->count() > 0;

  try {
    if (gen->parsed()) return run_generate(g_kind, g_n, g_k, g_seed, g_out);
    if (selftest) return run_selftest(selftest_instances, o.seed, selftest_dir);
    if (o.function_path.empty() || o.constraint_path.empty())
      throw PreconditionError("--function and --constraint are required");
    return run_main(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace streamsub
