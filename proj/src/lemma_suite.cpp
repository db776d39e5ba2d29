#include "streamsub/lemma_suite.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <unordered_set>

#include "streamsub/errors.hpp"
#include "streamsub/generator.hpp"
#include "streamsub/iterated.hpp"
#include "streamsub/randomized.hpp"
#include "streamsub/rng.hpp"
#include "streamsub/streaming_greedy.hpp"

namespace streamsub {

namespace {

struct Checker {
  LemmaLedger& ledger;
  std::vector<Violation>* viol;
  const std::string& klass;
  const RunDesc& run;

  template <typename Details>
  void check(const char* lemma, bool ok, Details&& details) {
    LemmaCounts& c = ledger[lemma];
    ++c.checked;
    if (!ok) {
      ++c.violations;
      if (viol) viol->push_back({lemma, klass, run, details()});
    }
  }
};

std::string ids_str(const IdVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Which lemmas apply to a given solution log.
struct BatteryScope {
  bool full_stream = false;   // a deterministic greedy that saw every element
  bool has_beta = true;       // finite beta (exchange mode)
  bool strict_alpha = false;  // cardinality admissions are strictly above alpha
};

// Re-derives every inequality the exchange accounting promises from the
// taken/exit logs, against an independent oracle wrapper.
void check_state_battery(Checker& ck, const InstanceBundle& b,
                         const InstrumentedOracle& verify,
                         const SolutionState& st, const Rat& alpha,
                         const Rat& beta, const OfflineResult& opt,
                         const BatteryScope& sc) {
  const IdVec& mem = st.members();
  const Val f_empty = verify.eval({});
  const Val f_final = verify.eval(mem);

  // Cached value and incremental values vs. honest recomputation.
  bool nu_match = (st.value() == f_final);
  bool nu_nonneg = true;
  IdVec prefix;
  Val before = f_empty;
  for (ElemId e : mem) {
    prefix.push_back(e);
    Val after = verify.eval(prefix);
    if (st.nu(e) != after - before) nu_match = false;
    if (after - before < 0) nu_nonneg = false;
    before = after;
  }
  ck.check("value-consistency", nu_match, [&] {
    return "cached value/incrementals disagree with recomputation on " +
           ids_str(mem);
  });
  ck.check("nu-nonnegative", nu_nonneg,
           [&] { return "negative incremental value in " + ids_str(mem); });

  // Exit values grouped by the element that displaced them.
  std::map<ElemId, Val> chi_by;
  Val chi_total = 0;
  for (const ExitEntry& x : st.exit_log()) {
    chi_by[x.replaced_by] += x.chi;
    chi_total += x.chi;
  }

  const auto& taken = st.taken_log();
  bool floor_ok = true, gain_ok = true;
  for (const TakenEntry& t : taken) {
    const Rat d(t.delta);
    if (sc.strict_alpha ? !(d > alpha) : !(d >= alpha)) floor_ok = false;
    if (sc.has_beta) {
      auto it = chi_by.find(t.id);
      const Rat chi(it == chi_by.end() ? 0 : it->second);
      if (!(d >= alpha + beta * chi)) gain_ok = false;
    }
  }
  ck.check("per-accept-floor", floor_ok,
           [&] { return "an accepted gain fell below alpha=" +
                        rat_to_string(alpha); });
  if (sc.has_beta)
    ck.check("per-accept-gain", gain_ok, [&] {
      return "an accepted gain fell below alpha + beta * displaced value";
    });

  const Rat n_taken(static_cast<long long>(taken.size()));
  ck.check("value-floor",
           Rat(st.value()) >= Rat(f_empty) + alpha * n_taken,
           [&] {
             return "f(S)=" + std::to_string(st.value()) + " < f(empty) + " +
                    std::to_string(taken.size()) + " * " + rat_to_string(alpha);
           });
  if (alpha > 0)
    ck.check("taken-budget", alpha * n_taken <= Rat(opt.value), [&] {
      return std::to_string(taken.size()) + " * " + rat_to_string(alpha) +
             " > OPT=" + std::to_string(opt.value);
    });

  if (sc.has_beta && beta > 0) {
    ck.check("exit-value-cap",
             beta * Rat(chi_total) + alpha * n_taken + Rat(f_empty) <=
                 Rat(f_final),
             [&] {
               return "displaced value total " + std::to_string(chi_total) +
                      " too large for f(S)=" + std::to_string(f_final);
             });
    const Val f_taken = verify.eval(sorted_copy(st.taken_ids()));
    ck.check("taken-value-cap",
             beta * Rat(f_taken) <=
                 (Rat(1) + beta) * Rat(f_final) - Rat(f_empty) -
                     alpha * n_taken,
             [&] {
               return "f(U)=" + std::to_string(f_taken) +
                      " too large for f(S)=" + std::to_string(f_final);
             });
  }

  // The displaced elements partition the taken set minus the survivors.
  {
    std::set<ElemId> cand_union, exit_ids, taken_minus_mem;
    bool disjoint = true;
    for (const TakenEntry& t : taken)
      for (ElemId c : t.cands)
        if (!cand_union.insert(c).second) disjoint = false;
    bool exits_unique = true;
    for (const ExitEntry& x : st.exit_log())
      if (!exit_ids.insert(x.id).second) exits_unique = false;
    for (const TakenEntry& t : taken)
      if (!contains(mem, t.id)) taken_minus_mem.insert(t.id);
    ck.check("candidate-partition",
             disjoint && exits_unique && cand_union == exit_ids &&
                 cand_union == taken_minus_mem,
             [&] { return "exchange candidates do not partition U minus S"; });
  }

  // Structural replay of the whole exchange history.
  {
    IdVec cur;
    bool ok = true;
    for (const TakenEntry& t : taken) {
      for (ElemId c : t.cands) {
        auto it = std::find(cur.begin(), cur.end(), c);
        if (it == cur.end()) {
          ok = false;
          break;
        }
        cur.erase(it);
      }
      if (!ok) break;
      if (contains(cur, t.id)) {
        ok = false;
        break;
      }
      cur.push_back(t.id);
      if (!b.matchoid.independent(cur) ||
          cur.size() > static_cast<std::size_t>(b.matchoid.k())) {
        ok = false;
        break;
      }
    }
    ck.check("exchange-replay", ok && cur == mem,
             [&] { return "taken/exit logs do not replay to the solution"; });
  }

  if (sc.full_stream && sc.has_beta && beta > 0) {
    IdVec un = sorted_copy(st.taken_ids());
    for (ElemId t : opt.ids)
      if (!contains(un, t)) un.push_back(t);
    const Val f_union = verify.eval(un);
    const Rat cap = beta * Rat(b.matchoid.k()) * alpha +
                    (Rat(1) + beta) * (Rat(1) + beta) *
                        Rat(b.matchoid.p()) * Rat(f_final);
    ck.check("union-cap", beta * Rat(f_union) <= cap, [&] {
      return "f(OPT-set union U)=" + std::to_string(f_union) +
             " exceeds the exchange cap";
    });
    if (b.fn->is_monotone())
      ck.check("monotone-ratio", beta * Rat(opt.value) <= cap, [&] {
        return "OPT=" + std::to_string(opt.value) + " exceeds the exchange cap";
      });
  }
}

void check_final(Checker& ck, const InstanceBundle& b,
                 const InstrumentedOracle& verify, const Outcome& out) {
  ck.check("final-independence",
           b.matchoid.independent(out.ids) &&
               out.ids.size() <= static_cast<std::size_t>(b.matchoid.k()),
           [&] { return "reported solution " + ids_str(out.ids) +
                        " violates the constraint"; });
  ck.check("reported-value", verify.eval(out.ids) == out.value, [&] {
    return "reported value " + std::to_string(out.value) +
           " is not f of the reported set";
  });
}

// Sampled consequences of submodularity alone: incremental values only grow
// when the surrounding set shrinks, and contraction never beats the union.
void check_oracle_samples(Checker& ck, const InstanceBundle& b,
                          const InstrumentedOracle& verify,
                          std::uint64_t seed) {
  const IdVec& u = b.universe;
  const std::size_t n = u.size();
  if (n < 2) return;
  Rng rng(derive_seed(seed, 40400));

  for (int it = 0; it < 20; ++it) {
    IdVec pi = u;
    for (std::size_t j = 0; j + 1 < n; ++j)
      std::swap(pi[j], pi[j + rng.index(n - j)]);
    const std::size_t t = 1 + rng.index(n);
    IdVec big(pi.begin(), pi.begin() + static_cast<std::ptrdiff_t>(t));
    const ElemId e = big[rng.index(t)];
    IdVec small;
    for (ElemId x : big)
      if (x == e || rng.index(2) == 0) small.push_back(x);
    ck.check("nested-monotonicity",
             incremental_value(verify, big, e) <=
                 incremental_value(verify, small, e),
             [&] {
               return "nu grew from " + ids_str(small) + " to " + ids_str(big) +
                      " at element " + std::to_string(e);
             });
  }

  if (n < 3) return;
  for (int it = 0; it < 20; ++it) {
    IdVec pi = u;
    for (std::size_t j = 0; j + 1 < n; ++j)
      std::swap(pi[j], pi[j + rng.index(n - j)]);
    IdVec z, s, merged;
    for (ElemId x : pi) {
      switch (rng.index(3)) {
        case 0:
          z.push_back(x);
          merged.push_back(x);
          break;
        case 1:
          s.push_back(x);
          merged.push_back(x);
          break;
        default:
          break;
      }
    }
    if (s.empty() || z.empty()) continue;
    const ElemId e = s[rng.index(s.size())];
    ContractedFunction fz(*b.fn, sorted_copy(z));
    InstrumentedOracle zoracle(fz);
    ck.check("contraction-consistency",
             incremental_value(zoracle, s, e) <=
                 incremental_value(verify, merged, e),
             [&] {
               return "contracting " + ids_str(z) + " raised nu of " +
                      std::to_string(e) + " within " + ids_str(s);
             });
  }
}

const UniformMatroid* single_uniform(const Matchoid& m) {
  if (m.num_matroids() != 1) return nullptr;
  return dynamic_cast<const UniformMatroid*>(&m.matroid(0));
}

IdVec universe_of(const Json& fn_json) {
  IdVec u;
  const std::string type = fn_json.at("type").get<std::string>();
  if (type == "coverage")
    for (const auto& [key, val] : fn_json.at("sets").items())
      u.push_back(std::stoi(key));
  else if (type == "modular")
    for (const auto& [key, val] : fn_json.at("weights").items())
      u.push_back(std::stoi(key));
  else if (type == "cut")
    u = fn_json.at("vertices").get<IdVec>();
  else
    throw PreconditionError("unknown function type '" + type + "'");
  std::sort(u.begin(), u.end());
  return u;
}

}  // namespace

Json run_desc_to_json(const RunDesc& d) {
  return Json{{"algorithm", d.algorithm},
              {"alpha", rat_to_json(d.alpha)},
              {"beta", rat_to_json(d.beta)},
              {"capacity", d.capacity},
              {"algo_seed", d.algo_seed},
              {"order", stream_order_to_string(d.order)},
              {"order_seed", d.order_seed},
              {"tie", d.tie == TieBreak::prefer_earliest ? "earliest"
                                                         : "latest"}};
}

std::uint64_t SuiteResult::total_checked() const {
  std::uint64_t t = 0;
  for (const auto& [name, c] : ledger) t += c.checked;
  return t;
}

std::uint64_t SuiteResult::total_violations() const {
  std::uint64_t t = 0;
  for (const auto& [name, c] : ledger) t += c.violations;
  return t;
}

const std::vector<std::string>& suite_classes() {
  static const std::vector<std::string> classes = [] {
    std::vector<std::string> c = generator_kinds();
    c.push_back("cut-2matroid");
    return c;
  }();
  return classes;
}

void run_and_check(const InstanceBundle& b, const InstrumentedOracle& verify,
                   const OfflineResult& opt, const RunDesc& d,
                   const std::string& klass, LemmaLedger& ledger,
                   std::vector<Violation>* viol) {
  Checker ck{ledger, viol, klass, d};
  const Matchoid& m = b.matchoid;

  if (d.algorithm == "oracle") {
    check_oracle_samples(ck, b, verify, d.order_seed);
    return;
  }

  const IdVec stream = make_stream(b.universe, d.order, d.order_seed);
  InstrumentedOracle algo_oracle(*b.fn);
  OfflineFn exact_off = [&](const IdVec& g) {
    return exact_bruteforce(algo_oracle, m, g);
  };

  if (d.algorithm == "greedy") {
    StreamingGreedy g(m, algo_oracle, GreedyParams{d.alpha, d.beta}, d.tie);
    for (ElemId e : stream) g.process(e);
    const Outcome out = g.finish();
    check_state_battery(ck, b, verify, g.state(), d.alpha, d.beta, opt,
                        {.full_stream = true});
    check_final(ck, b, verify, out);
  } else if (d.algorithm == "iterated") {
    IteratedGreedy it(m, algo_oracle, GreedyParams{d.alpha, d.beta}, exact_off,
                      d.tie);
    for (ElemId e : stream) it.process(e);
    const IdVec taken_first = it.first().state().taken_ids();
    const Outcome out = it.finish();
    check_state_battery(ck, b, verify, it.first().state(), d.alpha, d.beta,
                        opt, {});
    check_state_battery(ck, b, verify, it.second().state(), Rat(0), d.beta,
                        opt, {});
    {
      // Every delivered element goes to exactly one phase: accepted by the
      // first, or streamed on to the second.
      std::set<ElemId> first_seen, second_seen;
      for (const TraceEvent& ev : it.first().trace()) first_seen.insert(ev.id);
      for (const TraceEvent& ev : it.second().trace())
        second_seen.insert(ev.id);
      bool ok = first_seen.size() == stream.size() &&
                second_seen.size() + taken_first.size() == stream.size();
      for (ElemId e : taken_first)
        if (second_seen.count(e)) ok = false;
      ck.check("iterated-partition", ok, [&] {
        return "second phase saw a first-phase acceptance (or missed a "
               "reject)";
      });
    }
    const OfflineResult third = exact_bruteforce(verify, m, taken_first);
    const Val v1 = it.first().state().value();
    const Val v2 = it.second().state().value();
    ck.check("outcome-max",
             out.value == std::max(v1, std::max(v2, third.value)),
             [&] { return "final answer is not the best of the three"; });
    if (b.fn->is_monotone() && d.beta > 0) {
      const Rat coef = Rat(2) * (Rat(1) + d.beta) * (Rat(1) + d.beta) /
                           d.beta * Rat(m.p()) +
                       Rat(1);
      ck.check("iterated-floor",
               coef * Rat(out.value) >=
                   Rat(opt.value) - Rat(m.k()) * d.alpha,
               [&] {
                 return "f=" + std::to_string(out.value) + " below (OPT - k "
                        "alpha) / (2 (1+beta)^2 p / beta + 1)";
               });
    }
    check_final(ck, b, verify, out);
  } else if (d.algorithm == "randomized") {
    RandomizedGreedy r(m, algo_oracle, GreedyParams{d.alpha, d.beta},
                       d.capacity, d.algo_seed, exact_off, d.tie);
    for (ElemId e : stream) r.process(e);
    const Val streamed = r.inner().state().value();
    const IdVec buffer = r.buffer();
    const Outcome out = r.finish();
    check_state_battery(ck, b, verify, r.inner().state(), d.alpha, d.beta,
                        opt, {});
    const OfflineResult off = exact_bruteforce(verify, m, buffer);
    ck.check("outcome-max", out.value == std::max(streamed, off.value),
             [&] { return "final answer is not max(streamed, offline)"; });
    check_final(ck, b, verify, out);
  } else if (d.algorithm == "cardinality") {
    const UniformMatroid* um = single_uniform(m);
    if (um == nullptr)
      throw PreconditionError(
          "cardinality runs need a single uniform matroid");
    CardinalityRandomized c(m, algo_oracle, d.alpha, d.capacity, d.algo_seed,
                            exact_off);
    for (ElemId e : stream) c.process(e);
    const Val streamed = c.state().value();
    const IdVec buffer = c.buffer();
    const IdVec mem = c.state().members();
    const Outcome out = c.finish();
    check_state_battery(ck, b, verify, c.state(), d.alpha, Rat(0), opt,
                        {.has_beta = false, .strict_alpha = true});
    const std::size_t rank = static_cast<std::size_t>(um->rank());
    if (mem.size() == rank) {
      ck.check("cardinality-full-floor",
               Rat(streamed) >= Rat(um->rank()) * d.alpha, [&] {
                 return "full solution value " + std::to_string(streamed) +
                        " below k * alpha";
               });
    } else {
      // The solution never filled up, so every element outside it and the
      // buffer was turned away on marginal alone; submodularity pins all of
      // them at or below alpha against the final solution, and refiltering
      // keeps the whole buffer strictly above.
      bool reject_ok = true, buffer_ok = true;
      for (ElemId e : b.universe) {
        if (contains(mem, e) || contains(buffer, e)) continue;
        if (!(Rat(marginal(verify, mem, e)) <= d.alpha)) reject_ok = false;
      }
      for (ElemId e : buffer)
        if (!(Rat(marginal(verify, mem, e)) > d.alpha)) buffer_ok = false;
      ck.check("cardinality-reject-cap", reject_ok, [&] {
        return "a rejected element still clears alpha against the final "
               "solution";
      });
      ck.check("cardinality-buffer-floor", buffer_ok, [&] {
        return "a buffered element fell to alpha or below";
      });
    }
    const OfflineResult off = exact_bruteforce(verify, m, buffer);
    ck.check("outcome-max", out.value == std::max(streamed, off.value),
             [&] { return "final answer is not max(streamed, offline)"; });
    check_final(ck, b, verify, out);
  } else {
    throw PreconditionError("unknown run algorithm '" + d.algorithm + "'");
  }
}

std::pair<Json, Json> filter_instance_json(const Json& fn_json,
                                           const Json& cons_json,
                                           const IdVec& keep) {
  std::unordered_set<ElemId> ks(keep.begin(), keep.end());
  auto kept = [&](ElemId e) { return ks.count(e) != 0; };

  Json fn = fn_json;
  const std::string type = fn.at("type").get<std::string>();
  if (type == "coverage" || type == "modular") {
    const char* field = type == "coverage" ? "sets" : "weights";
    Json filtered = Json::object();
    for (const auto& [key, val] : fn.at(field).items())
      if (kept(std::stoi(key))) filtered[key] = val;
    fn[field] = filtered;
  } else if (type == "cut") {
    IdVec vs;
    for (ElemId v : fn.at("vertices").get<IdVec>())
      if (kept(v)) vs.push_back(v);
    Json arcs = Json::array();
    for (const auto& arc : fn.at("arcs"))
      if (kept(arc.at(0).get<ElemId>()) && kept(arc.at(1).get<ElemId>()))
        arcs.push_back(arc);
    fn["vertices"] = vs;
    fn["arcs"] = arcs;
  }

  Json cons = cons_json;
  for (Json& mj : cons.at("matroids")) {
    const std::string mtype = mj.at("type").get<std::string>();
    if (mtype == "uniform") {
      IdVec g;
      for (ElemId e : mj.at("ground").get<IdVec>())
        if (kept(e)) g.push_back(e);
      mj["ground"] = g;
    } else if (mtype == "partition") {
      Json blocks = Json::array();
      for (const auto& blk : mj.at("blocks")) {
        IdVec g;
        for (ElemId e : blk.at("ground").get<IdVec>())
          if (kept(e)) g.push_back(e);
        if (g.empty()) continue;
        Json nb = blk;
        nb["ground"] = g;
        blocks.push_back(nb);
      }
      mj["blocks"] = blocks;
    } else if (mtype == "graphic") {
      Json edges = Json::object();
      for (const auto& [key, val] : mj.at("edges").items())
        if (kept(std::stoi(key))) edges[key] = val;
      mj["edges"] = edges;
    }
  }
  return {fn, cons};
}

std::pair<Json, Json> shrink_instance(Json fn_json, Json cons_json,
                                      const FailurePredicate& still_fails) {
  IdVec universe = universe_of(fn_json);
  bool improved = true;
  while (improved && universe.size() > 1) {
    improved = false;
    for (ElemId drop : universe) {
      IdVec keep;
      for (ElemId e : universe)
        if (e != drop) keep.push_back(e);
      auto [cf, cc] = filter_instance_json(fn_json, cons_json, keep);
      bool fails = false;
      try {
        fails = still_fails(cf, cc);
      } catch (const std::exception&) {
        fails = false;
      }
      if (fails) {
        fn_json = std::move(cf);
        cons_json = std::move(cc);
        universe = std::move(keep);
        improved = true;
        break;
      }
    }
  }
  return {fn_json, cons_json};
}

bool lemma_violated_on(const Json& fn_json, const Json& cons_json,
                       const RunDesc& d, const std::string& lemma) {
  try {
    InstanceBundle b =
        make_bundle(function_from_json(fn_json), matchoid_from_json(cons_json));
    InstrumentedOracle verify(*b.fn, true);
    const OfflineResult opt = exact_bruteforce(verify, b.matchoid, b.universe);
    LemmaLedger ledger;
    std::vector<Violation> viols;
    run_and_check(b, verify, opt, d, "shrink", ledger, &viols);
    for (const Violation& v : viols)
      if (v.lemma == lemma) return true;
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

SuiteResult check_lemma_suite(const SuiteConfig& cfg) {
  const std::vector<std::string>& all = suite_classes();
  std::vector<std::string> classes = cfg.classes.empty() ? all : cfg.classes;
  for (const std::string& c : classes)
    if (std::find(all.begin(), all.end(), c) == all.end())
      throw PreconditionError("unknown suite class '" + c + "'");

  SuiteResult result;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const std::string& klass = classes[ci];
    for (int i = 0; i < cfg.instances_per_class; ++i) {
      const int n = 6 + (i % 5);
      const int k = 1 + (i % 3);
      const std::uint64_t iseed =
          derive_seed(cfg.seed, ci * 1000 + static_cast<std::uint64_t>(i));
      const GeneratedInstance gen =
          klass == "cut-2matroid" ? generate_cut_2matroid(n, k, iseed)
                                  : generate_instance(klass, n, k, iseed);
      InstanceBundle b = make_bundle(function_from_json(gen.function),
                                     matchoid_from_json(gen.constraint));
      InstrumentedOracle verify(*b.fn, true);
      const OfflineResult opt =
          exact_bruteforce(verify, b.matchoid, b.universe);

      std::vector<RunDesc> descs;
      descs.push_back(
          {.algorithm = "oracle", .order_seed = derive_seed(iseed, 1)});
      const Rat aq = opt.value > 0
                         ? Rat(opt.value) / (Rat(4) * Rat(b.matchoid.k()))
                         : Rat(0);
      const bool card_ok = single_uniform(b.matchoid) != nullptr;
      const StreamOrder orders[2] = {StreamOrder::given, StreamOrder::shuffled};
      for (int oi = 0; oi < 2; ++oi) {
        const StreamOrder ord = orders[oi];
        const std::uint64_t oseed =
            derive_seed(iseed, 2 + static_cast<std::uint64_t>(oi));
        descs.push_back({.algorithm = "greedy", .alpha = Rat(0), .beta = Rat(1),
                         .order = ord, .order_seed = oseed});
        descs.push_back({.algorithm = "greedy", .alpha = aq, .beta = Rat(1),
                         .order = ord, .order_seed = oseed});
        descs.push_back({.algorithm = "greedy", .alpha = aq / 2,
                         .beta = Rat(1) / 2, .order = ord,
                         .order_seed = oseed});
        descs.push_back({.algorithm = "iterated", .alpha = aq, .beta = Rat(1),
                         .order = ord, .order_seed = oseed});
        descs.push_back({.algorithm = "randomized", .alpha = aq / 2,
                         .beta = Rat(1), .capacity = 2,
                         .algo_seed = derive_seed(iseed, 10), .order = ord,
                         .order_seed = oseed});
        descs.push_back({.algorithm = "randomized", .alpha = aq / 2,
                         .beta = Rat(1), .capacity = 3,
                         .algo_seed = derive_seed(iseed, 11), .order = ord,
                         .order_seed = oseed});
        if (card_ok) {
          const Rat ac = Rat(21) * Rat(opt.value) /
                         (Rat(100) * Rat(b.matchoid.k()));
          descs.push_back({.algorithm = "cardinality", .alpha = ac,
                           .capacity = 3, .algo_seed = derive_seed(iseed, 12),
                           .order = ord, .order_seed = oseed});
        }
      }

      for (const RunDesc& d : descs) {
        std::vector<Violation> fresh;
        run_and_check(b, verify, opt, d, klass, result.ledger, &fresh);
        for (Violation& v : fresh) {
          if (result.violations.size() >= cfg.max_reproducers) break;
          if (!cfg.reproducer_dir.empty()) {
            Json rf = gen.function, rc = gen.constraint;
            if (cfg.shrink) {
              const std::string lemma = v.lemma;
              auto pred = [&](const Json& f, const Json& c) {
                return lemma_violated_on(f, c, d, lemma);
              };
              std::tie(rf, rc) = shrink_instance(rf, rc, pred);
            }
            std::filesystem::create_directories(cfg.reproducer_dir);
            const std::string path =
                cfg.reproducer_dir + "/repro-" + klass + "-" + v.lemma + "-" +
                std::to_string(result.reproducer_paths.size()) + ".json";
            write_json_file(path, Json{{"lemma", v.lemma},
                                       {"class", klass},
                                       {"details", v.details},
                                       {"run", run_desc_to_json(d)},
                                       {"function", rf},
                                       {"constraint", rc}});
            result.reproducer_paths.push_back(path);
          }
          result.violations.push_back(std::move(v));
        }
      }
    }
  }
  return result;
}

}  // namespace streamsub
