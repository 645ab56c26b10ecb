// Copyright 2026 The ramify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "job.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include "ramify/checks.hpp"
#include "ramify/errors.hpp"
#include "ramify/genlab.hpp"
#include "report.hpp"

namespace ramify::cli {

using nlohmann::json;

int default_precision() {
  if (const char* env = std::getenv("RAMIFY_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 1 << 20) return static_cast<int>(v);
  }
  return 2;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::Classify:
      return "classify";
    case Command::Reduce:
      return "reduce";
    case Command::Decompose:
      return "decompose";
    case Command::Sweep:
      return "sweep";
    case Command::Selftest:
      return "selftest";
  }
  return "?";
}

json field_json(const Field& F) {
  return {{"p", F.p()}, {"f", F.degree()}, {"q", F.order()}, {"modulus", F.modulus()}};
}

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json opt(const std::optional<long long>& v) { return v ? json(*v) : json(nullptr); }
json rat(const Rational& r) { return to_string(r); }
std::string series(const LaurentSeries& a) { return to_string(a, false); }

json ext_defect(const ExtDefect& d) { return d.finite ? json(d.value) : json("infinite"); }

json wp_defect(const WpDefect& d) {
  switch (d.kind()) {
    case WpDefect::Kind::Finite:
      return d.value();
    case WpDefect::Kind::Zero:
      return "zero";
    case WpDefect::Kind::Infinite:
      return "infinite";
  }
  return nullptr;
}

struct PrecisionUsed {
  int precision = 0;
  int retries = 0;
};

int next_precision(int prec) { return prec <= 0 ? 1 : 2 * prec; }

template <class Fn>
auto with_retries(int start, int max_retries, PrecisionUsed& used, Fn&& fn) {
  int prec = start;
  for (int k = 0;; ++k) {
    used = {prec, k};
    try {
      return fn(prec);
    } catch (const InsufficientPrecision&) {
      if (k >= max_retries) throw;
      prec = next_precision(prec);
    }
  }
}

template <class Fn>
void parallel_for(int n, int threads, Fn&& fn) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, std::max(n, 1));
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (int i; (i = next.fetch_add(1)) < n;) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

json params_json(const DecompData& d) {
  const Field& F = d.beta1.field();
  json j{{"u1", d.u1}, {"u2", d.u2}, {"r", opt(d.r)}, {"s", opt(d.s)}, {"t", opt(d.t)}, {"e", opt(d.e)},
         {"mu_last_is_minus_one", d.mu_last_is_minus_one}};
  j["mu"] = json::array();
  for (const auto& m : d.mu) j["mu"].push_back(series(m));
  if (d.p == 2) {
    j["m"] = d.m;
    j["omega"] = d.m == 0 ? json(F.to_string(d.omega)) : json(nullptr);
    j["epsilon_truncated"] = d.epsilon_truncated;
  }
  if (d.mu_last_is_minus_one || d.p == 2) j["epsilon"] = series(d.epsilon);
  return j;
}

json ladder_json(const Ladder& L) {
  json j{{"l2", L.l2}, {"lbar3", L.lbar3}, {"ubar3", rat(L.ubar3)}, {"branch", L.branch},
         {"source", L.source == LadderSource::Oracle ? "oracle" : "closed-form"}, {"certificates", L.certificates}};
  const std::optional<long long>* ts[] = {&L.t0, &L.t1, &L.t2, &L.t3, &L.t4};
  const std::optional<long long>* ss[] = {&L.s0, &L.s1, &L.s2, &L.s3, &L.s4};
  for (int k = 0; k < 5; ++k) {
    j["t" + std::to_string(k)] = opt(*ts[k]);
    j["s" + std::to_string(k)] = opt(*ss[k]);
  }
  return j;
}

json q8_json(const Q8Prep& q) {
  return {{"omega_cubed_is_one", q.omega_cubed_is_one}, {"v_s1", opt(q.v_s1)}, {"v_s2", q.v_s2},
          {"s1", to_string(q.s1)}};
}

LaurentSeries parse_input(const FieldPtr& F, const std::string& text, int prec, const char* name) {
  try {
    return parse_series(F, text, prec);
  } catch (const ParseError& e) {
    throw ParseError(std::string(name) + ": " + e.what());
  }
}

std::vector<GroupKind> sweep_groups(const JobSpec& spec, int p) {
  if (spec.groups.empty()) return instances::groups_for(p);
  std::vector<GroupKind> gs;
  for (const auto& name : spec.groups) {
    const GroupKind g = parse_group(name);
    check_group(g, p);
    if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
  }
  return gs;
}

// ---------------------------------------------------------------- commands

json run_reduce(const JobSpec& spec, const FieldPtr& F) {
  if (spec.kappa.empty()) throw UsageError("reduce needs --kappa");
  PrecisionUsed used;
  const auto [input, g] = with_retries(spec.precision, spec.max_precision_retries, used, [&](int prec) {
    LaurentSeries k = parse_input(F, spec.kappa, prec, "kappa");
    return std::pair{k, reduce_K(k)};
  });
  const BreakInfo b = break_of(g.value);
  json doc{{"command", "reduce"},
           {"field", field_json(*F)},
           {"input", to_string(input)},
           {"reduced", series(g.value)},
           {"df", wp_defect(g.df)},
           {"break", b.kind == BreakInfo::Kind::Ramified ? json(b.b) : json(nullptr)},
           {"break_kind", b.kind == BreakInfo::Kind::Ramified
                              ? "ramified"
                              : (b.kind == BreakInfo::Kind::Unramified ? "unramified" : "trivial")},
           {"precision", used.precision},
           {"precision_retries", used.retries}};
  return doc;
}

json run_decompose(const JobSpec& spec, const FieldPtr& F) {
  if (spec.beta1.empty() || spec.beta2.empty()) throw UsageError("decompose needs --beta1 and --beta2");
  PrecisionUsed used;
  OracleOptions opts;
  opts.window = spec.window;
  return with_retries(spec.precision, spec.max_precision_retries, used, [&](int prec) {
    const LaurentSeries b1 = parse_input(F, spec.beta1, prec, "beta1");
    const LaurentSeries b2 = parse_input(F, spec.beta2, prec, "beta2");
    const IndependentPair pair = ordered_pair(b1, b2);
    instances::PairInstance inst;
    inst.beta1 = pair.beta1;
    inst.beta2 = pair.beta2;
    const checks::InstanceReport rep = checks::check_instance(inst, false, opts);
    const DecompData& d = rep.decomp;
    json doc{{"command", "decompose"},
             {"field", field_json(*F)},
             {"beta1", series(d.beta1)},
             {"beta2", series(d.beta2)},
             {"swapped", pair.swapped},
             {"renormalized", pair.renormalized},
             {"parameters", params_json(d)},
             {"invariant_violations", rep.invariant_violations},
             {"notes", d.notes},
             {"precision", used.precision},
             {"precision_retries", used.retries}};
    for (const auto* c : {&rep.beta2_y1, &rep.dm_term}) {
      doc[c == &rep.beta2_y1 ? "df_beta2_y1" : "df_dm_term"] = {{"closed_form", ext_defect(c->closed)},
                                                              {"oracle", ext_defect(c->oracle)},
                                                              {"certificate", c->certificate},
                                                              {"agree", c->agree}};
    }
    return doc;
  });
}

json classification_json(const ClassificationResult& r) {
  const BreakSequence& s = r.sequence;
  json doc{{"group", to_string(r.group)},
           {"choice", to_string(r.choice)},
           {"beta1", series(r.beta1)},
           {"beta2", series(r.beta2)},
           {"kappa3", series(r.kappa3)},
           {"b3", opt(r.b3)},
           {"B_G", rat(r.B_G)},
           {"ubar3", rat(r.ubar3)},
           {"u", {rat(s.u1), rat(s.u2), rat(s.u3)}},
           {"l", {s.l1, s.l2, s.l3}},
           {"hasse_arf_integral", r.hasse_arf_integral},
           {"exceeds_bound", r.u3 > r.B_G},
           {"bound_branch", r.bound_branch},
           {"parameters", params_json(r.decomp)},
           {"ladder", ladder_json(r.ladder)},
           {"q8", r.q8 ? q8_json(*r.q8) : json(nullptr)},
           {"trace", r.trace}};
  return doc;
}

json run_classify(const JobSpec& spec, const FieldPtr& F) {
  if (spec.group.empty()) throw UsageError("classify needs --group");
  if (spec.beta1.empty() || spec.beta2.empty()) throw UsageError("classify needs --beta1 and --beta2");
  const GroupKind g = parse_group(spec.group);
  const SubgroupChoice choice = parse_choice(spec.choice);
  const LadderSource src = spec.closed_form_ladder ? LadderSource::ClosedForm : LadderSource::Oracle;
  PrecisionUsed used;
  return with_retries(spec.precision, spec.max_precision_retries, used, [&](int prec) {
    const LaurentSeries k1 = parse_input(F, spec.beta1, prec, "beta1");
    const LaurentSeries k2 = parse_input(F, spec.beta2, prec, "beta2");
    const LaurentSeries k3 = parse_input(F, spec.kappa3, prec, "kappa3");
    const ClassificationResult r = classify(g, k1, k2, k3, choice, src);
    json doc = classification_json(r);
    doc["command"] = "classify";
    doc["field"] = field_json(*F);
    const GeneratorData gd = build_generators(g, k1, k2, k3);
    const GaloisCheck gc = verify_galois(gd);
    doc["generators"] = to_json(gd);
    doc["generators"]["galois_verified"] = gc.ok;
    doc["precision"] = used.precision;
    doc["precision_retries"] = used.retries;
    return doc;
  });
}

struct Cell {
  GroupKind group;
  SubgroupChoice choice;
  int u1, u2;
};

struct GroupTally {
  int cells = 0, classified = 0, nonintegral = 0, exceeds = 0, violations = 0, errors = 0;
};

json run_sweep(const JobSpec& spec, const FieldPtr& F) {
  const int p = F->p();
  if (spec.umin < 1 || spec.umax < spec.umin) throw UsageError("sweep needs 1 <= umin <= umax");
  if (spec.per_cell < 1) throw UsageError("sweep needs --per-cell >= 1");
  const auto groups = sweep_groups(spec, p);
  std::vector<Cell> cells;
  for (GroupKind g : groups)
    for (int u1 = spec.umin; u1 <= spec.umax; ++u1) {
      if (u1 % p == 0) continue;
      for (int u2 = u1; u2 <= spec.umax; ++u2) {
        if (u2 % p == 0) continue;
        cells.push_back({g, SubgroupChoice::Sigma1pSigma2, u1, u2});
        if (u1 != u2) cells.push_back({g, SubgroupChoice::Sigma1Full, u1, u2});
      }
    }

  std::vector<json> records(cells.size());
  parallel_for(static_cast<int>(cells.size()), spec.threads, [&](int idx) {
    const Cell& c = cells[idx];
    instances::Rng rng = instances::make_rng(spec.seed, static_cast<std::uint64_t>(idx));
    json rec{{"group", to_string(c.group)}, {"choice", to_string(c.choice)}, {"u1", c.u1}, {"u2", c.u2}};
    int classified = 0, nonintegral = 0, exceeds = 0, violations = 0, degenerate = 0, retries = 0;
    std::set<Rational> bounds, u3s;
    json errors = json::array();
    std::string skipped;
    for (int k = 0; k < spec.per_cell; ++k) {
      const auto inst = instances::random_pair(F, c.u1, c.u2, rng);
      if (!inst) {
        skipped = "equal breaks need q > p";
        break;
      }
      LaurentSeries k3 = spec.random_kappa3 ? instances::random_kappa3(F, 2 * p * c.u2, rng) : LaurentSeries(F);
      for (int attempt = 0;; ++attempt) {
        try {
          PrecisionUsed used;
          const ClassificationResult r =
              with_retries(spec.precision, spec.max_precision_retries, used, [&](int prec) {
                return classify(c.group, inst->beta1.value.truncated(prec), inst->beta2.value.truncated(prec),
                                k3.truncated(prec), c.choice);
              });
          retries += used.retries;
          ++classified;
          bounds.insert(r.B_G);
          u3s.insert(r.u3);
          if (!r.hasse_arf_integral) ++nonintegral;
          if (r.u3 > r.B_G) {
            ++exceeds;
            if (r.u3.denominator() != 1 || r.u3.numerator() % p == 0) ++violations;
          }
          if (r.b3 && Rational(*r.b3) == r.ubar3) ++violations;
          break;
        } catch (const DegenerateTower&) {
          ++degenerate;
          if (attempt >= 8) {
            errors.push_back("DegenerateTower: no admissible kappa3 found");
            break;
          }
          k3 = instances::random_kappa3(F, 2 * p * c.u2, rng);
        } catch (const Error& e) {
          errors.push_back(std::string(e.kind()) + ": " + e.what());
          break;
        }
      }
    }
    rec["classified"] = classified;
    rec["nonintegral"] = nonintegral;
    rec["exceeds_bound"] = exceeds;
    rec["dichotomy_violations"] = violations;
    rec["degenerate_resampled"] = degenerate;
    rec["precision_retries"] = retries;
    rec["errors"] = errors;
    rec["skipped"] = skipped.empty() ? json(nullptr) : json(skipped);
    json bj = json::array(), uj = json::array();
    for (const auto& b : bounds) bj.push_back(rat(b));
    for (const auto& u : u3s) uj.push_back(rat(u));
    rec["B_G"] = bj;
    rec["u3"] = uj;
    records[idx] = std::move(rec);
  });

  // Emission order is fixed by (group, u1, u2, choice) whatever order cells finished in.
  std::sort(records.begin(), records.end(), [](const json& a, const json& b) {
    return std::tuple(a["group"].get<std::string>(), a["u1"].get<int>(), a["u2"].get<int>(),
                      a["choice"].get<std::string>()) < std::tuple(b["group"].get<std::string>(), b["u1"].get<int>(),
                                                                   b["u2"].get<int>(), b["choice"].get<std::string>());
  });
  std::map<std::string, GroupTally> tally;
  for (const auto& r : records) {
    GroupTally& t = tally[r["group"].get<std::string>()];
    ++t.cells;
    t.classified += r["classified"].get<int>();
    t.nonintegral += r["nonintegral"].get<int>();
    t.exceeds += r["exceeds_bound"].get<int>();
    t.violations += r["dichotomy_violations"].get<int>();
    t.errors += static_cast<int>(r["errors"].size());
  }
  json summary = json::array();
  for (const auto& [g, t] : tally)
    summary.push_back({{"group", g},
                       {"cells", t.cells},
                       {"classified", t.classified},
                       {"nonintegral", t.nonintegral},
                       {"exceeds_bound", t.exceeds},
                       {"dichotomy_violations", t.violations},
                       {"errors", t.errors}});
  json gnames = json::array();
  for (GroupKind g : groups) gnames.push_back(to_string(g));
  return {{"command", "sweep"},
          {"field", field_json(*F)},
          {"seed", spec.seed},
          {"grid",
           {{"umin", spec.umin},
            {"umax", spec.umax},
            {"per_cell", spec.per_cell},
            {"groups", gnames},
            {"random_kappa3", spec.random_kappa3}}},
          {"precision", spec.precision},
          {"cells", records},
          {"summary", summary}};
}

json run_selftest(const JobSpec& spec, const FieldPtr& F, bool& failed) {
  const int p = F->p();
  if (spec.trials < 1) throw UsageError("selftest needs --trials >= 1");
  if (spec.umax < 2) throw UsageError("selftest needs --umax >= 2");
  OracleOptions opts;
  opts.window = spec.window;
  struct Outcome {
    bool engineered = false;
    int oracle_checks = 0, dual_checks = 0;
    json failures = json::array();
  };
  std::vector<Outcome> out(spec.trials);
  parallel_for(spec.trials, spec.threads, [&](int i) {
    instances::Rng rng = instances::make_rng(spec.seed, static_cast<std::uint64_t>(i));
    const bool engineer = p >= 3 && spec.umax >= p - 1 && i % 4 == 3;
    const instances::PairInstance inst =
        engineer ? instances::engineered_minus_one(F, spec.umax, rng) : instances::random_pair(F, spec.umax, rng);
    Outcome& o = out[i];
    o.engineered = inst.engineered;
    try {
      const checks::InstanceReport rep = checks::check_instance(inst, true, opts);
      o.oracle_checks = 2;
      o.dual_checks = rep.dual_route_checks;
      for (const auto& v : rep.invariant_violations)
        o.failures.push_back({{"trial", i}, {"kind", "invariant"}, {"detail", v}, {"instance", checks::describe(inst)}});
      for (const auto* c : {&rep.beta2_y1, &rep.dm_term})
        if (!c->agree)
          o.failures.push_back({{"trial", i},
                                {"kind", "oracle"},
                                {"detail", c->what + ": closed form " + to_string(c->closed) + ", oracle " +
                                               to_string(c->oracle) + " (" + c->certificate + ")"},
                                {"instance", checks::describe(inst)}});
      for (const auto& m : rep.dual_route_mismatches)
        o.failures.push_back({{"trial", i}, {"kind", "dual-route"}, {"detail", m}, {"instance", checks::describe(inst)}});
    } catch (const Error& e) {
      o.failures.push_back({{"trial", i},
                            {"kind", "error"},
                            {"detail", std::string(e.kind()) + ": " + e.what()},
                            {"instance", checks::describe(inst)}});
    }
  });
  int oracle_checks = 0, dual = 0, engineered = 0;
  std::map<std::string, int> by_kind;
  json failures = json::array();
  for (const auto& o : out) {
    oracle_checks += o.oracle_checks;
    dual += o.dual_checks;
    engineered += o.engineered;
    for (const auto& f : o.failures) {
      ++by_kind[f["kind"].get<std::string>()];
      failures.push_back(f);
    }
  }
  failed = !failures.empty();
  return {{"command", "selftest"},
          {"field", field_json(*F)},
          {"seed", spec.seed},
          {"trials", spec.trials},
          {"umax", spec.umax},
          {"engineered", engineered},
          {"oracle_checks", oracle_checks},
          {"dual_route_checks", dual},
          {"oracle_mismatches", by_kind["oracle"]},
          {"invariant_violations", by_kind["invariant"]},
          {"dual_route_mismatches", by_kind["dual-route"]},
          {"errors", by_kind["error"]},
          {"failures", failures},
          {"passed", !failed}};
}

void emit_error(const JobSpec& spec, std::ostream& out, std::ostream& err, const std::string& kind,
                const std::string& message) {
  err << "ramify " << command_name(spec.command) << ": " << kind << ": " << message << "\n";
  if (spec.output == OutputFormat::Json) {
    json doc{{"command", command_name(spec.command)}, {"error", {{"kind", kind}, {"message", message}}}};
    out << doc.dump(2) << "\n";
  }
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const FieldPtr F = Field::make(spec.field);
    json doc;
    bool failed = false;
    switch (spec.command) {
      case Command::Reduce:
        doc = run_reduce(spec, F);
        break;
      case Command::Decompose:
        doc = run_decompose(spec, F);
        break;
      case Command::Classify:
        doc = run_classify(spec, F);
        break;
      case Command::Sweep:
        doc = run_sweep(spec, F);
        break;
      case Command::Selftest:
        doc = run_selftest(spec, F, failed);
        break;
    }
    out << render(doc, spec.output);
    return failed ? kExitMath : kExitOk;
  } catch (const UsageError& e) {
    emit_error(spec, out, err, "UsageError", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    emit_error(spec, out, err, e.kind(), e.what());
    return kExitUsage;
  } catch (const InvalidField& e) {
    emit_error(spec, out, err, e.kind(), e.what());
    return kExitUsage;
  } catch (const Error& e) {
    emit_error(spec, out, err, e.kind(), e.what());
    return kExitMath;
  } catch (const std::exception& e) {
    emit_error(spec, out, err, "InternalError", e.what());
    return kExitMath;
  }
}

}  // namespace ramify::cli
