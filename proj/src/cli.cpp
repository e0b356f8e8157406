#include "cyclo/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "cyclo/cherednik.hpp"
#include "cyclo/params.hpp"
#include "cyclo/quivergeom.hpp"
#include "cyclo/weyl.hpp"

namespace cyclo::cli {

namespace {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Json ratvec_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rat_json(r));
  return a;
}

Json series_json(const TruncatedSeries& s) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : s.coeffs()) coeffs[std::to_string(e)] = c;
  return Json{{"var", "q"}, {"window", {s.lo(), s.hi()}}, {"coeffs", coeffs}};
}

Json order_string(const EtaSequence& eta) {
  std::ostringstream os;
  for (int k = static_cast<int>(eta.eta.size()); k >= 1; --k)
    os << eta.eta[k - 1] << (k > 1 ? ">" : "");
  return os.str();
}

Json adjacency_json(const std::vector<std::vector<bool>>& rel) {
  Json out = Json::object();
  for (size_t i = 0; i < rel.size(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < rel.size(); ++j)
      if (rel[i][j]) row.push_back(static_cast<int>(j));
    out[std::to_string(i)] = row;
  }
  return out;
}

Json pattern_json(const std::vector<SlotFlag>& f) {
  Json a = Json::array();
  for (auto x : f)
    a.push_back(x == SlotFlag::zero ? "0"
                                    : (x == SlotFlag::nonzero ? "*" : "free"));
  return a;
}

Json laurent_json(const LaurentMonomial& m) {
  return Json{{"t", m.texp}, {"xi", m.xexp}};
}

Json comm_json(const CommMonomial& m) {
  return Json{{"s", m.s}, {"a", m.a}, {"c", m.c}};
}

Json weyl_json(const WeylElement& x) {
  Json arr = Json::array();
  for (const auto& [mon, coeff] : x.terms())
    arr.push_back(
        Json{{"a", mon.a}, {"c", mon.c}, {"coeff", rat_to_string(coeff)}});
  return arr;
}

Json dims_json(const std::map<int, int>& dims) {
  Json out = Json::object();
  for (const auto& [d, n] : dims) out[std::to_string(d)] = n;
  return out;
}

Json checks_json(const std::vector<CheckItem>& checks, bool* all_pass,
                 Json* first_failure) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back(Json{{"claim", c.claim},
                       {"status", c.pass ? "pass" : "fail"},
                       {"witness", c.witness}});
    if (!c.pass && all_pass) {
      if (*all_pass && first_failure) *first_failure = arr.back();
      *all_pass = false;
    }
  }
  return arr;
}

DeformParam need_lambda(const RunConfig& cfg) {
  if (!cfg.lambda) throw std::invalid_argument("--lambda is required");
  return DeformParam(*cfg.lambda);
}

StabParam need_theta(const RunConfig& cfg) {
  if (!cfg.theta) throw std::invalid_argument("--theta is required");
  return StabParam(*cfg.theta);
}

// --- subcommand handlers ---------------------------------------------------

int cmd_order(const RunConfig& cfg, Json& rep) {
  StabParam th = need_theta(cfg);
  EtaSequence eta = theta_order(th);
  rep["eta"] = eta.eta;
  rep["order"] = order_string(eta);
  rep["order_adjacency"] = adjacency_json(eta.gt);
  if (cfg.lambda) {
    DeformParam lam = need_lambda(cfg);
    auto cls = classify_lambda(lam);
    rep["lambda_in_Rreg"] = cls.in_Rreg;
    rep["lambda_in_tilde_Rreg"] = cls.in_tilde_Rreg;
    rep["theta_in_Z_lambda"] = in_alcove_set(lam, th);
    rep["rep_order"] = adjacency_json(rep_order(lam));
  }
  return 0;
}

int cmd_homs(const RunConfig& cfg, Json& rep) {
  DeformParam lam = need_lambda(cfg);
  Json table = Json::object();
  for (int i = 0; i < cfg.l; ++i)
    for (int j = 0; j < cfg.l; ++j) {
      if (i == j) continue;
      HomDim h = hom_dim(lam, i, j);
      if (h.dim == 0) continue;
      std::ostringstream key;
      key << "(" << i << "," << j << ")";
      table[key.str()] = Json{{"dim", h.dim}, {"p", *h.p}, {"n", *h.n}};
    }
  rep["homs"] = table;
  rep["kappa_normalization"] = "engine [A*,A] = sum lambda_k e_k";
  return 0;
}

int cmd_fixed_points(const RunConfig& cfg, Json& rep) {
  StabParam th = need_theta(cfg);
  Json pts = Json::array();
  for (int v = 0; v < cfg.l; ++v) {
    FixedPointPattern p = fixed_point(th, v);
    pts.push_back(Json{{"vertex", v},
                       {"a", pattern_json(p.a)},
                       {"b", pattern_json(p.b)}});
  }
  rep["fixed_points"] = pts;
  Json curves = Json::array();
  for (int v = 0; v < cfg.l; ++v) {
    CurvePattern c = curve_pattern(th, v);
    curves.push_back(Json{{"vertex", v},
                          {"a", pattern_json(c.a)},
                          {"b", pattern_json(c.b)}});
  }
  rep["curves"] = curves;
  return 0;
}

int cmd_charts(const RunConfig& cfg, Json& rep) {
  StabParam th = need_theta(cfg);
  Json charts = Json::array();
  for (int j = 1; j <= cfg.l; ++j) {
    Chart c = chart(th, j);
    charts.push_back(Json{{"index", j},
                          {"gen1", laurent_json(c.gen1)},
                          {"gen2", laurent_json(c.gen2)},
                          {"image1", {c.image1.first, c.image1.second}},
                          {"image2", {c.image2.first, c.image2.second}},
                          {"fixed_vertex", c.fixed_vertex}});
  }
  rep["charts"] = charts;
  GeomOrder g = geom_order(th);
  rep["geom_eta"] = g.eta;
  Json inc = Json::array();
  for (auto [v, w] : g.incident) inc.push_back(Json::array({v, w}));
  rep["incidences"] = inc;
  bool agree = g.gt == theta_order(th).gt;
  rep["geom_order_equals_theta_order"] = agree;
  return agree ? 0 : 1;
}

int cmd_sections(const RunConfig& cfg, Json& rep) {
  StabParam th = need_theta(cfg);
  EtaSequence eta = theta_order(th);
  Bidegree cap{cfg.cap.first, cfg.cap.second};
  Json cols = Json::array();
  bool ok = true;
  for (int k = 0; k < cfg.l; ++k) {
    IntVec w = scaled_plus_tau(th.theta, cfg.m, k);
    auto semi = semi_invariant_basis(w, cap);
    auto gb = g_basis(w, eta, cap.t + cap.xi);
    IntVec b = b_vector(w, eta);
    auto poly = polytope_sections(b, cap);
    // Count per bidegree; the polytope and g-generated sets must agree with
    // the semi-invariant enumeration.
    std::map<std::pair<int, int>, int> semi_ct, poly_ct;
    for (const auto& mn : semi) semi_ct[mn.bidegree()] += 1;
    int twist = 0;
    for (int j = 1; j <= cfg.l - 1; ++j) twist += j * b[j - 1];
    for (const auto& p : poly) {
      std::pair<int, int> bd{p.xdeg, p.ydeg + twist};
      if (bd.first <= cap.t && bd.second >= 0 && bd.second <= cap.xi)
        poly_ct[bd] += 1;
    }
    bool match = semi_ct == poly_ct;
    ok = ok && match;
    Json gens = Json::array();
    for (const auto& g : gb) gens.push_back(comm_json(g));
    cols.push_back(Json{{"column", k},
                        {"b", b},
                        {"semi_invariant_count", semi.size()},
                        {"g_basis", gens},
                        {"polytope_matches_semi_invariants", match}});
  }
  rep["sections"] = cols;
  return ok ? 0 : 1;
}

int cmd_abl(const RunConfig& cfg, Json& rep) {
  StabParam th = need_theta(cfg);
  AblRecord r = abl_character(th, cfg.m, cfg.window);
  rep["closed_form"] = series_json(r.closed);
  rep["enumerated"] = series_json(r.enumerated);
  if (r.localization) rep["localization"] = series_json(*r.localization);
  rep["equal"] = r.equal;
  if (!r.equal) {
    for (int e = r.closed.hi(); e >= r.closed.lo(); --e)
      if (r.closed.coeff(e) != r.enumerated.coeff(e)) {
        rep["counterexample"] = Json{{"exponent", e},
                                     {"closed", r.closed.coeff(e)},
                                     {"enumerated", r.enumerated.coeff(e)}};
        break;
      }
  }
  return r.equal ? 0 : 1;
}

int cmd_shift_verify(const RunConfig& cfg, Json& rep) {
  DeformParam lam = need_lambda(cfg);
  StabParam th = need_theta(cfg);
  bool all = true;
  Json first = Json();
  Json targets = Json::array();
  for (int pos = 1; pos <= cfg.l; ++pos) {
    ShiftImageRecord r = shift_image(lam, th, pos);
    Json t;
    t["position"] = pos;
    t["target_vertex"] = r.target_vertex;
    t["bottom_degree"] = r.bottom_degree;
    t["image_dims"] = dims_json(r.image_dims);
    t["checks"] = checks_json(r.checks, &all, &first);
    targets.push_back(t);
    IntertwinerRecord p = intertwiner_element(lam, th, pos);
    Json pj;
    pj["position"] = pos;
    pj["f_tilde"] = weyl_json(p.f_tilde);
    pj["checks"] = checks_json(p.checks, &all, &first);
    targets.push_back(pj);
  }
  rep["shift_images"] = targets;
  QDimensionRecord q = q_dimension(lam, th, 12);
  rep["q_dimension"] = Json{{"engine", series_json(q.engine)},
                            {"closed", series_json(q.closed)},
                            {"equal", q.equal}};
  all = all && q.equal;
  if (!first.is_null()) rep["counterexample"] = first;
  return all ? 0 : 1;
}

int cmd_gr_verify(const RunConfig& cfg, Json& rep) {
  DeformParam lam = need_lambda(cfg);
  StabParam th = need_theta(cfg);
  GrCheckRecord r =
      gr_main_check(lam, th, cfg.m, Bidegree{cfg.cap.first, cfg.cap.second});
  rep["pieces_checked"] = r.pieces_checked;
  rep["equal"] = r.equal;
  if (!r.equal) {
    const auto& f = r.failures.front();
    rep["counterexample"] = Json{{"column", f.column},
                                 {"bidegree", {f.t_degree, f.xi_degree}},
                                 {"got", f.got},
                                 {"expected", f.expected}};
  }
  return r.equal ? 0 : 1;
}

int cmd_ch_cycles(const RunConfig& cfg, Json& rep) {
  StabParam th = need_theta(cfg);
  bool ok = true;
  Json cycles = Json::array();
  for (int v = 0; v < cfg.l; ++v) {
    IntVec geo = char_cycle(th, v);
    IntVec comb = char_cycle_comb(th, v);
    ok = ok && geo == comb;
    cycles.push_back(
        Json{{"vertex", v}, {"geometric", geo}, {"combinatorial", comb}});
  }
  rep["char_cycles"] = cycles;
  EtaSequence eta = theta_order(th);
  Json by_eta = Json::array();
  for (int pos = 1; pos <= cfg.l; ++pos) {
    IntVec interval = ch_standard_eta(th, pos);
    bool match = interval == char_cycle(th, eta.eta[pos - 1]);
    ok = ok && match;
    by_eta.push_back(Json{{"position", pos}, {"cycle", interval}, {"interval_matches", match}});
  }
  rep["ch_by_position"] = by_eta;
  if (cfg.lambda) {
    DeformParam lam = need_lambda(cfg);
    Json rch = Json::array();
    for (int pos = 1; pos <= cfg.l; ++pos) {
      auto r = rch_simple(lam, th, pos);
      Json e;
      e["position"] = pos;
      if (r)
        e["rch"] = *r;
      else
        e["rch"] = "simple standard (no lower hom)";
      rch.push_back(e);
    }
    rep["rch_simple"] = rch;
  }
  return ok ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, Json& rep) {
  if (!cfg.seed) throw std::invalid_argument("--seed is required for sweep");
  StabParam dummy(IntVec{-1, 1});
  (void)dummy;
  auto alcoves = alcove_representatives(cfg.l);
  struct JobResult {
    Json j;
    bool ok = true;
  };
  std::vector<JobResult> results(alcoves.size());
  std::atomic<size_t> next{0};
  int nthreads = std::max(1, std::min<int>(max_threads(),
                                           static_cast<int>(alcoves.size())));
  auto worker = [&]() {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= alcoves.size()) return;
      const StabParam& th = alcoves[idx];
      JobResult& res = results[idx];
      res.j["theta"] = th.theta;
      res.j["eta"] = theta_order(th).eta;
      // geometry / combinatorics
      bool geom_ok = geom_order(th).gt == theta_order(th).gt;
      bool cycles_ok = true;
      for (int v = 0; v < cfg.l; ++v)
        cycles_ok = cycles_ok && char_cycle(th, v) == char_cycle_comb(th, v);
      res.j["geom_order_ok"] = geom_ok;
      res.j["char_cycles_ok"] = cycles_ok;
      // character identity
      Json abl = Json::array();
      bool abl_ok = true;
      for (int m = 0; m <= cfg.m; ++m) {
        AblRecord r = abl_character(th, m, cfg.window);
        abl_ok = abl_ok && r.equal;
        abl.push_back(Json{{"m", m}, {"equal", r.equal}});
      }
      res.j["abl"] = abl;
      // a seeded lambda for the module-level checks
      unsigned long long state = *cfg.seed + 0x9e3779b97f4a7c15ULL * idx;
      RatVec lam_vec;
      for (int tries = 0; tries < 200; ++tries) {
        lam_vec = random_lambda(cfg.l, state);
        DeformParam cand(lam_vec);
        if (classify_lambda(cand).in_tilde_Rreg && in_alcove_set(cand, th))
          break;
        lam_vec.clear();
      }
      // section bases per column weight
      bool sections_ok = true;
      {
        EtaSequence eta = theta_order(th);
        for (int mm = 1; mm <= std::max(1, cfg.m); ++mm)
          for (int k = 0; k < cfg.l; ++k) {
            IntVec w = scaled_plus_tau(th.theta, mm, k);
            IntVec b = b_vector(w, eta);
            int twist = 0;
            for (int j = 1; j <= cfg.l - 1; ++j) twist += j * b[j - 1];
            Bidegree cap{4, 4};
            std::map<std::pair<int, int>, int> pc, sc;
            for (const auto& p : polytope_sections(b, cap)) {
              std::pair<int, int> bd{p.xdeg, p.ydeg + twist};
              if (bd.first <= cap.t && bd.second >= 0 && bd.second <= cap.xi)
                pc[bd] += 1;
            }
            for (const auto& s : semi_invariant_basis(w, cap))
              sc[s.bidegree()] += 1;
            sections_ok = sections_ok && pc == sc;
          }
      }
      res.j["sections_ok"] = sections_ok;
      bool shift_ok = true, q_ok = true, gr_ok = true, homs_ok = true;
      if (!lam_vec.empty()) {
        DeformParam lam(lam_vec);
        res.j["lambda"] = ratvec_json(lam.lambda);
        for (int pos = 1; pos <= cfg.l; ++pos)
          shift_ok = shift_ok && shift_image(lam, th, pos).pass &&
                     intertwiner_element(lam, th, pos).pass;
        q_ok = q_dimension(lam, th, 12).equal;
        gr_ok = gr_main_check(lam, th, 1, Bidegree{4, 4}).equal;
        for (int i = 0; i < cfg.l && homs_ok; ++i)
          for (int j = 0; j < cfg.l && homs_ok; ++j) {
            if (i == j) continue;
            HomDim closed = hom_dim(lam, i, j);
            int depth = 4 * cfg.l * ((closed.n ? *closed.n : 0) + 1);
            HomDim brute = hom_dim_bruteforce(lam, i, j, depth);
            homs_ok = closed.dim == brute.dim &&
                      (closed.dim == 0 || *closed.p == *brute.p);
          }
      }
      res.j["shift_ok"] = shift_ok;
      res.j["q_dimension_ok"] = q_ok;
      res.j["gr_ok"] = gr_ok;
      res.j["homs_ok"] = homs_ok;
      res.ok = geom_ok && cycles_ok && abl_ok && sections_ok && shift_ok &&
               q_ok && gr_ok && homs_ok;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  bool all = true;
  Json arr = Json::array();
  for (auto& r : results) {
    all = all && r.ok;
    arr.push_back(std::move(r.j));
  }
  rep["alcoves"] = arr;
  rep["all_pass"] = all;
  return all ? 0 : 1;
}

}  // namespace

RatVec parse_lambda(const std::string& csv) {
  RatVec out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(rat_from_string(tok));
  return out;
}

IntVec parse_theta(const std::string& csv) {
  IntVec out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

RatVec random_lambda(int l, unsigned long long& state) {
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (;;) {
    RatVec v(l);
    Rat sum(0);
    for (int i = 0; i < l; ++i) {
      long num = static_cast<long>(next() % 13) - 6;
      long den = static_cast<long>(next() % 6) + 1;
      v[i] = Rat(num, den);
      v[i].canonicalize();
      sum += v[i];
    }
    if (sum == 0) continue;
    for (auto& x : v) x /= sum;
    return v;
  }
}

int max_threads() {
  const char* env = std::getenv("CHK_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

RunResult run(const RunConfig& cfg) {
  RunResult res;
  res.report["schema"] = 1;
  res.report["subcommand"] = cfg.subcommand;
  try {
    check_rank(cfg.l);
    if (cfg.lambda && static_cast<int>(cfg.lambda->size()) != cfg.l)
      throw std::invalid_argument("lambda length != l");
    if (cfg.theta && static_cast<int>(cfg.theta->size()) != cfg.l)
      throw std::invalid_argument("theta length != l");
    if (cfg.subcommand == "order")
      res.exit_code = cmd_order(cfg, res.report);
    else if (cfg.subcommand == "homs")
      res.exit_code = cmd_homs(cfg, res.report);
    else if (cfg.subcommand == "fixed-points")
      res.exit_code = cmd_fixed_points(cfg, res.report);
    else if (cfg.subcommand == "charts")
      res.exit_code = cmd_charts(cfg, res.report);
    else if (cfg.subcommand == "sections")
      res.exit_code = cmd_sections(cfg, res.report);
    else if (cfg.subcommand == "abl-verify")
      res.exit_code = cmd_abl(cfg, res.report);
    else if (cfg.subcommand == "shift-verify")
      res.exit_code = cmd_shift_verify(cfg, res.report);
    else if (cfg.subcommand == "gr-verify")
      res.exit_code = cmd_gr_verify(cfg, res.report);
    else if (cfg.subcommand == "ch-cycles")
      res.exit_code = cmd_ch_cycles(cfg, res.report);
    else if (cfg.subcommand == "sweep")
      res.exit_code = cmd_sweep(cfg, res.report);
    else
      throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);
  } catch (const std::invalid_argument& e) {
    res.report["error"] = e.what();
    res.exit_code = 2;
  } catch (const std::out_of_range& e) {
    res.report["error"] = e.what();
    res.exit_code = 2;
  }
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    f << res.report.dump(2) << "\n";
  }
  return res;
}

}  // namespace cyclo::cli
