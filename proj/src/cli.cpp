#include "polyhit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "polyhit/adaptability.hpp"
#include "polyhit/greedy1d.hpp"
#include "polyhit/intersect.hpp"
#include "polyhit/io.hpp"
#include "polyhit/lift.hpp"
#include "polyhit/lp.hpp"
#include "polyhit/oracle.hpp"

namespace polyhit {

namespace {

struct Options {
  std::string input, output, engine, eps, lambda, t, points, omega, x, lo, hi;
  std::size_t k = 1, kmax = 100, resolution = 201;
};

RatVector parse_list(const std::string& s) {
  RatVector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

Engine make_engine(const Options& o, std::size_t m) {
  Engine e = Engine::default_for(m);
  if (o.engine == "exact") e = Engine::exact();
  else if (o.engine == "bisect") e = Engine::bisect();
  else if (!o.engine.empty()) throw InputError("--engine must be exact or bisect");
  if (!o.eps.empty()) {
    if (e.kind != Engine::Kind::bisect) throw InputError("--eps applies to the bisect engine");
    e.eps = parse_rat(o.eps);
  }
  return e;
}

std::vector<RatVector> read_points(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object()) j = j.at("points");
  if (!j.is_array()) throw InputError("points file must be an array of points");
  std::vector<RatVector> out;
  for (const auto& p : j) out.push_back(vector_from_json(p));
  return out;
}

Json points_json(const std::vector<RatVector>& pts, Json& approx) {
  Json exact = Json::array();
  approx = Json::array();
  for (const auto& p : pts) {
    exact.push_back(vector_to_json(p));
    approx.push_back(approx_vector(p));
  }
  return exact;
}

void put_solution(Json& out, const HittingSolution& sol) {
  Json approx;
  out["k"] = sol.k;
  out["points"] = points_json(sol.points, approx);
  out["points_approx"] = approx;
  Json bps = Json::array(), bps_approx = Json::array();
  for (const auto& b : sol.breakpoints) {
    bps.push_back(sigma_to_json(b));
    bps_approx.push_back(b.is_exact() ? approx_string(b.exact()) : to_decimal(b.lo));
  }
  out["breakpoints"] = bps;
  out["breakpoints_approx"] = bps_approx;
  Json ivs = Json::array();
  for (const auto& iv : sol.intervals) ivs.push_back(interval_to_json(iv));
  out["intervals"] = ivs;
  out["covered"] = sol.coverage.covered;
  if (!sol.coverage.covered) out["gap"] = sol.coverage.gap_string();
}

int put_outcome(Json& out, const HitOutcome& outcome) {
  if (const auto* sol = std::get_if<HittingSolution>(&outcome)) {
    put_solution(out, *sol);
    return kSolved;
  }
  out["k"] = nullptr;
  Json chain = Json::array();
  auto push_chain = [&](const std::vector<SigmaResult>& c) {
    for (const auto& s : c) chain.push_back(sigma_to_json(s));
    out["chain"] = chain;
  };
  if (const auto* up = std::get_if<NoHittingSetUpTo>(&outcome)) {
    out["result"] = "no_hitting_set_up_to";
    out["kmax"] = up->kmax;
    push_chain(up->chain);
  } else {
    const auto& nf = std::get<NoFiniteHittingSet>(outcome);
    out["result"] = "no_finite_hitting_set";
    out["reason"] = nf.empty_member ? "empty_member" : "stall";
    out["at"] = real_to_json(nf.stall);
    out["at_approx"] = approx_string(nf.stall);
    push_chain(nf.chain);
  }
  return kNo;
}

struct Member2d {
  std::string status;  // polygon, empty, unbounded
  std::vector<RatVector> vertices;
};

Member2d vertices_2d(const HalfspaceSystem& sys) {
  Member2d out;
  if (lp_feasible(sys).status != LpStatus::feasible) {
    out.status = "empty";
    return out;
  }
  std::vector<RatVector> dirs{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    RatVector ai = sys.a.row(i);
    if (sgn(ai[0]) == 0 && sgn(ai[1]) == 0) continue;
    dirs.push_back(ai);
    for (std::size_t j = i + 1; j < sys.rows(); ++j) dirs.push_back(axpy(1, ai, sys.a.row(j)));
  }
  for (const auto& c : dirs) {
    if (sgn(c[0]) == 0 && sgn(c[1]) == 0) continue;
    LpOutcome res = lp_optimize(c, sys);
    if (res.status == LpStatus::unbounded) {
      out.status = "unbounded";
      out.vertices.clear();
      return out;
    }
    if (std::find(out.vertices.begin(), out.vertices.end(), res.point) == out.vertices.end())
      out.vertices.push_back(res.point);
  }
  // exact angular order around the centroid
  Rat cx = 0, cy = 0;
  for (const auto& v : out.vertices) {
    cx += v[0];
    cy += v[1];
  }
  cx /= static_cast<long>(out.vertices.size());
  cy /= static_cast<long>(out.vertices.size());
  auto half = [&](const RatVector& v) {
    Rat dx = v[0] - cx, dy = v[1] - cy;
    return (sgn(dy) > 0 || (sgn(dy) == 0 && sgn(dx) > 0)) ? 0 : 1;
  };
  std::sort(out.vertices.begin(), out.vertices.end(), [&](const RatVector& a, const RatVector& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rat cross = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
    return sgn(cross) > 0;
  });
  out.status = out.vertices.size() == 1 ? "point" : "polygon";
  return out;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact hitting sets for affine families of polytopes", "polyhit"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto common = [&](CLI::App* sub) {
      sub->add_option("--input", o_.input, "instance JSON")->required();
      sub->add_option("--output", o_.output, "write the report here instead of stdout");
    };
    auto engine_opts = [&](CLI::App* sub) {
      sub->add_option("--engine", o_.engine, "exact | bisect (default: exact for m <= 32)");
      sub->add_option("--eps", o_.eps, "bisect bracket width (default 2^-40)");
    };

    auto* eval = app.add_subcommand("eval", "evaluate one member P(w)");
    common(eval);
    eval->add_option("--omega", o_.omega, "parameter, comma separated");
    eval->add_option("--lambda", o_.lambda, "parameter for p = 1");
    eval->callback([&] { action = [&] { return cmd_eval(); }; });

    auto* dual = app.add_subcommand("dual", "dual family");
    common(dual);
    dual->callback([&] { action = [&] { return cmd_dual(); }; });

    auto* dint = app.add_subcommand("dual-interval", "parameters whose member contains x");
    common(dint);
    dint->add_option("--x", o_.x, "point, comma separated")->required();
    dint->callback([&] { action = [&] { return cmd_dual_interval(); }; });

    auto* hit1 = app.add_subcommand("hit1", "one-point hitting set");
    common(hit1);
    hit1->callback([&] { action = [&] { return cmd_hit1(); }; });

    auto* sig = app.add_subcommand("sigma", "greedy step sigma(lambda)");
    common(sig);
    engine_opts(sig);
    sig->add_option("--lambda", o_.lambda, "start parameter (default alpha)");
    sig->callback([&] { action = [&] { return cmd_sigma(); }; });

    auto* hs = app.add_subcommand("hitsize", "minimum hitting set");
    common(hs);
    engine_opts(hs);
    hs->add_option("--kmax", o_.kmax, "give up above this many points");
    hs->callback([&] { action = [&] { return cmd_hitsize(false); }; });

    auto* dec = app.add_subcommand("decide", "is there a hitting set of size k");
    common(dec);
    engine_opts(dec);
    dec->add_option("--k", o_.k)->required();
    dec->callback([&] { action = [&] { return cmd_hitsize(true); }; });

    auto* ver = app.add_subcommand("verify", "exact coverage check of a point set");
    common(ver);
    ver->add_option("--points", o_.points, "JSON array of points")->required();
    ver->callback([&] { action = [&] { return cmd_verify(); }; });

    auto* adapt = app.add_subcommand("adapt", "k-adaptability");
    adapt->require_subcommand(1);
    auto* adec = adapt->add_subcommand("decide", "is the k-adaptable value at most t");
    common(adec);
    engine_opts(adec);
    adec->add_option("--k", o_.k)->required();
    adec->add_option("--t", o_.t)->required();
    adec->callback([&] { action = [&] { return cmd_adapt_decide(); }; });
    auto* aopt = adapt->add_subcommand("optimize", "bracket the k-adaptable value");
    common(aopt);
    aopt->add_option("--engine", o_.engine, "exact | bisect");
    aopt->add_option("--k", o_.k)->required();
    aopt->add_option("--eps", o_.eps, "bracket width on t (default 1/1000000)");
    aopt->add_option("--lo", o_.lo, "known infeasible t");
    aopt->add_option("--hi", o_.hi, "known feasible t");
    aopt->callback([&] { action = [&] { return cmd_adapt_optimize(); }; });

    auto* lift = app.add_subcommand("lift", "lifted families for first-stage decisions");
    common(lift);
    lift->add_option("--t", o_.t)->required();
    lift->callback([&] { action = [&] { return cmd_lift(); }; });

    auto* orc = app.add_subcommand("oracle", "grid reference values");
    common(orc);
    orc->add_option("--resolution", o_.resolution);
    orc->add_option("--lambda", o_.lambda, "also bracket sigma(lambda) by bisection");
    orc->add_option("--eps", o_.eps, "bracket width for --lambda (default 1/1000000000)");
    orc->add_option("--points", o_.points, "also sample-check these points");
    orc->callback([&] { action = [&] { return cmd_oracle(); }; });

    auto* plot = app.add_subcommand("sample-plot", "vertex cycles of sampled 2-D members (CSV)");
    common(plot);
    plot->add_option("--resolution", o_.resolution);
    plot->callback([&] { action = [&] { return cmd_plot(); }; });

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kSolved;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kInputError;
    }
    try {
      return action();
    } catch (const EmptyMemberError& e) {
      return fail(kNo, "EmptyMember", e.what());
    } catch (const NotPolytopeError& e) {
      return fail(kSolverLimit, "NotPolytope", e.what());
    } catch (const Unsupported& e) {
      return fail(kSolverLimit, "Unsupported", e.what());
    } catch (const InputError& e) {
      return fail(kInputError, "InputError", e.what());
    } catch (const nlohmann::json::exception& e) {
      return fail(kInputError, "InputError", e.what());
    }
  }

 private:
  int fail(int code, const char* kind, const std::string& msg) {
    err_ << kind << ": " << msg << "\n";
    emit({{"error", kind}, {"message", msg}});
    return code;
  }

  void emit(const Json& j) { emit_text(j.dump(2) + "\n"); }

  void emit_text(const std::string& text) {
    if (o_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.output);
    if (!f) throw InputError("cannot write " + o_.output);
    f << text;
  }

  AffineFamily family() const { return family_from_json(read_json_file(o_.input)); }

  Rat lambda_or_alpha(const AffineFamily& f) const {
    return o_.lambda.empty() ? f.interval().alpha : parse_rat(o_.lambda);
  }

  int cmd_eval() {
    AffineFamily f = family();
    RatVector w;
    if (!o_.omega.empty()) w = parse_list(o_.omega);
    else if (!o_.lambda.empty()) w = {parse_rat(o_.lambda)};
    else throw InputError("eval needs --omega or --lambda");
    HalfspaceSystem sys = member_eval(f, w);
    emit({{"omega", vector_to_json(w)}, {"A", matrix_to_json(sys.a)}, {"b", vector_to_json(sys.b)}});
    return kSolved;
  }

  int cmd_dual() {
    emit({{"family", family_to_json(dual_family(family()))}});
    return kSolved;
  }

  int cmd_dual_interval() {
    AffineFamily f = family();
    RatVector x = parse_list(o_.x);
    RatInterval iv = dual_interval(f, x);
    Json j{{"x", vector_to_json(x)}, {"interval", interval_to_json(iv)}, {"empty", iv.is_empty()}};
    if (!iv.is_empty()) j["interval_approx"] = {to_decimal(iv.lo()), to_decimal(iv.hi())};
    emit(j);
    return kSolved;
  }

  int cmd_hit1() {
    LpOutcome res = hit_one_point(family());
    if (res.status == LpStatus::feasible) {
      emit({{"status", "feasible"}, {"witness", vector_to_json(res.point)}, {"witness_approx", approx_vector(res.point)}});
      return kSolved;
    }
    emit({{"status", "infeasible"}, {"farkas", vector_to_json(res.point)}});
    return kNo;
  }

  int cmd_sigma() {
    AffineFamily f = family();
    Rat lam = lambda_or_alpha(f);
    Engine e = make_engine(o_, f.m());
    Json j{{"lambda", rat_to_json(lam)}, {"engine", e.kind == Engine::Kind::exact ? "exact" : "bisect"}};
    try {
      SigmaResult s = sigma(f, lam, e);
      j["sigma"] = sigma_to_json(s);
      j["sigma_approx"] = s.is_exact() ? approx_string(s.exact()) : to_decimal(s.lo);
      j["probes"] = {{"feasible", vector_to_json(s.feasible_probes)},
                     {"infeasible", vector_to_json(s.infeasible_probes)}};
    } catch (const EmptyMemberError& err) {
      j["error"] = "EmptyMember";
      j["at"] = real_to_json(err.lambda());
      emit(j);
      return kNo;
    }
    emit(j);
    return kSolved;
  }

  int cmd_hitsize(bool decide) {
    AffineFamily f = family();
    Engine e = make_engine(o_, f.m());
    Json j;
    int code;
    if (decide) {
      Decision d = decide_hit(f, o_.k, e);
      j["decision"] = d.yes;
      put_outcome(j, d.outcome);
      code = d.yes ? kSolved : kNo;
    } else {
      code = put_outcome(j, hit_size(f, o_.kmax, e));
    }
    emit(j);
    return code;
  }

  int cmd_verify() {
    AffineFamily f = family();
    CoverageReport rep = verify(f, read_points(o_.points));
    Json ivs = Json::array();
    for (const auto& iv : rep.intervals) ivs.push_back(interval_to_json(iv));
    Json j{{"covered", rep.covered}, {"intervals", ivs}};
    if (!rep.covered) {
      j["gap"] = {{"lo", rat_to_json(rep.gap_lo)},
                  {"hi", rat_to_json(rep.gap_hi)},
                  {"lo_open", rep.gap_lo_open},
                  {"hi_open", rep.gap_hi_open},
                  {"text", rep.gap_string()}};
    }
    emit(j);
    return rep.covered ? kSolved : kNo;
  }

  AdaptInstance adapt_instance() const { return adapt_from_json(read_json_file(o_.input)); }

  int cmd_adapt_decide() {
    AdaptInstance inst = adapt_instance();
    Rat t = parse_rat(o_.t);
    AdaptDecision d = adapt_decide(inst, o_.k, t, make_engine(o_, inst.m() + 1));
    Json j{{"decision", d.yes}, {"k", o_.k}, {"t", rat_to_json(t)}};
    if (d.solution) {
      Json approx;
      j["witnesses"] = points_json(d.solution->points, approx);
      j["witnesses_approx"] = approx;
    }
    if (!d.diagnostic.empty()) j["diagnostic"] = d.diagnostic;
    if (d.empty_member) j["empty_member"] = true;
    emit(j);
    return d.yes ? kSolved : kNo;
  }

  int cmd_adapt_optimize() {
    AdaptInstance inst = adapt_instance();
    Engine e = Engine::default_for(inst.m() + 1);
    if (o_.engine == "exact") e = Engine::exact();
    else if (o_.engine == "bisect") e = Engine::bisect();
    else if (!o_.engine.empty()) throw InputError("--engine must be exact or bisect");
    Rat eps = o_.eps.empty() ? Rat(1, 1000000) : parse_rat(o_.eps);
    std::optional<std::pair<Rat, Rat>> bracket;
    if (!o_.lo.empty() || !o_.hi.empty()) {
      if (o_.lo.empty() || o_.hi.empty()) throw InputError("--lo and --hi go together");
      bracket.emplace(parse_rat(o_.lo), parse_rat(o_.hi));
    }
    AdaptResult r = adapt_optimize(inst, o_.k, eps, e, bracket);
    Json j{{"feasible", r.feasible}, {"k", r.k}, {"decisions", r.decisions}};
    if (!r.feasible) {
      j["searched_up_to"] = rat_to_json(r.hi);
      emit(j);
      return kNo;
    }
    j["value"] = {{"lo", rat_to_json(r.lo)}, {"hi", rat_to_json(r.hi)}};
    j["value_approx"] = {{"lo", to_decimal(r.lo)}, {"hi", to_decimal(r.hi)}};
    Json approx;
    j["witnesses"] = points_json(r.witnesses, approx);
    j["witnesses_approx"] = approx;
    emit(j);
    return kSolved;
  }

  int cmd_lift() {
    AdaptInstance inst = adapt_instance();
    emit(lift_to_json(lift_instance(inst, parse_rat(o_.t))));
    return kSolved;
  }

  int cmd_oracle() {
    AffineFamily f = family();
    GridSpec grid{o_.resolution};
    Json j{{"resolution", o_.resolution}};
    try {
      GridCover cover = grid_hit_cover(f, grid);
      Json approx;
      j["grid_hit_size"] = cover.count;
      j["witnesses"] = points_json(cover.witnesses, approx);
      j["witnesses_approx"] = approx;
    } catch (const EmptyMemberError& e) {
      j["grid_hit_size"] = nullptr;
      j["error"] = "EmptyMember";
      j["at"] = real_to_json(e.lambda());
    }
    if (!o_.lambda.empty()) {
      Rat eps = o_.eps.empty() ? Rat(1, 1000000000) : parse_rat(o_.eps);
      RatBracket br = bisect_sigma_oracle(f, parse_rat(o_.lambda), eps);
      j["sigma_bracket"] = {{"lo", rat_to_json(br.lo)}, {"hi", rat_to_json(br.hi)}};
      j["sigma_bracket_approx"] = {{"lo", to_decimal(br.lo)}, {"hi", to_decimal(br.hi)}};
    }
    if (!o_.points.empty()) j["sample_verify"] = sample_verify(f, read_points(o_.points), grid);
    emit(j);
    return kSolved;
  }

  int cmd_plot() {
    emit_text(sample_plot(family(), o_.resolution));
    return kSolved;
  }

  std::ostream& out_;
  std::ostream& err_;
  Options o_;
};

}  // namespace

std::string sample_plot(const AffineFamily& family, std::size_t resolution) {
  if (family.d() != 2 || family.p() != 1) throw Unsupported("sample-plot needs d = 2 and p = 1");
  std::ostringstream csv;
  csv << "omega,x1,x2,omega_exact,x1_exact,x2_exact\n";
  bool first = true;
  for (const Rat& w : grid_points(family, GridSpec{resolution})) {
    Member2d mem = vertices_2d(member_eval(family, {w}));
    if (!first) csv << "\n";
    first = false;
    csv << "# omega=" << to_string(w) << " status=" << mem.status << " vertices=" << mem.vertices.size() << "\n";
    for (const auto& v : mem.vertices)
      csv << to_decimal(w) << "," << to_decimal(v[0]) << "," << to_decimal(v[1]) << "," << to_string(w) << ","
          << to_string(v[0]) << "," << to_string(v[1]) << "\n";
  }
  return csv.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace polyhit
