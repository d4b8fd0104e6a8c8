#include "cohsys/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "cohsys/coherent.hpp"
#include "cohsys/critical.hpp"
#include "cohsys/errors.hpp"
#include "cohsys/flips.hpp"
#include "cohsys/json_io.hpp"
#include "cohsys/nonempty.hpp"
#include "cohsys/p2cohom.hpp"
#include "cohsys/pointconfig.hpp"
#include "cohsys/segre.hpp"
#include "cohsys/stability.hpp"

namespace cohsys::cli {
namespace {

constexpr const char* kSchema = R"(Output schemas (rationals are strings "p/q"):
  segre      {r,t,c2,s,feasible,cycle_length|null} or {r,t,c2,feasible_values:[s...]}
  stability  {mode,ordering[,classification]}
  critical   {walls:[{a,b,witnesses:[{s,w}]}],chambers:[{rep:{a,b}}],discrepancies:[...]}
  chambers   same as critical
  flip-dim   {ext1,base,sigma_minus}
  points     gen/witness: {points:[[x,y,z]...],...}; h0: {h0}; no-curve: {no_curve}; cb: {cb}
  nonempty   {sufficient:{clause,s0}|null,thresholds:{...}[,exact:{...}]}
  sweep      one JSON record per line per (r,t,c2) cell
)";

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const PreconditionError&) {
    throw PreconditionError("--" + flag + " expects a rational like 5/2, got '" + text + "'");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << j.dump(2) << "\n";
}

json walls_json(const std::vector<CriticalValue>& walls) { return json(walls); }

json chambers_json(const Chambers& ch) {
  json reps = json::array();
  for (const auto& rep : ch.representatives) reps.push_back({{"rep", rep}});
  return reps;
}

struct Options {
  int r = 0, t = 0, c2 = 0, k = 2, s = 0, c1L = 0, w = 0, d = 0, l = 0, s0 = 0;
  int r_max = 8, c2_max = 80;
  std::string a = "1", b = "0", mode = "linear", kind = "general", file, out_file;
  std::uint64_t seed = 1;
  bool oracle = false, compare = false, semistable = false, float_out = false;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stability, wall-crossing and Segre-invariant computations for rank-2 "
               "coherent systems on P^2"};
  app.require_subcommand(1);
  app.footer(kSchema);
  Options o;
  app.add_flag("--float", o.float_out, "add approximate decimals next to exact rationals");
  app.add_option("--out", o.out_file, "write JSON to this file instead of stdout");

  // Each subcommand produces a list of JSON records and may request exit code 3.
  std::vector<json> records;
  bool inconsistent = false;
  std::function<void()> action;

  auto* segre = app.add_subcommand("segre", "Segre-invariant feasibility");
  segre->add_option("--r", o.r)->required();
  segre->add_option("--t", o.t)->required();
  segre->add_option("--c2", o.c2)->required();
  auto* segre_s = segre->add_option("--s", o.s);
  segre->callback([&] {
    action = [&, segre_s] {
      if (segre_s->count() > 0) {
        const bool ok = segre_feasible(o.r, o.t, o.c2, o.s);
        const int len = o.c2 + o.s * o.s - o.r * o.r + o.t * (o.r - o.s);
        json j{{"r", o.r}, {"t", o.t}, {"c2", o.c2}, {"s", o.s}, {"feasible", ok}};
        j["cycle_length"] = len >= 0 ? json(len) : json(nullptr);
        records.push_back(j);
      } else {
        records.push_back({{"r", o.r},
                           {"t", o.t},
                           {"c2", o.c2},
                           {"feasible_values", feasible_segre_values(o.r, o.t, o.c2)}});
      }
    };
  });

  auto* stab = app.add_subcommand("stability", "compare a subsystem against the system");
  stab->add_option("--r", o.r)->required();
  stab->add_option("--t", o.t)->required();
  stab->add_option("--c2", o.c2)->required();
  stab->add_option("--k", o.k)->required();
  stab->add_option("--a", o.a, "alpha slope (or the constant value in constant mode)");
  stab->add_option("--b", o.b, "alpha constant term");
  stab->add_option("--c1L", o.c1L)->required();
  stab->add_option("--w", o.w)->required();
  auto* stab_s = stab->add_option("--s", o.s, "classify with (c1L, w) as the maximal subsystem");
  stab->add_option("--mode", o.mode, "linear | constant | highdeg")
      ->check(CLI::IsMember({"linear", "constant", "highdeg"}));
  stab->callback([&] {
    action = [&, stab_s] {
      const CsType cs = CsType::make(o.r, o.t, o.c2, o.k);
      const SubsystemData sub{o.c1L, o.w};
      const AlphaLinear alpha{parse_rational("a", o.a), parse_rational("b", o.b)};
      Ordering ord;
      if (o.mode == "constant") {
        ord = compare_sub_constant(cs, alpha.a, sub);
      } else if (o.mode == "highdeg") {
        ord = compare_sub_highdeg(cs, sub);
      } else {
        ord = compare_sub_linear(cs, alpha, sub);
      }
      json j{{"mode", o.mode}, {"cs", cs}, {"sub", sub}, {"ordering", to_string(ord)}};
      if (o.mode != "highdeg") j["alpha"] = alpha;
      if (stab_s->count() > 0) {
        j["classification"] = to_string(classify_with_maximal(cs, alpha, sub, o.s));
      }
      records.push_back(j);
    };
  });

  auto* crit = app.add_subcommand("critical", "critical values for k = 2");
  crit->add_option("--r", o.r)->required();
  crit->add_option("--t", o.t)->required();
  crit->add_option("--c2", o.c2)->required();
  auto* crit_a = crit->add_option("--a", o.a, "query slope");
  auto* crit_b = crit->add_option("--b", o.b, "query constant term");
  crit->add_flag("--oracle", o.oracle, "use the brute-force equality locus");
  crit->add_flag("--compare", o.compare, "diff closed form against the oracle");
  crit->callback([&] {
    action = [&, crit_a, crit_b] {
      const CsType cs = CsType::make(o.r, o.t, o.c2, 2);
      json j;
      if (o.compare) {
        const Comparison cmp = compare_closed_form(o.r, o.t, o.c2);
        j = cmp;
        inconsistent = cmp.has_unflagged();
      } else if (o.oracle) {
        j["walls"] = walls_json(equality_locus(cs));
      } else {
        const ClosedForm cf = critical_values_closed_form(o.r, o.t, o.c2);
        j["walls"] = walls_json(cf.values);
        j["regime"] = to_string(cf.regime);
        if (cf.s0) j["s0"] = *cf.s0;
      }
      if (!o.compare) {
        j["chambers"] = chambers_json(chambers(cs));
        j["discrepancies"] = json::array();
      }
      if (crit_a->count() > 0 || crit_b->count() > 0) {
        const AlphaLinear alpha{parse_rational("a", o.a), parse_rational("b", o.b)};
        const CriticalQuery q = is_critical(cs, alpha);
        json query{{"alpha", alpha}, {"critical", q.critical}, {"witnesses", q.witnesses}};
        if (!q.critical) {
          const RegularWindow win = regular_window(cs, alpha);
          query["window"] = {{"lower", win.lower ? json(*win.lower) : json(nullptr)},
                             {"upper", win.upper ? json(*win.upper) : json(nullptr)}};
        }
        j["query"] = query;
      }
      records.push_back(j);
    };
  });

  auto* cham = app.add_subcommand("chambers", "walls and chamber representatives for k = 2");
  cham->add_option("--r", o.r)->required();
  cham->add_option("--t", o.t)->required();
  cham->add_option("--c2", o.c2)->required();
  cham->callback([&] {
    action = [&] {
      const Chambers ch = chambers(CsType::make(o.r, o.t, o.c2, 2));
      records.push_back({{"walls", walls_json(ch.walls)},
                         {"chambers", chambers_json(ch)},
                         {"discrepancies", json::array()}});
    };
  });

  auto* flip = app.add_subcommand("flip-dim", "flip-locus dimensions at a w = 2 wall");
  flip->add_option("--r", o.r)->required();
  flip->add_option("--s", o.s)->required();
  flip->add_option("--t", o.t)->required();
  flip->add_option("--c2", o.c2)->required();
  flip->callback([&] { action = [&] { records.push_back(flip_dims(o.r, o.s, o.t, o.c2)); }; });

  auto* pts = app.add_subcommand("points", "zero cycles as point configurations");
  pts->require_subcommand(1);
  auto* pgen = pts->add_subcommand("gen", "generate a configuration");
  pgen->add_option("--kind", o.kind, "collinear | general")
      ->check(CLI::IsMember({"collinear", "general"}));
  pgen->add_option("--l", o.l)->required();
  pgen->add_option("--seed", o.seed);
  pgen->add_option("--file", o.file, "also write the points to this file");
  pgen->callback([&] {
    action = [&] {
      const PointConfig z = o.kind == "collinear" ? gen_collinear(o.l, o.seed)
                                                  : gen_general(o.l, o.seed);
      const json arr = points_to_json(z);
      if (!o.file.empty()) write_json_file(o.file, arr);
      records.push_back({{"kind", o.kind}, {"seed", o.seed}, {"points", arr}});
    };
  });
  auto add_query = [&](const char* name, const char* help, auto fn) {
    auto* sub = pts->add_subcommand(name, help);
    sub->add_option("--file", o.file)->required();
    sub->add_option("--d", o.d)->required();
    sub->callback([&, fn] {
      action = [&, fn] { records.push_back(fn(points_from_json(read_json_file(o.file)), o.d)); };
    });
  };
  add_query("h0", "h^0(O(d) (x) I_Z)",
            [](const PointConfig& z, int d) { return json{{"d", d}, {"h0", h0_ideal(z, d)}}; });
  add_query("no-curve", "Z lies on no curve of degree d", [](const PointConfig& z, int d) {
    return json{{"d", d}, {"no_curve", lies_on_no_curve(z, d)}};
  });
  add_query("cb", "Cayley-Bacharach property in degree d", [](const PointConfig& z, int d) {
    return json{{"d", d}, {"cb", cayley_bacharach(z, d)}};
  });
  auto* pwit = pts->add_subcommand("witness", "certified zero cycle for an extension");
  pwit->add_option("--r", o.r)->required();
  pwit->add_option("--t", o.t)->required();
  pwit->add_option("--c2", o.c2)->required();
  pwit->add_option("--s", o.s)->required();
  pwit->add_option("--seed", o.seed);
  pwit->add_option("--file", o.file, "also write the points to this file");
  pwit->callback([&] {
    action = [&] {
      const WitnessConfig wc = witness_config(o.r, o.t, o.c2, o.s, o.seed);
      // re-derive the certificate instead of trusting the generator's flags
      const bool no_curve = lies_on_no_curve(wc.points, wc.no_curve_degree);
      const bool cb = cayley_bacharach(wc.points, wc.cb_degree);
      if (o.s >= 1 && !(no_curve && cb)) inconsistent = true;
      const json arr = points_to_json(wc.points);
      if (!o.file.empty()) write_json_file(o.file, arr);
      records.push_back({{"points", arr},
                         {"length", wc.points.size()},
                         {"no_curve_degree", wc.no_curve_degree},
                         {"no_curve", no_curve},
                         {"cb_degree", wc.cb_degree},
                         {"cb", cb}});
    };
  });

  auto* ne = app.add_subcommand("nonempty", "non-emptiness of the moduli for k = 2");
  ne->add_option("--r", o.r)->required();
  ne->add_option("--t", o.t)->required();
  ne->add_option("--c2", o.c2)->required();
  ne->add_option("--a", o.a)->required();
  ne->add_option("--b", o.b);
  auto* ne_s0 = ne->add_option("--s0", o.s0, "window index for the exact criterion");
  ne->add_flag("--semistable", o.semistable);
  ne->callback([&] {
    action = [&, ne_s0] {
      const Rational a = parse_rational("a", o.a);
      const Rational b = parse_rational("b", o.b);
      const Rational half_t(o.t, 2);
      json j{{"r", o.r}, {"t", o.t}, {"c2", o.c2}, {"a", a}};
      if (2 * o.r - o.t > 0) {
        const auto v = nonempty_sufficient(o.r, o.t, o.c2, a);
        j["sufficient"] = v ? json{{"clause", v->clause},
                                  {"s0", v->s0 ? json(*v->s0) : json(nullptr)}}
                            : json(nullptr);
        json clause3 = json::array();
        for (int s0 = o.t + 2 - o.r; s0 <= -1; ++s0) {
          clause3.push_back({{"s0", s0},
                             {"a_above", half_t - Rational(s0)},
                             {"c2_min", o.r * o.r - s0 * s0 + (s0 - o.r) * o.t}});
        }
        j["thresholds"] = {{"clause1_c2_min", o.r * o.r - o.t + 2},
                           {"clause2_c2_range", {o.r * o.r - o.r * o.t, o.r * o.r - o.t + 2}},
                           {"clause2_a_above", half_t},
                           {"clause3", clause3},
                           {"clause4_c2", {2 * o.r - o.t, 2 * o.r - o.t - 1}},
                           {"clause4_a_above", Rational(o.r - 1) - half_t}};
      } else {
        j["trivial_only"] = trivial_only(o.r, o.t, o.c2, 2);
      }
      if (ne_s0->count() > 0) {
        j["exact"] = {{"s0", o.s0},
                      {"b", b},
                      {"semistable", o.semistable},
                      {"a_edge", Rational(-o.s0) + half_t},
                      {"b_threshold", nonempty_b_threshold(o.r, o.t, o.c2, o.s0)},
                      {"nonempty", nonempty_iff(o.r, o.t, o.c2, o.s0, a, b, o.semistable)}};
      }
      records.push_back(j);
    };
  });

  auto* sweep = app.add_subcommand("sweep", "grid sweep over (r, t, c2), k = 2");
  sweep->add_option("--r-max", o.r_max);
  sweep->add_option("--c2-max", o.c2_max);
  auto* sweep_t = sweep->add_option("--t", o.t, "restrict to one parity");
  sweep->add_flag("--compare", o.compare, "exit 3 on an unflagged closed-form/oracle mismatch");
  sweep->callback([&] {
    action = [&, sweep_t] {
      for (int r = 1; r <= o.r_max; ++r) {
        for (int t = 0; t <= 1; ++t) {
          if (sweep_t->count() > 0 && t != o.t) continue;
          for (int c2 = 0; c2 <= o.c2_max; ++c2) {
            const Comparison cmp = compare_closed_form(r, t, c2);
            json j = cmp;
            if (!o.compare) {
              j.erase("discrepancies");
              j.erase("boundary_notes");
              j.erase("unflagged_mismatch");
            } else if (cmp.has_unflagged()) {
              inconsistent = true;
            }
            records.push_back(std::move(j));
          }
        }
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    action();
  } catch (const InvariantError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream buf;
  const bool lines = records.size() != 1;
  for (const auto& rec : records) {
    const json shown = o.float_out ? with_float_annotations(rec) : rec;
    buf << (lines ? shown.dump() : shown.dump(2)) << "\n";
  }
  if (o.out_file.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.out_file);
    if (!f) {
      err << "error: cannot write " << o.out_file << "\n";
      return kExitUsage;
    }
    f << buf.str();
  }
  return inconsistent ? kExitInconsistent : kExitOk;
}

}  // namespace cohsys::cli
