#include "ratslice/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>

#include "ratslice/bounds.hpp"
#include "ratslice/braid.hpp"
#include "ratslice/error.hpp"
#include "ratslice/grid.hpp"
#include "ratslice/io.hpp"
#include "ratslice/paperdata.hpp"
#include "ratslice/ratlink.hpp"

namespace ratslice::cli {

namespace {

using io::Json;

struct SpectrumSource {
  std::string builtin;
  std::string framed;
  std::string complex;
  std::string tau_max;
  std::string tau_min;

  void attach(CLI::App* sub) {
    sub->add_option("--builtin", builtin, "embedded dataset name");
    sub->add_option("--framed", framed, "FramedKnotData JSON file");
    sub->add_option("--complex", complex, "FilteredComplex JSON file");
    sub->add_option("--tau-max", tau_max, "tau_max as a rational");
    sub->add_option("--tau-min", tau_min, "tau_min as a rational");
  }

  struct Loaded {
    TauSpectrum spectrum;
    std::optional<FramedKnotData> framed;
    std::string source;
  };

  Loaded load() const {
    int given = !builtin.empty() + !framed.empty() + !complex.empty() +
                (!tau_max.empty() || !tau_min.empty());
    if (given != 1) {
      throw InputError("give exactly one of --builtin, --framed, --complex, --tau-max/--tau-min");
    }
    if (!builtin.empty()) {
      auto b = ratslice::builtin(builtin);
      const auto* k = std::get_if<FramedKnotData>(&b);
      if (!k) throw InputError("builtin '" + builtin + "' carries no tau spectrum");
      return {k->tau_spectrum, *k, "builtin:" + builtin};
    }
    if (!framed.empty()) {
      auto k = io::framed_from_json(io::parse_json(io::read_file(framed), framed));
      return {k.tau_spectrum, k, framed};
    }
    if (!complex.empty()) {
      auto c = io::complex_from_json(io::parse_json(io::read_file(complex), complex));
      return {tau_spectrum(c), std::nullopt, complex};
    }
    if (tau_max.empty() || tau_min.empty()) throw InputError("--tau-max and --tau-min go together");
    TauSpectrum s;
    s.tau_max = parse_rational(tau_max);
    s.tau_min = parse_rational(tau_min);
    s.taus = {{"max", s.tau_max}, {"min", s.tau_min}};
    s.enumeration_complete = false;
    validate_spectrum(s);
    return {s, std::nullopt, "command line"};
  }
};

Rational rational_arg(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    throw InputError("--" + name + ": " + e.what());
  }
}

Json document(const std::string& verb, const std::string& citation) {
  return {{"verb", verb}, {"citation", citation}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heegaard Floer tau invariants and rational genus bounds", "ratslice"};
  app.require_subcommand(1);

  SpectrumSource tau_src;
  std::string tau_id;
  auto* tau_cmd = app.add_subcommand("tau", "tau spectrum of a filtered complex or dataset");
  tau_src.attach(tau_cmd);
  tau_cmd->add_option("--class", tau_id, "report only this class id");

  std::vector<int> torus;
  std::string grid_file;
  auto* grid_cmd = app.add_subcommand("grid-tau", "tau of a knot in S^3 from a grid diagram");
  grid_cmd->add_option("--torus", torus, "p q")->expected(2);
  grid_cmd->add_option("--grid", grid_file, "grid file: X row then O row");

  long long cable_p = 0;
  std::string cable_tau;
  std::string cable_lk;
  auto* cable_cmd = app.add_subcommand("cable-bound", "tau interval for the (p, pn+1) cable");
  cable_cmd->add_option("--p", cable_p)->required();
  cable_cmd->add_option("--tau", cable_tau)->required();
  cable_cmd->add_option("--lk", cable_lk, "lk(K, lambda_n)")->required();

  std::string sat_braid;
  std::string sat_tau;
  std::string sat_lk;
  long long sat_p = 0;
  long long sat_w = 0;
  long long sat_comps = 0;
  long long sat_plus = 0;
  long long sat_minus = 0;
  auto* sat_cmd = app.add_subcommand("satellite-bound", "tau interval for a braided satellite");
  sat_cmd->add_option("--braid", sat_braid, "pattern as 'n: letters'");
  sat_cmd->add_option("--p", sat_p);
  sat_cmd->add_option("--writhe", sat_w);
  sat_cmd->add_option("--comps", sat_comps);
  sat_cmd->add_option("--tau", sat_tau)->required();
  sat_cmd->add_option("--lk", sat_lk)->required();
  sat_cmd->add_option("--plus-changes", sat_plus);
  sat_cmd->add_option("--minus-changes", sat_minus);

  SpectrumSource genus_src;
  long long genus_p = 0;
  std::optional<long long> genus_c;
  auto* genus_cmd = app.add_subcommand("genus-bound", "rational slice genus bounds from tau");
  genus_src.attach(genus_cmd);
  genus_cmd->add_option("--p", genus_p, "surface degree for the boundary-constant analysis");
  genus_cmd->add_option("--c", genus_c, "boundary constant");

  SpectrumSource sf_src;
  long long sf_p = 0;
  auto* sf_cmd = app.add_subcommand("seifert-framed-bound",
                                    "bound for surfaces bounding the rational longitude");
  sf_src.attach(sf_cmd);
  sf_cmd->add_option("--p", sf_p)->required();

  std::string ds_builtin;
  std::string ds_file;
  long long ds_target = 1;
  auto* ds_cmd = app.add_subcommand("deep-slice", "survivor deduction for an L-space lift");
  ds_cmd->add_option("--builtin", ds_builtin);
  ds_cmd->add_option("--poincare", ds_file, "Poincare polynomial JSON file");
  ds_cmd->add_option("--target", ds_target, "rank of HF-hat per spinc");

  std::string bi_braid;
  auto* bi_cmd = app.add_subcommand("braid-info", "writhe, components and knottification");
  bi_cmd->add_option("--braid", bi_braid)->required();

  std::string cv_braid;
  std::string cv_lk;
  long long cv_order = 1;
  int cv_twist = 0;
  auto* cv_cmd = app.add_subcommand("c-value", "boundary constant of a braided satellite");
  cv_cmd->add_option("--braid", cv_braid)->required();
  cv_cmd->add_option("--lk", cv_lk)->required();
  cv_cmd->add_option("--order", cv_order);
  cv_cmd->add_option("--twist", cv_twist, "also report after m framing twists");

  std::string sb_tb;
  std::string sb_rot;
  long long sb_chi = 0;
  long long sb_p = 1;
  auto* sb_cmd = app.add_subcommand("slice-bennequin-check", "rational slice-Bennequin inequality");
  sb_cmd->add_option("--tb", sb_tb)->required();
  sb_cmd->add_option("--rot", sb_rot)->required();
  sb_cmd->add_option("--chi", sb_chi)->required();
  sb_cmd->add_option("--p", sb_p);

  auto* vp_cmd = app.add_subcommand("verify-paper", "recompute every embedded worked value");

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' &&
      !app.get_subcommand_no_throw(args[0])) {
    err << "error: unknown verb '" << args[0] << "'\n" << app.help();
    return input_error;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return input_error;
  }

  try {
    Json doc;
    int code = ok;
    if (*tau_cmd) {
      auto loaded = tau_src.load();
      doc = document("tau", "tau_alpha = min{ A(x) : [x] = alpha }, minimised over representatives");
      doc["source"] = loaded.source;
      if (!tau_id.empty()) {
        auto it = loaded.spectrum.taus.find(tau_id);
        if (it == loaded.spectrum.taus.end()) throw InputError("--class: unknown class '" + tau_id + "'");
        doc["class"] = tau_id;
        doc["tau"] = io::rational_to_json(it->second);
      }
      doc["tau_spectrum"] = io::spectrum_to_json(loaded.spectrum);
    } else if (*grid_cmd) {
      if (torus.empty() == grid_file.empty()) throw InputError("give exactly one of --torus, --grid");
      GridDiagram g = torus.empty() ? parse_grid(io::read_file(grid_file))
                                    : torus_knot_grid(torus[0], torus[1]);
      doc = document("grid-tau", "tau of the generator of HF-hat(S^3) under the grid Alexander filtration");
      doc["grid"] = {{"size", g.size()}, {"X", g.x()}, {"O", g.o()}};
      if (!torus.empty()) doc["torus"] = {{"p", torus[0]}, {"q", torus[1]}};
      doc["tau"] = io::rational_to_json(grid_tau(g));
    } else if (*cable_cmd) {
      auto iv = cable_tau_interval(cable_p, rational_arg(cable_tau, "tau"), rational_arg(cable_lk, "lk"));
      doc = document("cable-bound",
                     "p tau + p(p-1) lk/2 <= tau(K_{p,pn+1}) <= p tau + p(p-1) lk/2 + (p-1)");
      doc["inputs"] = {{"p", cable_p}, {"tau", cable_tau}, {"lk", cable_lk}};
      doc["interval"] = io::interval_to_json(iv);
    } else if (*sat_cmd) {
      long long p = sat_p;
      long long w = sat_w;
      long long comps = sat_comps;
      if (!sat_braid.empty()) {
        BraidWord b = parse_braid(sat_braid);
        p = b.index();
        w = writhe(b);
        comps = static_cast<long long>(components(b));
      } else if (p < 1 || comps < 1) {
        throw InputError("give --braid, or --p, --writhe and --comps");
      }
      auto iv = bp_tau_interval(p, rational_arg(sat_tau, "tau"), rational_arg(sat_lk, "lk"), w, comps);
      doc = document("satellite-bound",
                     "|2 tau(P) - 2p tau(K) - (p-1)p lk - w| <= (p-1) + |beta| - 1");
      doc["inputs"] = {{"p", p}, {"writhe", w}, {"comps", comps}, {"tau", sat_tau}, {"lk", sat_lk}};
      doc["interval"] = io::interval_to_json(iv);
      if (sat_plus || sat_minus) {
        doc["after_crossing_changes"] =
            io::interval_to_json(crossing_change_propagate(iv, sat_plus, sat_minus));
      }
    } else if (*genus_cmd) {
      auto loaded = genus_src.load();
      auto breadth = genus_lower_bound_breadth(loaded.spectrum);
      doc = document("genus-bound", breadth.citation);
      doc["source"] = loaded.source;
      Json reports = Json::array();
      reports.push_back(io::report_to_json(breadth));
      if (loaded.framed && loaded.framed->floer_simple.value_or(false)) {
        reports.push_back(io::report_to_json(floer_simple_genus(loaded.spectrum)));
      }
      if (loaded.framed && loaded.framed->linking_form) {
        doc["linking_form_breadth_lower"] =
            io::rational_to_json(linking_form_breadth_lower(*loaded.framed->linking_form));
      }
      if (genus_p > 0) {
        auto opt = optimal_c(loaded.spectrum, genus_p);
        doc["c_star"] = io::rational_to_json(opt.c_star);
        doc["best_integer_c"] = opt.best_integer_c;
        reports.push_back(io::report_to_json(opt.bound));
        if (genus_c) reports.push_back(io::report_to_json(surface_bound_with_c(loaded.spectrum, *genus_c, genus_p)));
      } else if (genus_c) {
        throw InputError("--c needs --p");
      }
      doc["reports"] = std::move(reports);
    } else if (*sf_cmd) {
      auto loaded = sf_src.load();
      auto r = seifert_framed_bound(loaded.spectrum, sf_p);
      doc = document("seifert-framed-bound", r.citation);
      doc["source"] = loaded.source;
      doc["report"] = io::report_to_json(r);
    } else if (*ds_cmd) {
      if (ds_builtin.empty() == ds_file.empty()) throw InputError("give exactly one of --builtin, --poincare");
      if (ds_target < 1) throw InputError("--target must be at least 1");
      PoincareFamily family;
      if (!ds_builtin.empty()) {
        auto b = builtin(ds_builtin);
        const auto* f = std::get_if<PoincareFamily>(&b);
        if (!f) throw InputError("builtin '" + ds_builtin + "' is not a Poincare polynomial");
        family = *f;
      } else {
        family = io::family_from_json(io::parse_json(io::read_file(ds_file), ds_file));
      }
      Json verdicts = Json::array();
      bool deep = false;
      std::string citation;
      for (const auto& p : family) {
        auto v = deep_slice_report(p, static_cast<std::size_t>(ds_target));
        deep = deep || v.deep_slice;
        citation = v.citation;
        Json j = io::verdict_to_json(v);
        j["spinc"] = p.spinc;
        verdicts.push_back(std::move(j));
      }
      doc = document("deep-slice", citation);
      doc["verdicts"] = std::move(verdicts);
      doc["deep_slice"] = deep;
    } else if (*bi_cmd) {
      BraidWord b = parse_braid(bi_braid);
      auto [k, l] = splitting_counts(b);
      doc = document("braid-info", "writhe = positive - negative letters; components = cycles of the closure permutation");
      doc["braid"] = format_braid(b);
      doc["index"] = b.index();
      doc["writhe"] = writhe(b);
      doc["components"] = components(b);
      doc["positive_crossings"] = k;
      doc["negative_crossings"] = l;
      doc["permutation"] = permutation(b);
      doc["knottified_positive"] = format_braid(knottify_crossings(b, 1));
      doc["knottified_negative"] = format_braid(knottify_crossings(b, -1));
    } else if (*cv_cmd) {
      SatelliteSpec s{parse_braid(cv_braid), rational_arg(cv_lk, "lk"), cv_order};
      doc = document("c-value", "c = (p-1) p lk + w");
      doc["inputs"] = {{"braid", format_braid(s.pattern)}, {"lk", format_rational(s.framing_lk)}, {"order", cv_order}};
      doc["c"] = c_value(s);
      if (cv_twist != 0) {
        auto t = twist_normalize(s, cv_twist);
        doc["twisted"] = {{"m", cv_twist},
                          {"lk", format_rational(t.framing_lk)},
                          {"writhe", writhe(t.pattern)},
                          {"c", c_value(t)}};
      }
    } else if (*sb_cmd) {
      auto r = slice_bennequin_check(rational_arg(sb_tb, "tb"), rational_arg(sb_rot, "rot"), sb_chi, sb_p);
      doc = document("slice-bennequin-check", r.citation);
      doc["report"] = io::report_to_json(r);
      if (!*r.satisfied) code = check_failed;
    } else if (*vp_cmd) {
      auto checks = run_paper_checks();
      Json arr = Json::array();
      bool all = true;
      for (const auto& c : checks) {
        all = all && c.pass;
        arr.push_back({{"citation", c.citation}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
      }
      doc = document("verify-paper", "every embedded worked value recomputed from scratch");
      doc["checks"] = std::move(arr);
      doc["all_pass"] = all;
      if (!all) code = check_failed;
    }
    out << io::dump(doc);
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return check_failed;
  }
}

}  // namespace ratslice::cli
