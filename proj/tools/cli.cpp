#include "cli.hpp"

#include <chrono>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"
#include "spincalc/bn/evaluate.hpp"
#include "spincalc/error.hpp"
#include "spincalc/expr/parser.hpp"
#include "spincalc/genus12/pipeline.hpp"
#include "spincalc/numerics/numerics.hpp"
#include "spincalc/pic/certificate.hpp"
#include "spincalc/pic/solve_zg.hpp"
#include "spincalc/ring/presets.hpp"

namespace spincalc::cli {

namespace {

struct Options {
  std::string format = "json";
  int g = 0;
  std::string preset;
  std::string expr;
  std::string side;
  std::string name;
  std::string space = "spin";
  std::string curve;
  std::string cls;
  std::string aux;
  std::optional<int> r;
  std::optional<int> d;
  bool dump = false;
};

Json class_json(const pic::DivisorClass& c) {
  Json j;
  j["basis"] = c.basis().label();
  j["class"] = c.render();
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < c.basis().size(); ++i) coeffs[c.basis().name(i)] = scalar(c.raw(i));
  j["coefficients"] = coeffs;
  return j;
}

pic::DivisorClass named_class(const std::string& name, int g, const std::string& space, Report& report) {
  if (name == "zg") return pic::zg_class(g);
  if (name == "k") return pic::canonical_class(space == "moduli" ? pic::Space::moduli : pic::Space::spin, g);
  if (name == "bn") {
    bool prime = g + 1 >= 2;
    for (int q = 2; q * q <= g + 1; ++q) prime = prime && (g + 1) % q != 0;
    if (prime) report.assumptions.push_back("g + 1 is prime: no Brill-Noether divisor of this form exists");
    return pic::bn_divisor_class(g);
  }
  if (name == "d12") {
    if (g != 12) throw PreconditionError("d12 is a class on the genus-12 moduli space");
    report.assumptions.push_back("b_j for j >= 2 is only bounded below by b1; left at 0 here");
    return genus12::d12_class(false);
  }
  throw PreconditionError("unknown class name '" + name + "'");
}

bool is_class_name(const std::string& s) { return s == "zg" || s == "k" || s == "bn" || s == "d12"; }

void note_assumed(const pic::TestCurve& t, Report& report) {
  if (t.assumed_zero.empty()) return;
  std::string list;
  for (const auto& z : t.assumed_zero) list += (list.empty() ? "" : ", ") + z;
  report.assumptions.push_back("test curve " + t.name + ": zero pairing assumed with " + list);
}

// --- ring ---------------------------------------------------------------

Report ring_eval(const Options& o) {
  Report rep;
  rep.command = "ring eval";
  rep.inputs["preset"] = o.preset;
  rep.inputs["expr"] = o.expr;
  if (!o.side.empty()) rep.inputs["side"] = o.side;

  const auto preset = ring::preset_from_key(o.preset);
  const ring::RingElem e = expr::parse_ring_elem(o.expr, preset);
  rep.result["normalized"] = e.render();
  rep.result["degree"] = e.max_degree();

  const int deg = e.max_degree();
  if (e.is_zero()) return rep;
  if (!e.is_homogeneous(deg)) {
    rep.warnings.push_back("element is not homogeneous; nothing integrated");
    return rep;
  }

  const std::string kind = o.preset.substr(0, o.preset.find(':'));
  if (kind == "jac") {
    const int g = preset->param("g");
    bool pure = true;
    for (const auto& [m, c] : e.terms()) {
      for (std::size_t i = 3; i < m.size(); ++i) pure = pure && m[i] == 0;
    }
    if (pure && deg == g + 1) {
      rep.result["integral"] = scalar(ring::integrate(e));
      return rep;
    }
    const int r = preset->param("r");
    const int d = preset->param("d");
    if (numerics::rho(g, r, d) < 0) {
      rep.warnings.push_back("W^r_d is empty for a general curve; no evaluation");
      return rep;
    }
    const bn::BNContext ctx(g, r, d);
    if (o.side.empty()) {
      if (e.max_exponent(preset->index("k")) > 0) throw PreconditionError("k needs --side X or --side Y");
      if (deg != ctx.rho() + 1) {
        rep.warnings.push_back("degree " + std::to_string(deg) + " differs from the top degree " +
                               std::to_string(ctx.rho() + 1) + "; nothing integrated");
        return rep;
      }
      rep.result["intersection_number"] = scalar(bn::evaluate_taut(ctx, e));
      return rep;
    }
    // With a side the element is a class on the locus, which has codimension r in C x W.
    const bn::LocusSide side = o.side == "X" ? bn::LocusSide::X : bn::LocusSide::Y;
    if (deg != ctx.rho() + 1 - r) {
      rep.warnings.push_back("degree " + std::to_string(deg) + " differs from the locus dimension " +
                             std::to_string(ctx.rho() + 1 - r) + "; nothing integrated");
      return rep;
    }
    const auto k = preset->index("k");
    const auto [free, linear] = e.split_linear(k);
    const ring::RingElem integrand = free * bn::locus_class(ctx, side) + ring::RingElem::generator(preset, "k") * linear;
    rep.result["intersection_number"] = scalar(bn::evaluate_taut(ctx, integrand, side));
  } else if (kind == "surface" && deg == 2) {
    rep.result["integral"] = scalar(ring::integrate(e));
  } else if (kind == "curve" && deg == 2) {
    rep.result["pushforward"] = ring::pushforward_relative(e).render();
  }
  return rep;
}

// --- pic ----------------------------------------------------------------

Report pic_class(const Options& o) {
  Report rep;
  rep.command = "pic class";
  rep.inputs["g"] = o.g;
  rep.inputs["name"] = o.name;
  if (o.name == "k") rep.inputs["space"] = o.space;
  const pic::DivisorClass c = named_class(o.name, o.g, o.space, rep);
  rep.result = class_json(c);
  if (c.basis().space() == pic::Space::moduli) {
    const auto s = pic::slope(c);
    rep.result["slope"] = s ? scalar(*s) : Json(nullptr);
  }
  if (o.name == "d12") rep.result["b_j_for_j_ge_2"] = ">= " + c.bar("delta1").str();
  return rep;
}

Report pic_pair(const Options& o) {
  Report rep;
  rep.command = "pic pair";
  rep.inputs["g"] = o.g;
  rep.inputs["curve"] = o.curve;
  rep.inputs["class"] = o.cls;

  std::string name = o.curve;
  std::optional<int> index;
  if (const auto colon = o.curve.find(':'); colon != std::string::npos) {
    name = o.curve.substr(0, colon);
    const std::string idx = o.curve.substr(colon + 1);
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos) {
      throw PreconditionError("malformed curve index in '" + o.curve + "'");
    }
    index = std::stoi(idx);
  }
  const pic::TestCurve t = pic::test_curve(name, o.g, index);
  note_assumed(t, rep);
  const pic::DivisorClass c =
      is_class_name(o.cls) ? named_class(o.cls, o.g, o.space, rep) : expr::parse_divisor_class(o.cls, t.basis);
  rep.result["curve"] = t.name;
  Json pairings = Json::object();
  for (std::size_t i = 0; i < t.basis.size(); ++i) pairings[t.basis.name(i)] = scalar(t.pairings[i]);
  rep.result["curve_pairings"] = pairings;
  rep.result["class"] = c.render();
  rep.result["pairing"] = scalar(pic::pair(t, c));
  return rep;
}

Report pic_transfer(const Options& o, bool push) {
  Report rep;
  rep.command = push ? "pic push" : "pic pull";
  rep.inputs["g"] = o.g;
  const pic::PicBasis from = push ? pic::PicBasis::spin(o.g) : pic::PicBasis::moduli(o.g);
  pic::DivisorClass c(from);
  if (!o.cls.empty()) {
    rep.inputs["class"] = o.cls;
    c = named_class(o.cls, o.g, push ? "spin" : "moduli", rep);
  } else {
    rep.inputs["expr"] = o.expr;
    c = expr::parse_divisor_class(o.expr, from);
  }
  if (!(c.basis() == from)) throw MismatchError("class lives on " + c.basis().label() + ", expected " + from.label());
  rep.result["input"] = c.render();
  rep.result["output"] = class_json(push ? pic::pushforward(c) : pic::pullback(c));
  if (push) rep.result["degree"] = bigint(pic::covering_degree(o.g));
  return rep;
}

Report pic_solve_zg(const Options& o) {
  Report rep;
  rep.command = "pic solve-zg";
  rep.inputs["g"] = o.g;
  const pic::ZgSolution s = pic::solve_zg(o.g);
  rep.result = class_json(s.cls);
  rep.result["rank"] = s.rank;
  rep.result["unknowns"] = s.unknowns;
  rep.result["degenerate"] = s.degenerate;
  rep.result["undetermined"] = s.undetermined;
  rep.result["matches_closed_form"] = s.matches_closed_form;
  rep.assumptions = s.notes;
  if (!s.matches_closed_form) throw InvariantViolation("test-curve solution differs from the closed form");
  return rep;
}

// --- cert / d12 / numbers -------------------------------------------------

Report cert(const Options& o) {
  Report rep;
  rep.command = "cert";
  rep.inputs["g"] = o.g;
  rep.inputs["aux"] = o.aux;
  const pic::CertificateReport c = pic::certificate(o.g, o.aux == "d12" ? pic::Auxiliary::D12 : pic::Auxiliary::BN);
  rep.result["g"] = c.g;
  rep.result["weights"] = Json{{"zg", scalar(c.x)}, {"aux", scalar(c.y)}};
  rep.result["mu"] = scalar(c.mu);
  Json slacks = Json::object();
  for (const auto& [name, s] : c.slacks) slacks[name] = scalar(s);
  rep.result["slacks"] = slacks;
  rep.result["assumed_zero_pairings"] = c.assumed_zero_pairings;
  rep.result["verdict"] = c.pass ? "pass" : "fail";
  rep.assumptions = c.assumptions;
  return rep;
}

Report d12_run(const Options& o) {
  using bn::LocusSide;
  Report rep;
  rep.command = "d12 run";
  rep.inputs["dump_intermediates"] = o.dump;
  const auto& c = genus12::d12_coefficients();
  const auto s = genus12::d12_slope_report();
  rep.result["c1_total"] = scalar(c.c1_total);
  rep.result["c0_total"] = scalar(c.c0_total);
  rep.result["b1"] = scalar(c.b1);
  rep.result["b0"] = scalar(c.b0);
  rep.result["a"] = scalar(c.a);
  rep.result["b_j_for_j_ge_2"] = ">= " + c.b1.str();
  rep.result["class"] = genus12::d12_class(false).render();
  rep.result["slope"] = scalar(s.slope);
  rep.result["threshold"] = scalar(s.threshold);
  rep.result["violates_slope_conjecture"] = s.violates_slope_conjecture;
  rep.result["slope_minus_41_6"] = scalar(s.slope - Scalar(41, 6));
  rep.assumptions.push_back("R pairs to zero with delta_j for j >= 2");
  if (o.dump) {
    const auto& ctx = genus12::context();
    Json inter;
    inter["jet_inverse_chern"] = genus12::jet_inverse_chern(ctx.g(), ctx.d()).render();
    for (LocusSide side : {LocusSide::X, LocusSide::Y}) {
      const std::string tag = bn::side_name(side);
      const auto parts = genus12::c3_difference_parts(side);
      Json j;
      j["inverse_chern_series"] = bn::inverse_chern_series(ctx, side).render();
      j["locus_class"] = genus12::class_locus(side).render();
      j["virtual_top_class"] = bn::virtual_top_class(ctx, side).render();
      j["line_class"] = genus12::line_class(side).render();
      j["kfree"] = parts.kfree.render();
      j["kcoeff"] = parts.kcoeff.render();
      j["total"] = scalar(bn::evaluate_taut(ctx, genus12::locus_integrand(side), side));
      inter[tag] = j;
    }
    for (auto b : {genus12::Bundle::A2, genus12::Bundle::B2}) {
      const auto bc = genus12::bundle_chern(b);
      inter[bc.name] = Json{{"c1", bc.c(1).render()}, {"c2", bc.c(2).render()}, {"c3", bc.c(3).render()}};
    }
    rep.result["intermediates"] = inter;
  }
  return rep;
}

Report numbers(const Options& o) {
  Report rep;
  rep.command = "numbers";
  rep.inputs["g"] = o.g;
  const int g = o.g;
  const auto counts = numerics::theta_counts(g);
  rep.result["theta_counts"] = Json{{"even", bigint(counts.n_even)}, {"odd", bigint(counts.n_odd)}};
  if (g >= 2) {
    Json degs = Json::array();
    for (int i = 0; i <= g / 2; ++i) {
      const auto [a, b] = numerics::boundary_degrees(g, i);
      degs.push_back(Json{{"i", i}, {"degA", bigint(a)}, {"degB", bigint(b)}});
    }
    rep.result["covering_degree"] = bigint(pic::covering_degree(g));
    rep.result["boundary_degrees"] = degs;
  }
  if (g >= 3) {
    const auto p = numerics::theta_pencil_profile(g);
    Json pairings = Json::object();
    for (std::size_t i = 0; i < p.curve.basis.size(); ++i) {
      if (!p.curve.pairings[i].is_zero()) pairings[p.curve.basis.name(i)] = scalar(p.curve.pairings[i]);
    }
    rep.result["theta_pencil"] = Json{{"pairings", pairings},
                                      {"canonical_pairing", scalar(p.canonical_pairing)},
                                      {"k_negative", p.canonical_pairing.sign() < 0},
                                      {"discriminant_degree", p.discriminant_degree},
                                      {"decomposition_holds", p.decomposition_holds}};
    note_assumed(p.curve, rep);
    rep.result["scorza_genus"] = numerics::scorza_genus(g);
  }
  if (g >= 7 && g <= 10) {
    const auto m = numerics::mukai_profile(g);
    rep.result["mukai"] = Json{{"dim_v", m.dim_v}, {"n_g", m.n_g}, {"max_delta_dominant", m.max_delta_dominant}};
  }
  if (o.r && o.d) {
    rep.inputs["r"] = *o.r;
    rep.inputs["d"] = *o.d;
    rep.result["rho"] = numerics::rho(g, *o.r, *o.d);
  }
  return rep;
}

int emit_error(std::ostream& out, std::ostream& err, Format format, const std::string& kind,
               const std::string& message, int code, std::optional<std::size_t> offset = std::nullopt) {
  err << "spincalc: " << kind << ": " << message << '\n';
  if (format == Format::json) {
    Json j;
    j["error"] = Json{{"kind", kind}, {"message", message}};
    if (offset) j["error"]["offset"] = *offset;
    j["exit_code"] = code;
    out << j.dump(2) << '\n';
  }
  return code;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact intersection theory on spin moduli spaces"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.fallthrough();

  auto* ring = app.add_subcommand("ring", "Ring presets")->require_subcommand(1);
  auto* ring_eval_cmd = ring->add_subcommand("eval", "Normalize and evaluate an element");
  ring_eval_cmd->add_option("--preset", o.preset, "Preset key, e.g. jac:g=11,d=14,r=4")->required();
  ring_eval_cmd->add_option("--side", o.side, "Locus for the kernel class k")->check(CLI::IsMember({"X", "Y"}));
  ring_eval_cmd->add_option("expr", o.expr, "Expression")->required();

  auto* pic = app.add_subcommand("pic", "Divisor classes")->require_subcommand(1);
  auto* pic_class_cmd = pic->add_subcommand("class", "A named class");
  pic_class_cmd->add_option("--g", o.g)->required();
  pic_class_cmd->add_option("--name", o.name)->required()->check(CLI::IsMember({"zg", "k", "bn", "d12"}));
  pic_class_cmd->add_option("--space", o.space)->check(CLI::IsMember({"spin", "moduli"}));
  auto* pic_pair_cmd = pic->add_subcommand("pair", "Pair a test curve with a class");
  pic_pair_cmd->add_option("--g", o.g)->required();
  pic_pair_cmd->add_option("--curve", o.curve, "F:i, G:i, F0, G0, H0, C0, C1, R, P")->required();
  pic_pair_cmd->add_option("--class", o.cls, "zg, k, bn, d12 or an expression")->required();
  pic_pair_cmd->add_option("--space", o.space)->check(CLI::IsMember({"spin", "moduli"}));
  auto* pic_push_cmd = pic->add_subcommand("push", "Push a spin class down to the moduli space");
  auto* pic_pull_cmd = pic->add_subcommand("pull", "Pull a moduli class back to the spin space");
  for (auto* c : {pic_push_cmd, pic_pull_cmd}) {
    c->add_option("--g", o.g)->required();
    auto* cls = c->add_option("--class", o.cls, "A named class");
    c->add_option("expr", o.expr, "Expression")->excludes(cls);
  }
  auto* pic_solve_cmd = pic->add_subcommand("solve-zg", "Reconstruct Z_g from test curves");
  pic_solve_cmd->add_option("--g", o.g)->required();

  auto* cert_cmd = app.add_subcommand("cert", "General-type certificate");
  cert_cmd->add_option("--g", o.g)->required();
  cert_cmd->add_option("--aux", o.aux)->required()->check(CLI::IsMember({"bn", "d12"}));

  auto* d12 = app.add_subcommand("d12", "Genus-12 divisor")->require_subcommand(1);
  auto* d12_run_cmd = d12->add_subcommand("run", "Run the Chern-class pipeline");
  d12_run_cmd->add_flag("--dump-intermediates", o.dump);

  auto* numbers_cmd = app.add_subcommand("numbers", "Numeric profile for a genus");
  numbers_cmd->add_option("--g", o.g)->required();
  numbers_cmd->add_option("--r", o.r);
  numbers_cmd->add_option("--d", o.d);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "spincalc: " << e.what() << '\n';
    return kFailure;
  }

  const Format format = o.format == "text" ? Format::text : Format::json;
  const auto start = std::chrono::steady_clock::now();
  try {
    Report rep;
    if (ring_eval_cmd->parsed()) {
      rep = ring_eval(o);
    } else if (pic_class_cmd->parsed()) {
      rep = pic_class(o);
    } else if (pic_pair_cmd->parsed()) {
      rep = pic_pair(o);
    } else if (pic_push_cmd->parsed() || pic_pull_cmd->parsed()) {
      if (o.cls.empty() && o.expr.empty()) throw PreconditionError("give an expression or --class");
      rep = pic_transfer(o, pic_push_cmd->parsed());
    } else if (pic_solve_cmd->parsed()) {
      rep = pic_solve_zg(o);
    } else if (cert_cmd->parsed()) {
      rep = cert(o);
    } else if (d12_run_cmd->parsed()) {
      rep = d12_run(o);
    } else if (numbers_cmd->parsed()) {
      rep = numbers(o);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << rep.render(format, ms);
    return kOk;
  } catch (const ParseError& e) {
    return emit_error(out, err, format, "parse", e.what(), kParseError, e.offset());
  } catch (const MismatchError& e) {
    return emit_error(out, err, format, "mismatch", e.what(), kMismatch);
  } catch (const InvariantViolation& e) {
    return emit_error(out, err, format, "invariant", e.what(), kInvariant);
  } catch (const PreconditionError& e) {
    return emit_error(out, err, format, "precondition", e.what(), kFailure);
  } catch (const std::exception& e) {
    return emit_error(out, err, format, "error", e.what(), kFailure);
  }
}

}  // namespace spincalc::cli
