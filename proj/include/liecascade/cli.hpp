#pragma once

// Command line front end. run() never throws; it returns 0 on success, 1 when
// a verification finds a counterexample, 2 on usage or input errors.

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liecascade/cascade.hpp"
#include "liecascade/certifier.hpp"
#include "liecascade/diagram.hpp"
#include "liecascade/error.hpp"
#include "liecascade/rootsys.hpp"
#include "liecascade/serialize.hpp"
#include "liecascade/torusauto.hpp"
#include "liecascade/weyl.hpp"

namespace liecascade::cli {

/// n(n+1), 2n^2, 2n(n-1) and the exceptional counts.
inline long closed_form_root_count(SystemType t) {
  const long n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

inline std::string perm_string(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

/// Accepts "[1,2,4,3]" or "1,2,4,3".
inline DiagramAut parse_nu(const RootSystem& rs, const std::string& text) {
  const std::string t = !text.empty() && text.front() == '[' ? text : "[" + text + "]";
  return diagram_aut_from_json(rs, parse_json(t, "nu"));
}

struct Options {
  bool json = false;
  unsigned seed = 0;
  int jobs = 1;
};

namespace detail {

inline int cmd_roots(const std::string& type, const Options& o, std::ostream& out) {
  const RootSystem rs = build_root_system(type);
  if (o.json) {
    Json j = to_json(rs);
    j["roots"] = to_json(OrthoSet(rs.roots().begin(), rs.roots().end()));
    j["count"] = rs.roots().size();
    out << j.dump() << "\n";
    return 0;
  }
  out << rs.type().name() << ": " << rs.roots().size() << " roots, " << rs.positives().size() << " positive\n";
  out << "highest long " << to_string(rs.highest_long()) << ", highest short " << to_string(rs.highest_short()) << "\n";
  for (const auto& r : rs.positives()) out << to_string(r) << "\n";
  return 0;
}

inline int cmd_fold(bool all, const std::string& type, const Options& o, std::ostream& out) {
  Json rows = Json::array();
  int mismatches = 0;
  if (all || type.empty()) {
    for (const auto& rec : folding_table(8)) {
      const RootSystem rs = build_root_system(rec.source_type);
      const auto nu = automorphism_of_order(rs, rec.order);
      const SystemType got = folded_fixed_type(rs, *nu);
      const bool match = got == rec.fixed_type;
      if (!match) ++mismatches;
      Json j = to_json(rec);
      j["computed"] = got.name();
      j["match"] = match;
      rows.push_back(j);
      if (!o.json)
        out << rec.source_type.name() << " (" << rec.source << ", order " << rec.order << ") -> " << got.name() << " expected "
            << rec.fixed_type.name() << (match ? "" : "  MISMATCH") << "\n";
    }
  } else {
    const RootSystem rs = build_root_system(type);
    for (const auto& nu : diagram_automorphisms(rs)) {
      if (nu.is_identity()) continue;
      const SystemType got = folded_fixed_type(rs, nu);
      rows.push_back({{"nu", nu.perm}, {"order", order(nu)}, {"fixed_type", got.name()}});
      if (!o.json) out << rs.type().name() << " nu=" << perm_string(nu.perm) << " order " << order(nu) << " -> " << got.name() << "\n";
    }
    if (rows.empty() && !o.json) out << rs.type().name() << " has no nontrivial diagram automorphism\n";
  }
  if (o.json) out << rows.dump() << "\n";
  return mismatches ? 1 : 0;
}

inline int cmd_cascade(const std::string& type, const Options& o, std::ostream& out) {
  const RootSystem rs = build_root_system(type);
  const OrthoSet c = kostant_cascade(rs);
  const bool ok = is_ortho_set(rs, c) && decomposition_holds(rs, c);
  if (o.json) {
    out << Json{{"type", rs.type().name()}, {"cascade", to_json(c)}, {"strongly_orthogonal", ok}}.dump() << "\n";
  } else {
    out << rs.type().name() << " cascade " << to_string(c) << "\n";
    out << "strongly orthogonal with decomposition: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

inline int cmd_normal_form(const std::string& type, const std::string& set, const std::string& nu_text, const Options& o,
                           std::ostream& out) {
  const RootSystem rs = build_root_system(type);
  const OrthoSet s = ortho_set_from_json(rs, parse_json(set, "set"));
  const DiagramAut nu = nu_text.empty() ? DiagramAut::identity(rs.rank()) : parse_nu(rs, nu_text);
  const NormalForm nf = normal_form(rs, s, nu);
  if (o.json) {
    out << Json{{"word", to_json(nf.word)}, {"roots", to_json(nf.roots)}}.dump() << "\n";
  } else {
    out << "word " << perm_string(nf.word.letters) << "\n";
    out << "normal form " << to_string(nf.roots) << "\n";
  }
  return 0;
}

inline void dump_counterexample(std::ostream& err, const std::string& what, const std::vector<std::vector<Int>>& roots) {
  err << "counterexample: " << what << "\n";
  for (const auto& r : roots) err << "  " << Json(r).dump() << "\n";
}

inline int verify_star(const RootSystem& rs, int max_order, const Options& o, std::ostream& out, std::ostream& err) {
  const StarSweep sw = property_star_sweep(rs, max_order, o.jobs);
  if (o.json) out << to_json(sw).dump() << "\n";
  else out << rs.type().name() << " star sweep: checked " << sw.checked << ", skipped " << sw.skipped << ", failed " << sw.failed << "\n";
  for (const auto& [s1, s2] : sw.failures) {
    const PairSetup p = make_pair(rs, s1, s2);
    dump_counterexample(err, "sigma2 does not negate the vanishing set (sigma1 nu=" + perm_string(s1.diag_part.perm) +
                                 ", sigma2 nu=" + perm_string(s2.diag_part.perm) + ", order " + std::to_string(s2.order) + ")",
                        coords(p.omega_plus));
    err << "  sigma1 " << to_json(s1.compiled).dump() << "\n  sigma2 " << to_json(s2.compiled).dump() << "\n";
  }
  return sw.failed ? 1 : 0;
}

// Words in the generators commuting with nu, drawn from the seed.
inline WeylWord random_commuting_word(const RootSystem& rs, const DiagramAut& nu, std::mt19937& rng, int length) {
  std::vector<int> all(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  const auto gens = liecascade::detail::orbit_generators(rs, nu, all);
  WeylWord w;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int k = 0; k < length; ++k) w = concat(gens[pick(rng)].word, w);
  return w;
}

inline int verify_prop71(const RootSystem& rs, const Options& o, std::ostream& out, std::ostream& err) {
  if (rs.type().family != Family::D) fail(ErrorCode::InvalidType, "prop71 applies to type D");
  const DiagramAut flip = standard_flip(rs);
  std::mt19937 rng(o.seed);
  long total = 0, form1 = 0, form2 = 0, skipped = 0, failed = 0, roundtrip_failed = 0;
  for (const auto& s : fixed_ortho_subsets(rs, flip)) {
    ++total;
    try {
      const DFormClass cls = classify_d_normal_form(rs, s, flip);
      (cls.kind == DFormKind::Form1 ? form1 : form2)++;
      OrthoSet moved;
      const WeylWord w = random_commuting_word(rs, flip, rng, 6);
      for (const auto& r : s) moved.push_back(rs.positive_rep(apply(rs, w, r)));
      if (as_set(normal_form(rs, moved, flip).roots) != as_set(cls.normal.roots)) {
        ++roundtrip_failed;
        dump_counterexample(err, "normal form changes under a commuting Weyl word", coords(s));
      }
    } catch (const CounterexampleFound& e) {
      ++failed;
      dump_counterexample(err, e.what(), e.offending());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionViolated) throw;
      ++skipped;
    }
  }
  const long classified = form1 + form2;
  if (o.json) {
    out << Json{{"type", rs.type().name()},   {"subsets", total},   {"precondition_failed", skipped},
                {"classified", classified},   {"form1", form1},     {"form2", form2},
                {"counterexamples", failed},  {"roundtrip_failed", roundtrip_failed}}
               .dump()
        << "\n";
  } else {
    out << rs.type().name() << ": " << total << " fixed sets, " << skipped << " fail the parity precondition, " << form1
        << " form 1, " << form2 << " form 2, " << failed << " counterexamples, " << roundtrip_failed << " round-trip failures\n";
  }
  return failed || roundtrip_failed ? 1 : 0;
}

inline int verify_counts(const RootSystem& rs, const Options& o, std::ostream& out) {
  const long got = static_cast<long>(rs.roots().size());
  const long want = closed_form_root_count(rs.type());
  if (o.json) out << Json{{"type", rs.type().name()}, {"roots", got}, {"expected", want}, {"match", got == want}}.dump() << "\n";
  else out << rs.type().name() << ": " << got << " roots, expected " << want << "\n";
  return got == want ? 0 : 1;
}

inline int verify_strings(const RootSystem& rs, const Options& o, std::ostream& out, std::ostream& err) {
  long checked = 0, failed = 0;
  for (const auto& a : rs.roots())
    for (const auto& b : rs.roots()) {
      if (a == b || a == -b) continue;
      ++checked;
      try {
        root_string(rs, a, b);
      } catch (const Error& e) {
        ++failed;
        if (failed <= 4) dump_counterexample(err, e.what(), {a.coeffs, b.coeffs});
      }
    }
  if (o.json) out << Json{{"type", rs.type().name()}, {"checked", checked}, {"failed", failed}}.dump() << "\n";
  else out << rs.type().name() << " root strings: checked " << checked << ", failed " << failed << "\n";
  return failed ? 1 : 0;
}

inline int verify_parity(const RootSystem& rs, const Options& o, std::ostream& out, std::ostream& err) {
  if (rs.type().family != Family::D) fail(ErrorCode::InvalidType, "parity applies to type D");
  const int r = rs.rank();
  Json rows = Json::array();
  int bad = 0;
  for (int m = 1; m <= r - 2; m += 2) {
    const OrthoSet s = d_form1(r, m);
    const bool lift = lifts_to_involution(rs, s);
    if (!lift) {
      ++bad;
      dump_counterexample(err, "form 1 set does not lift", coords(s));
    }
    rows.push_back({{"form", 1}, {"m", m}, {"lift", lift}});
    if (!o.json) out << rs.type().name() << " form 1 m=" << m << " lift " << (lift ? "yes" : "no") << "\n";
  }
  const OrthoSet s2 = d_form2(r);
  const bool lift2 = lifts_to_involution(rs, s2);
  const auto witness = odd_parity_witness(rs, s2);
  if (r % 2 == 0 && (lift2 || !witness)) {
    ++bad;
    dump_counterexample(err, "form 2 set with even rank lifts", coords(s2));
  }
  Json row{{"form", 2}, {"k", max_odd_at_most(r - 2)}, {"lift", lift2}};
  if (witness) row["odd_witness"] = to_json(*witness);
  rows.push_back(row);
  if (o.json) out << rows.dump() << "\n";
  else
    out << rs.type().name() << " form 2 lift " << (lift2 ? "yes" : "no")
        << (witness ? ", odd parity at " + to_string(*witness) : std::string()) << "\n";
  return bad ? 1 : 0;
}

inline int cmd_certify(const std::string& type, const std::string& s1, const std::string& s2, const Options& o, std::ostream& out) {
  const RootSystem rs = build_root_system(type);
  const TorusAut a = torus_aut_from_json(rs, parse_json(s1, "sigma1"));
  const TorusAut b = torus_aut_from_json(rs, parse_json(s2, "sigma2"));
  const Certificate c = formality_certificate(rs, a, b);
  const bool ok = reverify_certificate(rs, a, b, c);
  Json j = to_json(c);
  j["reverified"] = ok;
  if (o.json) {
    out << j.dump() << "\n";
  } else {
    out << c.type << ": " << to_string(c.case_path) << ", " << c.verdict << "\n";
    out << "vanishing set " << to_string(c.omega) << ", normal form " << to_string(c.omega_normal_form) << "\n";
    out << "witnesses " << j["witnesses"].dump() << "\n";
    out << "justification";
    for (const auto& s : c.citations) out << " " << s;
    out << "\nreverified " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

inline int cmd_subgroups(int k, const Options& o, std::ostream& out) {
  const auto subs = subgroups_of_Z2xZk(k);
  int bad = 0;
  Json rows = Json::array();
  for (const auto& h : subs) {
    const auto [shape, param] = brute_force_shape(h);
    if (shape != h.shape || param != h.param) ++bad;
    rows.push_back(to_json(h));
    if (!o.json) {
      out << "order " << h.size() << "  " << shape_name(h) << "  generated by";
      for (const auto& g : h.generators) out << " (" << g.a << "," << g.b << ")";
      out << "\n";
    }
  }
  if (o.json) out << Json{{"k", k}, {"subgroups", rows}}.dump() << "\n";
  return bad ? 1 : 0;
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems, cascades and formality certificates", "liecascade"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("LIECASCADE_JOBS")) {
    try {
      opt.jobs = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      err << "LIECASCADE_JOBS must be an integer\n";
      return 2;
    }
  }
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--seed", opt.seed, "seed for sampled words")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string type, set, nu, sigma1, sigma2, what;
  bool all = false;
  int max_order = 6, k = 0;

  auto* roots = app.add_subcommand("roots", "list the roots of a type");
  roots->add_option("type", type)->required();
  auto* fold = app.add_subcommand("fold", "folding table or the foldings of one type");
  fold->add_flag("--all", all);
  fold->add_option("type", type);
  auto* cascade = app.add_subcommand("cascade", "Kostant cascade");
  cascade->add_option("type", type)->required();
  auto* nf = app.add_subcommand("normal-form", "normal form of a fixed strongly orthogonal set");
  nf->add_option("--type", type)->required();
  nf->add_option("--set", set, "JSON array of roots")->required();
  nf->add_option("--nu", nu, "diagram permutation, e.g. 1,2,4,3");
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("what", what)->required()->check(CLI::IsMember({"star", "prop71", "counts", "strings", "parity"}));
  verify->add_option("--type", type)->required();
  verify->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
  auto* certify = app.add_subcommand("certify", "certificate for a commuting pair");
  certify->add_option("--type", type)->required();
  certify->add_option("--sigma1", sigma1, "JSON spec")->required();
  certify->add_option("--sigma2", sigma2, "JSON spec")->required();
  auto* subgroups = app.add_subcommand("subgroups", "subgroups of Z2 x Zk");
  subgroups->add_option("k", k)->required()->check(CLI::PositiveNumber);
  for (auto* sub : {roots, fold, cascade, nf, verify, certify, subgroups}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*roots) return detail::cmd_roots(type, opt, out);
    if (*fold) return detail::cmd_fold(all, type, opt, out);
    if (*cascade) return detail::cmd_cascade(type, opt, out);
    if (*nf) return detail::cmd_normal_form(type, set, nu, opt, out);
    if (*certify) return detail::cmd_certify(type, sigma1, sigma2, opt, out);
    if (*subgroups) return detail::cmd_subgroups(k, opt, out);
    if (*verify) {
      const RootSystem rs = build_root_system(type);
      if (what == "star") return detail::verify_star(rs, max_order, opt, out, err);
      if (what == "prop71") return detail::verify_prop71(rs, opt, out, err);
      if (what == "counts") return detail::verify_counts(rs, opt, out);
      if (what == "strings") return detail::verify_strings(rs, opt, out, err);
      return detail::verify_parity(rs, opt, out, err);
    }
  } catch (const CounterexampleFound& e) {
    detail::dump_counterexample(err, e.what(), e.offending());
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace liecascade::cli
