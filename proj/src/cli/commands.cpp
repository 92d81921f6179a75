#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "twisted/classes.hpp"
#include "twisted/dual.hpp"
#include "twisted/error.hpp"
#include "twisted/lattice.hpp"
#include "twisted/separability.hpp"
#include "twisted/version.hpp"
#include "twisted/zeta.hpp"

namespace twisted::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kFiniteCongruenceCap = 12;

template <class Range>
std::string join(const Range& items, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : items) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

std::string join_classes(const Partition& p) {
  std::string s;
  for (const auto& c : p.classes()) {
    if (!s.empty()) s += ',';
    s += "[" + join(c) + "]";
  }
  return s;
}

Json classes_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& c : p.classes()) out.push_back(c);
  return out;
}

Json images_json(const Automorphism& phi) {
  return Json(std::vector<Element>(phi.images().begin(), phi.images().end()));
}

std::optional<std::uint64_t> prime_override() {
  const char* v = std::getenv("TWISTED_DUAL_PRIME");
  if (!v || !*v) return std::nullopt;
  const std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 12)
    throw InputError("TWISTED_DUAL_PRIME must be a positive decimal integer, got \"" + s + "\"");
  return std::stoull(s);
}

Json report(const std::string& command, Json inputs) {
  Json r;
  r["command"] = command;
  r["version"] = kVersion;
  r["inputs"] = std::move(inputs);
  return r;
}

Json group_input(const fs::path& path) {
  Json in;
  in["file"] = path.string();
  in["document"] = load_json(path);
  return in;
}

std::string group_line(const FiniteGroup& g) {
  return "group: " + g.description() + " (order " + std::to_string(g.order()) + ")";
}

struct Output {
  bool json = false;
  std::ostream& out;
};

// ---- twisted ---------------------------------------------------------------

struct TwistedArgs {
  std::string group;
  std::string aut;
  std::vector<std::size_t> decide;
};

int cmd_twisted(const TwistedArgs& a, Output& o) {
  const GroupPtr g = load_group(a.group);
  const Automorphism phi = load_automorphism(a.aut, g);
  const auto classes = twisted_classes(phi);

  Json inputs;
  inputs["group"] = group_input(a.group);
  inputs["automorphism"] = {{"file", a.aut}, {"document", load_json(a.aut)}, {"images", images_json(phi)}};
  Json r = report("twisted", std::move(inputs));
  r["results"]["reidemeister"] = classes.class_count();
  r["results"]["representatives"] = classes.partition.representatives;
  r["results"]["classes"] = classes_json(classes.partition);

  std::string decision_line;
  if (!a.decide.empty()) {
    for (auto e : a.decide)
      if (e >= g->order())
        throw InputError("element " + std::to_string(e) + " is out of range for a group of order " +
                         std::to_string(g->order()));
    const auto x = static_cast<Element>(a.decide[0]), y = static_cast<Element>(a.decide[1]);
    const auto d = twisted_decide_finite(classes, x, y);
    Json dj{{"x", x}, {"y", y}, {"equivalent", d.equivalent}};
    if (d.witness) dj["witness"] = *d.witness;
    r["results"]["decision"] = dj;
    decision_line = "decide " + std::to_string(x) + " " + std::to_string(y) + ": " +
                    (d.equivalent ? "equivalent; witness g=" + std::to_string(*d.witness) : "inequivalent");
  }
  r["verdict"] = "pass";

  if (o.json) {
    o.out << r.dump(2) << "\n";
  } else {
    o.out << group_line(*g) << "\n";
    o.out << "automorphism: " << describe_automorphism(phi) << "\n";
    o.out << "R = " << classes.class_count() << "; classes: " << join_classes(classes.partition) << "\n";
    if (!decision_line.empty()) o.out << decision_line << "\n";
  }
  return 0;
}

// ---- tbft ------------------------------------------------------------------

struct TbftArgs {
  std::string group;
  std::string aut;
  bool all = false;
};

int cmd_tbft(const TbftArgs& a, Output& o) {
  if (a.all == !a.aut.empty()) throw InputError("tbft needs either an automorphism file or --all-automorphisms");
  const GroupPtr g = load_group(a.group);
  if (g->order() > kDualOrderCap)
    throw InputError("tbft is limited to groups of order <= " + std::to_string(kDualOrderCap));
  std::vector<Automorphism> auts;
  if (a.all)
    auts = enumerate_automorphisms(g);
  else
    auts.push_back(load_automorphism(a.aut, g));
  const DualContext ctx = make_dual_context(g, prime_override());

  Json inputs;
  inputs["group"] = group_input(a.group);
  if (a.all)
    inputs["automorphisms"] = "all";
  else
    inputs["automorphism"] = {{"file", a.aut}, {"document", load_json(a.aut)}};
  Json r = report("tbft", std::move(inputs));
  r["prime"] = ctx.table.prime;
  r["seed"] = ctx.table.seed;

  std::size_t passed = 0;
  Json rows = Json::array();
  std::vector<std::string> lines;
  for (const auto& phi : auts) {
    const auto t = verify_tbft(phi, ctx);
    const bool ok = t.pass && t.brauer_agrees;
    if (ok) ++passed;
    rows.push_back({{"automorphism", t.automorphism},
                    {"images", images_json(phi)},
                    {"reidemeister", t.reidemeister},
                    {"fixed_dual_points", t.fixed_dual_points},
                    {"invariant_classes", t.invariant_classes},
                    {"verdict", t.pass ? "pass" : "fail"},
                    {"brauer_agrees", t.brauer_agrees}});
    lines.push_back(t.automorphism + ": R=" + std::to_string(t.reidemeister) +
                    " S_f=" + std::to_string(t.fixed_dual_points) +
                    " invariant=" + std::to_string(t.invariant_classes) + " " + (ok ? "pass" : "FAIL"));
  }
  const bool all_pass = passed == auts.size();
  r["results"]["reports"] = std::move(rows);
  r["results"]["passed"] = passed;
  r["results"]["total"] = auts.size();
  r["verdict"] = all_pass ? "pass" : "fail";

  if (o.json) {
    o.out << r.dump(2) << "\n";
  } else {
    o.out << group_line(*g) << "; prime p=" << ctx.table.prime << "; seed=" << ctx.table.seed << "\n";
    for (const auto& l : lines) o.out << l << "\n";
    o.out << passed << " of " << auts.size() << " pass\n";
  }
  return all_pass ? 0 : 1;
}

// ---- zeta ------------------------------------------------------------------

struct ZetaArgs {
  std::string lefschetz;
  std::vector<long long> floer;
  std::string reidemeister;
  std::size_t order = kDefaultTruncation;
};

Json series_json(const PowerSeries& s) { return coefficient_strings(s); }

int cmd_zeta(const ZetaArgs& a, Output& o) {
  const int modes = !a.lefschetz.empty() + !a.floer.empty() + !a.reidemeister.empty();
  if (modes != 1) throw InputError("zeta needs exactly one of --lefschetz, --floer, --reidemeister");
  if (a.order > kMaxTruncation)
    throw InputError("--order is limited to " + std::to_string(kMaxTruncation));

  Json inputs;
  inputs["order"] = a.order;
  std::vector<std::string> lines;
  Json results;

  if (!a.lefschetz.empty()) {
    inputs["lefschetz"] = {{"file", a.lefschetz}, {"document", load_json(a.lefschetz)}};
    const auto z = lefschetz_zeta(load_homology(a.lefschetz), a.order);
    std::vector<std::string> ls;
    for (const auto& l : z.lefschetz) ls.push_back(l.get_str());
    results["closed_form"] = to_string(z.form);
    results["lefschetz_numbers"] = ls;
    results["series"] = series_json(z.series);
    lines.push_back("Lefschetz zeta: " + to_string(z.form));
    lines.push_back("L(phi^n), n=1.." + std::to_string(a.order) + ": " + join(ls));
    lines.push_back("series: " + to_string(z.series));
    lines.push_back("check: closed form matches exp-series through z^" + std::to_string(a.order));
  } else if (!a.floer.empty()) {
    if (a.floer[0] <= 0) throw InputError("--floer needs a positive period m");
    const auto m = static_cast<std::uint64_t>(a.floer[0]);
    const std::vector<long long> values(a.floer.begin() + 1, a.floer.end());
    inputs["floer"] = {{"m", m}, {"values", values}};
    const auto f = periodic_floer_zeta(m, values, a.order);
    std::vector<std::string> ns, ps;
    for (std::size_t i = 0; i < f.divisors.size(); ++i) {
      ns.push_back("N_" + std::to_string(f.divisors[i]) + "=" + std::to_string(f.values[i]));
      ps.push_back("P(" + std::to_string(f.divisors[i]) + ")=" + f.primitive[i].get_str());
    }
    const PowerSeries series = f.form.expand(a.order);
    results["closed_form"] = to_string(f.form);
    results["rational"] = f.form.is_rational();
    results["divisors"] = f.divisors;
    results["values"] = f.values;
    Json prim = Json::array();
    for (const auto& p : f.primitive) prim.push_back(p.get_str());
    results["primitive"] = prim;
    results["series"] = series_json(series);
    lines.push_back("periodic zeta (m=" + std::to_string(m) + ", " + join(ns, ", ") + "): " + to_string(f.form));
    lines.push_back(join(ps, ", "));
    lines.push_back(std::string("rational function: ") + (f.form.is_rational() ? "yes" : "no (radical)"));
    lines.push_back("series: " + to_string(series));
    lines.push_back("check: product form matches exp-series through z^" + std::to_string(a.order));
  } else {
    inputs["reidemeister"] = {{"file", a.reidemeister}, {"document", load_json(a.reidemeister)}};
    if (a.order > kMaxSequenceLength)
      throw InputError("--order is limited to " + std::to_string(kMaxSequenceLength) + " for Reidemeister series");
    const auto seq = reidemeister_sequence(load_matrix(a.reidemeister), a.order);
    std::vector<std::string> rs;
    for (const auto& t : seq.terms) rs.push_back(t.to_string());
    const auto s = reidemeister_zeta_series(seq, a.order);
    results["reidemeister_numbers"] = rs;
    results["series"] = series_json(s);
    lines.push_back("R(phi^n), n=1.." + std::to_string(a.order) + ": " + join(rs));
    lines.push_back("series: " + to_string(s));
  }

  Json r = report("zeta", std::move(inputs));
  r["results"] = std::move(results);
  r["verdict"] = "pass";
  if (o.json) {
    o.out << r.dump(2) << "\n";
  } else {
    for (const auto& l : lines) o.out << l << "\n";
  }
  return 0;
}

// ---- congruence ------------------------------------------------------------

struct CongruenceArgs {
  std::string matrix;
  std::string group;
  std::string aut;
  std::size_t max_n = 12;
};

int cmd_congruence(const CongruenceArgs& a, Output& o) {
  const bool lattice = !a.matrix.empty();
  if (lattice == (!a.group.empty() || !a.aut.empty()) || (!lattice && (a.group.empty() || a.aut.empty())))
    throw InputError("congruence needs either --matrix or both --group and --aut");
  Json inputs;
  inputs["max_n"] = a.max_n;
  ReidemeisterSequence seq;
  if (lattice) {
    if (a.max_n > kMaxSequenceLength)
      throw InputError("--max-n is limited to " + std::to_string(kMaxSequenceLength) + " for matrices");
    inputs["matrix"] = {{"file", a.matrix}, {"document", load_json(a.matrix)}};
    seq = reidemeister_sequence(load_matrix(a.matrix), a.max_n);
  } else {
    if (a.max_n > kFiniteCongruenceCap)
      throw InputError("--max-n is limited to " + std::to_string(kFiniteCongruenceCap) + " for finite groups");
    const GroupPtr g = load_group(a.group);
    const Automorphism phi = load_automorphism(a.aut, g);
    inputs["group"] = group_input(a.group);
    inputs["automorphism"] = {{"file", a.aut}, {"document", load_json(a.aut)}, {"images", images_json(phi)}};
    seq = finite_sequence(reidemeister_numbers_of_powers(phi, a.max_n),
                          g->description() + ", " + describe_automorphism(phi));
  }
  const auto audit = congruence_audit(seq, a.max_n);

  std::vector<std::string> terms;
  for (const auto& t : seq.terms) terms.push_back(t.to_string());
  Json rows = Json::array();
  for (const auto& row : audit.rows) {
    Json j{{"n", row.n}, {"status", to_string(row.status)}};
    if (row.sum) j["sum"] = row.sum->get_str();
    if (row.residue) j["residue"] = row.residue->get_str();
    rows.push_back(std::move(j));
  }
  Json r = report("congruence", std::move(inputs));
  r["results"] = {{"source", audit.source}, {"sequence", terms}, {"rows", rows},
                  {"violations", audit.violations}, {"skipped", audit.skipped}};
  r["verdict"] = audit.passed() ? "pass" : "fail";

  if (o.json) {
    o.out << r.dump(2) << "\n";
  } else {
    o.out << "sequence: " << audit.source << "\n";
    o.out << "R(phi^n): " << join(terms) << "\n";
    for (const auto& row : audit.rows) {
      o.out << "n=" << row.n << ": ";
      if (row.sum)
        o.out << "sum=" << row.sum->get_str() << " residue=" << row.residue->get_str() << " ";
      o.out << to_string(row.status) << "\n";
    }
    o.out << "result: " << (audit.passed() ? "pass" : "FAIL") << " (" << audit.violations.size()
          << " violations; skipped: " << (audit.skipped.empty() ? "none" : join(audit.skipped)) << ")\n";
  }
  return audit.passed() ? 0 : 1;
}

// ---- separate --------------------------------------------------------------

struct SeparateArgs {
  std::string matrix;
  std::string x;
  std::string y;
  bool rp = false;
  std::optional<std::uint64_t> k_max;
};

int cmd_separate(const SeparateArgs& a, Output& o) {
  const IntMatrix m = load_matrix(a.matrix);
  const IntVector x = parse_vector(a.x), y = parse_vector(a.y);
  Json inputs;
  inputs["matrix"] = {{"file", a.matrix}, {"document", load_json(a.matrix)}};
  inputs["x"] = to_json(x);
  inputs["y"] = to_json(y);
  if (a.k_max) inputs["k_max"] = *a.k_max;
  inputs["rp"] = a.rp;

  const auto det = (IntMatrix::identity(m.size()) - m).determinant();
  const auto s = lattice_separation_search(m, x, y, a.k_max);
  bool ok = true;
  std::vector<std::string> lines;
  Json results;
  results["det_I_minus_M"] = det.get_str();
  results["status"] = to_string(s.status);
  results["k_max"] = s.k_max;
  switch (s.status) {
    case SeparationResult::Status::not_applicable:
      results["equivalent"] = true;
      results["witness"] = to_json(*s.equivalence_witness);
      lines.push_back("equivalent; witness g=" + to_string(*s.equivalence_witness));
      break;
    case SeparationResult::Status::separated: {
      const auto& w = *s.witness;
      results["equivalent"] = false;
      results["separation"] = {{"k", w.k},
                               {"x_image", to_json(w.x_image)},
                               {"y_image", to_json(w.y_image)},
                               {"automorphism_mod_k", to_json(w.automorphism_mod_k)},
                               {"orbit_checked", w.orbit_checked}};
      lines.push_back("inequivalent; separated mod k=" + std::to_string(w.k));
      lines.push_back("images " + to_string(w.x_image) + " and " + to_string(w.y_image) + " in (Z/" +
                      std::to_string(w.k) + ")^" + std::to_string(m.size()) + " under M mod k = " +
                      to_string(w.automorphism_mod_k));
      break;
    }
    case SeparationResult::Status::not_found:
      results["equivalent"] = false;
      lines.push_back("inequivalent; no separating modulus k <= " + std::to_string(s.k_max));
      // A finite R(φ) guarantees a separating modulus up to |det(I − M)|.
      if (det != 0 && mpz_class(static_cast<unsigned long>(s.k_max)) >= abs(det)) ok = false;
      break;
  }

  if (a.rp) {
    const auto cert = rp_certificate(m);
    if (cert.infinite) {
      results["rp"] = {{"applicable", false}, {"reidemeister", "inf"}};
      lines.push_back("R(phi)=inf; RP certificate not applicable");
    } else {
      const auto& c = *cert.certificate;
      const bool verified = verify_rp_certificate(m, c);
      ok = ok && verified;
      Json reps = Json::array();
      for (const auto& v : c.representatives) reps.push_back(to_json(v));
      results["rp"] = {{"applicable", true},
                       {"k", c.k},
                       {"K", "(Z/" + std::to_string(c.k) + ")^" + std::to_string(m.size())},
                       {"automorphism_mod_k", to_json(c.automorphism_mod_k)},
                       {"cofactor", to_json(c.cofactor)},
                       {"representatives", reps},
                       {"square_commutes", c.square_commutes},
                       {"kernel_contained", c.kernel_contained},
                       {"classes_disjoint", c.classes_disjoint},
                       {"orbit_checked", c.orbit_checked},
                       {"verified", verified}};
      auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
      lines.push_back("R(phi)=" + std::to_string(c.k) + "; RP certificate K=(Z/" + std::to_string(c.k) + ")^" +
                      std::to_string(m.size()) + ", phi_K = M mod " + std::to_string(c.k));
      lines.push_back(std::string("(a) commuting square: ") + mark(c.square_commutes));
      lines.push_back(std::string("(b) kZ^n inside (I-M)Z^n, (I-M)X = kI with X = ") + to_string(c.cofactor) +
                      ": " + mark(c.kernel_contained));
      lines.push_back("(c) " + std::to_string(c.representatives.size()) +
                      " classes with disjoint images: " + mark(c.classes_disjoint));
      lines.push_back(std::string("certificate re-verification: ") + mark(verified));
    }
  }

  Json r = report("separate", std::move(inputs));
  r["results"] = std::move(results);
  r["verdict"] = ok ? "pass" : "fail";
  if (o.json) {
    o.out << r.dump(2) << "\n";
  } else {
    for (const auto& l : lines) o.out << l << "\n";
  }
  return ok ? 0 : 1;
}

// ---- lemma-check -----------------------------------------------------------

struct LemmaArgs {
  std::string group;
  std::string aut;
  bool all = false;
  std::optional<std::size_t> m;
};

int cmd_lemma(const LemmaArgs& a, Output& o) {
  if (a.all == !a.aut.empty())
    throw InputError("lemma-check needs either an automorphism file or --all-automorphisms");
  if (a.all && a.m) throw InputError("--m applies to a single automorphism");
  const GroupPtr g = load_group(a.group);
  std::vector<Automorphism> auts;
  if (a.all)
    auts = enumerate_automorphisms(g);
  else
    auts.push_back(load_automorphism(a.aut, g));

  Json inputs;
  inputs["group"] = group_input(a.group);
  if (a.all)
    inputs["automorphisms"] = "all";
  else
    inputs["automorphism"] = {{"file", a.aut}, {"document", load_json(a.aut)}};
  if (a.m) inputs["m"] = *a.m;

  Json rows = Json::array();
  std::vector<std::string> lines;
  std::size_t passed = 0;
  for (const auto& phi : auts) {
    const auto rep = verify_semidirect_bijection(phi, a.m);
    if (rep.pass()) ++passed;
    rows.push_back({{"automorphism", rep.automorphism},
                    {"m", rep.m},
                    {"gamma_order", rep.gamma_order},
                    {"gamma_classes", rep.gamma_class_count},
                    {"twisted_classes", classes_json(rep.twisted)},
                    {"coset_classes", classes_json(rep.coset)},
                    {"counts_equal", rep.counts_equal},
                    {"membership_consistent", rep.membership_consistent},
                    {"verdict", rep.pass() ? "pass" : "fail"}});
    lines.push_back(rep.automorphism + ", m=" + std::to_string(rep.m) + ": |Gamma|=" +
                    std::to_string(rep.gamma_order) + ", twisted classes " +
                    std::to_string(rep.twisted.class_count()) + ", coset classes " +
                    std::to_string(rep.coset.class_count()) + ", membership " +
                    (rep.membership_consistent ? "consistent" : "INCONSISTENT") + ": " +
                    (rep.pass() ? "pass" : "FAIL"));
  }
  const bool all_pass = passed == auts.size();
  Json r = report("lemma-check", std::move(inputs));
  r["results"] = {{"reports", rows}, {"passed", passed}, {"total", auts.size()}};
  r["verdict"] = all_pass ? "pass" : "fail";
  if (o.json) {
    o.out << r.dump(2) << "\n";
  } else {
    o.out << group_line(*g) << "\n";
    for (const auto& l : lines) o.out << l << "\n";
    o.out << passed << " of " << auts.size() << " pass\n";
  }
  return all_pass ? 0 : 1;
}

// ---- autlist ---------------------------------------------------------------

int cmd_autlist(const std::string& group, Output& o) {
  const GroupPtr g = load_group(group);
  const auto auts = enumerate_automorphisms(g);
  Json inputs;
  inputs["group"] = group_input(group);
  Json rows = Json::array();
  for (const auto& phi : auts)
    rows.push_back({{"generators", describe_automorphism(phi)}, {"order", phi.order()}, {"images", images_json(phi)}});
  Json r = report("autlist", std::move(inputs));
  r["results"] = {{"count", auts.size()}, {"automorphisms", rows}};
  r["verdict"] = "pass";
  if (o.json) {
    o.out << r.dump(2) << "\n";
  } else {
    o.out << group_line(*g) << "\n";
    o.out << "|Aut| = " << auts.size() << "\n";
    for (std::size_t i = 0; i < auts.size(); ++i)
      o.out << i << ": " << describe_automorphism(auts[i]) << " (order " << auts[i].order() << ")\n";
  }
  return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted conjugacy classes, Reidemeister numbers and their zeta functions", "twisted"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable report");

  TwistedArgs tw;
  auto* c_twisted = app.add_subcommand("twisted", "Twisted classes and R(phi) of a finite group automorphism");
  c_twisted->add_option("group", tw.group, "Group file")->required();
  c_twisted->add_option("automorphism", tw.aut, "Automorphism file")->required();
  c_twisted->add_option("--decide", tw.decide, "Decide whether x and y are twisted conjugate")->expected(2);

  TbftArgs tb;
  auto* c_tbft = app.add_subcommand("tbft", "Check R(phi) = S_f(phi) through mod-p central characters");
  c_tbft->add_option("group", tb.group, "Group file")->required();
  c_tbft->add_option("automorphism", tb.aut, "Automorphism file");
  c_tbft->add_flag("--all-automorphisms", tb.all, "Every automorphism of the group");

  ZetaArgs ze;
  auto* c_zeta = app.add_subcommand("zeta", "Lefschetz, periodic Floer or Reidemeister zeta functions");
  c_zeta->add_option("--lefschetz", ze.lefschetz, "Homology maps file");
  c_zeta->add_option("--floer", ze.floer, "Period m followed by N_d for each divisor d of m")->expected(2, 100000);
  c_zeta->add_option("--reidemeister", ze.reidemeister, "Matrix file");
  c_zeta->add_option("--order", ze.order, "Truncation order");

  CongruenceArgs co;
  auto* c_cong = app.add_subcommand("congruence", "Audit sum_{d|n} mu(d) R(phi^{n/d}) = 0 mod n");
  c_cong->add_option("--matrix", co.matrix, "Matrix file");
  c_cong->add_option("--group", co.group, "Group file");
  c_cong->add_option("--aut", co.aut, "Automorphism file");
  c_cong->add_option("--max-n", co.max_n, "Largest n");

  SeparateArgs se;
  std::uint64_t k_max = 0;
  auto* c_sep = app.add_subcommand("separate", "Decide twisted conjugacy on Z^n and separate in finite quotients");
  c_sep->add_option("matrix", se.matrix, "Matrix file")->required();
  c_sep->add_option("x", se.x, "Comma-separated vector")->required();
  c_sep->add_option("y", se.y, "Comma-separated vector")->required();
  c_sep->add_flag("--rp", se.rp, "Also build an RP certificate");
  auto* k_opt = c_sep->add_option("--k-max", k_max, "Largest modulus to try");

  LemmaArgs le;
  std::size_t lemma_m = 0;
  auto* c_lemma = app.add_subcommand("lemma-check", "Compare twisted classes of G with classes of G x| Z_m in G.t");
  c_lemma->add_option("group", le.group, "Group file")->required();
  c_lemma->add_option("automorphism", le.aut, "Automorphism file");
  c_lemma->add_flag("--all-automorphisms", le.all, "Every automorphism of the group");
  auto* m_opt = c_lemma->add_option("--m", lemma_m, "Period (defaults to the order of phi)");

  std::string autlist_group;
  auto* c_aut = app.add_subcommand("autlist", "List the automorphism group");
  c_aut->add_option("group", autlist_group, "Group file")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Output o{json, out};
  try {
    if (*c_twisted) return cmd_twisted(tw, o);
    if (*c_tbft) return cmd_tbft(tb, o);
    if (*c_zeta) return cmd_zeta(ze, o);
    if (*c_cong) return cmd_congruence(co, o);
    if (*c_sep) {
      if (*k_opt) se.k_max = k_max;
      return cmd_separate(se, o);
    }
    if (*c_lemma) {
      if (*m_opt) le.m = lemma_m;
      return cmd_lemma(le, o);
    }
    if (*c_aut) return cmd_autlist(autlist_group, o);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace twisted::cli
