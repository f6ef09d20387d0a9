// smiso: command-line front end for the Smarandache isotopy toolkit.
//
// Subcommands: classify, isotope, census, audit. JSON reports go to stdout,
// human-readable summaries to stderr. Reports are byte-identical for
// identical inputs, flags and seed; timing lives in a separate field.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smiso/smiso.hpp"

using json = nlohmann::ordered_json;
using namespace smiso;

namespace {

constexpr int kFormatVersion = 1;

json table_to_json(const MagmaTable& t) {
  json rows = json::array();
  for (const auto& row : t.cells()) rows.push_back(row);
  return rows;
}

json cert_to_json(const SCertificate& c) {
  json j;
  j["subset"] = c.subset;
  j["kind"] = to_string(c.kind);
  if (c.identity)
    j["identity"] = *c.identity;
  else
    j["identity"] = nullptr;
  return j;
}

json triple_to_json(const IsotopismTriple& a) {
  return json{{"u", a.u.images()}, {"v", a.v.images()}, {"w", a.w.images()}};
}

struct Report {
  json doc;
  std::chrono::steady_clock::time_point start;
  int exit_code = 0;

  explicit Report(const std::string& command) : start(std::chrono::steady_clock::now()) {
    doc["format_version"] = kFormatVersion;
    doc["command"] = command;
    doc["config"] = json::object();
    doc["results"] = json::object();
    doc["counterexamples"] = json::array();
  }

  int finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    doc["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::cout << doc.dump(2) << "\n";
    return exit_code;
  }
};

}  // namespace

static int cmd_classify(const std::string& in_path) {
  Report rep("classify");
  rep.doc["config"]["in"] = in_path;
  const MagmaTable t = load_table(in_path);
  const AlgebraClass cls = classify(t);
  json& res = rep.doc["results"];
  res["order"] = t.order();
  res["flags"] = json{{"is_groupoid", true},
                      {"is_semigroup", cls.is_semigroup},
                      {"is_quasigroup", cls.is_quasigroup},
                      {"is_loop", cls.is_loop},
                      {"is_group", cls.is_group}};
  res["identity"] = cls.identity ? json(*cls.identity) : json(nullptr);
  const SubstructureKind kind = required_kind(cls);
  json certs = json::array();
  for (const auto& c : find_s_structures(t, kind)) certs.push_back(cert_to_json(c));
  res["smarandache"] = json{{"required_kind", to_string(kind)},
                            {"is_smarandache", !certs.empty()},
                            {"certificates", certs}};
  std::cerr << "order " << t.order() << ": quasigroup=" << cls.is_quasigroup
            << " loop=" << cls.is_loop << " group=" << cls.is_group
            << " smarandache=" << !certs.empty() << "\n";
  return rep.finish();
}

static int cmd_isotope(const std::string& in_path, const std::string& out_path,
                       const std::vector<std::string>& triple_spec,
                       const std::vector<int>& fg, const std::vector<std::string>& principal) {
  Report rep("isotope");
  rep.doc["config"]["in"] = in_path;
  rep.doc["config"]["out"] = out_path;
  const MagmaTable t = load_table(in_path);

  IsotopismTriple a;
  std::string mode;
  if (!triple_spec.empty()) {
    mode = "triple";
    a = {Permutation::parse(triple_spec[0]), Permutation::parse(triple_spec[1]),
         Permutation::parse(triple_spec[2])};
  } else if (!fg.empty()) {
    mode = "fg";
    a = fg_principal_triple(t, fg[0], fg[1]);
  } else {
    mode = "principal";
    a = {Permutation::parse(principal[0]), Permutation::parse(principal[1]),
         Permutation::identity(t.order())};
  }
  rep.doc["config"]["mode"] = mode;

  const MagmaTable out = apply_isotopism(t, a);
  if (!out_path.empty()) save_table(out, out_path);

  json& res = rep.doc["results"];
  res["triple"] = triple_to_json(a);
  res["output_table"] = table_to_json(out);
  json witnesses = json::array();
  for (const auto& w : s_isotopism_witnesses(t, out, a))
    witnesses.push_back(json{{"source", cert_to_json(w.source_cert)},
                             {"target", cert_to_json(w.target_cert)}});
  res["s_witnesses"] = witnesses;
  std::cerr << "isotope written (" << mode << "), S-witness pairs: " << witnesses.size() << "\n";
  return rep.finish();
}

static int cmd_census(int order, const std::string& classes, bool s_census, bool long_run,
                      int workers, const std::string& checkpoint) {
  Report rep("census");
  json& cfg = rep.doc["config"];
  cfg["order"] = order;
  cfg["classes"] = classes;
  cfg["s_census"] = s_census;
  cfg["long_run"] = long_run;
  cfg["workers"] = workers;
  cfg["checkpoint"] = checkpoint;

  if (order == 7) {
    if (!long_run) throw order_too_large("order 7 requires --long-run");
    const LongRunCounts counts = census_count_long_run(7, checkpoint, s_census, workers);
    json& res = rep.doc["results"];
    res["order"] = 7;
    res["total_loops"] = counts.loops;
    if (s_census) {
      res["s_loop_count"] = counts.s_loops;
      res["non_s_loop_count"] = counts.loops - counts.s_loops;
    }
    std::cerr << "order 7 long run: " << counts.loops << " loops\n";
    return rep.finish();
  }

  const CensusReport c = run_census(order, workers);
  json& res = rep.doc["results"];
  res["order"] = c.order;
  res["total_loops"] = c.total_loops;
  const bool want_isomorphy = classes == "both" || classes == "isomorphy";
  const bool want_isotopy = classes == "both" || classes == "isotopy";
  if (want_isomorphy) {
    json cl;
    cl["count"] = c.isomorphy.count;
    cl["sizes"] = c.isomorphy.sizes;
    json reps = json::array();
    for (const auto& r : c.isomorphy.representatives) reps.push_back(table_to_json(r));
    cl["representatives"] = reps;
    res["isomorphy_classes"] = cl;
  }
  if (want_isotopy) {
    json cl;
    cl["count"] = c.isotopy.count;
    cl["sizes"] = c.isotopy.sizes;
    json reps = json::array();
    for (const auto& r : c.isotopy.representatives) reps.push_back(table_to_json(r));
    cl["representatives"] = reps;
    res["isotopy_classes"] = cl;
  }
  if (s_census) {
    json s;
    s["s_loop_count"] = c.s_loop_count;
    s["non_s_loop_count"] = c.non_s_loop_count;
    s["per_class_s_flags"] = c.class_is_smarandache;
    s["s_isomorphy_classes"] = json{{"plain", c.s_isomorphy_class_count_plain},
                                    {"s_morphism", c.s_isomorphy_class_count_smorphism}};
    s["s_isotopy_classes"] = json{{"plain", c.s_isotopy_class_count_plain},
                                  {"s_morphism", c.s_isotopy_class_count_smorphism}};
    s["corollary_identities_hold"] = c.corollary_counts_consistent;
    res["s_census"] = s;
  }
  std::cerr << "order " << order << ": " << c.total_loops << " loops, "
            << c.isomorphy.count << " isomorphy classes, " << c.isotopy.count
            << " isotopy classes";
  if (s_census) std::cerr << ", " << c.s_loop_count << " S-loops";
  std::cerr << "\n";
  return rep.finish();
}

// ---------------------------------------------------------------------------
// Audit suites

namespace {

std::vector<std::pair<std::string, MagmaTable>> default_fixtures() {
  return {{"example1_dot", fixtures::example1_dot()},
          {"example1_star", fixtures::example1_star()},
          {"example2_times6", fixtures::example2_times6()},
          {"example2_star", fixtures::example2_star()},
          {"Z4", fixtures::cyclic_group(4)},
          {"Z6", fixtures::cyclic_group(6)},
          {"S3", fixtures::symmetric_s3()}};
}

void add_claim(Report& rep, json& claims, const std::string& name, bool pass) {
  claims.push_back(json{{"claim", name}, {"pass", pass}});
  if (!pass) rep.exit_code = 1;
}

// Reflexivity, symmetry and transitivity of S-isotopy, each exercised on
// explicit witness triples.
void suite_equivalence(Report& rep, uint64_t seed) {
  json claims = json::array();
  const auto fixtures_list = default_fixtures();

  for (const auto& [name, t] : fixtures_list) {
    const auto id = IsotopismTriple::identity(t.order());
    add_claim(rep, claims, "reflexive:" + name,
              !s_isotopism_witnesses(t, t, id).empty());
  }

  struct Edge {
    std::string name;
    MagmaTable t1, t2;
    IsotopismTriple a;
  };
  std::vector<Edge> edges = {
      {"example1", fixtures::example1_dot(), fixtures::example1_star(),
       fixtures::example1_triple()},
      {"example2", fixtures::example2_times6(), fixtures::example2_star(),
       fixtures::example2_triple()}};
  // Extend each known edge with a seeded third vertex to exercise transitivity.
  SplitRng rng(seed, 7);
  for (const auto& [name, t1, t2, a] : std::vector<Edge>(edges)) {
    const auto certs = find_s_structures(t2, required_kind(classify(t2)));
    const auto& m = certs.front().subset;
    // Components map m onto m so the planted triple is an S-isotopism.
    IsotopismTriple b{rng.permutation_with_image(t2.order(), m, m),
                      rng.permutation_with_image(t2.order(), m, m),
                      rng.permutation_with_image(t2.order(), m, m)};
    const MagmaTable t3 = apply_isotopism(t2, b);
    edges.push_back({name + "_extended", t2, t3, b});

    add_claim(rep, claims, "symmetry:" + name,
              !s_isotopism_witnesses(t2, t1, a.inverse()).empty());
    add_claim(rep, claims, "transitivity:" + name,
              !s_isotopism_witnesses(t1, t3, a * b).empty());
  }
  for (const auto& e : edges) {
    add_claim(rep, claims, "edge_is_s_isotopism:" + e.name,
              !s_isotopism_witnesses(e.t1, e.t2, e.a).empty());
    add_claim(rep, claims, "edge_symmetry:" + e.name,
              !s_isotopism_witnesses(e.t2, e.t1, e.a.inverse()).empty());
  }
  rep.doc["results"]["claims"] = claims;
}

void suite_isotgroup(Report& rep) {
  json claims = json::array();
  for (int n = 2; n <= 4; ++n) {
    const auto elems = enumerate_isot(n);
    add_claim(rep, claims, "isot_count_n" + std::to_string(n),
              bigint(elems.size()) == isot_order(n));
    add_claim(rep, claims, "group_axioms_n" + std::to_string(n), verify_isot_group_axioms(n));
    const auto p = pisot_check(n);
    add_claim(rep, claims, "pisot_n" + std::to_string(n),
              p.is_subgroup && p.correspondence_ok &&
                  p.order == factorial(n) * factorial(n));
  }
  const auto st = sisot_stabilizer(4, {0, 1});
  add_claim(rep, claims, "stabilizer_n4_H01",
            st.is_subgroup && st.order == 64 && st.restriction_image_order == 8);
  add_claim(rep, claims, "restricted_count_n4",
            count_restricted_triples(4, {0, 1}, {2, 3}) == sisot_restricted_count(4, 2));
  add_claim(rep, claims, "nsisot_arithmetic_n4",
            nsisot_count(4, 2) == isot_order(4) - sisot_restricted_count(4, 2));
  rep.doc["results"]["claims"] = claims;
}

// Random S-isotopisms of Example 1's quasigroup: components carry {0,1} onto
// a random 2-subset; every 2x2 Latin sub-square is a group, so the image is
// always certified and the triple is an S-isotopism by construction.
void suite_decompose(Report& rep, uint64_t seed, int trials) {
  json claims = json::array();
  const MagmaTable t1 = fixtures::example1_dot();
  const std::vector<int> m = {0, 1};
  SplitRng rng(seed, 1);
  int ok = 0;
  for (int i = 0; i < trials; ++i) {
    int a0 = rng.uniform(0, 4), b0 = rng.uniform(0, 4);
    while (b0 == a0) b0 = rng.uniform(0, 4);
    const std::vector<int> img = {std::min(a0, b0), std::max(a0, b0)};
    IsotopismTriple a{rng.permutation_with_image(5, m, img),
                      rng.permutation_with_image(5, m, img),
                      rng.permutation_with_image(5, m, img)};
    const MagmaTable t2 = apply_isotopism(t1, a);
    if (s_isotopism_witnesses(t1, t2, a).empty()) continue;
    const auto d = decompose_to_principal(t1, t2, a);
    const bool roundtrip = d.beta.is_principal() && relabel(d.mid, d.z) == t2 &&
                           d.beta * IsotopismTriple{d.z, d.z, d.z} == a &&
                           subset_image(m, d.beta.u) == m && subset_image(m, d.beta.v) == m;
    if (roundtrip) ++ok;
  }
  rep.doc["results"]["trials"] = trials;
  rep.doc["results"]["roundtrips"] = ok;
  add_claim(rep, claims, "principal_decomposition_roundtrip", ok == trials);

  // f,g recovery, exhaustive over all S-element pairs of Example 1 and Z6.
  for (const auto& [name, t] : std::vector<std::pair<std::string, MagmaTable>>{
           {"example1", t1}, {"Z6", fixtures::cyclic_group(6)}}) {
    int pairs = 0, recovered = 0;
    for (const auto& cert : find_s_structures(t, SubstructureKind::subgroup))
      for (int f : cert.subset)
        for (int g : cert.subset) {
          ++pairs;
          const MagmaTable tl = fg_principal_isotope(t, f, g);
          const auto d = find_fg_decomposition(t, tl, fg_principal_triple(t, f, g));
          if (d.f == f && d.g == g) ++recovered;
        }
    rep.doc["results"]["fg_pairs_" + name] = pairs;
    add_claim(rep, claims, "fg_recovery:" + name, pairs > 0 && recovered == pairs);
  }
  rep.doc["results"]["claims"] = claims;
}

void suite_gs(Report& rep, const std::vector<MagmaTable>& extra) {
  json claims = json::array();
  std::vector<std::pair<std::string, MagmaTable>> groups = {
      {"Z4", fixtures::cyclic_group(4)},
      {"Z6", fixtures::cyclic_group(6)},
      {"S3", fixtures::symmetric_s3()},
      {"Z8", fixtures::cyclic_group(8)},
      {"Z4xZ2", fixtures::direct_product(fixtures::cyclic_group(4), fixtures::cyclic_group(2))},
      {"Z2xZ2xZ2", fixtures::direct_product(fixtures::cyclic_group(2), fixtures::klein_four())},
      {"D4", fixtures::dihedral_8()},
      {"Q8", fixtures::quaternion_8()}};
  for (size_t i = 0; i < extra.size(); ++i)
    groups.emplace_back("fixture" + std::to_string(i), extra[i]);
  for (const auto& [name, t] : groups) {
    const auto r = gs_group_check(t);
    rep.doc["results"]["pairs_" + name] = r.pairs.size();
    add_claim(rep, claims, "gs:" + name, r.all_pass());
    for (const auto& p : r.pairs)
      if (!p.pass())
        rep.doc["counterexamples"].push_back(
            json{{"group", name}, {"f", p.f}, {"g", p.g}});
  }
  rep.doc["results"]["claims"] = claims;
}

void suite_corollaries(Report& rep, const std::vector<MagmaTable>& extra) {
  json claims = json::array();
  std::vector<std::pair<std::string, MagmaTable>> tables = {
      {"Z4", fixtures::cyclic_group(4)},
      {"Z6", fixtures::cyclic_group(6)},
      {"example1_dot", fixtures::example1_dot()}};
  for (size_t i = 0; i < extra.size(); ++i)
    tables.emplace_back("fixture" + std::to_string(i), extra[i]);
  json outcomes = json::array();
  for (const auto& [name, t] : tables)
    for (const auto& r : audit_corollaries(t, {})) {
      json o;
      o["table"] = name;
      o["corollary"] = r.corollary;
      o["applicable"] = r.applicable;
      o["verified"] = r.verified;
      o["instances_checked"] = r.instances_checked;
      o["counterexample_count"] = r.counterexamples.size();
      for (const auto& ce : r.counterexamples)
        rep.doc["counterexamples"].push_back(json{{"table", name},
                                                  {"corollary", r.corollary},
                                                  {"description", ce.description},
                                                  {"isotope", table_to_json(ce.table)}});
      outcomes.push_back(o);
    }
  rep.doc["results"]["outcomes"] = outcomes;
  // Corollary findings are reported, never asserted; the suite fails only on
  // internal errors, so no claims are added here.
  rep.doc["results"]["claims"] = claims;
}

}  // namespace

static int cmd_audit(const std::string& suite, uint64_t seed, int trials, int workers,
                     const std::vector<std::string>& fixture_paths) {
  Report rep("audit");
  json& cfg = rep.doc["config"];
  cfg["suite"] = suite;
  cfg["seed"] = seed;
  cfg["trials"] = trials;
  cfg["workers"] = workers;
  cfg["fixtures"] = fixture_paths;

  std::vector<MagmaTable> extra;
  for (const auto& p : fixture_paths) extra.push_back(load_table(p));

  if (suite == "equivalence") suite_equivalence(rep, seed);
  else if (suite == "isotgroup") suite_isotgroup(rep);
  else if (suite == "decompose") suite_decompose(rep, seed, trials);
  else if (suite == "gs") suite_gs(rep, extra);
  else if (suite == "corollaries") suite_corollaries(rep, extra);

  int failed = 0;
  if (rep.doc["results"].contains("claims"))
    for (const auto& c : rep.doc["results"]["claims"])
      if (!c["pass"].get<bool>()) ++failed;
  std::cerr << "suite " << suite << ": "
            << (rep.exit_code == 0 ? "all claims pass" : std::to_string(failed) + " claim(s) failed")
            << "\n";
  return rep.finish();
}

int main(int argc, char** argv) {
  CLI::App app{"Smarandache isotopy toolkit for finite groupoids, quasigroups and loops"};
  app.require_subcommand(1);

  std::string in_path, out_path, checkpoint;
  std::string classes = "both", suite;
  std::vector<std::string> triple_spec, principal_spec, fixture_paths;
  std::vector<int> fg_spec;
  int order = 5, workers = 1, trials = 1000;
  bool s_census = false, long_run = false;
  uint64_t seed = 0xC0FFEE5EEDULL;

  auto* c_classify = app.add_subcommand("classify", "Classify a table and find S-substructures");
  c_classify->add_option("--in", in_path, "input table file")->required();

  auto* c_isotope = app.add_subcommand("isotope", "Apply an isotopism to a table");
  c_isotope->add_option("--in", in_path, "input table file")->required();
  c_isotope->add_option("--out", out_path, "output table file");
  auto* opt_triple =
      c_isotope->add_option("--triple", triple_spec, "U V W as comma-separated image lists")
          ->expected(3);
  auto* opt_fg = c_isotope->add_option("--fg", fg_spec, "f g elements")->expected(2);
  auto* opt_pr =
      c_isotope->add_option("--principal", principal_spec, "U V image lists")->expected(2);
  opt_triple->excludes(opt_fg)->excludes(opt_pr);
  opt_fg->excludes(opt_pr);

  auto* c_census = app.add_subcommand("census", "Enumerate loops and their classes");
  c_census->add_option("--order", order, "loop order")->required();
  c_census->add_option("--classes", classes, "both|isomorphy|isotopy")
      ->check(CLI::IsMember({"both", "isomorphy", "isotopy"}));
  c_census->add_flag("--s-census", s_census, "count S-loops and S-classes");
  c_census->add_flag("--long-run", long_run, "enable order-7 counting");
  c_census->add_option("--workers", workers, "worker thread count")
      ->envname("SMISO_WORKERS");
  c_census->add_option("--checkpoint", checkpoint, "checkpoint file for long runs");

  auto* c_audit = app.add_subcommand("audit", "Run a verification suite");
  c_audit->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"equivalence", "isotgroup", "decompose", "gs", "corollaries"}));
  c_audit->add_option("--seed", seed, "64-bit seed for randomized checks");
  c_audit->add_option("--trials", trials, "randomized trial count");
  c_audit->add_option("--workers", workers, "worker thread count")->envname("SMISO_WORKERS");
  c_audit->add_option("fixtures", fixture_paths, "table files to audit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_classify->parsed()) return cmd_classify(in_path);
    if (c_isotope->parsed()) {
      if (triple_spec.empty() && fg_spec.empty() && principal_spec.empty()) {
        std::cerr << "isotope: one of --triple, --fg, --principal is required\n";
        return 2;
      }
      return cmd_isotope(in_path, out_path, triple_spec, fg_spec, principal_spec);
    }
    if (c_census->parsed())
      return cmd_census(order, classes, s_census, long_run, workers, checkpoint);
    if (c_audit->parsed()) return cmd_audit(suite, seed, trials, workers, fixture_paths);
  } catch (const parse_error& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
              << e.what() << "\n";
    return 2;
  } catch (const order_too_large& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const degree_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const not_a_quasigroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
