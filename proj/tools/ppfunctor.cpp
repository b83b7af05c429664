// Batch front end: parses group specifications, runs the library
// computations, and emits deterministic JSON reports.
//
// Exit codes: 0 success, 1 validation failure, 2 internal cross-check failure.

#include "ppf/blockfun.hpp"
#include "ppf/species.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace ppf;

namespace {

constexpr int kMaxBlockGroupOrder = 200;

// ----- group specification grammar -----
//
// Named constructors: Cn (cyclic), Sn (symmetric), An (alternating),
// Dn (dihedral of order n, n even), V4; products joined with 'x'
// ("C2xC2"); anything starting with '(' is a raw generator list in
// cycle notation ("(1 2 3), (1 2)").

std::shared_ptr<const grp::PermutationGroup> parse_atom(const std::string& s) {
  if (!s.empty() && s[0] == '(') {
    std::vector<grp::Perm> gens = grp::parse_cycles(s);
    if (gens.empty()) throw std::invalid_argument("group spec: no generators in " + s);
    return std::make_shared<grp::PermutationGroup>(gens[0].degree(), gens);
  }
  if (s == "V4") return grp::klein_four_group();
  if (s.size() < 2) throw std::invalid_argument("group spec: cannot parse " + s);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(1), &used);
    if (used + 1 != s.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("group spec: cannot parse " + s);
  }
  if (n < 1) throw std::invalid_argument("group spec: bad order in " + s);
  switch (s[0]) {
    case 'C': return grp::cyclic_group(n);
    case 'S': return grp::symmetric_group(n);
    case 'A': return grp::alternating_group(n);
    case 'D':
      if (n % 2 != 0) throw std::invalid_argument("group spec: Dn needs even order n");
      return grp::dihedral_group(n / 2);
    default: throw std::invalid_argument("group spec: cannot parse " + s);
  }
}

std::shared_ptr<const grp::PermutationGroup> parse_group(const std::string& spec) {
  std::string s = spec;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (!s.empty() && s[0] == '(') return parse_atom(spec);
  std::shared_ptr<const grp::PermutationGroup> acc;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('x', pos);
    std::string atom = s.substr(pos, next == std::string::npos ? next : next - pos);
    auto g = parse_atom(atom);
    acc = acc ? grp::direct_product(*acc, *g).group : g;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (!acc) throw std::invalid_argument("group spec: empty");
  return acc;
}

void check_prime(int p) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p must be a prime");
}

// ----- serialization helpers -----

std::string rat_str(const num::Rat& r) { return r.str(); }

json cyc_json(const ct::Cyc& value) {
  ct::Cyc c = value.reduced();
  json coeffs = json::array();
  for (const num::Rat& r : c.c) coeffs.push_back(rat_str(r));
  return json{{"conductor", c.N}, {"coeffs", coeffs}};
}

json species_json(const sp::SpeciesFT& w) {
  json out = json::array();
  for (const num::Rat& r : w.v) out.push_back(rat_str(r));
  return out;
}

json species_json(const sp::SpeciesFTD& w) {
  json out = json::array();
  for (const num::Rat& r : w.v) out.push_back(rat_str(r));
  return out;
}

json subgroup_json(const grp::Subgroup& S) {
  json gens = json::array();
  for (int g : S.gens) gens.push_back(grp::to_cycle_string(S.parent->elem(g)));
  return json{{"order", S.order()}, {"generators", gens}};
}

// Character-row name used in decomposition tables: "F" when Out(L,u) is
// trivial, "triv" for the trivial character, "V<k>" otherwise.
std::string char_name(const sim::DDeltaPair& lu, int row) {
  if (lu.table.num_chars() == 1) return "F";
  bool trivial = true;
  for (const auto& v : lu.table.rows[row])
    if (!(v == ct::Cyc::from_int(1))) { trivial = false; break; }
  return trivial ? "triv" : "V" + std::to_string(row);
}

// Name of the twist u: "1", "inv" when u inverts L, else "u<order>".
std::string u_name(const sim::DDeltaPair& lu) {
  if (lu.u_order == 1) return "1";
  const grp::PermutationGroup& E = *lu.pair.E;
  bool inverts = true;
  for (int l : lu.pair.L.elems)
    if (E.conj(lu.pair.u, l) != E.inv(l)) { inverts = false; break; }
  return inverts ? "inv" : "u" + std::to_string(lu.u_order);
}

std::string label_name(const sim::DDeltaPair& lu, int row) {
  return "(" + lu.l_name + "," + u_name(lu) + "," + char_name(lu, row) + ")";
}

json config_json(int p, int field_degree = 0) {
  json cfg{{"p", p}};
  if (field_degree > 0) cfg["field_degree"] = field_degree;
  cfg["bounds"] = json{{"block_group_order", kMaxBlockGroupOrder},
                       {"p_group_inventory", sim::p_group_inventory_bound(p)}};
  return cfg;
}

json decomposition_json(const sim::FunctorDecomposition& d) {
  json labels = json::array();
  json nonzero = json::object();
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    const sim::DDeltaPair& lu = d.pairs[d.labels[i].first];
    int row = d.labels[i].second;
    labels.push_back(json{{"L", lu.l_name},
                          {"u_order", lu.u_order},
                          {"V", char_name(lu, row)},
                          {"multiplicity", d.multiplicity[i]}});
    if (d.multiplicity[i]) nonzero[label_name(lu, row)] = d.multiplicity[i];
  }
  json chars = json::array();
  for (const sim::DDeltaPair& lu : d.pairs) {
    json rows = json::array();
    for (const auto& r : lu.table.rows) {
      json vals = json::array();
      for (const auto& v : r) vals.push_back(cyc_json(v));
      rows.push_back(vals);
    }
    chars.push_back(json{{"L", lu.l_name},
                         {"u_order", lu.u_order},
                         {"out_order", lu.out.order()},
                         {"character_values", rows}});
  }
  return json{{"labels", labels}, {"nonzero", nonzero}, {"label_pairs", chars}};
}

// ----- block plumbing -----

void check_block_order(const grp::PermutationGroup& G) {
  if (G.order() > kMaxBlockGroupOrder)
    throw std::invalid_argument("group order " + std::to_string(G.order()) +
                                " exceeds the block-theory bound " +
                                std::to_string(kMaxBlockGroupOrder));
}

bf::Block select_block(std::shared_ptr<const grp::PermutationGroup> G, int p,
                       const std::string& selector) {
  check_block_order(*G);
  std::vector<bf::Block> blocks = bf::analyze_blocks(std::move(G), p);
  if (selector == "principal") {
    for (bf::Block& b : blocks)
      if (b.principal) return std::move(b);
    throw std::runtime_error("no principal block found");
  }
  int idx = -1;
  try {
    idx = std::stoi(selector);
  } catch (...) {
    throw std::invalid_argument("block selector must be 'principal' or an index");
  }
  if (idx < 0 || idx >= static_cast<int>(blocks.size()))
    throw std::invalid_argument("block index out of range (0.." +
                                std::to_string(blocks.size() - 1) + ")");
  return std::move(blocks[idx]);
}

// "SPEC" or "SPEC:SELECTOR" (selector defaults to "principal").
bf::Block parse_block_spec(const std::string& spec, int p) {
  std::size_t colon = spec.rfind(':');
  std::string gspec = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string sel = colon == std::string::npos ? "principal" : spec.substr(colon + 1);
  return select_block(parse_group(gspec), p, sel);
}

// ----- subcommand implementations -----

json run_pairs(const std::string& gspec, int p) {
  auto G = parse_group(gspec);
  pp::PairIndex idx = pp::enumerate_pairs(*G, p);
  json classes = json::array();
  for (const pp::Pair& pr : idx.reps) {
    pp::AbstractPair red = pp::reduce_pair(*G, pr.P, pr.s);
    classes.push_back(json{{"P", subgroup_json(pr.P)},
                           {"s", grp::to_cycle_string(G->elem(pr.s))},
                           {"s_order", G->elem_order(pr.s)},
                           {"reduced_L_order", red.L.order()},
                           {"reduced_u_order", red.E->elem_order(red.u)}});
  }
  return json{{"command", "pairs"},  {"group", gspec},
              {"config", config_json(p)}, {"group_order", G->order()},
              {"num_classes", idx.size()}, {"classes", classes}};
}

json run_species(const std::string& gspec, int p, int left, int right) {
  auto G = parse_group(gspec);
  pp::PairIndex idx = pp::enumerate_pairs(*G, p);
  pp::DiagIndex gg = pp::diagonal_pair_classes(G, G, p);
  json idem = json::array();
  sp::SpeciesFT sum(idx);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    sp::SpeciesFT f = sp::indicator_ft(idx, static_cast<int>(i));
    sum = sum + f;
    idem.push_back(json{{"class", i},
                        {"species", species_json(f)},
                        {"tilde_lift", species_json(sp::tilde_lift(f, gg))}});
  }
  if (!(sum == sp::all_ones_ft(idx)))
    throw std::runtime_error("species idempotents do not sum to the all-ones species");
  json rep{{"command", "species"},      {"group", gspec},
           {"config", config_json(p)},  {"num_pair_classes", idx.size()},
           {"num_diagonal_classes", gg.size()}, {"idempotents", idem}};
  if (left >= 0 || right >= 0) {
    if (left < 0 || right < 0 || left >= static_cast<int>(idx.size()) ||
        right >= static_cast<int>(idx.size()))
      throw std::invalid_argument("species indices out of range");
    sp::SpeciesFTD a = sp::tilde_lift(sp::indicator_ft(idx, left), gg);
    sp::SpeciesFTD b = sp::tilde_lift(sp::indicator_ft(idx, right), gg);
    rep["compose"] = json{{"left", left},
                          {"right", right},
                          {"result", species_json(sp::compose(a, b, gg))}};
  }
  return rep;
}

json run_decompose(const std::string& gspec, int p, const std::string& block_sel) {
  auto G = parse_group(gspec);
  if (block_sel.empty()) {
    sim::FunctorDecomposition d = sim::decompose_representable(*G, p);
    json rep{{"command", "decompose"}, {"group", gspec},
             {"config", config_json(p)}, {"functor", "representable"}};
    rep.update(decomposition_json(d));
    return rep;
  }
  bf::Block b = select_block(G, p, block_sel);
  sim::FunctorDecomposition d = bf::decompose_block_functor(b);
  json rep{{"command", "decompose"},
           {"group", gspec},
           {"config", config_json(p, b.ctx.F->m())},
           {"functor", "block"},
           {"block", block_sel},
           {"defect_order", b.defect.order()},
           {"num_simple_modules", bf::num_simples(b)}};
  rep.update(decomposition_json(d));
  return rep;
}

json run_blocks(const std::string& gspec, int p) {
  auto G = parse_group(gspec);
  check_block_order(*G);
  std::vector<bf::Block> blocks = bf::analyze_blocks(G, p);
  json out = json::array();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const bf::Block& b = blocks[i];
    int support = 0;
    for (int c : b.b)
      if (c) ++support;
    json dims = json::array();
    for (const bf::Block::Local& loc : b.local)
      if (loc.P.order() == 1)
        for (const mb::SimpleModule& s : loc.simples) dims.push_back(s.dim);
    json pairs = json::array();
    for (std::size_t rp = 0; rp < b.pairs.rep_index.size(); ++rp) {
      int r = b.pairs.rep_index[rp];
      const grp::Subgroup& P = b.pairs.subgroups[r];
      int n = b.pairs.stabilizer[r].order();
      int c = grp::centralizer_subgroup(*G, P).order();
      pairs.push_back(json{{"P", subgroup_json(P)},
                           {"stabilizer_order", n},
                           {"centralizer_order", c},
                           {"fusion_quotient_order", n / c},
                           {"num_simple_modules",
                            b.pair_local[rp].simples.size()}});
    }
    out.push_back(json{{"index", i},
                       {"principal", b.principal},
                       {"idempotent_support", support},
                       {"defect", subgroup_json(b.defect)},
                       {"simple_dims", dims},
                       {"num_subpairs", b.pairs.subgroups.size()},
                       {"brauer_pair_classes", pairs}});
  }
  return json{{"command", "blocks"},
              {"group", gspec},
              {"config", config_json(p, blocks.empty() ? 0 : blocks[0].ctx.F->m())},
              {"group_order", G->order()},
              {"num_blocks", blocks.size()},
              {"blocks", out}};
}

json run_nilpotent(const std::string& gspec, int p, const std::string& block_sel) {
  bf::Block b = select_block(parse_group(gspec), p, block_sel);
  bf::NilpotencyVerdict v = bf::is_nilpotent(b);
  sim::FunctorDecomposition d = bf::decompose_block_functor(b);
  json rep{{"command", "nilpotent"},
           {"group", gspec},
           {"block", block_sel},
           {"config", config_json(p, b.ctx.F->m())},
           {"nilpotent", v.nilpotent},
           {"all_u_trivial", v.all_u_trivial},
           {"matches_defect_decomposition", v.matches_defect}};
  rep.update(decomposition_json(d));
  return rep;
}

json run_equivalent(const std::string& left, const std::string& right, int p) {
  bf::Block a = parse_block_spec(left, p);
  bf::Block b = parse_block_spec(right, p);
  bf::EquivalenceVerdict v = bf::functorially_equivalent(a, b);
  json rep{{"command", "equivalent"},
           {"left", left},
           {"right", right},
           {"config", config_json(p)},
           {"equivalent", v.equivalent}};
  if (!v.equivalent) rep["witness"] = v.witness;
  return rep;
}

json run_broue(const std::string& gspec, int p, const std::string& block_sel) {
  bf::Block b = select_block(parse_group(gspec), p, block_sel);
  bf::BroueResult r = bf::broue_condition_check(b);
  json counts = json::array();
  for (const auto& c : r.counts)
    counts.push_back(json{{"subgroup_order", c.subgroup_order},
                          {"s_order", c.s_order},
                          {"count_block", c.count_b},
                          {"count_correspondent", c.count_c}});
  json rep{{"command", "broue"},
           {"group", gspec},
           {"block", block_sel},
           {"config", config_json(p, b.ctx.F->m())},
           {"holds", r.holds},
           {"functorially_equivalent", r.equivalent},
           {"l_block", r.l_b},
           {"l_correspondent", r.l_c},
           {"counts", counts}};
  if (!r.holds) rep["witness"] = r.witness;
  return rep;
}

json run_selftest() {
  // A quick pass over the cross-checked pipelines; every call below contains
  // internal consistency assertions that throw on failure.
  json checks = json::array();
  for (int p : {2, 3}) {
    auto S3 = grp::symmetric_group(3);
    pp::PairIndex idx = pp::enumerate_pairs(*S3, p);
    sp::SpeciesFT sum(idx);
    for (std::size_t i = 0; i < idx.size(); ++i)
      sum = sum + sp::indicator_ft(idx, static_cast<int>(i));
    if (!(sum == sp::all_ones_ft(idx)))
      throw std::runtime_error("selftest: idempotent sum failed");
    checks.push_back("idempotent_sum S3 p=" + std::to_string(p));
    for (const bf::Block& b : bf::analyze_blocks(S3, p)) {
      bf::is_nilpotent(b);  // three-way nilpotency cross-check
      sim::FunctorDecomposition d = bf::decompose_block_functor(b);
      if (bf::block_multiplicity(b, d.pairs[0], 0) != bf::num_simples(b))
        throw std::runtime_error("selftest: trivial-label multiplicity != l(b)");
    }
    checks.push_back("block_pipeline S3 p=" + std::to_string(p));
  }
  auto A4 = grp::alternating_group(4);
  for (const bf::Block& b : bf::analyze_blocks(A4, 3))
    if (b.principal && !bf::broue_condition_check(b).holds)
      throw std::runtime_error("selftest: broue check failed on A4 p=3");
  checks.push_back("broue A4 p=3");
  return json{{"command", "selftest"}, {"passed", true}, {"checks", checks}};
}

json dispatch_job(const json& job) {
  std::string cmd = job.at("command").get<std::string>();
  int p = job.value("p", 2);
  check_prime(p);
  if (cmd == "pairs") return run_pairs(job.at("group"), p);
  if (cmd == "species")
    return run_species(job.at("group"), p, job.value("left", -1), job.value("right", -1));
  if (cmd == "decompose") return run_decompose(job.at("group"), p, job.value("block", ""));
  if (cmd == "blocks") return run_blocks(job.at("group"), p);
  if (cmd == "nilpotent")
    return run_nilpotent(job.at("group"), p, job.value("block", "principal"));
  if (cmd == "equivalent") return run_equivalent(job.at("left"), job.at("right"), p);
  if (cmd == "broue") return run_broue(job.at("group"), p, job.value("block", "principal"));
  if (cmd == "selftest") return run_selftest();
  throw std::invalid_argument("unknown job command: " + cmd);
}

void emit(const json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with diagonal p-permutation functors"};
  app.require_subcommand(1);
  std::string group, left, right, out_path, job_path;
  std::string block_dec, block_nil = "principal", block_br = "principal";
  int p = 2, sp_left = -1, sp_right = -1;

  auto add_common = [&](CLI::App* c, bool needs_group) {
    if (needs_group) c->add_option("--group", group, "group spec")->required();
    c->add_option("--p", p, "prime")->required();
    c->add_option("--out", out_path, "write the JSON report to a file");
  };
  CLI::App* c_pairs = app.add_subcommand("pairs", "enumerate pair classes");
  add_common(c_pairs, true);
  CLI::App* c_species = app.add_subcommand("species", "idempotents, tilde lifts, composition");
  add_common(c_species, true);
  c_species->add_option("--left", sp_left, "compose: left idempotent class");
  c_species->add_option("--right", sp_right, "compose: right idempotent class");
  CLI::App* c_dec = app.add_subcommand("decompose", "representable or block functor");
  add_common(c_dec, true);
  c_dec->add_option("--block", block_dec, "block selector: 'principal' or index");
  CLI::App* c_blocks = app.add_subcommand("blocks", "block census");
  add_common(c_blocks, true);
  CLI::App* c_nil = app.add_subcommand("nilpotent", "nilpotency of a block");
  add_common(c_nil, true);
  c_nil->add_option("--block", block_nil, "block selector");
  CLI::App* c_eq = app.add_subcommand("equivalent", "functorial equivalence of two blocks");
  add_common(c_eq, false);
  c_eq->add_option("--left", left, "left block: SPEC or SPEC:selector")->required();
  c_eq->add_option("--right", right, "right block: SPEC or SPEC:selector")->required();
  CLI::App* c_br = app.add_subcommand("broue", "abelian-defect comparison with N_G(D)");
  add_common(c_br, true);
  c_br->add_option("--block", block_br, "block selector");
  CLI::App* c_self = app.add_subcommand("selftest", "run the invariant suites");
  c_self->add_option("--out", out_path, "write the JSON report to a file");
  CLI::App* c_job = app.add_subcommand("job", "run a JSON job file (array of jobs)");
  c_job->add_option("--file", job_path, "job file path")->required();
  c_job->add_option("--out", out_path, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    json report;
    if (c_pairs->parsed()) {
      check_prime(p);
      report = run_pairs(group, p);
    } else if (c_species->parsed()) {
      check_prime(p);
      report = run_species(group, p, sp_left, sp_right);
    } else if (c_dec->parsed()) {
      check_prime(p);
      report = run_decompose(group, p, block_dec);
    } else if (c_blocks->parsed()) {
      check_prime(p);
      report = run_blocks(group, p);
    } else if (c_nil->parsed()) {
      check_prime(p);
      report = run_nilpotent(group, p, block_nil);
    } else if (c_eq->parsed()) {
      check_prime(p);
      report = run_equivalent(left, right, p);
    } else if (c_br->parsed()) {
      check_prime(p);
      report = run_broue(group, p, block_br);
    } else if (c_self->parsed()) {
      report = run_selftest();
    } else if (c_job->parsed()) {
      std::ifstream f(job_path);
      if (!f) throw std::invalid_argument("cannot open job file " + job_path);
      json jobs = json::parse(f);
      if (!jobs.is_array()) throw std::invalid_argument("job file must hold a JSON array");
      report = json::array();
      for (const json& job : jobs) report.push_back(dispatch_job(job));
    }
    emit(report, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal cross-check failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
