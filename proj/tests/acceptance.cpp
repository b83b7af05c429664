// End-to-end acceptance checks.  Each criterion prints one pass/fail line
// with its runtime; the process exits nonzero if any criterion fails.
#include "ppf/blockfun.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

using namespace ppf;
using num::Rat;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

using Group = std::shared_ptr<const grp::PermutationGroup>;

std::map<std::string, int> nonzero_labels(const sim::FunctorDecomposition& d) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < d.labels.size(); ++i)
    if (d.multiplicity[i])
      out[d.pairs[d.labels[i].first].name(d.labels[i].second)] = d.multiplicity[i];
  return out;
}

// 1. Species idempotents: orthogonal idempotent basis summing to one,
//    multiplicative tilde lifts, and the sandwich identity
//    tilde(F_{P,s}) o F_Delta o tilde(F_{Q,t}) = F_Delta on every diagonal
//    class of S3 x S3 at p = 3.
void criterion_idempotents() {
  std::vector<Group> suite = {grp::cyclic_group(2), grp::cyclic_group(3),
                              grp::symmetric_group(3), grp::dihedral_group(4),
                              grp::alternating_group(4)};
  for (const Group& G : suite)
    for (int p : {2, 3}) {
      pp::PairIndex idx = pp::enumerate_pairs(*G, p);
      pp::DiagIndex gg = pp::diagonal_pair_classes(G, G, p);
      sp::SpeciesFT sum(idx);
      std::vector<sp::SpeciesFTD> lifts;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        sp::SpeciesFT fi = sp::indicator_ft(idx, static_cast<int>(i));
        require(fi * fi == fi, "not idempotent");
        for (std::size_t j = i + 1; j < idx.size(); ++j)
          require((fi * sp::indicator_ft(idx, static_cast<int>(j))).is_zero(),
                  "not orthogonal");
        sum = sum + fi;
        lifts.push_back(sp::tilde_lift(fi, gg));
      }
      require(sum == sp::all_ones_ft(idx), "sum is not the identity species");
      for (std::size_t i = 0; i < lifts.size(); ++i)
        for (std::size_t j = 0; j < lifts.size(); ++j) {
          sp::SpeciesFTD prod = sp::compose(lifts[i], lifts[j], gg);
          require(i == j ? prod == lifts[i] : prod.is_zero(),
                  "tilde lift is not multiplicative");
        }
    }
  // sandwich identity on every diagonal class of S3 x S3 at p = 3
  Group S3 = grp::symmetric_group(3);
  pp::PairIndex idx = pp::enumerate_pairs(*S3, 3);
  pp::DiagIndex gg = pp::diagonal_pair_classes(S3, S3, 3);
  for (std::size_t c = 0; c < gg.size(); ++c) {
    const pp::DiagonalPairClass& cls = gg.classes[c];
    int left = idx.class_of(cls.U, cls.s);
    int right = idx.class_of(cls.W, cls.t);
    require(left >= 0 && right >= 0, "diagonal class has no projections");
    sp::SpeciesFTD mid = sp::indicator_ftd(gg, static_cast<int>(c));
    sp::SpeciesFTD lhs = sp::compose(
        sp::compose(sp::tilde_lift(sp::indicator_ft(idx, left), gg), mid, gg),
        sp::tilde_lift(sp::indicator_ft(idx, right), gg), gg);
    require(lhs == mid, "sandwich identity fails");
  }
}

// 2. Composition agrees with the brute-force fixed-point species of explicit
//    biset tensor products, over all transitive bisets of (C2,C2), (C3,C3)
//    and (S3,S3).
void criterion_composition_oracle() {
  for (auto [mk, p] : std::vector<std::pair<Group, int>>{{grp::cyclic_group(2), 2},
                                                         {grp::cyclic_group(3), 3},
                                                         {grp::symmetric_group(3), 2},
                                                         {grp::symmetric_group(3), 3}}) {
    pp::ProductContext ctx = pp::make_product_context(mk, mk, p);
    pp::DiagIndex idx = pp::diagonal_pair_classes(mk, mk, p);
    std::vector<sp::Biset> bisets = sp::transitive_bisets(ctx);
    require(!bisets.empty(), "no transitive bisets");
    for (const sp::Biset& X : bisets)
      for (const sp::Biset& Y : bisets) {
        sp::SpeciesFTD direct = sp::biset_species(sp::biset_tensor(X, Y), idx);
        sp::SpeciesFTD via =
            sp::compose(sp::biset_species(X, idx), sp::biset_species(Y, idx), idx);
        require(direct == via, "composition disagrees with the biset oracle");
      }
  }
}

// 3. The sandwich map X -> tilde(F_i) o X o tilde(F_j) vanishes on 100 seeded
//    random species exactly when the reduced pairs are non-isomorphic.
void criterion_vanishing() {
  Group S3 = grp::symmetric_group(3);
  for (int p : {2, 3}) {
    pp::PairIndex idx = pp::enumerate_pairs(*S3, p);
    pp::DiagIndex gg = pp::diagonal_pair_classes(S3, S3, p);
    std::vector<sp::SpeciesFTD> lifts;
    std::vector<pp::AbstractPair> reds;
    for (const pp::Pair& pr : idx.reps) reds.push_back(pp::reduce_pair(*S3, pr.P, pr.s));
    for (std::size_t i = 0; i < idx.size(); ++i)
      lifts.push_back(sp::tilde_lift(sp::indicator_ft(idx, static_cast<int>(i)), gg));
    std::vector<sp::SpeciesFTD> probes;
    for (unsigned seed = 1; seed <= 100; ++seed)
      probes.push_back(sp::random_species(gg, seed));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) {
        bool all_zero = true;
        for (const sp::SpeciesFTD& X : probes)
          if (!sp::compose(sp::compose(lifts[i], X, gg), lifts[j], gg).is_zero())
            all_zero = false;
        require(all_zero == !pp::pair_isomorphic(reds[i], reds[j]),
                "vanishing pattern disagrees with reduced-pair isomorphism");
      }
  }
}

// 4. The endomorphism algebra E_{L,u} has dimension |Out(L,u)| and structure
//    constants of the group algebra of Out(L,u), scaled by 1/|Z(L<u>)|, for
//    (1,1), (C2,1), (C3,1), (C3,inv) and (C2^2, 3-cycle).
void criterion_elu_structure() {
  std::vector<std::pair<int, sim::DDeltaPair>> cases;
  std::vector<sim::DDeltaPair> lus2 = sim::enumerate_ddelta(2, 4);
  std::vector<sim::DDeltaPair> lus3 = sim::enumerate_ddelta(3, 3);
  cases.push_back({2, lus2[0]});  // (1, 1)
  cases.push_back({2, lus2[1]});  // (C2, 1)
  cases.push_back({2, lus2[4]});  // (C2^2, 3-cycle)
  cases.push_back({3, lus3[1]});  // (C3, 1)
  cases.push_back({3, lus3[2]});  // (C3, inv)
  for (const auto& [p, lu] : cases) {
    sim::EluAlgebra e = sim::elu_algebra(lu, p);
    require(e.basis_class.size() == static_cast<std::size_t>(lu.out.order()),
            "dim E_{L,u} != |Out(L,u)|");
    Rat scale(1, grp::center(*lu.pair.E).order());
    for (int a = 0; a < lu.out.order(); ++a)
      for (int b = 0; b < lu.out.order(); ++b) {
        sp::SpeciesFTD fa = sp::indicator_ftd(e.idx, e.basis_class[a]);
        sp::SpeciesFTD fb = sp::indicator_ftd(e.idx, e.basis_class[b]);
        sp::SpeciesFTD expected =
            scale * sp::indicator_ftd(e.idx, e.basis_class[lu.out.compose(a, b)]);
        require(sp::compose(fa, fb, e.idx) == expected, "wrong structure constant");
      }
  }
}

// 5. Multiplicity counting: sum over labels of m_G * m_H equals the number of
//    diagonal pair classes of H x G, for G, H in {C2, C3, S3} and p in {2,3};
//    in particular 6 = 2^2 + 1^2 + 0^2 + 1^2 for S3 at p = 3.
void criterion_multiplicity_counts() {
  std::vector<Group> suite = {grp::cyclic_group(2), grp::cyclic_group(3),
                              grp::symmetric_group(3)};
  for (int p : {2, 3})
    for (const Group& G : suite)
      for (const Group& H : suite) {
        std::vector<int> mg = sim::decompose_representable(*G, p).multiplicity;
        std::vector<int> mh = sim::decompose_representable(*H, p).multiplicity;
        // label lists of different bounds are prefix-compatible
        long long total = 0;
        for (std::size_t i = 0; i < std::min(mg.size(), mh.size()); ++i)
          total += static_cast<long long>(mg[i]) * mh[i];
        require(total ==
                    static_cast<long long>(pp::diagonal_pair_classes(H, G, p).size()),
                "label count mismatch");
      }
  sim::FunctorDecomposition d = sim::decompose_representable(*grp::symmetric_group(3), 3);
  require(d.multiplicity == std::vector<int>{2, 0, 1, 1} &&
              pp::diagonal_pair_classes(grp::symmetric_group(3),
                                        grp::symmetric_group(3), 3)
                      .size() == 6,
          "S3 at p=3 is not 6 = 4 + 1 + 0 + 1");
}

// 6. Block census: kS3 at p=2 over GF(4) has two blocks with defects C2, 1
//    and simple dimensions {1}, {2}; kS3 at p=3 a single block of defect C3
//    with two simples; kA4 at p=3 two blocks of defects C3, 1 with the
//    principal one carrying one simple.
void criterion_block_census() {
  {
    auto G = grp::symmetric_group(3);
    mb::GroupAlgebraContext ctx = mb::make_context(G, 2);
    require(ctx.F->q() == 4, "kS3 at p=2 should live over GF(4)");
    std::vector<mb::AlgElt> blocks = mb::central_idempotents(ctx);
    require(blocks.size() == 2, "kS3 p=2 should have 2 blocks");
    require(mb::principal_block_index(ctx, blocks) == 0, "principal not first");
    require(mb::defect_group(ctx, blocks[0]).order() == 2 &&
                mb::defect_group(ctx, blocks[1]).order() == 1,
            "wrong defects");
    std::vector<mb::SimpleModule> s0 = mb::block_simples(ctx, blocks[0]);
    std::vector<mb::SimpleModule> s1 = mb::block_simples(ctx, blocks[1]);
    require(s0.size() == 1 && s0[0].dim == 1, "principal block simples wrong");
    require(s1.size() == 1 && s1[0].dim == 2, "defect-zero block simples wrong");
  }
  {
    auto G = grp::symmetric_group(3);
    mb::GroupAlgebraContext ctx = mb::make_context(G, 3);
    std::vector<mb::AlgElt> blocks = mb::central_idempotents(ctx);
    require(blocks.size() == 1, "kS3 p=3 should have 1 block");
    require(mb::defect_group(ctx, blocks[0]).order() == 3, "defect should be C3");
    require(mb::block_simples(ctx, blocks[0]).size() == 2, "should carry 2 simples");
  }
  {
    auto G = grp::alternating_group(4);
    mb::GroupAlgebraContext ctx = mb::make_context(G, 3);
    std::vector<mb::AlgElt> blocks = mb::central_idempotents(ctx);
    require(blocks.size() == 2, "kA4 p=3 should have 2 blocks");
    require(mb::principal_block_index(ctx, blocks) == 0, "principal not first");
    require(mb::defect_group(ctx, blocks[0]).order() == 3 &&
                mb::defect_group(ctx, blocks[1]).order() == 1,
            "wrong defects");
    require(mb::block_simples(ctx, blocks[0]).size() == 1,
            "principal block should carry 1 simple");
  }
}

// The corpus used by criteria 7, 8 and 11.
std::vector<bf::Block> corpus() {
  std::vector<bf::Block> all;
  for (auto [G, p] : std::vector<std::pair<Group, int>>{{grp::symmetric_group(3), 2},
                                                        {grp::symmetric_group(3), 3},
                                                        {grp::alternating_group(4), 3}})
    for (bf::Block& b : bf::analyze_blocks(G, p)) all.push_back(std::move(b));
  return all;
}

// 7. The two multiplicity formulas agree on every (block, label) of the
//    census corpus; m_{1,1,F}(b) equals the number of simple modules of b;
//    and the support respects the defect bound.
void criterion_multiplicity_formulas() {
  for (const bf::Block& b : corpus()) {
    // decompose_block_functor evaluates both formulas per label and throws
    // on any disagreement
    sim::FunctorDecomposition d = bf::decompose_block_functor(b);
    require(d.multiplicity[0] == bf::num_simples(b), "m_{1,1,F} != l(b)");
    for (std::size_t i = 0; i < d.labels.size(); ++i)
      if (d.multiplicity[i])
        require(d.pairs[d.labels[i].first].pair.L.order() <= b.defect.order(),
                "nonzero multiplicity beyond the defect bound");
  }
}

// 8. Nilpotency: the fusion definition, the u=1 support condition and the
//    defect-group comparison give the same verdict on every corpus block;
//    the principal block of kS3 at p=2 is nilpotent with decomposition
//    S_{1,1,F} + S_{C2,1,F}, and the block of kS3 at p=3 is not.
void criterion_nilpotency() {
  for (const bf::Block& b : corpus()) {
    bf::NilpotencyVerdict v = bf::is_nilpotent(b);  // throws on disagreement
    require(v.nilpotent == v.all_u_trivial && v.nilpotent == v.matches_defect,
            "characterizations disagree");
  }
  auto S3 = grp::symmetric_group(3);
  std::vector<bf::Block> s3p2 = bf::analyze_blocks(S3, 2);
  require(bf::is_nilpotent(s3p2[0]).nilpotent, "kS3 p=2 principal should be nilpotent");
  require(nonzero_labels(bf::decompose_block_functor(s3p2[0])) ==
              std::map<std::string, int>{{"L=1,|u|=1,V=0", 1}, {"L=C2,|u|=1,V=0", 1}},
          "wrong decomposition for the nilpotent block");
  require(!bf::is_nilpotent(bf::analyze_blocks(S3, 3)[0]).nilpotent,
          "kS3 p=3 should not be nilpotent");
}

// 9. Functorial equivalence: the principal block of kS3 at p=2 is equivalent
//    to the principal block of kC2; defect-zero blocks are pairwise
//    equivalent with decomposition S_{1,1,F}; blocks with non-isomorphic
//    defects are inequivalent, with a witness label.
void criterion_equivalence() {
  auto S3 = grp::symmetric_group(3);
  std::vector<bf::Block> s3p2 = bf::analyze_blocks(S3, 2);
  std::vector<bf::Block> c2 = bf::analyze_blocks(grp::cyclic_group(2), 2);
  require(bf::functorially_equivalent(s3p2[0], c2[0]).equivalent,
          "kS3 p=2 principal should be equivalent to kC2");
  // defect-zero corpus: the three blocks of kC3 over GF(4), the non-principal
  // block of kS3 at p=2 and the non-principal block of kA4 at p=3
  std::vector<bf::Block> zeros = bf::analyze_blocks(grp::cyclic_group(3), 2);
  zeros.push_back(std::move(s3p2[1]));
  for (bf::Block& b : bf::analyze_blocks(grp::alternating_group(4), 3))
    if (b.defect.order() == 1) zeros.push_back(std::move(b));
  require(zeros.size() == 5, "expected five defect-zero blocks");
  for (const bf::Block& b : zeros) {
    require(nonzero_labels(bf::decompose_block_functor(b)) ==
                std::map<std::string, int>{{"L=1,|u|=1,V=0", 1}},
            "defect-zero decomposition should be S_{1,1,F}");
    for (const bf::Block& c : zeros)
      require(bf::functorially_equivalent(b, c).equivalent,
              "defect-zero blocks should be pairwise equivalent");
  }
  bf::EquivalenceVerdict v = bf::functorially_equivalent(zeros[0], c2[0]);
  require(!v.equivalent && !v.witness.empty(),
          "non-isomorphic defects should be inequivalent with a witness");
}

// 10. Abelian-defect comparison: the principal block of kA4 at p=3 passes the
//     local-counts check against the principal block of k N_A4(C3) and the
//     two are functorially equivalent with l(b) = l(c) = 1.
void criterion_broue() {
  std::vector<bf::Block> blocks = bf::analyze_blocks(grp::alternating_group(4), 3);
  const bf::Block& principal = blocks[0].principal ? blocks[0] : blocks[1];
  bf::BroueResult r = bf::broue_condition_check(principal);
  require(r.holds, "local counts should agree");
  require(r.equivalent, "blocks should be functorially equivalent");
  require(r.l_b == 1 && r.l_c == 1, "l(b) and l(c) should both be 1");
}

// 11. Finiteness: the bound is 2 for the trivial group, 16 for C2 and 72 for
//     C3, and every corpus multiplicity stays at or below the bound of its
//     defect group.
void criterion_finiteness() {
  require(sim::finiteness_bound(*grp::cyclic_group(1)) == 2, "bound(1) != 2");
  require(sim::finiteness_bound(*grp::cyclic_group(2)) == 16, "bound(C2) != 16");
  require(sim::finiteness_bound(*grp::cyclic_group(3)) == 72, "bound(C3) != 72");
  for (const bf::Block& b : corpus()) {
    long long bound = sim::finiteness_bound(*grp::subgroup_as_group(b.defect));
    for (int m : bf::decompose_block_functor(b).multiplicity)
      require(m <= bound, "multiplicity exceeds the finiteness bound");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<void()> run;
  };
  std::vector<Criterion> criteria = {
      {"species idempotent suite", 10, criterion_idempotents},
      {"composition vs biset oracle", 60, criterion_composition_oracle},
      {"sandwich vanishing theorem", 60, criterion_vanishing},
      {"E_{L,u} structure constants", 120, criterion_elu_structure},
      {"multiplicity counting identity", 60, criterion_multiplicity_counts},
      {"modular block census", 60, criterion_block_census},
      {"multiplicity formula agreement", 120, criterion_multiplicity_formulas},
      {"nilpotency characterizations", 120, criterion_nilpotency},
      {"functorial equivalence verdicts", 60, criterion_equivalence},
      {"abelian-defect local comparison", 120, criterion_broue},
      {"finiteness bound", 5, criterion_finiteness},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (error.empty() && secs > criteria[i].budget_seconds)
      error = "exceeded the time budget of " + std::to_string(criteria[i].budget_seconds) + "s";
    if (error.empty()) {
      std::printf("PASS  %2zu  %-32s  %6.2fs\n", i + 1, criteria[i].name, secs);
    } else {
      std::printf("FAIL  %2zu  %-32s  %6.2fs  %s\n", i + 1, criteria[i].name, secs,
                  error.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
