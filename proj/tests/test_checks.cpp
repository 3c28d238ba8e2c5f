#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "s2tlab/checks.hpp"
#include "s2tlab/nearfield.hpp"
#include "s2tlab/perm.hpp"

using namespace s2tlab;

namespace {

Perm p(std::vector<int> v) { return Perm(std::move(v)); }

S2TContext field_ctx(int q) {
  return build_context(affine_group(finite_field(q)),
                       "GF(" + std::to_string(q) + ")");
}

// A deliberately invalid "context" over S4, used to provoke failure
// witnesses.  S4 is not sharply 2-transitive, so several lemmas break.
S2TContext fake_s4_context() {
  S2TContext ctx;
  ctx.group = closure(4, {p({1, 0, 2, 3}), p({1, 2, 3, 0})});
  ctx.base_point = 0;
  ctx.label = "synthetic:S4";
  for (const Perm& g : ctx.group.elements) {
    if (g[0] == 0)
      ctx.stabilizer.insert(g);
    if (element_order(g) == 2)
      ctx.involutions.insert(g);
  }
  ctx.involution_products = set_product(ctx.involutions, ctx.involutions);
  ctx.chr = Characteristic::odd_prime(3);  // bogus on purpose
  return ctx;
}

std::vector<std::string> expected_order() {
  return {"lemma1_involutions_one_class",
          "lemma2_normal_times_stabilizer",
          "lemma3_stabilizer_involutions",
          "malnormality_of_stabilizer",
          "lemma4_products_fixed_point_free",
          "lemma5_products_form_normal_subgroup",
          "lemma6_action_equivalence",
          "bn_products_one_class",
          "power_closure_of_products",
          "theorem_char3_split"};
}

} // namespace

TEST_CASE("run_all on GF(3): ten reports, all pass") {
  auto reports = run_all(field_ctx(3));
  REQUIRE(reports.size() == 10);
  auto names = expected_order();
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].check_name == names[i]);
    CHECK(reports[i].passed());
  }
}

TEST_CASE("run_all on GF(4): char-2 hypotheses reported, nothing fails") {
  auto reports = run_all(field_ctx(4));
  REQUIRE(reports.size() == 10);
  for (const auto& r : reports) {
    CHECK_FALSE(r.failed());
    bool gated = r.check_name == "lemma6_action_equivalence" ||
                 r.check_name == "theorem_char3_split";
    CHECK((r.outcome == Outcome::HypothesisNotMet) == gated);
  }
}

TEST_CASE("run_all on GF(5): only the theorem is out of hypothesis") {
  auto reports = run_all(field_ctx(5));
  for (const auto& r : reports) {
    CHECK_FALSE(r.failed());
    CHECK((r.outcome == Outcome::HypothesisNotMet) ==
          (r.check_name == "theorem_char3_split"));
  }
}

TEST_CASE("run_all on the degree-9 instances: everything applicable passes") {
  for (auto ctx : {field_ctx(9),
                   build_context(affine_group(dickson_nearfield_9()),
                                 "Dickson(9)")}) {
    auto reports = run_all(ctx);
    for (const auto& r : reports)
      CHECK(r.passed());
  }
}

TEST_CASE("run_all on GF(7) and GF(8)") {
  for (const auto& r : run_all(field_ctx(7))) {
    CHECK_FALSE(r.failed());
    CHECK((r.outcome == Outcome::HypothesisNotMet) ==
          (r.check_name == "theorem_char3_split"));
  }
  for (const auto& r : run_all(field_ctx(8))) {
    CHECK_FALSE(r.failed());
    bool gated = r.check_name == "lemma6_action_equivalence" ||
                 r.check_name == "theorem_char3_split";
    CHECK((r.outcome == Outcome::HypothesisNotMet) == gated);
  }
}

TEST_CASE("lemma1 reports a replayable positive witness") {
  CheckReport rep = check_lemma1(field_ctx(9));
  REQUIRE(rep.passed());
  CHECK(rep.details["class_size"] == 9);
  auto& sample = rep.details["sample_conjugation"];
  Perm i = perm_from_json(sample["i"]);
  Perm j = perm_from_json(sample["j"]);
  Perm g = perm_from_json(sample["g"]);
  CHECK(conjugate(i, g) == j);
}

TEST_CASE("lemma3 counts the stabilizer involutions") {
  CHECK(check_lemma3(field_ctx(3)).details["stabilizer_involution_count"] == 1);
  CHECK(check_lemma3(field_ctx(4)).details["stabilizer_involution_count"] == 0);
  CHECK(check_lemma3(build_context(affine_group(dickson_nearfield_9()),
                                   "Dickson(9)"))
            .details["stabilizer_involution_count"] == 1);
}

TEST_CASE("lemma5 records the commuting hypothesis") {
  CheckReport rep = check_lemma5(field_ctx(4));
  CHECK(rep.passed());
  CHECK(rep.details["hypothesis_holds"] == true);
}

TEST_CASE("bn_class notes the char-2 caveat") {
  CheckReport rep = check_bn_class(field_ctx(4));
  CHECK(rep.passed());
  CHECK(rep.details.contains("caveat"));
  CHECK_FALSE(check_bn_class(field_ctx(5)).details.contains("caveat"));
}

TEST_CASE("theorem reports the kernel size") {
  CheckReport rep = check_theorem(field_ctx(9));
  REQUIRE(rep.passed());
  CHECK(rep.details["kernel_size"] == 9);
  CHECK(rep.details["stabilizer_size"] == 8);
}

TEST_CASE("synthetic failures produce replayable witnesses") {
  S2TContext fake = fake_s4_context();

  CheckReport l1 = check_lemma1(fake);
  CheckReport l3 = check_lemma3(fake);
  CheckReport l4 = check_lemma4(fake);
  CheckReport mal = check_malnormality(fake);

  for (const CheckReport* r : {&l1, &l3, &l4, &mal}) {
    CAPTURE(r->check_name);
    CHECK(r->failed());
    REQUIRE(!r->witness.is_null());
    CHECK(replay_witness(r->witness));
  }
}

TEST_CASE("failure reports survive a serialization round trip") {
  S2TContext fake = fake_s4_context();
  for (CheckReport rep :
       {check_lemma1(fake), check_lemma3(fake), check_lemma4(fake)}) {
    CheckReport back = report_from_json(to_json_record(rep));
    CHECK(back.check_name == rep.check_name);
    CHECK(back.outcome == rep.outcome);
    CHECK(back.witness == rep.witness);
    CHECK(replay_witness(back.witness));
  }
}

TEST_CASE("golden records for the synthetic failures") {
  S2TContext fake = fake_s4_context();
  const std::pair<const char*, CheckReport> cases[] = {
      {"lemma1_fail.json", check_lemma1(fake)},
      {"lemma3_fail.json", check_lemma3(fake)},
      {"lemma4_fail.json", check_lemma4(fake)},
      {"malnormality_fail.json", check_malnormality(fake)},
  };
  for (auto& [name, rep] : cases) {
    CheckReport normalized = rep;
    normalized.elapsed_ms = 0.0;
    std::string serialized = to_json_record(normalized).dump(2) + "\n";
    std::string path = std::string(S2TLAB_TEST_DATA_DIR) + "/golden/" + name;
    if (std::getenv("S2TLAB_REGEN_GOLDEN")) {
      std::ofstream(path) << serialized;
      continue;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK_MESSAGE(buf.str() == serialized, "golden mismatch for ", name);
    // Deserialized golden content replays the recorded failure.
    CheckReport from_disk = report_from_json(json::parse(buf.str()));
    CHECK(replay_witness(from_disk.witness));
  }
}
