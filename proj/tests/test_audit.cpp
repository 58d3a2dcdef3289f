#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "daghilb/audit.hpp"
#include "daghilb/serialize.hpp"

using namespace daghilb;

namespace {

AuditConfig small_config() {
  AuditConfig cfg;
  cfg.dims = {1, 2, 3};
  cfg.trials = 4;
  cfg.seed = 17;
  return cfg;
}

}  // namespace

TEST_CASE("a small audit passes across all fields") {
  const AuditReport rep = run_audit(small_config());
  CHECK(rep.all_passed());
  const std::set<std::string> letters = {"B", "C", "D", "E", "G", "K"};
  std::set<std::string> seen;
  for (const AxiomEntry& a : rep.axioms) {
    seen.insert(a.key);
    CHECK(!a.title.empty());
    CHECK(a.report.all_passed());
    CHECK(!a.report.checks.empty());
  }
  CHECK(seen == letters);
  std::set<std::string> section_names;
  for (const auto& [name, sec] : rep.sections) {
    section_names.insert(name);
    CHECK(sec.all_passed());
  }
  const std::set<std::string> expected = {"scalars",    "ortholattice",       "equivalence",
                                          "monoidal",   "structure_transfer", "decomposition"};
  CHECK(section_names == expected);
}

TEST_CASE("the audit JSON is deterministic, byte for byte") {
  const AuditConfig cfg = small_config();
  const std::string once = audit_to_json(run_audit(cfg)).dump(2);
  const std::string twice = audit_to_json(run_audit(cfg)).dump(2);
  CHECK(once == twice);
  // and it really carries the configuration it ran with
  const nlohmann::json j = nlohmann::json::parse(once);
  CHECK(j.at("schema_version").get<int>() == 1);
  CHECK(j.at("config").at("seed").get<std::uint64_t>() == 17);
  CHECK(j.at("all_passed").get<bool>() == true);
  CHECK(j.at("axioms").is_object());
  CHECK(j.at("axioms").size() == 6);
  // changing the seed changes the bytes (different samples, same verdicts)
  AuditConfig other = cfg;
  other.seed = 18;
  CHECK(audit_to_json(run_audit(other)).dump(2) != once);
}

TEST_CASE("tolerance overrides map every published key and reject the rest") {
  ToleranceProfile tol;
  apply_tolerance_override(tol, "unitary", 1e-6);
  CHECK(tol.unitary == 1e-6);
  apply_tolerance_override(tol, "orthonormal", 1e-5);
  CHECK(tol.orthonormal == 1e-5);
  for (const char* key : {"structure", "lattice", "spectral", "strict", "commutation",
                          "drop", "zero_input", "eigen_off"})
    CHECK_NOTHROW(apply_tolerance_override(tol, key, 1e-7));
  CHECK(tol.drop == 1e-7);
  CHECK_THROWS_AS(apply_tolerance_override(tol, "bogus", 1.0), std::invalid_argument);
}

TEST_CASE("config validation") {
  AuditConfig cfg = small_config();
  cfg.trials = 0;
  CHECK_THROWS_AS(run_audit(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.dims = {};
  CHECK_THROWS_AS(run_audit(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.dims = {-1, 2};
  CHECK_THROWS_AS(run_audit(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.fields = {};
  CHECK_THROWS_AS(run_audit(cfg), std::invalid_argument);
}

TEST_CASE("serialization round trips") {
  // scalar arrays carry exactly the field arity
  const Scalar q = Scalar::quaternion(1.0, -2.0, 0.25, 3.5);
  const nlohmann::json jq = scalar_to_json(q);
  REQUIRE(jq.is_array());
  CHECK(jq.size() == 4);
  CHECK(scalar_from_json(jq, FieldTag::H) == q);
  CHECK(scalar_to_json(Scalar::real(2.0)).size() == 1);
  CHECK_THROWS_AS(scalar_from_json(jq, FieldTag::C), std::invalid_argument);

  // morphisms
  const Morphism m = Morphism::from_rows(
      FieldTag::C, {{Scalar::complex_val(1.0, 2.0), Scalar::complex_val(0.0, -1.0)}});
  const Morphism back = morphism_from_json(morphism_to_json(m));
  CHECK(back.field() == FieldTag::C);
  CHECK(distance(back, m) == 0.0);
  nlohmann::json broken = morphism_to_json(m);
  broken["rows"] = 7;
  CHECK_THROWS_AS(morphism_from_json(broken), std::invalid_argument);

  // subobjects: a non-orthonormal basis is accepted and orthonormalised
  nlohmann::json sub;
  sub["field"] = "R";
  sub["ambient"] = 3;
  sub["basis"] = {{{2.0}, {0.0}, {0.0}}, {{2.0}, {2.0}, {0.0}}};
  const Subobject s = subobject_from_json(sub);
  CHECK(s.dim() == 2);
  CHECK(s.ambient().dim == 3);
  const nlohmann::json again = subobject_to_json(s);
  CHECK(distance(subobject_from_json(again).proj(), s.proj()) < 1e-12);

  // check reports always carry the failure list; it is empty on a pass
  CheckResult ok;
  ok.check = "demo.pass";
  ok.trial(0.0, 1.0, 9, "fine");
  const nlohmann::json jok = check_to_json(ok);
  CHECK(jok.at("failures").empty());
  CHECK(jok.at("passed").get<bool>());
  CHECK(!jok.contains("notes"));
  CheckResult bad;
  bad.check = "demo.fail";
  bad.trial(2.0, 1.0, 9, "too big");
  const nlohmann::json jbad = check_to_json(bad);
  REQUIRE(jbad.contains("failures"));
  CHECK(jbad.at("failures").size() == 1);
  CHECK(jbad.at("failures").at(0).at("seed").get<std::uint64_t>() == 9);
}
