#pragma once

// The full audit: every axiom family and every derived construction exercised
// over sampled instances, gathered into one deterministic report.  The same
// seed and configuration always produce byte-identical JSON (no timestamps,
// sorted keys), so a rerun diffs clean.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "daghilb/report.hpp"
#include "daghilb/scalar.hpp"
#include "daghilb/tolerance.hpp"

namespace daghilb {

struct AuditConfig {
  std::vector<FieldTag> fields{FieldTag::R, FieldTag::C, FieldTag::H};
  std::vector<int> dims{1, 2, 3, 4, 6};
  int trials{25};
  std::uint64_t seed{1};
  ToleranceProfile tol{};
  bool pad{false};  // allow odd-dimension unitary splits via zero padding
};

// Applies "--tol key=value" style overrides; throws on unknown keys.
void apply_tolerance_override(ToleranceProfile& tol, const std::string& key, double value);

// --- Axiom suites, one per letter ------------------------------------------

// Dagger: involution, contravariant anti-homomorphism, adjoint identity
// <f u, v> = <u, f^dag v>, identity fixed.
Report check_dagger_axioms(FieldTag f, const std::vector<int>& dims, int trials,
                           std::uint64_t seed, const ToleranceProfile& tol = default_tol());

// Generator: K separates parallel maps, and its only subobjects are 0 and K.
Report check_generator_axiom(FieldTag f, const std::vector<int>& dims, int trials,
                             std::uint64_t seed, const ToleranceProfile& tol = default_tol());

// Biproducts: projection/injection identities, the dagger relations between
// them, and the induced addition (commutative, associative, composition
// distributes, dagger distributes, entrywise agreement).
Report check_biproduct_axioms(FieldTag f, const std::vector<int>& dims, int trials,
                              std::uint64_t seed, const ToleranceProfile& tol = default_tol());

// Equalizers: e is a dagger mono with f e = g e, and anything equalizing
// factors through it (mediator recovered as e^dag h).
Report check_equalizer_axiom(FieldTag f, const std::vector<int>& dims, int trials,
                             std::uint64_t seed, const ToleranceProfile& tol = default_tol());

// Kernels: every dagger mono is the kernel of its cokernel pair, and
// kernel(f) genuinely annihilates f.
Report check_kernel_axiom(FieldTag f, const std::vector<int>& dims, int trials,
                          std::uint64_t seed, const ToleranceProfile& tol = default_tol());

// Directed colimits: chains and diamonds of isometries built to commute,
// colimit legs recovered, cocone mediators unique and exact.
Report check_colimit_axiom(FieldTag f, const std::vector<int>& dims, int trials,
                           std::uint64_t seed, const ToleranceProfile& tol = default_tol());

// --- Derived-construction suites --------------------------------------------

// Lattice laws on sampled dagger subobjects: double complement, De Morgan,
// absorption, commutativity, plus order/complement transport along phi.
Report check_lattice_laws(FieldTag f, int trials, std::uint64_t seed,
                          const ToleranceProfile& tol = default_tol());

// Unitary-split batteries: term counts, factor unitarity, reconstruction,
// and the quaternionic linearity of every factor.
Report check_decomposition_battery(FieldTag f, const std::vector<int>& dims, int trials,
                                   std::uint64_t seed, bool pad,
                                   const ToleranceProfile& tol = default_tol());

// Structure transfer: promoted forms against the componentwise conj(v) u
// oracle for the standard operators, sesquilinearity and positivity for
// conjugated operators over a random positive definite form, and the
// rejection path for operators that break an identity.
Report check_structure_transfer(int trials, std::uint64_t seed,
                                const ToleranceProfile& tol = default_tol());

// --- Aggregate ---------------------------------------------------------------

struct AxiomEntry {
  std::string key;    // single letter, stable
  std::string title;  // what the letter stands for
  Report report;
};

struct AuditReport {
  int schema_version{1};
  AuditConfig config;
  std::vector<AxiomEntry> axioms;  // exactly one entry per axiom letter
  std::vector<std::pair<std::string, Report>> sections;

  bool all_passed() const;
};

AuditReport run_audit(const AuditConfig& cfg);

nlohmann::json audit_to_json(const AuditReport& r);

}  // namespace daghilb
