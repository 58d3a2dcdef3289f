// Command-line front end: run the audit, split a single operator into
// unitaries, analyse a lattice of subspaces, or probe an inner-product-space
// instance for the orthomodularity hypotheses.
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 bad usage,
// unreadable input, or a configuration the library refuses.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "daghilb/audit.hpp"
#include "daghilb/dagcat.hpp"
#include "daghilb/factor.hpp"
#include "daghilb/rng.hpp"
#include "daghilb/serialize.hpp"
#include "daghilb/subobject.hpp"
#include "daghilb/unidecomp.hpp"

namespace {

using daghilb::FieldTag;
using daghilb::Morphism;
using nlohmann::json;

std::vector<FieldTag> parse_fields(const std::string& spec) {
  if (spec == "all")
    return {FieldTag::R, FieldTag::C, FieldTag::H};
  return {daghilb::field_from_name(spec)};
}

std::vector<int> parse_dims(const std::string& spec) {
  std::vector<int> dims;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    dims.push_back(std::stoi(item));
  }
  if (dims.empty()) throw std::invalid_argument("no dimensions in '" + spec + "'");
  return dims;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DAGHILB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("DAGHILB_SEED is not a number");
    }
  }
  return 1;
}

void apply_tol_flags(daghilb::ToleranceProfile& tol, const std::vector<std::string>& flags) {
  for (const std::string& flag : flags) {
    const std::size_t eq = flag.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--tol wants key=value, got '" + flag + "'");
    daghilb::apply_tolerance_override(tol, flag.substr(0, eq),
                                      std::stod(flag.substr(eq + 1)));
  }
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (buf.str().empty()) return json();  // empty file, caller decides
  return json::parse(buf.str());
}

// ---------------------------------------------------------------------------

int run_audit_cmd(const daghilb::AuditConfig& cfg, const std::string& out_path,
                  bool json_only) {
  const daghilb::AuditReport report = daghilb::run_audit(cfg);
  const json j = daghilb::audit_to_json(report);
  if (!json_only) {
    for (const daghilb::AxiomEntry& a : report.axioms)
      std::cout << "axiom " << a.key << "  "
                << (a.report.all_passed() ? "pass" : "FAIL") << "  worst "
                << a.report.worst_residual() << "  (" << a.title << ")\n";
    for (const auto& [name, rep] : report.sections)
      std::cout << "section " << name << "  "
                << (rep.all_passed() ? "pass" : "FAIL") << "  worst "
                << rep.worst_residual() << "\n";
    std::cout << (report.all_passed() ? "ALL PASSED" : "FAILURES PRESENT") << "\n";
  }
  if (json_only) {
    emit(j, out_path);
  } else if (!out_path.empty()) {
    emit(j, out_path);
  }
  return report.all_passed() ? 0 : 1;
}

int run_decompose_cmd(const std::string& in_path, const std::string& field_spec,
                      int dim, std::uint64_t seed, bool pad,
                      const daghilb::ToleranceProfile& tol, const std::string& out_path) {
  Morphism input;
  if (!in_path.empty()) {
    const json j = load_json(in_path);
    if (j.is_null()) throw std::runtime_error("empty matrix file");
    input = daghilb::morphism_from_json(j);
  } else {
    const FieldTag f = daghilb::field_from_name(field_spec);
    if (dim < 1) throw std::invalid_argument("--dim must be at least 1");
    daghilb::Rng rng = daghilb::stream(seed, "cli.decompose");
    input = Morphism(f, dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int c = 0; c < dim; ++c) input.at(i, c) = rng.scalar(f);
  }

  const daghilb::UnitaryDecomposition dec = daghilb::decompose(input, pad, tol);
  const double residual = daghilb::distance(dec.reconstruct(), input);

  json terms = json::array();
  for (const daghilb::DecompositionTerm& term : dec.terms)
    terms.push_back(json{{"coeff", daghilb::scalar_to_json(term.coeff)},
                         {"factor", daghilb::morphism_to_json(term.factor)}});
  json diagnostics = json::array();
  for (const auto& [label, res] : dec.diagnostics)
    diagnostics.push_back(json{{"label", label}, {"residual", res}});

  emit(json{{"input", daghilb::morphism_to_json(input)},
            {"term_count", dec.terms.size()},
            {"terms", terms},
            {"residual", residual},
            {"source_norm", dec.source_norm},
            {"padded", dec.padded},
            {"worst_factor_unitarity", dec.worst_factor_unitarity()},
            {"diagnostics", diagnostics}},
       out_path);
  const bool ok = residual <= 1e-8 && (dec.padded || dec.worst_factor_unitarity() <= 1e-8);
  return ok ? 0 : 1;
}

int run_lattice_cmd(const std::string& in_path, const daghilb::ToleranceProfile& tol,
                    const std::string& out_path) {
  const json j = load_json(in_path);
  if (j.is_null()) {
    // Empty input: empty report, nothing to fail.
    emit(json{{"subspaces", json::array()},
              {"leq", json::array()},
              {"joins", json::array()},
              {"meets", json::array()},
              {"complements", json::array()},
              {"orthomodular", json::array()},
              {"all_passed", true}},
         out_path);
    return 0;
  }
  if (!j.contains("ambient") || !j.contains("field") || !j.contains("subspaces"))
    throw std::invalid_argument("lattice input needs ambient, field, subspaces");
  const FieldTag f = daghilb::field_from_name(j.at("field").get<std::string>());
  const int n = j.at("ambient").get<int>();

  std::vector<std::string> names;
  std::vector<daghilb::Subobject> subs;
  for (const json& entry : j.at("subspaces")) {
    names.push_back(entry.at("name").get<std::string>());
    subs.push_back(daghilb::subobject_from_json(
        json{{"ambient", n}, {"field", daghilb::field_name(f)}, {"basis", entry.at("basis")}},
        tol));
  }

  json leq_table = json::array();
  json joins = json::array();
  json meets = json::array();
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = 0; b < subs.size(); ++b) {
      leq_table.push_back(json{{"a", names[a]},
                               {"b", names[b]},
                               {"leq", daghilb::leq(subs[a], subs[b], tol.lattice)}});
      if (a < b) {
        const daghilb::Subobject jn = daghilb::join(subs[a], subs[b], tol);
        const daghilb::Subobject mt = daghilb::meet(subs[a], subs[b], tol);
        joins.push_back(json{{"a", names[a]},
                             {"b", names[b]},
                             {"dim", jn.dim()},
                             {"basis", daghilb::subobject_to_json(jn)["basis"]}});
        meets.push_back(json{{"a", names[a]},
                             {"b", names[b]},
                             {"dim", mt.dim()},
                             {"basis", daghilb::subobject_to_json(mt)["basis"]}});
      }
    }

  bool all_ok = true;
  json complements = json::array();
  json ortho = json::array();
  const Morphism id = Morphism::identity(f, n);
  for (std::size_t a = 0; a < subs.size(); ++a) {
    const daghilb::Subobject comp = daghilb::orthocomplement(subs[a], tol);
    complements.push_back(json{{"name", names[a]},
                               {"dim", comp.dim()},
                               {"basis", daghilb::subobject_to_json(comp)["basis"]}});
    const double split = daghilb::distance(subs[a].proj() + comp.proj(), id);
    const double dbl =
        daghilb::distance(daghilb::orthocomplement(comp, tol).proj(), subs[a].proj());
    const bool ok = split <= 1e-10 && dbl <= tol.lattice;
    all_ok = all_ok && ok;
    ortho.push_back(json{{"name", names[a]},
                         {"projection_split_residual", split},
                         {"double_complement_residual", dbl},
                         {"passed", ok}});
  }

  emit(json{{"ambient", n},
            {"field", daghilb::field_name(f)},
            {"subspaces", names},
            {"leq", leq_table},
            {"joins", joins},
            {"meets", meets},
            {"complements", complements},
            {"orthomodular", ortho},
            {"all_passed", all_ok}},
       out_path);
  return all_ok ? 0 : 1;
}

int run_soler_cmd(const std::string& in_path, int trials, std::uint64_t seed,
                  const daghilb::ToleranceProfile& tol, const std::string& out_path) {
  const json j = load_json(in_path);
  if (j.is_null()) throw std::runtime_error("empty instance file");
  if (!j.contains("field") || !j.contains("dim"))
    throw std::invalid_argument("instance needs field and dim");
  const FieldTag f = daghilb::field_from_name(j.at("field").get<std::string>());
  const int n = j.at("dim").get<int>();
  if (n < 0) throw std::invalid_argument("dim must be nonnegative");

  Morphism gram = Morphism::identity(f, n);
  if (j.contains("form")) gram = daghilb::morphism_from_json(j.at("form"));
  if (gram.field() != f || gram.rows() != n || gram.cols() != n)
    throw std::invalid_argument("form must be a square matrix over the stated field");

  daghilb::Report report;

  if (n == 0) {
    daghilb::CheckResult c;
    c.check = "soler.vacuous";
    c.statement_ref = "soler.hypotheses";
    c.notes.push_back("zero-dimensional instance: every hypothesis holds vacuously");
    ++c.trials;
    report.add(c);
  } else {
    {
      daghilb::CheckResult c;
      c.check = "soler.hermitian-form";
      c.statement_ref = "soler.hypotheses";
      c.trial(daghilb::distance(gram, daghilb::dagger(gram)) /
                  std::max(1.0, daghilb::frobenius_norm(gram)),
              1e-8, seed, "the form must equal its own adjoint");
      report.add(c);
    }

    std::vector<double> spectrum;
    bool spectral_ok = true;
    {
      daghilb::CheckResult c;
      c.check = "soler.invertible-form";
      c.statement_ref = "soler.hypotheses";
      try {
        const Morphism sym = (gram + daghilb::dagger(gram)).scaled(0.5);
        const daghilb::EigenResult eig = daghilb::hermitian_eigen(sym, tol);
        spectrum = eig.values;
        double smallest = 1e300;
        for (double v : eig.values) smallest = std::min(smallest, std::abs(v));
        ++c.trials;
        c.observe(std::max(0.0, 1e-10 - smallest));
        c.require(smallest > 1e-10, seed,
                  "the form is singular (eigenvalue at " + std::to_string(smallest) + ")");
        spectral_ok = smallest > 1e-10;
      } catch (const std::exception& e) {
        ++c.trials;
        c.failures.push_back({seed, std::string("eigensolve failed: ") + e.what()});
        spectral_ok = false;
      }
      report.add(c);
    }

    {
      daghilb::CheckResult c;
      c.check = "soler.orthomodular";
      c.statement_ref = "soler.orthomodularity";
      c.notes.push_back("a subspace M splits the space iff M + its form-complement "
                        "has full rank; sampled subspaces plus a targeted isotropic "
                        "probe when the spectrum is indefinite");
      daghilb::Rng rng = daghilb::stream(seed, c.check);
      std::vector<Morphism> probes;
      for (int t = 0; t < trials; ++t) {
        const int k = rng.uniform_int(1, n);
        Morphism span(f, n, k);
        for (int i = 0; i < n; ++i)
          for (int cc = 0; cc < k; ++cc) span.at(i, cc) = rng.scalar(f);
        probes.push_back(span);
      }
      if (spectral_ok && !spectrum.empty() && spectrum.front() < 0 && spectrum.back() > 0) {
        // Mix a positive and a negative eigenvector into a null vector of the
        // form; the line it spans meets its own complement.
        const Morphism sym = (gram + daghilb::dagger(gram)).scaled(0.5);
        const daghilb::EigenResult eig = daghilb::hermitian_eigen(sym, tol);
        const Morphism lo = eig.vectors.column(0);
        const Morphism hi = eig.vectors.column(eig.vectors.cols() - 1);
        const Morphism probe = lo.scaled(1.0 / std::sqrt(-eig.values.front())) +
                               hi.scaled(1.0 / std::sqrt(eig.values.back()));
        probes.push_back(probe);
      }
      for (const Morphism& span : probes) {
        const Morphism basis = daghilb::range_basis(span, tol);
        if (basis.cols() == 0) continue;
        const Morphism comp = daghilb::nullspace(daghilb::dagger(basis) * gram, tol);
        const int joint = daghilb::range_basis(daghilb::hstack(basis, comp), tol).cols();
        ++c.trials;
        c.observe(static_cast<double>(n - joint));
        c.require(joint == n, seed,
                  "a subspace of dimension " + std::to_string(basis.cols()) +
                      " plus its complement spans only " + std::to_string(joint) +
                      " of " + std::to_string(n) + " dimensions");
      }
      report.add(c);
    }

    {
      daghilb::CheckResult c;
      c.check = "soler.orthonormal-sequence";
      c.statement_ref = "soler.hypotheses";
      c.notes.push_back("sequence: not-testable -- the hypothesis asks for an "
                        "infinite orthonormal family, which no finite-dimensional "
                        "instance can witness");
      report.add(c);
    }
  }

  json checks = json::array();
  for (const daghilb::CheckResult& c : report.checks) checks.push_back(daghilb::check_to_json(c));
  emit(json{{"field", daghilb::field_name(f)},
            {"dim", n},
            {"checks", checks},
            {"all_passed", report.all_passed()}},
       out_path);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional dagger category toolbox"};
  app.require_subcommand(1);

  std::string field_spec = "all";
  std::string dims_spec = "1,2,3,4,6";
  int trials = 25;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<std::string> tol_flags;
  std::string out_path;
  bool json_only = false;
  bool pad = false;
  std::string in_path;
  int dim = 4;

  CLI::App* audit = app.add_subcommand("audit", "run every axiom and construction check");
  audit->add_option("--field", field_spec, "r, c, h or all");
  audit->add_option("--dims", dims_spec, "comma-separated dimensions to sample");
  audit->add_option("--trials", trials, "trials per check");
  audit->add_option("--seed", seed, "master seed")->each([&](const std::string&) {
    seed_given = true;
  });
  audit->add_option("--tol", tol_flags, "tolerance override key=value (repeatable)");
  audit->add_option("--out", out_path, "write the JSON report here");
  audit->add_flag("--json-only", json_only, "print JSON instead of the summary");
  audit->add_flag("--pad", pad, "allow odd-dimension splits via zero padding");

  CLI::App* dec = app.add_subcommand("decompose", "split one operator into unitaries");
  dec->add_option("--in", in_path, "matrix JSON file; omit to sample randomly");
  dec->add_option("--field", field_spec, "field of the sampled matrix (r, c, h)");
  dec->add_option("--dim", dim, "dimension of the sampled matrix");
  dec->add_option("--seed", seed, "sampling seed")->each([&](const std::string&) {
    seed_given = true;
  });
  dec->add_option("--tol", tol_flags, "tolerance override key=value (repeatable)");
  dec->add_option("--out", out_path, "write the JSON result here");
  dec->add_flag("--pad", pad, "allow odd dimensions via zero padding");

  CLI::App* lat = app.add_subcommand("lattice", "analyse a family of subspaces");
  lat->add_option("--in", in_path, "subspace family JSON file")->required();
  lat->add_option("--tol", tol_flags, "tolerance override key=value (repeatable)");
  lat->add_option("--out", out_path, "write the JSON result here");

  CLI::App* sol = app.add_subcommand("soler", "probe a form instance for orthomodularity");
  sol->add_option("--in", in_path, "instance JSON file")->required();
  sol->add_option("--trials", trials, "sampled subspaces");
  sol->add_option("--seed", seed, "sampling seed")->each([&](const std::string&) {
    seed_given = true;
  });
  sol->add_option("--tol", tol_flags, "tolerance override key=value (repeatable)");
  sol->add_option("--out", out_path, "write the JSON result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits cleanly, anything else is usage
  }

  try {
    daghilb::ToleranceProfile tol = daghilb::default_tol();
    apply_tol_flags(tol, tol_flags);
    if (!seed_given) seed = default_seed();

    if (audit->parsed()) {
      daghilb::AuditConfig cfg;
      cfg.fields = parse_fields(field_spec);
      cfg.dims = parse_dims(dims_spec);
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.tol = tol;
      cfg.pad = pad;
      return run_audit_cmd(cfg, out_path, json_only);
    }
    if (dec->parsed())
      return run_decompose_cmd(in_path, field_spec == "all" ? "c" : field_spec, dim,
                               seed, pad, tol, out_path);
    if (lat->parsed()) return run_lattice_cmd(in_path, tol, out_path);
    if (sol->parsed()) return run_soler_cmd(in_path, trials, seed, tol, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
