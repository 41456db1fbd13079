// twistk: batch front end for the twisted-group-algebra library.
//
//   twistk <command> (--input PATH | --inline JSON) [--tol R] [--fuzz N]
//          [--box B] [--seed S] [--json | --pretty]
//
// Exit status: 0 when a decision was computed, 1 on a validation failure
// (the report carries the witness), 2 on malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "twisted/twisted.hpp"

namespace {

using twisted::Json;

struct JobSpec {
  std::string command;
  std::string input;
  std::string inline_json;
  std::string tol = "1/100000000";
  std::size_t fuzz = 10000;
  std::int64_t box = 3;
  std::uint64_t seed = 0;
  bool pretty = false;
};

/// Outcome of one command: the report plus the exit status.
struct Outcome {
  Json report = Json::object();
  int status = 0;
  std::string summary;
};

/// Input that parsed but asks for something the command cannot do.
struct Unsupported : twisted::Error {
  using Error::Error;
};

std::string kind_of(const twisted::MultiplierSpec& spec) {
  switch (spec.value.index()) {
    case 0: return std::get<twisted::MultiplierPtr>(spec.value)->kind();
    case 1: return "torus";
    case 2: return "g3";
    case 3: return "direct_product";
    default: return "free_product";
  }
}

Json names(const twisted::FiniteGroup& g, const std::vector<twisted::Element>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(g.name(x));
  return out;
}

Json point(const std::vector<std::int64_t>& v) { return Json(v); }
Json point(const twisted::G3Element& v) { return Json(std::vector<std::int64_t>(v.begin(), v.end())); }

template <typename Report>
Outcome sampled_outcome(const Report& r, const twisted::IrrationalBasis&) {
  Outcome o;
  o.report["valid"] = r.ok;
  o.report["checked"] = r.checked;
  if (r.witness) {
    Json w = Json::array();
    for (const auto& x : *r.witness) w.push_back(point(x));
    o.report["witness"] = w;
    o.report["message"] = r.message;
  }
  o.status = r.ok ? 0 : 1;
  o.summary = r.ok ? "cocycle identity holds on " + std::to_string(r.checked) + " sampled triples" : r.message;
  return o;
}

twisted::MultiplierPtr require_finite(const twisted::MultiplierSpec& spec, const std::string& command) {
  auto m = spec.finite();
  if (!m) throw Unsupported(command + " needs a multiplier on a finite group, got " + kind_of(spec));
  return m;
}

/// Exhaustive cocycle check on a finite multiplier; sets exit 1 on failure.
bool validate_finite(const twisted::Multiplier& sigma, Outcome& o) {
  const twisted::ValidationReport r = twisted::validate(sigma);
  if (r.ok) return true;
  o.report["valid"] = false;
  o.report["witness"] = names(sigma.group(), {r.witness->begin(), r.witness->end()});
  o.report["message"] = r.message;
  o.status = 1;
  o.summary = "invalid multiplier: " + r.message;
  return false;
}

Outcome run_validate(const twisted::MultiplierSpec& spec, const JobSpec& job) {
  using namespace twisted;
  if (auto m = spec.finite()) {
    Outcome o;
    if (!validate_finite(*m, o)) return o;
    const std::size_t n = m->group().order();
    o.report["valid"] = true;
    o.report["checked"] = n * n * n;
    o.report["normalized"] = m->is_normalized();
    o.summary = "valid multiplier on a group of order " + std::to_string(n) + " (exhaustive)";
    return o;
  }
  if (auto* t = std::get_if<TorusJob>(&spec.value)) {
    auto draw = box_sampler<LatticePoint>(job.box, t->sigma.theta.rank());
    return sampled_outcome(validate_sampled(t->sigma, draw, job.fuzz, job.seed), spec.basis);
  }
  if (auto* g = std::get_if<G3Job>(&spec.value)) {
    auto draw = box_sampler<G3Element>(job.box);
    return sampled_outcome(validate_sampled(g->sigma, draw, job.fuzz, job.seed), spec.basis);
  }
  const auto& fp = std::get<FreeProductJob>(spec.value);
  const FreeProduct& words = fp.sigma->free_product();
  const auto max_length = static_cast<std::size_t>(2 * job.box);
  auto r = validate_sampled(*fp.sigma, [&](std::mt19937_64& rng) { return words.random_word(rng, max_length); },
                            job.fuzz, job.seed);
  Outcome o;
  o.report["valid"] = r.ok;
  o.report["checked"] = r.checked;
  if (r.witness) {
    Json w = Json::array();
    for (const auto& x : *r.witness) w.push_back(to_json(words, x));
    o.report["witness"] = w;
    o.report["message"] = r.message;
  }
  o.status = r.ok ? 0 : 1;
  o.summary = r.ok ? "cocycle identity holds on " + std::to_string(r.checked) + " sampled word triples" : r.message;
  return o;
}

Json classes_json(const twisted::FiniteGroup& g, const twisted::RegularityReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"rep", c.cls.representative},
                       {"name", g.name(c.cls.representative)},
                       {"size", c.cls.size()},
                       {"regular", c.regular}});
  return classes;
}

Outcome finite_condition_k(const twisted::Multiplier& sigma) {
  Outcome o;
  if (!validate_finite(sigma, o)) return o;
  const auto r = twisted::regular_classes(sigma);
  o.report["condition_k"] = r.condition_k;
  o.report["classes"] = classes_json(sigma.group(), r);
  o.report["regular_element_count"] = r.regular_element_count;
  Json witness = nullptr;
  for (const auto& c : r.classes)
    if (c.regular && c.cls.representative != sigma.group().identity()) {
      witness = sigma.group().name(c.cls.representative);
      break;
    }
  o.report["witness"] = witness;
  o.summary = std::string("condition K ") + (r.condition_k ? "holds" : "fails") + "; " +
              std::to_string(r.regular_class_count()) + " regular classes";
  return o;
}

Outcome run_condition_k(const twisted::MultiplierSpec& spec, const JobSpec& job) {
  using namespace twisted;
  if (auto* p = std::get_if<ProductJob>(&spec.value)) {
    Outcome o = finite_condition_k(*p->assembled);
    if (o.status == 0) o.report["f_degeneracy"] = f_degeneracy(p->triple).holds;
    return o;
  }
  if (auto m = spec.finite()) return finite_condition_k(*m);
  Outcome o;
  if (auto* t = std::get_if<TorusJob>(&spec.value)) {
    const LatticeDecision d = condition_k_lattice(t->sigma.theta);
    o.report["condition_k"] = d.condition_k;
    o.report["witness"] = d.witness ? Json(*d.witness) : Json(nullptr);
    if (d.witness) o.report["witness_regular"] = is_regular_lattice(t->sigma.theta, *d.witness);
    if (t->sigma.theta.rank() == 3) o.report["qtheta_dimension"] = qtheta_dimension(t->sigma.theta);
  } else if (auto* g = std::get_if<G3Job>(&spec.value)) {
    const LatticeDecision d = g3_condition_k(g->sigma.mu);
    o.report["condition_k"] = d.condition_k;
    o.report["witness"] = d.witness ? Json(*d.witness) : Json(nullptr);
    if (d.witness) {
      // The phase against a central element is linear in the first three
      // coordinates, so unit vectors plus a random sweep settle it.
      const G3Element c = g3_central((*d.witness)[0], (*d.witness)[1], (*d.witness)[2]);
      bool regular = true;
      for (std::size_t i = 0; i < 6 && regular; ++i) {
        G3Element u{};
        u[i] = 1;
        regular = g3_commutator_phase(g->sigma.mu, u, c).is_zero();
      }
      auto draw = box_sampler<G3Element>(job.box);
      std::mt19937_64 rng(job.seed);
      for (std::size_t i = 0; i < job.fuzz && regular; ++i)
        regular = g3_commutator_phase(g->sigma.mu, draw(rng), c).is_zero();
      o.report["witness_element"] = point(c);
      o.report["witness_regular"] = regular;
    }
  } else {
    throw Unsupported("condition-k is not implemented for free-product inputs");
  }
  const bool k = o.report["condition_k"].get<bool>();
  o.summary = std::string("condition K ") + (k ? "holds" : "fails") +
              (o.report["witness"].is_null() ? "" : "; witness " + o.report["witness"].dump());
  return o;
}

Outcome run_center(const twisted::MultiplierSpec& spec, const JobSpec& job) {
  using namespace twisted;
  auto m = require_finite(spec, "center");
  Outcome o;
  if (!validate_finite(*m, o)) return o;
  const double tol = parse_rational(job.tol).convert_to<double>();
  const std::size_t combinatorial = regular_classes(*m).regular_class_count();
  const NumericCenter numeric = center_numeric(*m, tol, spec.basis);
  std::optional<std::size_t> matrix;
  const std::size_t order = m->group().order();
  const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(order))));
  if (root * root == order && numeric.dimension == 1) matrix = root;
  o.report["combinatorial"] = combinatorial;
  o.report["numeric"] = numeric.dimension;
  o.report["matrix_algebra"] = matrix ? Json(*matrix) : Json(nullptr);
  o.report["agree"] = combinatorial == numeric.dimension;
  o.summary = "center dimension " + std::to_string(combinatorial) + " (combinatorial), " +
              std::to_string(numeric.dimension) + " (numeric)" +
              (matrix ? "; algebra is M_" + std::to_string(*matrix) + "(C)" : "");
  return o;
}

Outcome run_regular_classes(const twisted::MultiplierSpec& spec, const JobSpec&) {
  using namespace twisted;
  auto m = require_finite(spec, "regular-classes");
  Outcome o;
  if (!validate_finite(*m, o)) return o;
  const FiniteGroup& g = m->group();
  const auto r = regular_classes(*m);
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json entry = {{"rep", c.cls.representative},
                  {"members", names(g, c.cls.members)},
                  {"size", c.cls.size()},
                  {"regular", c.regular}};
    if (c.regular) {
      const ClassFunction f = class_function(*m, c.cls);
      Json values = Json::object();
      for (const auto& [x, v] : f.values) values[g.name(x)] = to_json(v, spec.basis);
      entry["class_function"] = values;
    }
    classes.push_back(std::move(entry));
  }
  o.report["condition_k"] = r.condition_k;
  o.report["regular_element_count"] = r.regular_element_count;
  o.report["classes"] = classes;
  o.summary = std::to_string(r.regular_class_count()) + " of " + std::to_string(r.classes.size()) +
              " classes are regular";
  return o;
}

Outcome run_f_degeneracy(const twisted::MultiplierSpec& spec, const JobSpec&) {
  using namespace twisted;
  const auto* p = std::get_if<ProductJob>(&spec.value);
  if (!p) throw Unsupported("f-degeneracy needs a direct_product input, got " + kind_of(spec));
  Outcome o;
  if (!validate_finite(*p->assembled, o)) return o;
  const FDegeneracyReport d = f_degeneracy(p->triple);
  const bool k = condition_k(*p->assembled);
  o.report["f_degeneracy"] = d.holds;
  o.report["condition_k"] = k;
  o.report["agree"] = d.holds == k;
  o.report["failing_class"] =
      d.failing_class ? Json{{"rep", d.failing_class->representative}, {"size", d.failing_class->size()}}
                      : Json(nullptr);
  std::size_t audited = 0;
  for (Element a = 0; a < p->assembled->group().order(); ++a, ++audited) two_of_three(p->triple, *p->assembled, a);
  o.report["two_of_three_audited"] = audited;
  o.summary = std::string("f-degeneracy ") + (d.holds ? "holds" : "fails") + ", condition K " +
              (k ? "holds" : "fails");
  if (d.holds != k) {
    o.status = 1;
    o.summary += " (disagreement)";
  }
  return o;
}

Outcome run_decompose(const twisted::MultiplierSpec& spec, const JobSpec& job) {
  using namespace twisted;
  const auto* fp = std::get_if<FreeProductJob>(&spec.value);
  if (!fp) throw Unsupported("decompose needs a free_product input, got " + kind_of(spec));
  const auto sigma = fp->sigma;
  const FreeProduct& words = sigma->free_product();
  Outcome o;
  try {
    const Decomposition d =
        decompose(words, [sigma](const FPWord& x, const FPWord& y) { return sigma->value(x, y); }, job.fuzz,
                  static_cast<std::size_t>(2 * job.box), job.seed);
    o.report["similar"] = true;
    o.report["checked_pairs"] = d.checked_pairs;
    o.report["sigma1"] = table_to_json(*d.sigma1, spec.basis);
    o.report["sigma2"] = table_to_json(*d.sigma2, spec.basis);
    o.summary = "similar to sigma1 * sigma2 on " + std::to_string(d.checked_pairs) + " sampled pairs";
  } catch (const SimilarityFailure& e) {
    o.report["similar"] = false;
    o.report["message"] = e.what();
    o.status = 1;
    o.summary = e.what();
  }
  return o;
}

Outcome run(const JobSpec& job) {
  std::string text = job.inline_json;
  if (!job.input.empty()) {
    std::ifstream in(job.input);
    if (!in) throw twisted::ParseError("cannot read " + job.input);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const Json j = Json::parse(text);
  const twisted::MultiplierSpec spec = twisted::parse_multiplier(j);

  Outcome o;
  if (job.command == "validate")
    o = run_validate(spec, job);
  else if (job.command == "condition-k")
    o = run_condition_k(spec, job);
  else if (job.command == "center")
    o = run_center(spec, job);
  else if (job.command == "regular-classes")
    o = run_regular_classes(spec, job);
  else if (job.command == "f-degeneracy")
    o = run_f_degeneracy(spec, job);
  else
    o = run_decompose(spec, job);

  Json report = {{"command", job.command}, {"type", kind_of(spec)}, {"seed", job.seed}};
  report.update(o.report);
  o.report = std::move(report);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decisions for twisted group algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  JobSpec job;
  auto* input = app.add_option("--input", job.input, "Path to a JSON job");
  auto* inline_json = app.add_option("--inline", job.inline_json, "Inline JSON job");
  input->excludes(inline_json);
  app.add_option("--tol", job.tol, "Singular value tolerance, as a p/q string")->capture_default_str();
  app.add_option("--fuzz", job.fuzz, "Random samples for infinite families")->capture_default_str();
  app.add_option("--box", job.box, "Coordinate bound for sampling (words: length up to 2*box)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--seed", job.seed, "Seed for every random draw")->capture_default_str();
  auto* pretty = app.add_flag("--pretty", job.pretty, "Indent the JSON report");
  app.add_flag("--json", "Compact JSON report (default)")->excludes(pretty);

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "Check the cocycle identity (exhaustive or sampled)"},
      {"condition-k", "Decide condition K, with a regular witness when it fails"},
      {"center", "Center dimension by class count and by SVD"},
      {"regular-classes", "List conjugacy classes with regularity and class functions"},
      {"f-degeneracy", "Compare f-degeneracy with condition K for a direct product"},
      {"decompose", "Split a free-product multiplier into its factors"},
  };
  for (const auto& [name, help] : commands)
    app.add_subcommand(name, help)->callback([&job, name = name] { job.command = name; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Outcome o;
  try {
    if (job.input.empty() && job.inline_json.empty()) throw twisted::ParseError("one of --input or --inline is required");
    twisted::parse_rational(job.tol);
    o = run(job);
  } catch (const twisted::InvalidBihomomorphism& e) {
    o.report = {{"command", job.command}, {"seed", job.seed}, {"valid", false}, {"message", e.what()}};
    o.status = 1;
    o.summary = std::string("invalid bihomomorphism: ") + e.what();
  } catch (const twisted::LemmaViolation& e) {
    o.report = {{"command", job.command}, {"seed", job.seed}, {"message", e.what()}};
    o.status = 1;
    o.summary = e.what();
  } catch (const twisted::IllConditioned& e) {
    o.report = {{"command", job.command}, {"seed", job.seed}, {"error", e.what()}};
    o.status = 1;
    o.summary = std::string("refused: ") + e.what();
  } catch (const std::exception& e) {
    o.report = {{"command", job.command}, {"seed", job.seed}, {"error", e.what()}};
    o.status = 2;
    o.summary = std::string("malformed input: ") + e.what();
  }

  std::cout << (job.pretty ? o.report.dump(2) : o.report.dump()) << '\n';
  std::cerr << job.command << ": " << o.summary << '\n';
  return o.status;
}
