// spbw: command-line front end for skew PBW extensions.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spbw/catalog.hpp"
#include "spbw/deciders.hpp"
#include "spbw/definition.hpp"
#include "spbw/expr.hpp"
#include "spbw/report.hpp"
#include "spbw/theorems.hpp"

namespace {

using namespace spbw;

constexpr int kUsage = 64, kBadDefinition = 65, kCapExceeded = 70;

struct Options {
  unsigned degree = 2;
  std::string format = "human";
  std::uint64_t cap_multiplications = std::uint64_t{1} << 25;
  std::size_t cap_ring_size = 256;
  std::uint64_t seed = 20240229;
  unsigned threads = 1;

  Limits limits() const {
    Limits l;
    l.multiplication_cap = cap_multiplications;
    l.ring_size_cap = cap_ring_size;
    l.seed = seed;
    l.threads = threads;
    return l;
  }
};

// Thrown for bad names and expressions given on the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int code_for(const Error& e, bool loading) {
  switch (e.code()) {
    case ErrorCode::SearchSpaceCapExceeded:
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::RewriteBudgetExceeded:
    case ErrorCode::ClosureDiverges:
    case ErrorCode::UnsupportedInfinite:
      return kCapExceeded;
    case ErrorCode::ParseError:
      return loading ? kBadDefinition : kUsage;
    default:
      return loading ? kBadDefinition : kCapExceeded;
  }
}

void diagnose(const Options& o, const std::string& code, const std::string& message) {
  if (o.format == "human") {
    std::cerr << "spbw: " << message << "\n";
  } else {
    std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
  }
}

class Runner {
 public:
  Runner(Options o, std::ostream& out) : o_(std::move(o)), out_(out), fmt_(format_from_name(o_.format)) {}

  int validate(const ExtensionPtr& a) {
    const auto& f = a->flags();
    if (fmt_ == Format::Human) {
      out_ << "valid: " << describe_instance(*a) << "\n";
      out_ << "quasi-commutative: " << (f.quasi_commutative ? "yes" : "no")
           << ", bijective: " << (f.bijective ? "yes" : "no")
           << ", checked on every element: " << (f.exhaustive ? "yes" : "no") << "\n";
    } else {
      Json j = {{"valid", true},
                {"instance", describe_instance(*a)},
                {"flags", {{"quasi_commutative", f.quasi_commutative}, {"bijective", f.bijective},
                           {"sigma_injective", f.sigma_injective}, {"exhaustive", f.exhaustive}}},
                {"definition", to_definition(*a)}};
      out_ << emit(j, fmt_);
    }
    return 0;
  }

  int eval(const ExtensionPtr& a, const std::string& text) {
    SkewPoly f;
    try {
      f = evaluate(*a, parse_expr(a->ring(), a->n(), text));
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    const std::string nf = a->render(f);
    if (fmt_ == Format::Human)
      out_ << nf << "\n";
    else
      out_ << emit({{"input", text}, {"normal_form", nf}}, fmt_);
    return 0;
  }

  int check(const ExtensionPtr& a, const std::string& name, bool witness_only) {
    const PropertyId p = property(name);
    const Verdict v = decide(a, p, o_.degree, o_.limits());
    if (fmt_ != Format::Human) {
      out_ << emit(verdict_json(*a, v, o_.degree), fmt_);
    } else if (witness_only) {
      out_ << (v.witness ? describe_witness(*a, *v.witness) : std::string("none")) << "\n";
    } else {
      out_ << human_verdict(*a, v);
    }
    return exit_code(v.status);
  }

  int verify(const ExtensionPtr& a, const std::string& name) {
    if (name == "all") {
      const auto reports = run_all(a, o_.degree, o_.limits());
      out_ << (fmt_ == Format::Human ? human_suite(reports) : emit(suite_json(reports), fmt_));
      return count_statuses(reports).violation ? 1 : 0;
    }
    TheoremId t;
    try {
      t = theorem_from_name(name);
    } catch (const DefinitionError& e) {
      throw UsageError(e.what());
    }
    const auto r = spbw::verify(t, a, o_.degree, o_.limits());
    out_ << (fmt_ == Format::Human ? human_theorem(r) : emit(theorem_json(r), fmt_));
    return exit_code(r.status);
  }

  int report(const ExtensionPtr& a) {
    const auto r = implication_report(a, o_.degree, o_.limits());
    out_ << (fmt_ == Format::Human ? human_implication(*a, r, o_.degree) : emit(implication_json(*a, r, o_.degree), fmt_));
    return r.inconsistent_count() ? 1 : 0;
  }

  int expected(const CatalogEntry& e) {
    if (fmt_ != Format::Human) {
      out_ << emit(expectation_json(e), fmt_);
      return 0;
    }
    out_ << e.name << ": " << e.note << "\n";
    for (const auto& x : e.expected)
      out_ << "  " << property_name(x.property) << " " << x.status << " (D=" << x.degree << ", "
           << basis_name(x.basis) << ")\n";
    return 0;
  }

  int list() {
    if (fmt_ != Format::Human) {
      out_ << emit(Json(catalog_names()), fmt_);
      return 0;
    }
    for (const auto& n : catalog_names()) out_ << n << "\n";
    return 0;
  }

  int schema() {
    out_ << emit(definition_schema(), fmt_ == Format::Json ? Format::Json : Format::JsonTree);
    return 0;
  }

  int definition(const ExtensionPtr& a) {
    out_ << canonical_text(to_definition(*a));
    return 0;
  }

  const Options& options() const { return o_; }

 private:
  static PropertyId property(const std::string& name) {
    try {
      return property_from_name(name);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  Options o_;
  std::ostream& out_;
  Format fmt_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew PBW extensions: normal forms, ring properties and theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--degree,-D", o.degree, "degree bound for bounded searches")->capture_default_str();
  app.add_option("--format", o.format, "human, json or json-like-tree")
      ->check(CLI::IsMember({"human", "json", "json-like-tree"}))
      ->capture_default_str();
  app.add_option("--cap-multiplications", o.cap_multiplications, "search space cap")->capture_default_str();
  app.add_option("--cap-ring-size", o.cap_ring_size, "largest finite ring accepted")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for structured-ring sampling")->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads for searches")->capture_default_str();

  std::string file, expr, name, action, arg;
  std::vector<std::string> catalog_args;

  auto* validate = app.add_subcommand("validate", "check a definition file");
  validate->add_option("file", file)->required();
  auto* eval = app.add_subcommand("eval", "normal form of an expression");
  eval->add_option("file", file)->required();
  eval->add_option("expr", expr)->required();
  auto* check = app.add_subcommand("check", "decide a property");
  check->add_option("file", file)->required();
  check->add_option("property", name)->required();
  auto* witness = app.add_subcommand("witness", "print a counterexample or none");
  witness->add_option("file", file)->required();
  witness->add_option("property", name)->required();
  auto* verify = app.add_subcommand("verify", "check a theorem on the instance (or all)");
  verify->add_option("file", file)->required();
  verify->add_option("theorem", name)->required();
  auto* report = app.add_subcommand("report", "implication table over every property");
  report->add_option("file", file)->required();
  auto* catalog = app.add_subcommand("catalog", "list, or run a command on a catalog entry");
  catalog->add_option("args", catalog_args, "list | NAME [validate|eval EXPR|check P|witness P|verify T|report|expected|definition]")
      ->required();
  auto* schema = app.add_subcommand("schema", "print the definition schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  Runner run(o, std::cout);
  bool loading = false;
  try {
    if (schema->parsed()) return run.schema();
    ExtensionPtr a;
    std::optional<CatalogEntry> entry;
    std::string act;
    std::vector<std::string> rest;
    if (catalog->parsed()) {
      if (catalog_args.front() == "list") return run.list();
      act = catalog_args.size() > 1 ? catalog_args[1] : "validate";
      rest.assign(catalog_args.begin() + std::min<std::size_t>(2, catalog_args.size()), catalog_args.end());
      try {
        loading = true;
        entry = catalog_load(catalog_args.front(), o.limits());
        loading = false;
      } catch (const UnknownEntry& e) {
        throw UsageError(e.what());
      }
      a = entry->extension;
    } else {
      loading = true;
      a = load_definition_file(file, o.limits());
      loading = false;
      if (validate->parsed()) act = "validate";
      if (eval->parsed()) act = "eval", rest = {expr};
      if (check->parsed()) act = "check", rest = {name};
      if (witness->parsed()) act = "witness", rest = {name};
      if (verify->parsed()) act = "verify", rest = {name};
      if (report->parsed()) act = "report";
    }
    auto need = [&](std::size_t k) {
      if (rest.size() != k) throw UsageError("'" + act + "' takes " + std::to_string(k) + " argument(s)");
    };
    if (act == "validate") return need(0), run.validate(a);
    if (act == "eval") return need(1), run.eval(a, rest[0]);
    if (act == "check") return need(1), run.check(a, rest[0], false);
    if (act == "witness") return need(1), run.check(a, rest[0], true);
    if (act == "verify") return need(1), run.verify(a, rest[0]);
    if (act == "report") return need(0), run.report(a);
    if (act == "definition") return need(0), run.definition(a);
    if (act == "expected" && entry) return need(0), run.expected(*entry);
    throw UsageError("unknown catalog action '" + act + "'");
  } catch (const UsageError& e) {
    diagnose(o, "UsageError", e.what());
    return kUsage;
  } catch (const Error& e) {
    diagnose(o, error_code_name(e.code()), e.what());
    return code_for(e, loading);
  } catch (const std::exception& e) {
    diagnose(o, "InternalError", e.what());
    return kCapExceeded;
  }
}
