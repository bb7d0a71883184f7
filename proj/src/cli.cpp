#include "laurmon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "laurmon/parse.hpp"
#include "laurmon/report.hpp"

namespace laurmon::cli {

using nlohmann::json;

std::optional<std::string> process_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AlphaArgs {
  std::string min_poly;
  int root_index = 0;
  std::string rational;
  bool transcendental = false;
};

struct BudgetArgs {
  CLI::Option* window = nullptr;
  CLI::Option* coeff = nullptr;
  CLI::Option* nodes = nullptr;
  int window_value = 0;
  std::string coeff_value;
  std::uint64_t nodes_value = 0;
};

struct Common {
  bool strict = false;
  bool pretty = false;
};

Integer parse_positive_integer(const std::string& text, const std::string& what) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const std::exception&) {
    throw InputError(what + ": not an integer: '" + text + "'");
  }
  if (r.get_den() != 1 || r < 1) throw InputError(what + ": expected a positive integer, got '" + text + "'");
  return r.get_num();
}

SearchBudget resolve_budget(const BudgetArgs& a, const EnvLookup& env) {
  SearchBudget b;
  if (auto v = env("LAURMON_BUDGET_WINDOW")) {
    Integer w = parse_positive_integer(*v, "LAURMON_BUDGET_WINDOW");
    if (w > 10000) throw InputError("LAURMON_BUDGET_WINDOW: too large");
    b.exponent_window = static_cast<int>(w.get_si());
  }
  if (auto v = env("LAURMON_BUDGET_COEFF")) b.coeff_bound = parse_positive_integer(*v, "LAURMON_BUDGET_COEFF");
  if (auto v = env("LAURMON_BUDGET_NODES")) {
    Integer n = parse_positive_integer(*v, "LAURMON_BUDGET_NODES");
    if (!n.fits_ulong_p()) throw InputError("LAURMON_BUDGET_NODES: too large");
    b.node_limit = n.get_ui();
  }
  if (a.window->count() > 0) {
    if (a.window_value < 1 || a.window_value > 10000) throw InputError("--budget-window: expected 1..10000");
    b.exponent_window = a.window_value;
  }
  if (a.coeff->count() > 0) b.coeff_bound = parse_positive_integer(a.coeff_value, "--budget-coeff");
  if (a.nodes->count() > 0) {
    if (a.nodes_value < 1) throw InputError("--budget-nodes: expected a positive integer");
    b.node_limit = a.nodes_value;
  }
  return b;
}

void add_budget(CLI::App* cmd, BudgetArgs& b) {
  b.window = cmd->add_option("--budget-window", b.window_value, "Exponent window D (default 8)");
  b.coeff = cmd->add_option("--budget-coeff", b.coeff_value, "Coefficient bound (default 10000)");
  b.nodes = cmd->add_option("--budget-nodes", b.nodes_value, "Search node limit (default 10000000)");
}

void add_alpha(CLI::App* cmd, AlphaArgs& a, bool allow_transcendental) {
  cmd->add_option("--min-poly", a.min_poly, "Minimal polynomial of alpha, e.g. \"x^2 - 2*x + 1/2\"");
  cmd->add_option("--root-index", a.root_index, "Index into the ascending list of positive roots")
      ->default_val(0);
  cmd->add_option("--rational", a.rational, "alpha = a/b given directly");
  if (allow_transcendental)
    cmd->add_flag("--transcendental", a.transcendental, "alpha is declared transcendental");
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--strict", c.strict, "Exit 3 unless the answer is definite");
  cmd->add_flag("--pretty", c.pretty, "Print one 'path: value' line per field");
}

struct ResolvedAlpha {
  std::optional<AlgebraicReal> alpha;
  json echo;
};

ResolvedAlpha resolve_alpha(const AlphaArgs& a) {
  const int given = (!a.min_poly.empty()) + (!a.rational.empty()) + (a.transcendental ? 1 : 0);
  if (given != 1) throw InputError("give exactly one of --min-poly, --rational or --transcendental");
  ResolvedAlpha r;
  if (a.transcendental) {
    r.echo = {{"transcendental", true}};
    return r;
  }
  if (!a.rational.empty()) {
    Rational c = parse_rational(a.rational);
    if (c <= 0) throw InputError("--rational: alpha must be positive");
    r.alpha = AlgebraicReal::from_rational(c);
    r.echo = {{"rational", to_string(c)}, {"alpha", to_json(*r.alpha)}};
    return r;
  }
  QPoly m = parse_poly(a.min_poly).to_qpoly();
  if (m.degree() < 1) throw InputError("--min-poly: need a polynomial of degree >= 1");
  m = m.monic();
  if (auto f = find_factor(m)) throw InputError("--min-poly is reducible over Q: factor " + to_string(*f));
  auto roots = isolate_positive_roots(m);
  if (a.root_index < 0 || static_cast<std::size_t>(a.root_index) >= roots.size())
    throw InputError("--root-index " + std::to_string(a.root_index) + " out of range: " + to_string(m) + " has " +
                     std::to_string(roots.size()) + " positive root(s)");
  r.alpha = roots[static_cast<std::size_t>(a.root_index)];
  r.echo = {{"min_poly", to_json(m)}, {"root_index", a.root_index}, {"alpha", to_json(*r.alpha)}};
  return r;
}

bool straddling_quadratic(const AlgebraicReal& alpha) {
  const QPoly& m = alpha.min_poly();
  return m.degree() == 2 && m.coeff(0) > 0 && m(Rational(1)) < 0;
}

json document(const std::string& command, json input) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"input", std::move(input)}};
}

int emit(const json& doc, const Common& c, bool definite, std::ostream& out) {
  if (c.pretty)
    out << flatten(doc);
  else
    out << doc.dump(2) << '\n';
  return c.strict && !definite ? kExitIndefinite : kExitOk;
}

int cmd_classify(const AlphaArgs& a, const BudgetArgs& ba, const Common& c, const EnvLookup& env,
                 std::ostream& out) {
  const SearchBudget budget = resolve_budget(ba, env);
  ResolvedAlpha r = resolve_alpha(a);
  ClassificationReport rep = r.alpha ? classify(*r.alpha, budget) : classify(Transcendental{}, budget);
  json doc = document("classify", r.echo);
  doc["budget"] = to_json(budget);
  doc["report"] = to_json(rep);
  bool definite = rep.elasticity != ElasticityClass::unknown;
  for (const Verdict* v : {&rep.atomic, &rep.accp, &rep.bfm, &rep.ffm, &rep.ufm, &rep.hfm, &rep.lfm})
    definite = definite && v->status != VerdictStatus::unknown;
  return emit(doc, c, definite, out);
}

int cmd_factorize(const AlphaArgs& a, const BudgetArgs& ba, const std::string& element, bool oracle,
                  const Common& c, const EnvLookup& env, std::ostream& out) {
  const SearchBudget budget = resolve_budget(ba, env);
  ResolvedAlpha r = resolve_alpha(a);
  const AlgebraicReal& alpha = *r.alpha;
  if (element.empty()) throw InputError("--element is required");
  MonoidElement beta(parse_poly(element).to_nat_laurent(), alpha);
  if (beta.repr().is_zero()) throw InputError("--element must be nonzero");

  json input = r.echo;
  input["element"] = to_json(beta.repr());
  json doc = document("factorize", input);

  std::optional<FactorizationSet> fs;
  SearchBudget oracle_budget = budget;
  if (straddling_quadratic(alpha)) {
    EmbeddingBox box = embedding_box(beta, alpha);
    fs = enumerate_factorizations_quadratic(beta, alpha);
    doc["method"] = "embedding_box";
    doc["embedding_box"] = to_json(box);
    oracle_budget.exponent_window = box.max_exponent + 1;
    oracle_budget.coeff_bound = *std::max_element(box.caps.begin(), box.caps.end()) + 1;
  } else {
    fs = brute_force_factorizations(beta, alpha, budget);
    doc["method"] = "bounded_search";
    doc["budget"] = to_json(budget);
    doc["embedding_box"] = nullptr;
    oracle_budget.exponent_window = budget.exponent_window + 1;
    oracle_budget.coeff_bound = budget.coeff_bound + 1;
  }
  doc["factorization_set"] = to_json(*fs);
  bool definite = fs->complete;
  if (oracle) {
    FactorizationSet o = brute_force_factorizations(beta, alpha, oracle_budget);
    const bool agrees = !o.budget_exhausted && o.factorizations == fs->factorizations;
    doc["oracle"] = {{"budget", to_json(oracle_budget)}, {"factorization_set", to_json(o)}, {"agrees", agrees}};
    definite = definite && agrees;
  } else {
    doc["oracle"] = nullptr;
  }
  return emit(doc, c, definite, out);
}

int cmd_elasticity(const AlphaArgs& a, int n_max, const Common& c, std::ostream& out) {
  if (n_max < 1) throw InputError("--n-max must be >= 1");
  ResolvedAlpha r = resolve_alpha(a);
  const AlgebraicReal& alpha = *r.alpha;
  if (alpha.is_rational() && alpha.rational_value() == 1) throw InputError("alpha = 1 has elasticity 1");
  MinimalPair pair = minimal_pair(alpha.min_poly());
  auto ws = elasticity_witnesses(pair, alpha, static_cast<unsigned>(n_max));
  json list = json::array();
  for (const auto& w : ws) list.push_back(to_json(w));
  const auto& last = ws.back();
  json doc = document("elasticity-witness", r.echo);
  doc["minimal_pair"] = to_json(pair);
  doc["witnesses"] = list;
  doc["elasticity_lower_bound"] = to_string(make_rational(std::max(last.p_length, last.q_length),
                                                          std::min(last.p_length, last.q_length)));
  return emit(doc, c, true, out);
}

int cmd_lfm(const AlphaArgs& a, const Common& c, std::ostream& out) {
  ResolvedAlpha r = resolve_alpha(a);
  const AlgebraicReal& alpha = *r.alpha;
  if (alpha.is_rational() && alpha.rational_value() == 1) throw InputError("alpha = 1: the monoid is N0");
  MinimalPair pair = minimal_pair(alpha.min_poly());
  auto [z1, z2] = lfm_counterexample(pair.p, pair.q, alpha);
  json doc = document("lfm-pair", r.echo);
  doc["minimal_pair"] = to_json(pair);
  doc["z1"] = to_json(z1);
  doc["z2"] = to_json(z2);
  doc["equal_as_elements"] = elements_equal(z1.multiplicities, z2.multiplicities, alpha);
  doc["equal_length"] = z1.length == z2.length;
  doc["distinct"] = !(z1 == z2);
  return emit(doc, c, true, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Factorization properties of the evaluation monoid N0[alpha, 1/alpha]", "laurmon"};
  app.require_subcommand(1);

  AlphaArgs ca, fa, ea, la;
  BudgetArgs cb, fb;
  Common cc, fc, ec, lc;
  std::string element;
  bool oracle = false;
  int n_max = 3;

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify the monoid");
  add_alpha(classify_cmd, ca, true);
  add_budget(classify_cmd, cb);
  add_common(classify_cmd, cc);

  CLI::App* factorize_cmd = app.add_subcommand("factorize", "List the factorizations of an element");
  add_alpha(factorize_cmd, fa, false);
  factorize_cmd->add_option("--element", element, "Element as a Laurent polynomial, e.g. \"4*x\"");
  factorize_cmd->add_flag("--oracle", oracle, "Cross-check with the bounded brute-force search");
  add_budget(factorize_cmd, fb);
  add_common(factorize_cmd, fc);

  CLI::App* elasticity_cmd = app.add_subcommand("elasticity-witness", "Elements with growing length ratios");
  add_alpha(elasticity_cmd, ea, false);
  elasticity_cmd->add_option("--n-max", n_max, "Largest power")->default_val(3);
  add_common(elasticity_cmd, ec);

  CLI::App* lfm_cmd = app.add_subcommand("lfm-pair", "Two distinct factorizations of equal length");
  add_alpha(lfm_cmd, la, false);
  add_common(lfm_cmd, lc);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(ca, cb, cc, env, out);
    if (factorize_cmd->parsed()) return cmd_factorize(fa, fb, element, oracle, fc, env, out);
    if (elasticity_cmd->parsed()) return cmd_elasticity(ea, n_max, ec, out);
    return cmd_lfm(la, lc, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace laurmon::cli
