#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcount/qcount.hpp"

namespace {

using nlohmann::ordered_json;

// Enumeration cap, overridable through QCOUNT_BUDGET; the library itself
// never reads the environment.
qcount::Budget budget_from_env() {
  qcount::Budget budget;
  if (const char* raw = std::getenv("QCOUNT_BUDGET")) {
    try {
      budget.max_objects = std::stoll(raw);
    } catch (const std::exception&) {
      throw qcount::DomainViolation("QCOUNT_BUDGET is not an integer");
    }
    if (budget.max_objects < 0) {
      throw qcount::DomainViolation("QCOUNT_BUDGET must be nonnegative");
    }
  }
  return budget;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw qcount::DomainViolation("empty entry in integer list");
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size()) throw qcount::DomainViolation("bad integer: " + item);
    out.push_back(value);
  }
  return out;
}

std::string subset_text(const std::vector<int>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(subset[i]);
  }
  return out + "}";
}

std::string joined(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

ordered_json structure_json(const qcount::StructureReport& report) {
  return ordered_json{{"monic", report.monic},
                      {"degree", report.degree},
                      {"expected_degree", report.expected_degree},
                      {"palindromic", report.palindromic},
                      {"unimodal", report.unimodal},
                      {"all_positive", report.all_positive}};
}

void print_structure(const qcount::StructureReport& report) {
  std::cout << "degree: " << report.degree << " expected: " << report.expected_degree
            << "\n";
  std::cout << "monic: " << yes_no(report.monic)
            << " palindromic: " << yes_no(report.palindromic)
            << " unimodal: " << yes_no(report.unimodal)
            << " all-positive: " << yes_no(report.all_positive) << "\n";
}

// Shared tail of qbinom/qmultinom/descent-poly: render a polynomial record.
void emit_polynomial_record(const std::string& command, ordered_json inputs,
                            const std::string& method, const qcount::QPolynomial& poly,
                            const qcount::StructureReport& structure,
                            const std::optional<mpz_class>& at,
                            const std::optional<mpz_class>& extra_count, bool as_json) {
  std::optional<mpz_class> value;
  if (at) value = poly.eval_int(*at);

  if (as_json) {
    ordered_json result;
    result["coefficients"] = poly.coefficient_strings();
    result["text"] = poly.to_string();
    if (value) result["value_at"] = value->get_str();
    if (extra_count) result["count"] = extra_count->get_str();
    result["structure"] = structure_json(structure);
    ordered_json record{{"command", command},
                        {"inputs", std::move(inputs)},
                        {"method", method},
                        {"result", std::move(result)}};
    std::cout << record.dump(2) << "\n";
    return;
  }

  std::cout << "polynomial: " << poly.to_string() << "\n";
  std::cout << "coefficients: " << joined(poly.coefficient_strings(), ",") << "\n";
  if (extra_count) std::cout << "count: " << extra_count->get_str() << "\n";
  print_structure(structure);
  if (value) {
    std::cout << "value at q=" << at->get_str() << ": " << value->get_str() << "\n";
  }
}

struct QBinomArgs {
  int n = 0;
  int k = 0;
  std::string method = "product";
  std::string at;
  bool json = false;
};

int run_qbinom(const QBinomArgs& args) {
  qcount::Budget budget = budget_from_env();
  qcount::QPolynomial poly;
  if (args.method == "product") {
    poly = qcount::qbinom_product(args.n, args.k);
  } else if (args.method == "partitions") {
    poly = qcount::qbinom_partitions(args.n, args.k);
  } else if (args.method == "permutations") {
    poly = qcount::qbinom_permutations(args.n, args.k, budget);
  } else {
    throw qcount::DomainViolation("unknown method: " + args.method);
  }
  qcount::StructureReport structure =
      qcount::structure_report(poly, qcount::QBinomialQuery{args.n, args.k});

  ordered_json inputs{{"n", args.n}, {"k", args.k}, {"method", args.method}};
  std::optional<mpz_class> at;
  if (!args.at.empty()) {
    at = mpz_class(args.at, 10);
    inputs["at"] = at->get_str();
  }
  emit_polynomial_record("qbinom", std::move(inputs), args.method, poly, structure, at,
                         std::nullopt, args.json);
  return 0;
}

struct QMultinomArgs {
  int n = 0;
  std::string cuts;
  std::string method = "chain";
  std::string at;
  bool json = false;
};

int run_qmultinom(const QMultinomArgs& args) {
  qcount::Budget budget = budget_from_env();
  qcount::DescentSpec spec(args.n, parse_int_list(args.cuts));
  qcount::QPolynomial poly;
  if (args.method == "chain") {
    poly = qcount::qmultinom_chain(args.n, spec);
  } else if (args.method == "permutations") {
    poly = qcount::qmultinom_permutations(args.n, spec, budget);
  } else {
    throw qcount::DomainViolation("unknown method: " + args.method);
  }
  qcount::StructureReport structure = qcount::structure_report(poly, args.n, spec);

  ordered_json inputs{{"n", args.n}, {"cuts", spec.cuts()}, {"method", args.method}};
  std::optional<mpz_class> at;
  if (!args.at.empty()) {
    at = mpz_class(args.at, 10);
    inputs["at"] = at->get_str();
  }
  emit_polynomial_record("qmultinom", std::move(inputs), args.method, poly, structure,
                         at, std::nullopt, args.json);
  return 0;
}

struct DescentPolyArgs {
  int n = 0;
  std::string set;
  bool json = false;
};

int run_descent_poly(const DescentPolyArgs& args) {
  std::vector<int> t_set = parse_int_list(args.set);
  qcount::QPolynomial poly = qcount::descent_exact_polynomial(args.n, t_set);
  mpz_class count = qcount::descent_exact_count(args.n, t_set);

  ordered_json inputs{{"n", args.n}, {"set", t_set}};
  if (args.json) {
    ordered_json record{{"command", "descent-poly"},
                        {"inputs", std::move(inputs)},
                        {"method", "inclusion-exclusion"},
                        {"result",
                         ordered_json{{"coefficients", poly.coefficient_strings()},
                                      {"text", poly.to_string()},
                                      {"count", count.get_str()}}}};
    std::cout << record.dump(2) << "\n";
    return 0;
  }
  std::cout << "polynomial: " << poly.to_string() << "\n";
  std::cout << "count: " << count.get_str() << "\n";
  return 0;
}

struct EnumerateArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  bool k_given = false;
  std::string cuts;
  bool cuts_given = false;
  std::uint32_t q = 2;
  long limit = -1;  // negative: no limit
  bool json = false;
};

int run_enumerate(const EnumerateArgs& args) {
  qcount::Budget budget = budget_from_env();
  bool truncated = false;
  long remaining = args.limit;
  auto take = [&]() {
    if (remaining < 0) return true;
    if (remaining == 0) {
      truncated = true;
      return false;
    }
    --remaining;
    return true;
  };

  ordered_json inputs{{"kind", args.kind}, {"n", args.n}};
  ordered_json items = ordered_json::array();
  std::vector<std::string> lines;

  if (args.kind == "diagrams" || args.kind == "paths") {
    if (!args.k_given) throw qcount::DomainViolation(args.kind + " needs --k");
    if (args.k < 0 || args.k > args.n) throw qcount::DomainViolation("need 0 <= k <= n");
    inputs["k"] = args.k;
    qcount::BoxBound box{args.k, args.n - args.k};
    qcount::PartitionStream stream(box);
    while (auto lambda = stream.next()) {
      if (!take()) break;
      if (args.kind == "diagrams") {
        lines.push_back(lambda->to_string());
        items.push_back(lambda->to_string());
      } else {
        qcount::LatticePath path = qcount::diagram_to_path(*lambda, box);
        std::vector<int> subset = qcount::path_to_subset(path);
        qcount::Permutation pi = qcount::diagram_to_permutation(*lambda, box);
        lines.push_back(path.to_string() + " " + subset_text(subset) + " " +
                        pi.to_string());
        items.push_back(ordered_json{{"path", path.to_string()},
                                     {"subset", subset},
                                     {"permutation", pi.to_string()}});
      }
    }
  } else if (args.kind == "perms") {
    if (!args.cuts_given) throw qcount::DomainViolation("perms needs --cuts");
    qcount::DescentSpec spec(args.n, parse_int_list(args.cuts));
    inputs["cuts"] = spec.cuts();
    qcount::DescentPermStream stream(spec, budget);
    while (auto pi = stream.next()) {
      if (!take()) break;
      lines.push_back(pi->to_string());
      items.push_back(pi->to_string());
    }
  } else if (args.kind == "rref") {
    if (!args.k_given) throw qcount::DomainViolation("rref needs --k");
    inputs["k"] = args.k;
    inputs["q"] = args.q;
    qcount::PrimeField field(args.q);
    qcount::RrefStream stream(args.n, args.k, field, budget);
    std::vector<int> current_pivots;
    bool first_group = true;
    while (auto r = stream.next()) {
      if (!take()) break;
      if (first_group || r->pivots() != current_pivots) {
        current_pivots = r->pivots();
        first_group = false;
        std::string header = "# pivots:";
        for (int p : current_pivots) header += " " + std::to_string(p);
        lines.push_back(header);
      }
      lines.push_back(r->matrix().to_string());
      items.push_back(
          ordered_json{{"pivots", r->pivots()}, {"matrix", r->matrix().to_string()}});
    }
  } else {
    throw qcount::DomainViolation("unknown kind: " + args.kind);
  }

  if (args.limit >= 0) inputs["limit"] = args.limit;
  if (args.json) {
    ordered_json record{{"command", "enumerate"},
                        {"inputs", std::move(inputs)},
                        {"method", "stream"},
                        {"result",
                         ordered_json{{"items", std::move(items)},
                                      {"truncated", truncated}}}};
    std::cout << record.dump(2) << "\n";
    return 0;
  }
  for (const std::string& line : lines) std::cout << line << "\n";
  return 0;
}

struct VerifyArgs {
  int n_max = 8;
  std::string q_list = "2,3";
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  qcount::Budget budget = budget_from_env();
  std::vector<std::uint32_t> q_list;
  for (int q : parse_int_list(args.q_list)) {
    if (q < 2) throw qcount::DomainViolation("q must be a prime >= 2");
    q_list.push_back(static_cast<std::uint32_t>(q));
  }
  qcount::VerifyReport report = qcount::run_verification(args.n_max, q_list, budget);

  if (args.json) {
    ordered_json checks = ordered_json::array();
    for (const qcount::VerifyCheck& check : report.checks) {
      checks.push_back(ordered_json{{"name", check.name},
                                    {"passed", check.passed},
                                    {"cases", check.cases},
                                    {"skipped", check.skipped},
                                    {"counterexample", check.counterexample}});
    }
    ordered_json record{{"command", "verify"},
                        {"inputs",
                         ordered_json{{"n_max", args.n_max}, {"q_list", q_list}}},
                        {"method", "cross-check"},
                        {"result",
                         ordered_json{{"checks", std::move(checks)},
                                      {"all_passed", report.all_passed()}}}};
    std::cout << record.dump(2) << "\n";
  } else {
    for (const qcount::VerifyCheck& check : report.checks) {
      if (check.passed) {
        std::cout << "PASS " << check.name << " (cases=" << check.cases
                  << ", skipped=" << check.skipped << ")\n";
      } else {
        std::cout << "FAIL " << check.name << ": " << check.counterexample << "\n";
      }
    }
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian binomial and q-multinomial coefficients, four ways"};
  app.require_subcommand(1);

  QBinomArgs qbinom_args;
  CLI::App* qbinom_cmd =
      app.add_subcommand("qbinom", "coefficient of k-dimensional subspaces in n-space");
  qbinom_cmd->add_option("n", qbinom_args.n, "ambient dimension")->required();
  qbinom_cmd->add_option("k", qbinom_args.k, "subspace dimension")->required();
  qbinom_cmd->add_option("--method", qbinom_args.method,
                         "product|partitions|permutations");
  qbinom_cmd->add_option("--at", qbinom_args.at, "also evaluate at this integer");
  qbinom_cmd->add_flag("--json", qbinom_args.json, "machine-readable output");

  QMultinomArgs qmultinom_args;
  CLI::App* qmultinom_cmd =
      app.add_subcommand("qmultinom", "flag-counting coefficient for nested dimensions");
  qmultinom_cmd->add_option("n", qmultinom_args.n, "ambient dimension")->required();
  qmultinom_cmd->add_option("--cuts", qmultinom_args.cuts, "comma-separated cut list")
      ->required();
  qmultinom_cmd->add_option("--method", qmultinom_args.method, "chain|permutations");
  qmultinom_cmd->add_option("--at", qmultinom_args.at, "also evaluate at this integer");
  qmultinom_cmd->add_flag("--json", qmultinom_args.json, "machine-readable output");

  DescentPolyArgs descent_args;
  CLI::App* descent_cmd = app.add_subcommand(
      "descent-poly", "inversion polynomial of the permutations with an exact descent set");
  descent_cmd->add_option("n", descent_args.n, "degree")->required();
  descent_cmd->add_option("--set", descent_args.set, "comma-separated descent positions")
      ->required();
  descent_cmd->add_flag("--json", descent_args.json, "machine-readable output");

  EnumerateArgs enumerate_args;
  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "stream objects in their documented orders");
  enumerate_cmd->add_option("kind", enumerate_args.kind, "diagrams|paths|perms|rref")
      ->required();
  enumerate_cmd->add_option("--n", enumerate_args.n, "ambient size")->required();
  CLI::Option* k_opt = enumerate_cmd->add_option("--k", enumerate_args.k, "subspace/row count");
  CLI::Option* cuts_opt =
      enumerate_cmd->add_option("--cuts", enumerate_args.cuts, "comma-separated cut list");
  enumerate_cmd->add_option("--q", enumerate_args.q, "prime field order (rref)");
  enumerate_cmd->add_option("--limit", enumerate_args.limit, "stop after this many objects");
  enumerate_cmd->add_flag("--json", enumerate_args.json, "machine-readable output");

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the cross-method agreement suite");
  verify_cmd->add_option("--n-max", verify_args.n_max, "largest n to check");
  verify_cmd->add_option("--q-list", verify_args.q_list, "primes for the census oracles");
  verify_cmd->add_flag("--json", verify_args.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    enumerate_args.k_given = k_opt->count() > 0;
    enumerate_args.cuts_given = cuts_opt->count() > 0;
    if (qbinom_cmd->parsed()) return run_qbinom(qbinom_args);
    if (qmultinom_cmd->parsed()) return run_qmultinom(qmultinom_args);
    if (descent_cmd->parsed()) return run_descent_poly(descent_args);
    if (enumerate_cmd->parsed()) return run_enumerate(enumerate_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
  } catch (const qcount::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const qcount::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
