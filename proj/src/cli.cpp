#include "b3img/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "b3img/json_io.hpp"

namespace b3img {

namespace {

struct CliConfig {
  int dim = 0;
  std::vector<std::string> eig;
  std::string d_sign;
  std::string gamma;
  std::string gamma_squared;
  bool non_root = false;
  std::string builder;
  std::string theta;
  std::string phi;
  std::string u;
  std::string family;
  std::int64_t ell = 0;
  std::optional<std::int64_t> bound;
  std::int64_t max_order = 0;
  std::string format = "json";
  std::string output;
  std::string dump;
};

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw Error(ErrorCode::ParseError, "--d-sign expects + or -, got '" + s + "'");
}

std::string eigen_list(const std::vector<RootOfUnity>& ev, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < ev.size(); ++i) out += (i ? sep : "") + ev[i].to_string();
  return out;
}

std::string opt_string(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

void print_verdict_table(std::ostream& os, const Verdict& v) {
  os << "kind     " << to_string(v.kind) << "\n"
     << "rule     " << v.rule << "\n"
     << "po       " << opt_string(v.po) << "\n"
     << "pattern  " << v.pattern.value_or("-") << "\n"
     << "o(u)     " << opt_string(v.o_u) << "\n"
     << "D        " << (v.d_sign ? (*v.d_sign > 0 ? "+1" : "-1") : "-") << "\n"
     << "parity   " << (v.parity ? to_string(*v.parity) : "-") << "\n"
     << "trace\n";
  for (const auto& step : v.trace) os << "  " << step.check << ": " << step.outcome << "\n";
}

void print_closure_table(std::ostream& os, const ClosureResult& r) {
  os << "outcome        " << to_string(r.outcome) << "\n"
     << "order          " << opt_string(r.order) << "\n"
     << "bound          " << r.bound << "\n"
     << "products       " << r.stats.products << "\n"
     << "peak frontier  " << r.stats.peak_frontier << "\n"
     << "arithmetic     " << r.stats.arithmetic << "\n";
}

void require_format(const CliConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw Error(ErrorCode::InvalidSpec, "format '" + c.format + "' is not available for this command");
}

EigenSpec spec_from_config(const CliConfig& c) {
  if (c.dim < 2 || c.dim > 5) throw Error(ErrorCode::InvalidSpec, "--dim must be between 2 and 5");
  if (static_cast<int>(c.eig.size()) != c.dim) {
    throw Error(ErrorCode::InvalidSpec, "--dim " + std::to_string(c.dim) + " needs " + std::to_string(c.dim) +
                                            " eigenvalues, got " + std::to_string(c.eig.size()));
  }
  std::vector<RootOfUnity> ev;
  for (const auto& s : c.eig) ev.push_back(RootOfUnity::parse(s));
  EigenSpec spec = EigenSpec::of(std::move(ev));
  if (!c.gamma_squared.empty()) {
    if (c.dim != 4) throw Error(ErrorCode::InvalidSpec, "--gamma-squared applies to dimension 4 only");
    spec.gamma_squared = RootOfUnity::parse(c.gamma_squared);
  } else if (!c.d_sign.empty()) {
    if (c.dim != 4) throw Error(ErrorCode::InvalidSpec, "--d-sign applies to dimension 4 only");
    if (!spec.has_repeated_eigenvalue()) spec = with_d_sign(spec, parse_sign(c.d_sign));
  }
  if (!c.gamma.empty()) {
    if (c.dim != 5) throw Error(ErrorCode::InvalidSpec, "--gamma applies to dimension 5 only");
    spec.gamma = RootOfUnity::parse(c.gamma);
  }
  return spec;
}

int cmd_classify(const CliConfig& c, std::ostream& os) {
  require_format(c, {"json", "table"});
  const Verdict v = classify(spec_from_config(c), c.non_root);
  if (c.format == "table") {
    print_verdict_table(os, v);
  } else {
    os << Json(v).dump(2) << "\n";
  }
  return kExitOk;
}

GeneratorPair builder_from_config(const CliConfig& c) {
  auto need = [&](const std::string& value, const char* flag) -> const std::string& {
    if (value.empty()) throw Error(ErrorCode::MissingParam, "builder " + c.builder + " needs " + flag);
    return value;
  };
  if (c.builder == "d3") {
    return build_d3(RootOfUnity::parse(need(c.theta, "--theta")), RootOfUnity::parse(need(c.phi, "--phi")));
  }
  if (c.builder == "d4block") {
    return build_d4_block(RootOfUnity::parse(need(c.u, "--u")), parse_sign(need(c.d_sign, "--d-sign")));
  }
  if (c.builder == "so7") {
    if (c.ell == 0) throw Error(ErrorCode::MissingParam, "builder so7 needs --ell");
    return build_so7(c.ell, c.d_sign.empty() ? 1 : parse_sign(c.d_sign));
  }
  if (c.builder == "so9") {
    if (c.ell == 0) throw Error(ErrorCode::MissingParam, "builder so9 needs --ell");
    return build_so9(c.ell);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown builder '" + c.builder + "' (use d3, d4block, so7 or so9)");
}

int cmd_closure(const CliConfig& c, std::ostream& os) {
  require_format(c, {"json", "table"});
  const GeneratorPair pair = builder_from_config(c);
  ClosureOptions options;
  options.bound = c.bound.value_or(kDefaultClosureBound);
  options.keep_elements = !c.dump.empty();
  const Closure closure = projective_closure_full({pair.a, pair.b}, options);

  if (!c.dump.empty()) {
    std::ofstream dump(c.dump);
    if (!dump) throw Error(ErrorCode::InvalidSpec, "cannot write " + c.dump);
    Json elements = Json::array();
    for (const auto& m : closure.elements) elements.push_back(matrix_to_json(m));
    dump << Json{{"generators", {matrix_to_json(pair.a), matrix_to_json(pair.b)}}, {"elements", elements}}.dump()
         << "\n";
  }

  if (c.format == "table") {
    print_closure_table(os, closure.result);
  } else {
    os << Json(closure.result).dump(2) << "\n";
  }
  return closure.result.outcome == ClosureOutcome::Completed ? kExitOk : kExitExceededBound;
}

int cmd_qg(const CliConfig& c, std::ostream& os) {
  require_format(c, {"json", "table"});
  if (c.family.empty() || c.ell == 0) throw Error(ErrorCode::MissingParam, "qg needs --family and --ell");
  const ReproductionReport r = reproduce(qg_family_from_string(c.family), c.ell, c.bound);
  if (c.format == "table") {
    os << "family       " << to_string(r.family) << "\n"
       << "ell          " << r.ell << "\n"
       << "spec         " << r.spec.to_string() << "\n"
       << "validation   " << to_string(r.validation) << "\n";
    print_verdict_table(os, r.verdict);
    if (r.closure) print_closure_table(os, *r.closure);
    os << "claim        " << r.expectation.claim << "\n";
    if (!r.expectation.note.empty()) os << "note         " << r.expectation.note << "\n";
    os << "agreement    " << (r.agreement ? "true" : "false") << "\n";
    for (const auto& m : r.mismatches) os << "  mismatch: " << m << "\n";
  } else {
    os << Json(r).dump(2) << "\n";
  }
  return kExitOk;
}

/// All (dim-1)-subsets of {1, ..., m-1} in lexicographic order.
void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  if (k > m - 1) return;
  for (;;) {
    f(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

int cmd_sweep(const CliConfig& c, std::ostream& os) {
  require_format(c, {"csv", "json", "table"});
  if (c.dim < 2 || c.dim > 5) throw Error(ErrorCode::InvalidSpec, "--dim must be between 2 and 5");
  if (c.max_order < 2) throw Error(ErrorCode::InvalidRange, "--max-order must be at least 2");
  const std::int64_t m = c.max_order;

  struct Row {
    EigenSpec spec;
    Verdict verdict;
  };
  std::vector<Row> rows;
  for_each_subset(static_cast<int>(m), c.dim - 1, [&](const std::vector<int>& pick) {
    std::vector<RootOfUnity> ev{RootOfUnity(0, 1)};
    for (int k : pick) ev.emplace_back(k, m);
    EigenSpec spec = EigenSpec::of(std::move(ev));
    if (c.dim == 4 && !c.d_sign.empty()) spec = with_d_sign(spec, parse_sign(c.d_sign));
    rows.push_back({spec, classify(spec)});
  });

  if (c.format == "json") {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(Json{{"spec", r.spec}, {"verdict", r.verdict}});
    os << out.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "dim,eigenvalues,po,pattern,rule,kind\n";
    for (const auto& r : rows) {
      os << r.spec.dim << "," << eigen_list(r.spec.eigenvalues, " ") << "," << opt_string(r.verdict.po) << ","
         << r.verdict.pattern.value_or("") << "," << r.verdict.rule << "," << to_string(r.verdict.kind) << "\n";
    }
  } else {
    os << std::left << std::setw(28) << "eigenvalues" << std::setw(5) << "po" << std::setw(20) << "pattern"
       << std::setw(30) << "rule"
       << "kind\n";
    for (const auto& r : rows) {
      os << std::setw(28) << eigen_list(r.spec.eigenvalues, " ") << std::setw(5) << opt_string(r.verdict.po)
         << std::setw(20) << r.verdict.pattern.value_or("-") << std::setw(30) << r.verdict.rule
         << to_string(r.verdict.kind) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finiteness of 3-strand braid group images from generator spectra", "b3img"};
  app.require_subcommand(1);
  CliConfig c;

  auto add_format = [&](CLI::App* sub, const char* accepted) {
    sub->add_option("--format", c.format, std::string("output format: ") + accepted)->capture_default_str();
    sub->add_option("--output", c.output, "write the report to this file instead of stdout");
  };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--bound", c.bound, "closure bound (default 100000)")->check(CLI::PositiveNumber);
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify an eigenvalue spec");
  classify_cmd->add_option("--dim", c.dim, "dimension 2..5")->required();
  classify_cmd->add_option("--eig", c.eig, "eigenvalue exponents k/n, comma separated")->required()->delimiter(',');
  classify_cmd->add_option("--d-sign", c.d_sign, "dimension 4: sign of D (+ or -)");
  classify_cmd->add_option("--gamma-squared", c.gamma_squared, "dimension 4: gamma^2 as k/n");
  classify_cmd->add_option("--gamma", c.gamma, "dimension 5: gamma as k/n");
  classify_cmd->add_flag("--non-root", c.non_root, "declare an eigenvalue that is not a root of unity");
  add_format(classify_cmd, "json|table");

  auto* closure_cmd = app.add_subcommand("closure", "projective closure of a builder's generators");
  closure_cmd->add_option("--builder", c.builder, "d3 | d4block | so7 | so9")->required();
  closure_cmd->add_option("--theta", c.theta, "d3: theta as k/n");
  closure_cmd->add_option("--phi", c.phi, "d3: phi as k/n");
  closure_cmd->add_option("--u", c.u, "d4block: u as k/n");
  closure_cmd->add_option("--d-sign", c.d_sign, "d4block/so7: sign of D");
  closure_cmd->add_option("--ell", c.ell, "so7/so9: ell");
  closure_cmd->add_option("--dump", c.dump, "write generators and elements as JSON to this file");
  add_bound(closure_cmd);
  add_format(closure_cmd, "json|table");

  auto* qg_cmd = app.add_subcommand("qg", "reproduce a quantum-group example");
  qg_cmd->add_option("--family", c.family, "G2 | F4 | SO7spin | SO9spin")->required();
  qg_cmd->add_option("--ell", c.ell, "rank parameter ell")->required();
  add_bound(qg_cmd);
  add_format(qg_cmd, "json|table");

  auto* sweep_cmd = app.add_subcommand("sweep", "classify every normalized spec with eigenvalue orders dividing m");
  sweep_cmd->add_option("--dim", c.dim, "dimension 2..5")->required();
  sweep_cmd->add_option("--max-order", c.max_order, "m")->required();
  sweep_cmd->add_option("--d-sign", c.d_sign, "dimension 4: fix the sign of D for every row");
  add_format(sweep_cmd, "csv|json|table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*sweep_cmd && sweep_cmd->count("--format") == 0) c.format = "csv";

  std::ostringstream report;
  int code = kExitOk;
  try {
    if (*classify_cmd) code = cmd_classify(c, report);
    else if (*closure_cmd) code = cmd_closure(c, report);
    else if (*qg_cmd) code = cmd_qg(c, report);
    else code = cmd_sweep(c, report);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalInconsistency) {
      err << "internal error: " << e.what() << "\n";
      return kExitInternal;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (c.output.empty()) {
    out << report.str();
  } else {
    std::ofstream file(c.output);
    if (!file) {
      err << "error: cannot write " << c.output << "\n";
      return kExitInputError;
    }
    file << report.str();
  }
  return code;
}

}  // namespace b3img
