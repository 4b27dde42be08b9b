#include "preproj/cli.hpp"

#include "preproj/error.hpp"
#include "preproj/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace preproj {

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::ok: return "ok";
    case RunStatus::invalid_input: return "invalid-input";
    case RunStatus::not_applicable: return "not-applicable";
    case RunStatus::theorem_violation: return "theorem-violation";
  }
  return "unknown";
}

int exit_code(RunStatus status) {
  switch (status) {
    case RunStatus::ok: return 0;
    case RunStatus::invalid_input: return 2;
    case RunStatus::not_applicable: return 3;
    case RunStatus::theorem_violation: return 4;
  }
  return 4;
}

RunStatus status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input:
    case ErrorKind::inconsistent_input: return RunStatus::invalid_input;
    case ErrorKind::not_applicable:
    case ErrorKind::unclassifiable: return RunStatus::not_applicable;
    case ErrorKind::theorem_violation:
    case ErrorKind::internal: return RunStatus::theorem_violation;
  }
  return RunStatus::theorem_violation;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "maya",   "hom",       "hom-formula", "socle",    "identify", "polytope", "polytope-max",
      "ssyt",   "signature", "type-t",      "classify", "kostant",  "kostka",   "selftest"};
  return names;
}

std::string usage() {
  return R"(usage: preproj <subcommand> [flags]

  maya          --n N (--a SUBSET | --v DIMS --index I) [--seed S]   Maya module N(A)
  hom           (--module PATH | --n N --a SUBSET) --b SUBSET         basis of Hom(M, N(B))
  hom-formula   --n N --a SUBSET --b SUBSET                           closed-form dim Hom(N(A), N(B))
  socle         (--module PATH | --n N --a SUBSET)                    socle dimensions and bases
  identify      (--module PATH | --n N --a SUBSET) [--seed S]         recognise N(A), certify isomorphism
  polytope      --n N (--set SUBSET | --b SUBSET)                     generating points of P(B)
  polytope-max  --n N --a SUBSET --b SUBSET                           max of <1_A, .> on P(B)
  ssyt          --shape LAMBDA --content MU [--n N]                   semistandard tableaux
  signature     (--shape LAMBDA --content MU [--index K] | --module PATH)
  type-t        --shape LAMBDA --content MU --index K [--seed S] [--scalars generic|zero|unit]
  classify      --module PATH --shape LAMBDA --content MU [--seed S]
  kostant       --n N --v DIMS                                        Kostant partition of alpha_v
  kostka        (--shape LAMBDA --content MU | --w W --v DIMS)        dim V(lambda)_mu and #SSYT
  selftest      [--n MAX_N] [--seed S]                                run every invariant suite

  common: --out PATH writes the module (or payload) to PATH; --pretty indents the output.
  exit codes: 0 ok, 2 invalid-input, 3 not-applicable, 4 theorem-violation
)";
}

namespace {

class Flags {
 public:
  explicit Flags(const CommandRequest& req) : req_(req) {}

  bool has(const std::string& name) const { return req_.flags.contains(name); }

  const std::string& str(const std::string& name) const {
    auto it = req_.flags.find(name);
    if (it == req_.flags.end()) fail(ErrorKind::invalid_input, "missing required flag --" + name);
    return it->second;
  }

  std::uint64_t nat(const std::string& name) const {
    const auto v = parse_int_list(str(name));
    if (v.size() != 1 || v[0] < 0)
      fail(ErrorKind::invalid_input, "--" + name + " must be a nonnegative integer");
    return static_cast<std::uint64_t>(v[0]);
  }

  std::uint64_t nat_or(const std::string& name, std::uint64_t fallback) const {
    return has(name) ? nat(name) : fallback;
  }

  std::size_t n() const {
    const auto n = nat("n");
    if (n < 2) fail(ErrorKind::invalid_input, "--n must be at least 2");
    return n;
  }

  std::vector<std::int64_t> ints(const std::string& name) const { return parse_int_list(str(name)); }

  std::vector<std::size_t> shape() const {
    std::vector<std::size_t> s;
    for (auto x : ints("shape")) {
      if (x < 0) fail(ErrorKind::invalid_input, "--shape entries must be nonnegative");
      s.push_back(static_cast<std::size_t>(x));
    }
    return s;
  }

  SubsetI subset(const std::string& name) const { return SubsetI::parse(n(), str(name)); }

  /// Source module from --module or, failing that, N(--a).
  GradedRep module() const {
    if (req_.module_path) {
      std::ifstream in(*req_.module_path, std::ios::binary);
      if (!in) fail(ErrorKind::invalid_input, "cannot read module file " + *req_.module_path);
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_module_file(buf.str());
    }
    if (has("a")) return maya_module(MayaSubset(subset("a")));
    fail(ErrorKind::invalid_input, "need --module PATH or --n N --a SUBSET");
  }

 private:
  const CommandRequest& req_;
};

json module_summary(const GradedRep& m) {
  json j;
  std::vector<std::int64_t> dims(m.dims().begin(), m.dims().end());
  j["dims"] = dims;
  j["socle_dims"] = socle_dims(m);
  j["module"] = module_to_json(m);
  return j;
}

std::vector<std::int64_t> content_flag(const Flags& f) {
  auto mu = f.ints("content");
  if (f.has("n") && mu.size() != f.n())
    fail(ErrorKind::invalid_input, "--content must have n entries");
  if (mu.size() < 2) fail(ErrorKind::invalid_input, "--content must have at least 2 entries");
  return mu;
}

Tableau pick_tableau(const Flags& f, const std::vector<std::size_t>& shape,
                     const std::vector<std::int64_t>& content) {
  const auto tabs = ssyt_enumerate(shape, content);
  const auto k = f.nat("index");
  if (k >= tabs.size())
    fail(ErrorKind::invalid_input, "--index " + std::to_string(k) + " out of range; there are " +
                                       std::to_string(tabs.size()) + " tableaux");
  return tabs[k];
}

json cmd_maya(const Flags& f) {
  const std::size_t n = f.n();
  SubsetI a;
  if (f.has("a")) {
    a = f.subset("a");
  } else if (f.has("v")) {
    auto v = f.ints("v");
    if (v.size() != n - 1) fail(ErrorKind::invalid_input, "--v must have n-1 entries");
    a = subset_from_dims(v, f.nat("index"));
  } else {
    fail(ErrorKind::invalid_input, "need --a SUBSET or --v DIMS --index I");
  }
  const MayaSubset ma(a);
  GradedRep m = maya_module(ma);
  if (f.has("seed")) m = random_basis_change(m, f.nat("seed"));
  json j;
  j["subset"] = a.to_string();
  j["socle_vertex"] = a.size();
  const json summary = module_summary(m);
  for (const auto& [k, v] : summary.items()) j[k] = v;
  return j;
}

json cmd_hom(const Flags& f) {
  const GradedRep source = f.module();
  const MayaSubset b(SubsetI::parse(source.n(), f.str("b")));
  const auto basis = hom_space_basis(source, maya_module(b));
  json j;
  j["dim"] = basis.size();
  j["basis"] = json::array();
  for (const auto& phi : basis) j["basis"].push_back(intertwiner_to_json(phi));
  if (!f.has("module") && f.has("a")) j["formula"] = hom_formula(MayaSubset(f.subset("a")), b);
  return j;
}

json cmd_hom_formula(const Flags& f) {
  return {{"dim", hom_formula(MayaSubset(f.subset("a")), MayaSubset(f.subset("b")))}};
}

json cmd_socle(const Flags& f) {
  const GradedRep m = f.module();
  json j;
  j["socle_dims"] = socle_dims(m);
  j["basis"] = json::array();
  for (std::size_t v = 1; v <= m.vertices(); ++v) j["basis"].push_back(matrix_to_json(socle_basis(m, v)));
  return j;
}

json cmd_identify(const Flags& f, bool from_file) {
  GradedRep m = f.module();
  const auto seed = f.nat_or("seed", 0);
  if (!from_file && f.has("seed")) m = random_basis_change(m, seed);
  const auto id = identify_maya(m, seed);
  json j;
  j["subset"] = id.subset.subset().to_string();
  j["socle_vertex"] = id.subset.size();
  j["isomorphism"] = intertwiner_to_json(id.iso);
  return j;
}

json cmd_polytope(const Flags& f) {
  const SubsetI b = f.subset(f.has("set") ? "set" : "b");
  json j;
  j["subset"] = b.to_string();
  j["points"] = json::array();
  for (const auto& p : polytope_vertices(b).points) j["points"].push_back(p.coords());
  return j;
}

json cmd_polytope_max(const Flags& f) {
  return {{"max", polytope_max(f.subset("a"), f.subset("b"))}};
}

json cmd_ssyt(const Flags& f) {
  const auto content = content_flag(f);
  const auto tabs = ssyt_enumerate(f.shape(), content);
  json j;
  j["count"] = tabs.size();
  j["tableaux"] = json::array();
  for (const auto& t : tabs) j["tableaux"].push_back(tableau_to_json(t));
  return j;
}

json cmd_signature(const Flags& f, bool from_file) {
  if (from_file) return {{"signature", signature_to_json(f_signature(f.module()))}};
  const auto content = content_flag(f);
  const auto shape = f.shape();
  std::vector<Tableau> tabs;
  if (f.has("index"))
    tabs.push_back(pick_tableau(f, shape, content));
  else
    tabs = ssyt_enumerate(shape, content);
  json list = json::array();
  for (const auto& t : tabs)
    list.push_back({{"tableau", tableau_to_json(t)}, {"signature", signature_to_json(signature(t))}});
  return {{"signatures", list}};
}

json cmd_type_t(const Flags& f) {
  const auto content = content_flag(f);
  const Tableau t = pick_tableau(f, f.shape(), content);
  const std::string kind = f.has("scalars") ? f.str("scalars") : "generic";
  BoxScalars sc;
  if (kind == "generic")
    sc = generic_scalars(t, f.nat_or("seed", 0));
  else if (kind == "zero")
    sc = constant_scalars(t, 0);
  else if (kind == "unit")
    sc = constant_scalars(t, 1);
  else
    fail(ErrorKind::invalid_input, "--scalars must be generic, zero, or unit");
  json j;
  j["tableau"] = tableau_to_json(t);
  json scalars = json::array();
  for (const auto& [pq, e] : sc) scalars.push_back({pq.first, pq.second, rational_to_json(e)});
  j["scalars"] = scalars;
  const json summary = module_summary(type_t_module(t, sc));
  for (const auto& [k, v] : summary.items()) j[k] = v;
  return j;
}

json cmd_classify(const Flags& f) {
  const GradedRep m = f.module();
  const auto c = classify(m, f.shape(), f.ints("content"), f.nat_or("seed", 0));
  json j;
  j["tableau"] = tableau_to_json(c.tableau);
  j["signature"] = signature_to_json(c.signature);
  j["end_dim"] = c.end_dim;
  j["generic_end_dim"] = c.generic_end_dim;
  j["degenerate"] = c.degenerate();
  return j;
}

json cmd_kostant(const Flags& f) {
  const auto v = f.ints("v");
  if (v.size() != f.n() - 1) fail(ErrorKind::invalid_input, "--v must have n-1 entries");
  return {{"count", kostant_partition(RootVector::from_dims(v))}};
}

json cmd_kostka(const Flags& f) {
  std::vector<std::int64_t> lambda, mu;
  if (f.has("shape")) {
    mu = content_flag(f);
    for (auto x : f.shape()) lambda.push_back(static_cast<std::int64_t>(x));
    if (lambda.size() > mu.size()) fail(ErrorKind::invalid_input, "--shape has more rows than n");
    lambda.resize(mu.size(), 0);
  } else {
    const auto wd = weights_from(f.ints("w"), f.ints("v"));
    lambda = wd.lambda;
    mu = wd.mu;
  }
  std::vector<std::size_t> shape;
  for (auto x : lambda) shape.push_back(static_cast<std::size_t>(x));
  json j;
  j["lambda"] = lambda;
  j["mu"] = mu;
  j["weight_multiplicity"] = weight_multiplicity(lambda, mu);
  j["ssyt_count"] = ssyt_enumerate(shape, mu).size();
  return j;
}

json cmd_selftest(const Flags& f, RunReport& report) {
  const auto results = selftest(f.nat_or("n", 4), f.nat_or("seed", 0));
  json suites = json::array();
  std::size_t failures = 0;
  for (const auto& r : results) {
    failures += r.failures;
    suites.push_back({{"name", r.name},
                      {"checks", r.checks},
                      {"failures", r.failures},
                      {"samples", r.samples}});
    for (const auto& s : r.samples) report.diagnostics.push_back(r.name + ": " + s);
  }
  if (failures > 0) report.status = RunStatus::theorem_violation;
  return {{"suites", suites}, {"failures", failures}};
}

}  // namespace

RunReport dispatch(const CommandRequest& req) {
  RunReport report;
  const Flags f(req);
  const bool from_file = req.module_path.has_value();
  try {
    const std::string& cmd = req.subcommand;
    if (cmd == "maya") report.payload = cmd_maya(f);
    else if (cmd == "hom") report.payload = cmd_hom(f);
    else if (cmd == "hom-formula") report.payload = cmd_hom_formula(f);
    else if (cmd == "socle") report.payload = cmd_socle(f);
    else if (cmd == "identify") report.payload = cmd_identify(f, from_file);
    else if (cmd == "polytope") report.payload = cmd_polytope(f);
    else if (cmd == "polytope-max") report.payload = cmd_polytope_max(f);
    else if (cmd == "ssyt") report.payload = cmd_ssyt(f);
    else if (cmd == "signature") report.payload = cmd_signature(f, from_file);
    else if (cmd == "type-t") report.payload = cmd_type_t(f);
    else if (cmd == "classify") report.payload = cmd_classify(f);
    else if (cmd == "kostant") report.payload = cmd_kostant(f);
    else if (cmd == "kostka") report.payload = cmd_kostka(f);
    else if (cmd == "selftest") report.payload = cmd_selftest(f, report);
    else fail(ErrorKind::invalid_input, "unknown subcommand '" + cmd + "'\n" + usage());
  } catch (const Error& e) {
    report.status = status_for(e.kind());
    report.payload = json::object();
    report.diagnostics.push_back(std::string(to_string(e.kind())) + ": " + e.what());
  }
  return report;
}

json report_to_json(const RunReport& report) {
  json j;
  j["status"] = std::string(to_string(report.status));
  j["payload"] = report.payload;
  j["diagnostics"] = report.diagnostics;
  return j;
}

std::string render_report(const RunReport& report, bool pretty) {
  return report_to_json(report).dump(pretty ? 2 : -1);
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Modules over the type A preprojective algebra"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CommandRequest req;
  static const std::vector<std::string> value_flags = {"n",     "a",     "b",   "v",     "w",   "shape",
                                                       "content", "set", "index", "seed", "scalars"};
  std::map<std::string, std::string> values;
  std::string module_path, out_path;
  bool pretty = false;

  for (const auto& name : subcommands()) {
    auto* sub = app.add_subcommand(name);
    for (const auto& flag : value_flags) sub->add_option("--" + flag, values[flag]);
    sub->add_option("--module", module_path);
    sub->add_option("--out", out_path);
    sub->add_flag("--pretty", pretty);
    sub->callback([&req, name] { req.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << usage();
    return 0;
  } catch (const CLI::ParseError& e) {
    RunReport bad;
    bad.status = RunStatus::invalid_input;
    bad.diagnostics.push_back(std::string("invalid-input: ") + e.what());
    bad.diagnostics.push_back(usage());
    std::cout << render_report(bad, false) << '\n';
    return exit_code(bad.status);
  }

  const CLI::App* sub = app.get_subcommands().front();
  for (const auto& flag : value_flags)
    if (sub->count("--" + flag) > 0) req.flags[flag] = values[flag];
  if (sub->count("--module") > 0) {
    req.module_path = module_path;
    req.flags["module"] = module_path;
  }
  if (sub->count("--out") > 0) req.out_path = out_path;
  req.pretty = pretty;

  RunReport report = dispatch(req);
  if (report.status == RunStatus::ok && req.out_path) {
    std::ofstream out(*req.out_path, std::ios::binary);
    const json& body = report.payload.contains("module") ? report.payload["module"] : report.payload;
    out << body.dump(pretty ? 2 : -1) << '\n';
    if (!out) {
      report.status = RunStatus::invalid_input;
      report.diagnostics.push_back("invalid-input: cannot write " + *req.out_path);
    }
  }
  std::cout << render_report(report, req.pretty) << '\n';
  return exit_code(report.status);
}

}  // namespace preproj
