#include "detinv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "detinv/combinatorics.hpp"
#include "detinv/fsingularity.hpp"
#include "detinv/gamma.hpp"
#include "detinv/minor_lattice.hpp"
#include "detinv/poly_parse.hpp"
#include "detinv/straightening.hpp"

namespace detinv::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "text";
  long cap_degree = ResourceCaps{}.max_degree;
  std::size_t cap_dim = ResourceCaps{}.max_dim;

  ResourceCaps caps() const {
    ResourceCaps c;
    c.max_degree = cap_degree;
    c.max_dim = cap_dim;
    return c;
  }
};

// One command's result in a form every output format can render.
struct Output {
  explicit Output(std::string name) : command(std::move(name)) {}

  std::string command;
  Json fields = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  std::vector<std::string> text;
  int exit_code = kPass;
};

Json big(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void render(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = o.command;
    for (const auto& [k, v] : o.fields.items()) doc[k] = v;
    Json rows = Json::array();
    for (const auto& r : o.rows) {
      Json row = Json::object();
      for (std::size_t i = 0; i < o.columns.size(); ++i) row[o.columns[i]] = r[i];
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < o.columns.size(); ++i) out << (i ? "," : "") << o.columns[i];
    out << "\n";
    for (const auto& r : o.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_cell(r[i]);
      out << "\n";
    }
  } else {
    for (const auto& line : o.text) out << line << "\n";
  }
}

std::string text_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// "key=value key=value" for one table row.
std::string text_row(const Output& o, const std::vector<Json>& row) {
  std::string line;
  for (std::size_t i = 0; i < row.size(); ++i) line += (i ? " " : "") + o.columns[i] + "=" + text_value(row[i]);
  return line;
}

void check_matrix_size(int m, int n, const ResourceCaps& caps) {
  if (m < 1 || n < 1) throw UsageError("--m and --n must be positive");
  // |Σ(m,n)| + 1 = binomial(m+n, m)
  if (binomial(m + n, m) > mpz_class(std::to_string(caps.max_dim)))
    throw ResourceError("the lattice of minors of a " + std::to_string(m) + "x" + std::to_string(n) +
                        " matrix exceeds the dimension cap");
}

void check_degree(long d, const ResourceCaps& caps) {
  if (d < 0) throw UsageError("degrees must be nonnegative");
  if (d > caps.max_degree) throw ResourceError("degree " + std::to_string(d) + " exceeds the degree cap");
}

// ---- hilbert ----

struct HilbertArgs {
  int m = 0, n = 0, dmax = 0;
  std::string a, tags;
};

Output cmd_hilbert(const HilbertArgs& args, const Common& common) {
  const auto caps = common.caps();
  check_matrix_size(args.m, args.n, caps);
  check_degree(args.dmax, caps);
  const BlockSpec spec = BlockSpec::parse(args.m, args.a, args.tags);
  const auto report = verify_main_identity(spec, args.n, args.dmax);

  Output o("hilbert");
  o.fields["m"] = args.m;
  o.fields["n"] = args.n;
  o.fields["a"] = args.a;
  o.fields["tags"] = args.tags;
  o.fields["pass"] = report.pass();
  o.columns = {"d", "gamma", "theta", "equal"};
  o.text.push_back(spec.to_string() + " n=" + std::to_string(args.n));
  for (const auto& r : report.rows) {
    o.rows.push_back({r.d, big(r.gamma), big(r.theta), r.equal});
    o.text.push_back(text_row(o, o.rows.back()));
  }
  o.text.push_back(report.pass() ? "identity holds" : "identity FAILS");
  o.exit_code = report.pass() ? kPass : kNegative;
  return o;
}

// ---- straighten ----

struct StraightenArgs {
  int m = 0, n = 0;
  std::string factors;
};

Output cmd_straighten(const StraightenArgs& args, const Common& common) {
  const auto caps = common.caps();
  check_matrix_size(args.m, args.n, caps);
  const auto factors = parse_minor_list(args.factors);
  long degree = 0;
  for (const auto& f : factors) {
    if (!f.fits(args.m, args.n))
      throw UsageError("minor " + f.to_string() + " does not fit a " + std::to_string(args.m) + "x" + std::to_string(args.n) +
                       " matrix");
    degree += f.size();
  }
  check_degree(degree, caps);
  const auto result = Straightener(args.m, args.n).straighten(factors);

  Output o("straighten");
  o.fields["m"] = args.m;
  o.fields["n"] = args.n;
  std::string input;
  for (const auto& f : result.input) input += f.to_string();
  o.fields["input"] = input;
  o.fields["expansion"] = result.to_string();
  o.columns = {"coefficient", "monomial"};
  for (const auto& t : result.terms) o.rows.push_back({t.coefficient.get_str(), t.monomial.to_string()});
  o.text.push_back(result.to_string());
  return o;
}

// ---- sigma ----

struct SigmaArgs {
  int m = 0, n = 0, d = 0;
  bool list = false;
};

Output cmd_sigma(const SigmaArgs& args, const Common& common) {
  const auto caps = common.caps();
  check_matrix_size(args.m, args.n, caps);
  check_degree(args.d, caps);
  const MinorPoset poset(args.m, args.n);

  Output o("sigma");
  o.fields["m"] = args.m;
  o.fields["n"] = args.n;
  o.fields["d"] = args.d;
  o.fields["sigma_size"] = poset.size();
  o.text.push_back("sigma=" + std::to_string(poset.size()));
  Json per_degree = Json::array();
  mpz_class total;
  for (int e = 0; e <= args.d; ++e) {
    total = count_standard_monomials(poset, e);
    per_degree.push_back(big(total));
    o.text.push_back("degree " + std::to_string(e) + ": " + total.get_str());
  }
  o.fields["degree_counts"] = per_degree;
  o.fields["total"] = big(total);

  o.columns = {"shape", "count"};
  for (const auto& [shape, count] : count_by_shape(args.m, args.n, args.d)) {
    o.rows.push_back({shape.to_string(), big(count)});
    o.text.push_back("shape " + shape.to_string() + ": " + count.get_str());
  }
  o.text.push_back("total=" + total.get_str());

  if (args.list) {
    if (total > mpz_class(std::to_string(caps.max_dim))) throw ResourceError("listing exceeds the dimension cap");
    Json listing = Json::array();
    for (const auto& v : standard_monomials(args.m, args.n, args.d)) {
      listing.push_back(v.to_string());
      o.text.push_back(v.to_string());
    }
    o.fields["monomials"] = listing;
  }
  return o;
}

// ---- cauchy ----

struct CauchyArgs {
  int m = 0, n = 0, d = 0;
};

Output cmd_cauchy(const CauchyArgs& args, const Common& common) {
  const auto caps = common.caps();
  if (args.m < 1 || args.n < 1) throw UsageError("--m and --n must be positive");
  check_degree(args.d, caps);
  Output o("cauchy");
  o.fields["m"] = args.m;
  o.fields["n"] = args.n;
  o.columns = {"d", "cauchy", "binomial", "equal"};
  bool pass = true;
  for (int e = 0; e <= args.d; ++e) {
    const mpz_class lhs = cauchy_dim(args.m, args.n, e);
    const mpz_class rhs = binomial(long(args.m) * args.n + e - 1, e);
    pass = pass && lhs == rhs;
    o.rows.push_back({e, big(lhs), big(rhs), lhs == rhs});
    o.text.push_back(text_row(o, o.rows.back()));
  }
  o.fields["pass"] = pass;
  o.exit_code = pass ? kPass : kNegative;
  return o;
}

// ---- detvariety ----

struct DetArgs {
  int m = 0, n = 0, t = 0, dmax = 0;
};

Output cmd_detvariety(const DetArgs& args, const Common& common) {
  const auto caps = common.caps();
  if (args.m < 1 || args.n < 1) throw UsageError("--m and --n must be positive");
  if (args.t < 0 || args.t > std::min(args.m, args.n)) throw UsageError("--t must lie in 0..min(m,n)");
  check_degree(args.dmax, caps);
  Output o("detvariety");
  o.fields["m"] = args.m;
  o.fields["n"] = args.n;
  o.fields["t"] = args.t;
  o.columns = {"d", "hilbert"};
  for (int e = 0; e <= args.dmax; ++e) {
    o.rows.push_back({e, big(hilbert_determinantal(args.m, args.n, args.t, e))});
    o.text.push_back(text_row(o, o.rows.back()));
  }
  return o;
}

// ---- fsing ----

struct FsingArgs {
  std::uint32_t p = 0;
  std::size_t vars = 0;
  std::size_t cols = 0;
  std::string weights;
  std::string ideal;
  std::string ideal_file;
  std::string c = "1";
  std::string x;
  int r = 1;
};

std::vector<int> parse_weights(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int w = std::stoi(item, &used);
      if (used != item.size() || w < 1) throw std::invalid_argument("");
      out.push_back(w);
    } catch (const std::exception&) {
      throw UsageError("--weights must be a comma-separated list of positive integers");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct FsingInput {
  HomogeneousIdeal ideal;
  VariableLayout layout;
};

FsingInput load_ideal(const FsingArgs& args, const std::vector<std::string>& extra) {
  if (args.ideal.empty() == args.ideal_file.empty()) throw UsageError("give exactly one of --ideal and --ideal-file");
  const std::string text = args.ideal.empty() ? read_file(args.ideal_file) : args.ideal;
  const PrimeField field(args.p);

  std::size_t nvars = args.vars;
  if (nvars == 0) {
    if (args.cols) throw UsageError("--vars is required with --cols");
    nvars = infer_variable_count(text);
    for (const auto& e : extra) nvars = std::max(nvars, infer_variable_count(e));
    nvars = std::max<std::size_t>(nvars, 1);
  }
  const VariableLayout layout{nvars, args.cols};
  std::vector<FpPoly> generators;
  for (const auto& g : parse_polynomial_list(text, layout)) generators.push_back(to_field(field, g));
  std::vector<int> weights = args.weights.empty() ? std::vector<int>{} : parse_weights(args.weights);
  return {HomogeneousIdeal(field, nvars, std::move(generators), std::move(weights)), layout};
}

FpPoly parse_element(const std::string& text, const FsingInput& in, const char* flag) {
  try {
    return to_field(in.ideal.field(), parse_polynomial(text, in.layout));
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Output probe_output(const std::string& mode, const FsingArgs& args, const FsingInput& in, const FpPoly& c,
                    const FrobeniusProbeResult& result, const ResourceCaps& caps) {
  Output o("fsing");
  o.fields["mode"] = mode;
  o.fields["p"] = args.p;
  o.fields["vars"] = in.ideal.nvars();
  o.fields["generators"] = in.ideal.generators().size();
  if (mode == "split") {
    o.fields["c"] = c.to_string();
    o.fields["r"] = args.r;
  }
  const bool verified = result.positive() && verify_splitting_witness(in.ideal, c, result, caps);
  o.columns = {"verdict", "q", "degree_bound", "witness", "cofactor", "verified", "note"};
  o.rows.push_back({to_string(result.verdict), result.q, result.degree_bound, result.witness ? result.witness->to_string() : "",
                    result.cofactor ? result.cofactor->to_string() : "", verified, result.note});
  o.fields["verdict"] = to_string(result.verdict);
  o.text.push_back("verdict=" + to_string(result.verdict));
  if (result.witness) o.text.push_back("witness=" + result.witness->to_string());
  if (result.cofactor && mode == "split") o.text.push_back("cofactor=" + result.cofactor->to_string());
  o.text.push_back("q=" + std::to_string(result.q));
  o.text.push_back("degree_bound=" + std::to_string(result.degree_bound));
  if (result.positive()) o.text.push_back(std::string("verified=") + (verified ? "true" : "false"));
  o.text.push_back("note=" + result.note);
  if (result.positive() && !verified) o.exit_code = kInternal;
  else o.exit_code = result.positive() ? kPass : kNegative;
  return o;
}

Output cmd_fpure(const FsingArgs& args, const Common& common) {
  const auto in = load_ideal(args, {});
  const auto caps = common.caps();
  return probe_output("fpure", args, in, in.ideal.one(), fedder_fpure(in.ideal, caps), caps);
}

Output cmd_split(const FsingArgs& args, const Common& common) {
  const auto in = load_ideal(args, {args.c});
  const auto caps = common.caps();
  const FpPoly c = parse_element(args.c, in, "--c");
  return probe_output("split", args, in, c, splitting_probe(in.ideal, c, args.r, caps), caps);
}

Output cmd_tc(const FsingArgs& args, const Common& common) {
  if (args.x.empty()) throw UsageError("tc needs a candidate --x");
  const auto in = load_ideal(args, {args.c, args.x});
  const auto caps = common.caps();
  const FpPoly c = parse_element(args.c, in, "--c");
  const FpPoly x = parse_element(args.x, in, "--x");
  const auto steps = tight_closure_probe(in.ideal, x, c, args.r, caps);

  Output o("fsing");
  o.fields["mode"] = "tc";
  o.fields["p"] = args.p;
  o.fields["vars"] = in.ideal.nvars();
  o.fields["x"] = x.to_string();
  o.fields["c"] = c.to_string();
  o.fields["r_max"] = args.r;
  o.columns = {"r", "q", "contained"};
  bool all = true;
  for (const auto& s : steps) {
    all = all && s.contained;
    o.rows.push_back({s.r, s.q, s.contained});
    o.text.push_back(text_row(o, o.rows.back()));
  }
  o.fields["all_contained"] = all;
  o.text.push_back(all ? "c*x^q lies in I^[q] for every q tested (evidence only)"
                       : "c*x^q leaves I^[q] for some q tested");
  o.exit_code = all ? kPass : kNegative;
  return o;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--cap-degree", common.cap_degree, "Largest degree any computation may reach")->check(CLI::PositiveNumber);
  cmd->add_option("--cap-dim", common.cap_dim, "Largest linear-algebra dimension")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattices of minors, invariant Hilbert functions and Frobenius splitting probes", "detinv"};
  app.require_subcommand(1);
  Common common;
  std::function<Output()> action;

  HilbertArgs hilbert;
  auto* h = app.add_subcommand("hilbert", "Compare the two Hilbert functions of a block invariant ring");
  h->add_option("--m", hilbert.m, "Rows")->required();
  h->add_option("--n", hilbert.n, "Columns")->required();
  h->add_option("--a", hilbert.a, "Block boundaries 0=a0<...<as=m, comma-separated")->required();
  h->add_option("--tags", hilbert.tags, "Block tags G, S or T, comma-separated")->required();
  h->add_option("--dmax", hilbert.dmax, "Largest degree")->required();
  add_common(h, common);
  h->callback([&] { action = [&] { return cmd_hilbert(hilbert, common); }; });

  StraightenArgs straighten_args;
  auto* st = app.add_subcommand("straighten", "Write a product of minors in the standard monomial basis");
  st->add_option("--m", straighten_args.m, "Rows")->required();
  st->add_option("--n", straighten_args.n, "Columns")->required();
  st->add_option("--factors", straighten_args.factors, "Minors such as \"[2|1],[1|2]\"")->required();
  add_common(st, common);
  st->callback([&] { action = [&] { return cmd_straighten(straighten_args, common); }; });

  SigmaArgs sigma;
  auto* sg = app.add_subcommand("sigma", "Count standard monomials on the lattice of minors");
  sg->add_option("--m", sigma.m, "Rows")->required();
  sg->add_option("--n", sigma.n, "Columns")->required();
  sg->add_option("--d", sigma.d, "Degree")->required();
  sg->add_flag("--list", sigma.list, "List the standard monomials of degree d");
  add_common(sg, common);
  sg->callback([&] { action = [&] { return cmd_sigma(sigma, common); }; });

  CauchyArgs cauchy;
  auto* ca = app.add_subcommand("cauchy", "Check the Cauchy dimension count against binomial(mn+d-1, d)");
  ca->add_option("--m", cauchy.m, "Rows")->required();
  ca->add_option("--n", cauchy.n, "Columns")->required();
  ca->add_option("--d", cauchy.d, "Largest degree")->required();
  add_common(ca, common);
  ca->callback([&] { action = [&] { return cmd_cauchy(cauchy, common); }; });

  DetArgs det;
  auto* dv = app.add_subcommand("detvariety", "Hilbert function of the matrices of rank at most t");
  dv->add_option("--m", det.m, "Rows")->required();
  dv->add_option("--n", det.n, "Columns")->required();
  dv->add_option("--t", det.t, "Rank bound")->required();
  dv->add_option("--dmax", det.dmax, "Largest degree")->required();
  add_common(dv, common);
  dv->callback([&] { action = [&] { return cmd_detvariety(det, common); }; });

  FsingArgs fsing;
  auto* fs = app.add_subcommand("fsing", "Frobenius splitting probes over F_p");
  fs->require_subcommand(1);
  auto add_ideal_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", fsing.p, "Characteristic")->required();
    cmd->add_option("--vars", fsing.vars, "Number of variables (inferred from x1..x9 when omitted)");
    cmd->add_option("--cols", fsing.cols, "Column count for x_i_j variables");
    cmd->add_option("--weights", fsing.weights, "Variable degrees, comma-separated (default all 1)");
    cmd->add_option("--ideal", fsing.ideal, "Generators separated by ',' or ';'");
    cmd->add_option("--ideal-file", fsing.ideal_file, "File with one generator per line");
    add_common(cmd, common);
  };
  auto* fp = fs->add_subcommand("fpure", "Decide F-purity of S/I");
  add_ideal_flags(fp);
  fp->callback([&] { action = [&] { return cmd_fpure(fsing, common); }; });
  auto* sp = fs->add_subcommand("split", "Look for a splitting of x -> c x^(p^r)");
  add_ideal_flags(sp);
  sp->add_option("--c", fsing.c, "Homogeneous multiplier")->required();
  sp->add_option("--r", fsing.r, "Frobenius exponent")->check(CLI::PositiveNumber);
  sp->callback([&] { action = [&] { return cmd_split(fsing, common); }; });
  auto* tc = fs->add_subcommand("tc", "Test c x^(p^r) in I^[p^r] for r = 1..r_max");
  add_ideal_flags(tc);
  tc->add_option("--x", fsing.x, "Candidate element")->required();
  tc->add_option("--c", fsing.c, "Multiplier (default 1)");
  tc->add_option("--r", fsing.r, "Largest Frobenius exponent")->check(CLI::PositiveNumber);
  tc->callback([&] { action = [&] { return cmd_tc(fsing, common); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    const Output o = action();
    render(o, common.format, out);
    return o.exit_code;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace detinv::cli
