#include "nashtoric/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "nashtoric/bounds.hpp"
#include "nashtoric/error.hpp"
#include "nashtoric/nash_curve.hpp"
#include "nashtoric/semigroup.hpp"

namespace nashtoric::cli {
namespace {

using ojson = nlohmann::ordered_json;

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

Int parse_int_at(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  return parse_int(text.substr(start, pos - start));
}

std::string format_set(const CurveGenerators& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string format_vecs(const std::vector<Vec>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_vec(vs[i]);
  }
  return out + "}";
}

// 1-based in all output.
std::string format_pivot(const std::vector<std::size_t>& pivot) {
  std::string out = "(";
  for (std::size_t i = 0; i < pivot.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(pivot[i] + 1);
  }
  return out + ")";
}

std::string format_monomial(const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += "*";
    out += "u" + std::to_string(indices[i] + 1);
  }
  return out;
}

std::string format_power_product(const std::vector<unsigned>& exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "u" + std::to_string(i + 1);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out;
}

std::string format_binomial(const BinomialRelation& rel) {
  return format_power_product(rel.alpha) + " - " +
         format_power_product(rel.beta);
}

ojson json_set(const CurveGenerators& a) {
  ojson arr = ojson::array();
  for (const Int& e : a.elements()) arr.push_back(to_string(e));
  return arr;
}

ojson json_vec(const Vec& v) {
  ojson arr = ojson::array();
  for (const Int& x : v) arr.push_back(to_string(x));
  return arr;
}

ojson json_vecs(const std::vector<Vec>& vs) {
  ojson arr = ojson::array();
  for (const Vec& v : vs) arr.push_back(json_vec(v));
  return arr;
}

ojson json_pivot(const std::vector<std::size_t>& pivot) {
  ojson arr = ojson::array();
  for (std::size_t i : pivot) arr.push_back(i + 1);
  return arr;
}

const char* status_name(ChartNode::Status s) {
  switch (s) {
    case ChartNode::Status::smooth: return "smooth";
    case ChartNode::Status::expanded: return "expanded";
    case ChartNode::Status::unresolved: return "unresolved";
  }
  return "unknown";
}

struct Rendered {
  std::string text;
  ojson result;
  int status = 0;
};

std::string finish(const RunRequest& request, const char* command,
                   const ojson& input_echo, Rendered&& rendered) {
  if (!request.json) return std::move(rendered.text);
  ojson doc;
  doc["command"] = command;
  doc["input"] = input_echo;
  doc["result"] = std::move(rendered.result);
  doc["status"] = rendered.status;
  return doc.dump(2) + "\n";
}

CurveGenerators make_curve(const std::string& text) {
  return CurveGenerators::make(parse_curve_text(text));
}

Rendered render_resolve(const RunRequest& request) {
  const CurveGenerators a = make_curve(request.input);
  const ResolutionTrace trace = resolve(a, request.cap);

  Rendered r;
  std::ostringstream os;
  os << "input: " << a << "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    os << "step " << i << ": " << trace.steps[i] << "  mult "
       << trace.multiplicities[i] << "  embdim " << trace.embedding_dims[i]
       << "\n";
  }
  os << "eta: " << trace.eta() << "\n";
  r.text = os.str();

  ojson steps = ojson::array();
  for (const CurveGenerators& s : trace.steps) steps.push_back(json_set(s));
  ojson mults = ojson::array();
  for (const Int& m : trace.multiplicities) mults.push_back(to_string(m));
  r.result["eta"] = trace.eta();
  r.result["steps"] = std::move(steps);
  r.result["multiplicities"] = std::move(mults);
  r.result["embedding_dims"] = trace.embedding_dims;
  return r;
}

Rendered render_summary(const RunRequest& request) {
  const CurveGenerators a = make_curve(request.input);
  const DivisionSummary summary = division_summary(a, request.cap);
  const ResolutionTrace trace = resolve(a, request.cap);
  const Int q_sum = summary.q_sum();
  const bool q_sum_matches = q_sum == Int(trace.eta());

  Rendered r;
  std::ostringstream os;
  os << "input: " << a << "\n";
  for (std::size_t i = 0; i < summary.rows.size(); ++i) {
    const DivisionRow& row = summary.rows[i];
    os << "row " << (i + 1) << ": " << row.a2 << " = " << row.a1 << "*"
       << row.q << " + " << row.r << "  ->  " << row.set_after << "\n";
  }
  os << "delta: " << summary.delta() << "\n";
  os << "sum q: " << q_sum << "\n";
  if (q_sum_matches) {
    os << "eta: " << trace.eta() << " (sum q = eta)\n";
  } else {
    os << "eta: " << trace.eta() << " (MISMATCH with sum q)\n";
  }
  r.text = os.str();

  ojson rows = ojson::array();
  for (const DivisionRow& row : summary.rows) {
    ojson j;
    j["a1"] = to_string(row.a1);
    j["a2"] = to_string(row.a2);
    j["q"] = to_string(row.q);
    j["r"] = to_string(row.r);
    j["set_after"] = json_set(row.set_after);
    rows.push_back(std::move(j));
  }
  r.result["delta"] = summary.delta();
  r.result["rows"] = std::move(rows);
  r.result["q_sum"] = to_string(q_sum);
  r.result["eta"] = trace.eta();
  r.status = q_sum_matches ? 0 : 4;
  return r;
}

Rendered render_bounds(const RunRequest& request) {
  const CurveGenerators a = make_curve(request.input);
  if (a.contains_one()) {
    fail(errc::already_smooth, "1 is a generator; bounds are vacuous");
  }
  const ResolutionTrace trace = resolve(a, request.cap);
  const DivisionSummary summary = division_summary(a, request.cap);
  const BoundReport report = make_bound_report(a, summary.delta());
  const bool consistent =
      Int(trace.eta()) <= report.eta_bound && report.fib_lower_holds &&
      summary.delta() < report.delta_fib_bound &&
      summary.delta() < report.delta_digit_bound;

  Rendered r;
  std::ostringstream os;
  os << "input: " << a << "\n";
  os << "v: " << report.v_value << "\n";
  os << "eta bound: " << report.eta_bound << "\n";
  os << "eta: " << trace.eta() << "\n";
  os << "delta: " << summary.delta() << "\n";
  os << "fib lower: a1 = " << a.elements()[0] << " >= F_"
     << (summary.delta() + 1) << " = " << report.fib_lower_a1 << ", a2 = "
     << a.elements()[1] << " >= F_" << (summary.delta() + 2) << " = "
     << report.fib_lower_a2 << " : "
     << (report.fib_lower_holds ? "holds" : "VIOLATED") << "\n";
  os << "delta fib bound: " << report.delta_fib_bound << "\n";
  os << "delta digit bound: " << report.delta_digit_bound << "\n";
  if (!consistent) os << "BOUND VIOLATION\n";
  r.text = os.str();

  r.result["v"] = to_string(report.v_value);
  r.result["eta_bound"] = to_string(report.eta_bound);
  r.result["eta"] = trace.eta();
  r.result["delta"] = summary.delta();
  ojson fib;
  fib["f_delta_plus_1"] = to_string(report.fib_lower_a1);
  fib["f_delta_plus_2"] = to_string(report.fib_lower_a2);
  fib["holds"] = report.fib_lower_holds;
  r.result["fib_lower"] = std::move(fib);
  r.result["delta_fib_bound"] = report.delta_fib_bound;
  r.result["delta_digit_bound"] = report.delta_digit_bound;
  r.status = consistent ? 0 : 4;
  return r;
}

void print_tree(std::ostringstream& os, const ChartNode& node, unsigned indent) {
  os << std::string(2 * indent, ' ') << "- ";
  if (!node.via_pivot.empty()) {
    os << "pivot " << format_pivot(node.via_pivot) << ": ";
  }
  os << format_vecs(node.config.vectors()) << " "
     << status_name(node.status) << "\n";
  for (const ChartNode& child : node.children) {
    print_tree(os, child, indent + 1);
  }
}

ojson json_tree(const ChartNode& node) {
  ojson j;
  j["via_pivot"] = json_pivot(node.via_pivot);
  j["generators"] = json_vecs(node.config.vectors());
  j["status"] = status_name(node.status);
  ojson children = ojson::array();
  for (const ChartNode& child : node.children) {
    children.push_back(json_tree(child));
  }
  j["children"] = std::move(children);
  return j;
}

Rendered render_charts(const RunRequest& request) {
  const LatticeConfig config =
      LatticeConfig::validate(parse_vector_text(request.input));
  const std::vector<Chart> charts = all_charts(config);
  const bool with_tree = request.depth > 0 && config.dim() <= 2;
  std::optional<ChartNode> tree;
  if (with_tree) tree = iterate_multidim(config, request.depth);

  Rendered r;
  std::ostringstream os;
  os << "input: dim " << config.dim() << ", "
     << format_vecs(config.vectors()) << "\n";
  os << "separator: " << format_vec(config.separator()) << "\n";
  for (const Chart& c : charts) {
    os << "pivot " << format_pivot(c.pivot) << ": "
       << format_vecs(c.generators) << (c.retained ? " retained" : " discarded")
       << "\n";
  }
  if (tree) {
    os << "tree:\n";
    print_tree(os, *tree, 1);
  }
  r.text = os.str();

  r.result["dim"] = config.dim();
  r.result["separator"] = json_vec(config.separator());
  ojson chart_list = ojson::array();
  for (const Chart& c : charts) {
    ojson j;
    j["pivot"] = json_pivot(c.pivot);
    j["generators"] = json_vecs(c.generators);
    j["retained"] = c.retained;
    chart_list.push_back(std::move(j));
  }
  r.result["charts"] = std::move(chart_list);
  r.result["tree"] = tree ? json_tree(*tree) : ojson(nullptr);
  return r;
}

Rendered render_ideal(const RunRequest& request) {
  const LatticeConfig config =
      LatticeConfig::validate(parse_vector_text(request.input));
  const MonomialIdeal jacobian = log_jacobian(config);
  const std::vector<BinomialRelation> binomials =
      kernel_binomials(config, request.degree);

  Rendered r;
  std::ostringstream os;
  os << "input: dim " << config.dim() << ", "
     << format_vecs(config.vectors()) << "\n";
  os << "log jacobian: ";
  for (std::size_t i = 0; i < jacobian.monomials.size(); ++i) {
    if (i > 0) os << ", ";
    os << format_monomial(jacobian.monomials[i]);
  }
  os << "\n";
  os << "binomials (degree <= " << request.degree << "):";
  if (binomials.empty()) {
    os << " none\n";
  } else {
    os << "\n";
    for (const BinomialRelation& rel : binomials) {
      os << "  " << format_binomial(rel) << "\n";
    }
  }
  r.text = os.str();

  ojson monos = ojson::array();
  for (const auto& m : jacobian.monomials) monos.push_back(json_pivot(m));
  ojson rels = ojson::array();
  for (const BinomialRelation& rel : binomials) {
    ojson j;
    j["alpha"] = rel.alpha;
    j["beta"] = rel.beta;
    j["text"] = format_binomial(rel);
    rels.push_back(std::move(j));
  }
  r.result["log_jacobian"] = std::move(monos);
  r.result["degree_bound"] = request.degree;
  r.result["binomials"] = std::move(rels);
  return r;
}

struct LineVerdict {
  std::size_t line;
  std::string input_text;
  bool smooth = false;
  bool min_monotone = true;
  bool v_drop = true;
  bool fib_lower = true;
  bool qsum_eta = true;
  bool delta_le_eta = true;

  bool all_pass() const {
    return min_monotone && v_drop && fib_lower && qsum_eta && delta_le_eta;
  }
};

Rendered render_check(const RunRequest& request) {
  std::string content;
  if (request.batch_path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    content = buffer.str();
  } else {
    std::ifstream file(request.batch_path);
    if (!file) {
      fail(errc::bad_input,
           "cannot read batch file '" + request.batch_path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    content = buffer.str();
  }

  std::vector<LineVerdict> verdicts;
  std::istringstream lines(content);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(lines, line)) {
    ++line_number;
    std::string_view trimmed = line;
    while (!trimmed.empty() &&
           std::isspace(static_cast<unsigned char>(trimmed.front()))) {
      trimmed.remove_prefix(1);
    }
    while (!trimmed.empty() &&
           std::isspace(static_cast<unsigned char>(trimmed.back()))) {
      trimmed.remove_suffix(1);
    }
    if (trimmed.empty()) continue;

    LineVerdict v;
    v.line = line_number;
    try {
      const CurveGenerators a = make_curve(std::string(trimmed));
      v.input_text = format_set(a);
      if (a.contains_one()) {
        v.smooth = true;
      } else {
        const ResolutionTrace trace = resolve(a, request.cap);
        const DivisionSummary summary = division_summary(a, request.cap);
        for (std::size_t i = 1; i < trace.steps.size(); ++i) {
          if (trace.multiplicities[i] > trace.multiplicities[i - 1]) {
            v.min_monotone = false;
          }
        }
        v.v_drop = v_of(trace.steps[1]) <= v_of(a) - 2;
        v.fib_lower = check_fib_lower(a, summary.delta());
        v.qsum_eta = summary.q_sum() == Int(trace.eta());
        v.delta_le_eta = summary.delta() <= trace.eta();
      }
    } catch (const error& e) {
      fail(e.code(), "line " + std::to_string(line_number) + ": " + e.what());
    }
    verdicts.push_back(std::move(v));
  }

  std::size_t failures = 0;
  for (const LineVerdict& v : verdicts) {
    if (!v.smooth && !v.all_pass()) ++failures;
  }

  Rendered r;
  std::ostringstream os;
  auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
  for (const LineVerdict& v : verdicts) {
    os << "line " << v.line << ": " << v.input_text;
    if (v.smooth) {
      os << "  smooth\n";
      continue;
    }
    os << "  min_monotone " << flag(v.min_monotone) << "  v_drop "
       << flag(v.v_drop) << "  fib_lower " << flag(v.fib_lower)
       << "  qsum_eta " << flag(v.qsum_eta) << "  delta_le_eta "
       << flag(v.delta_le_eta) << "\n";
  }
  os << "checked " << verdicts.size() << " inputs, " << failures
     << " failures\n";
  r.text = os.str();

  ojson lines_json = ojson::array();
  for (const LineVerdict& v : verdicts) {
    ojson j;
    j["line"] = v.line;
    j["input"] = v.input_text;
    j["smooth"] = v.smooth;
    if (!v.smooth) {
      ojson checks;
      checks["min_monotone"] = v.min_monotone;
      checks["v_drop"] = v.v_drop;
      checks["fib_lower"] = v.fib_lower;
      checks["qsum_eta"] = v.qsum_eta;
      checks["delta_le_eta"] = v.delta_le_eta;
      j["verdicts"] = std::move(checks);
    }
    lines_json.push_back(std::move(j));
  }
  r.result["lines"] = std::move(lines_json);
  r.result["checked"] = verdicts.size();
  r.result["failures"] = failures;
  r.status = failures == 0 ? 0 : 4;
  return r;
}

int exit_code_for(errc code) {
  switch (code) {
    case errc::already_smooth:
      return 3;
    case errc::iteration_cap:
    case errc::singleton_input:
      return 4;
    default:
      return 2;
  }
}

ojson input_echo_curve(const std::string& text) {
  try {
    ojson arr = ojson::array();
    for (const Int& x : parse_curve_text(text)) arr.push_back(to_string(x));
    return arr;
  } catch (const error&) {
    return text;
  }
}

ojson input_echo_vectors(const std::string& text) {
  try {
    ojson arr = ojson::array();
    for (const Vec& v : parse_vector_text(text)) arr.push_back(json_vec(v));
    return arr;
  } catch (const error&) {
    return text;
  }
}

}  // namespace

std::vector<Int> parse_curve_text(const std::string& text) {
  std::vector<Int> values;
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) fail(errc::bad_input, "empty input");
  while (true) {
    values.push_back(parse_int_at(text, pos));
    skip_space(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      fail(errc::bad_input,
           std::string("expected ',' before '") + text[pos] + "'");
    }
    ++pos;
  }
  return values;
}

std::vector<Vec> parse_vector_text(const std::string& text) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) fail(errc::bad_input, "empty input");
  if (text[pos] != '(') {
    std::vector<Vec> out;
    for (Int& x : parse_curve_text(text)) out.push_back(Vec{std::move(x)});
    return out;
  }
  std::vector<Vec> out;
  while (true) {
    skip_space(text, pos);
    if (pos == text.size() || text[pos] != '(') {
      fail(errc::bad_input, "expected '('");
    }
    ++pos;
    Vec v;
    while (true) {
      v.push_back(parse_int_at(text, pos));
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail(errc::bad_input, "expected ',' or ')' in vector");
    }
    out.push_back(std::move(v));
    skip_space(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      fail(errc::bad_input, "expected ',' between vectors");
    }
    ++pos;
  }
  return out;
}

RunReport run(const RunRequest& request) {
  RunReport report;
  const char* name = "";
  ojson echo;
  try {
    Rendered rendered;
    switch (request.command) {
      case Command::resolve:
        name = "resolve";
        echo = input_echo_curve(request.input);
        rendered = render_resolve(request);
        break;
      case Command::summary:
        name = "summary";
        echo = input_echo_curve(request.input);
        rendered = render_summary(request);
        break;
      case Command::bounds:
        name = "bounds";
        echo = input_echo_curve(request.input);
        rendered = render_bounds(request);
        break;
      case Command::charts:
        name = "charts";
        echo = input_echo_vectors(request.input);
        rendered = render_charts(request);
        break;
      case Command::ideal:
        name = "ideal";
        echo = input_echo_vectors(request.input);
        rendered = render_ideal(request);
        break;
      case Command::check:
        name = "check";
        echo = request.batch_path;
        rendered = render_check(request);
        break;
    }
    report.exit_code = rendered.status;
    report.out = finish(request, name, echo, std::move(rendered));
  } catch (const error& e) {
    report.exit_code = exit_code_for(e.code());
    report.err = std::string("error[") + errc_name(e.code()) + "]: " +
                 e.what() + "\n";
  } catch (const std::exception& e) {
    report.exit_code = 4;
    report.err = std::string("error[Internal]: ") + e.what() + "\n";
  }
  return report;
}

}  // namespace nashtoric::cli
