#include "yang/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "yang/errors.hpp"
#include "yang/free_algebra.hpp"
#include "yang/kac_moody.hpp"
#include "yang/parse.hpp"
#include "yang/sym_poly.hpp"
#include "yang/verifier.hpp"
#include "yang/yangian_rep.hpp"

namespace yang::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Raised for invalid parameter combinations that CLI11 cannot see.
struct UsageError : Error {
  using Error::Error;
};

enum class Output { text, json };

void check_component(unsigned v, unsigned w) {
  if (v > w) throw UsageError("need 0 <= v <= w (got v=" + std::to_string(v) + ", w=" + std::to_string(w) + ")");
}

// ---------------------------------------------------------------------------
// apply

struct ApplyArgs {
  std::string op;
  unsigned r = 0;
  unsigned w = 0;
  unsigned v = 0;
  std::string f;
};

int do_apply(const ApplyArgs& a, Output mode, std::ostream& out) {
  check_component(a.v, a.w);
  const Poly f = parse_poly(a.f, a.w);
  if (!sym::is_bisymmetric(f, a.v, a.w))
    throw UsageError("f = " + f.to_string() + " is not symmetric in each block for v=" + std::to_string(a.v));
  const rep::ModuleElement e(a.w, static_cast<int>(a.v), f);

  rep::ModuleElement result = e;
  if (a.op == "x+")
    result = rep::x_plus(a.r, e);
  else if (a.op == "x-")
    result = rep::x_minus(a.r, e);
  else
    result = rep::h_op(a.r, e);

  ordered_json j;
  j["op"] = a.op;
  j["r"] = a.r;
  j["w"] = a.w;
  j["v_in"] = a.v;
  j["v_out"] = result.in_range() ? result.v() : -1;
  j["result"] = result.poly().to_string();
  if (mode == Output::text) {
    if (result.in_range())
      out << "component " << result.v() << ": " << result.poly().to_string() << '\n';
    else
      out << "zero (no component)\n";
  }
  out << j.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  unsigned w = 0;
  unsigned D = 2;
  unsigned R = 2;
  std::vector<std::string> relations{"1.1", "1.2", "1.3", "1.4"};
};

int do_verify(const VerifyArgs& a, Output mode, std::ostream& out) {
  for (const auto& id : a.relations)
    if (id != "1.1" && id != "1.2" && id != "1.3" && id != "1.4")
      throw UsageError("unknown relation '" + id + "' (expected 1.1, 1.2, 1.3 or 1.4)");
  bool all = true;
  ordered_json reports = ordered_json::array();
  for (const auto& id : a.relations) {
    const auto report = verify::verify_relation(id, a.w, a.D, a.R);
    all = all && report.passed();
    if (mode == Output::text) {
      out << "relation " << id << " w=" << a.w << " D=" << a.D << " R=" << a.R << ": "
          << (report.passed() ? "PASS" : "FAIL") << " (" << report.cases_checked << " cases, "
          << report.failures.size() << " failures, " << report.elapsed_ms << " ms)\n";
      for (const auto& f : report.failures)
        out << "  v=" << f.v << " basis=" << f.basis << " r=" << f.r << " s=" << f.s << " [" << f.kind
            << "] residual " << f.residual << '\n';
    }
    reports.push_back(ordered_json::parse(report.to_json()));
  }
  out << reports.dump() << '\n';
  return all ? kOk : kFailures;
}

// ---------------------------------------------------------------------------
// cartan-series

int do_cartan_series(unsigned w, unsigned v, unsigned N, Output mode, std::ostream& out) {
  check_component(v, w);
  const auto s = rep::cartan_series(v, w, N);
  ordered_json j;
  j["w"] = w;
  j["v"] = v;
  j["kappa"] = ordered_json::array();
  for (unsigned r = 0; r <= N; ++r) {
    j["kappa"].push_back(s.kappa[r].to_string());
    if (mode == Output::text) out << "kappa_" << r << " = " << s.kappa[r].to_string() << '\n';
  }
  if (mode == Output::json) out << j.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// eta-compare

struct EtaArgs {
  int a = -1;
  unsigned R = 4;
  unsigned pad = 2;
  std::string expect;
};

int do_eta_compare(const EtaArgs& a, Output mode, std::ostream& out) {
  if (a.a > 0) throw UsageError("--a must be a nonpositive off-diagonal cartan entry");
  using fa::Sign;
  const auto q_plus = fa::quadratic_relation_family(a.a, Sign::plus, a.R);
  const auto q_minus = fa::quadratic_relation_family(a.a, Sign::minus, a.R);
  const auto e_plus = fa::eta_relation_family(a.a, Sign::plus, a.R);
  const auto e_minus = fa::eta_relation_family(a.a, Sign::minus, a.R);

  struct Row {
    std::string first, second;
    fa::SpanComparison cmp;
  };
  std::vector<Row> rows;
  rows.push_back({"quadratic(+,-)", "eta(+,-)",
                  fa::relation_span_compare(fa::join(q_plus, q_minus), fa::join(e_plus, e_minus), a.pad)});
  rows.push_back({"quadratic(+)", "eta(+)", fa::relation_span_compare(q_plus, e_plus, a.pad)});
  rows.push_back({"quadratic(+)", "eta(-)", fa::relation_span_compare(q_plus, e_minus, a.pad)});
  rows.push_back({"quadratic(-)", "eta(-)", fa::relation_span_compare(q_minus, e_minus, a.pad)});
  rows.push_back({"quadratic(-)", "eta(+)", fa::relation_span_compare(q_minus, e_plus, a.pad)});
  if (a.a == 0)
    rows.push_back({"eta(+,-)", "serre(m=1)",
                    fa::relation_span_compare(fa::join(e_plus, e_minus), fa::commutator_family(a.R), a.pad)});

  ordered_json j;
  j["a"] = a.a;
  j["max_r"] = a.R;
  j["pad"] = a.pad;
  j["comparisons"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json c;
    c["first"] = row.first;
    c["second"] = row.second;
    c["verdict"] = fa::to_string(row.cmp.verdict);
    c["rank_first"] = row.cmp.rank_first;
    c["rank_second"] = row.cmp.rank_second;
    c["witness"] = row.cmp.witness ? row.cmp.witness->to_string() : "";
    j["comparisons"].push_back(std::move(c));
    if (mode == Output::text) {
      out << row.first << " vs " << row.second << ": " << fa::to_string(row.cmp.verdict) << " (ranks "
          << row.cmp.rank_first << ", " << row.cmp.rank_second << ")\n";
      if (row.cmp.witness)
        out << "  witness from family " << row.cmp.witness_family << ": " << row.cmp.witness->to_string() << '\n';
    }
  }
  if (mode == Output::json) out << j.dump() << '\n';
  if (!a.expect.empty() && fa::to_string(rows.front().cmp.verdict) != a.expect) return kFailures;
  return kOk;
}

// ---------------------------------------------------------------------------
// hilbert

int do_hilbert(unsigned v, unsigned w, unsigned D, Output mode, std::ostream& out) {
  check_component(v, w);
  const auto coeffs = sym::hilbert_coefficients(v, w, D);
  const auto basis = sym::basis_up_to_degree(v, w, D);
  if (mode == Output::text) {
    out << "hilbert coefficients:";
    for (auto c : coeffs) out << ' ' << c;
    out << "\nbasis size: " << basis.size() << '\n';
    for (const auto& [idx, f] : basis) out << "  " << idx.to_json(v, w) << "  " << f.poly().to_string() << '\n';
    return kOk;
  }
  ordered_json j;
  j["v"] = v;
  j["w"] = w;
  j["D"] = D;
  j["coefficients"] = coeffs;
  j["basis"] = ordered_json::array();
  for (const auto& [idx, f] : basis) {
    ordered_json b = ordered_json::parse(idx.to_json(v, w));
    b["poly"] = f.poly().to_string();
    j["basis"].push_back(std::move(b));
  }
  out << j.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// cartan-matrix

int do_cartan_matrix(const std::string& path, Output mode, std::ostream& out) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const auto c = km::cartan_matrix(km::Graph::parse_edge_list(text));
  if (mode == Output::text) out << c.to_rows();
  out << c.to_json() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polynomial model of the sl2 Yangian and relation checks", "yang"};
  app.require_subcommand(1);
  std::string output = "text";
  app.add_option("--output", output, "Output mode")->check(CLI::IsMember({"text", "json"}));

  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "Apply x+, x- or h to a bisymmetric polynomial");
  apply->add_option("--op", apply_args.op, "Operator")->required()->check(CLI::IsMember({"x+", "x-", "h"}));
  apply->add_option("--r", apply_args.r, "Operator index r >= 0")->required();
  apply->add_option("--w", apply_args.w, "Framing w >= 0")->required();
  apply->add_option("--v", apply_args.v, "Component 0 <= v <= w")->required();
  apply->add_option("--f", apply_args.f, "Polynomial in h, t1..tw")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check relations 1.1-1.4 on M(w)");
  verify->add_option("--w", verify_args.w, "Framing w")->required();
  verify->add_option("--max-deg", verify_args.D, "Basis degree bound D");
  verify->add_option("--max-r", verify_args.R, "Index bound R");
  verify->add_option("--relations", verify_args.relations, "Comma-separated relation ids")->delimiter(',');

  unsigned cs_w = 0, cs_v = 0, cs_n = 4;
  auto* series = app.add_subcommand("cartan-series", "Print kappa_0..kappa_N for a component");
  series->add_option("--w", cs_w, "Framing w")->required();
  series->add_option("--v", cs_v, "Component v")->required();
  series->add_option("--N", cs_n, "Last index N");

  EtaArgs eta_args;
  auto* eta = app.add_subcommand("eta-compare", "Compare the eta-form and quadratic relation spans");
  eta->add_option("--a", eta_args.a, "Off-diagonal cartan entry a_kl <= 0")->required();
  eta->add_option("--max-r", eta_args.R, "Largest generator index");
  eta->add_option("--pad", eta_args.pad, "h-padding of the spans");
  eta->add_option("--expect", eta_args.expect, "Exit 1 unless the main verdict matches")
      ->check(CLI::IsMember({"equal", "first_in_second", "second_in_first", "incomparable"}));

  unsigned hb_v = 0, hb_w = 0, hb_d = 3;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert coefficients and basis of a component");
  hilbert->add_option("--w", hb_w, "Framing w")->required();
  hilbert->add_option("--v", hb_v, "Component v")->required();
  hilbert->add_option("--max-deg", hb_d, "Degree bound D");

  std::string graph_path;
  auto* cartan = app.add_subcommand("cartan-matrix", "Cartan matrix of an edge-list graph");
  cartan->add_option("--graph", graph_path, "Edge list file ('-' or omitted: stdin)");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Output mode = output == "json" ? Output::json : Output::text;
  try {
    if (*apply) return do_apply(apply_args, mode, out);
    if (*verify) return do_verify(verify_args, mode, out);
    if (*series) return do_cartan_series(cs_w, cs_v, cs_n, mode, out);
    if (*eta) return do_eta_compare(eta_args, mode, out);
    if (*hilbert) return do_hilbert(hb_v, hb_w, hb_d, mode, out);
    if (*cartan) return do_cartan_matrix(graph_path, mode, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownVariable& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailures;
  }
  return kUsage;
}

}  // namespace yang::cli
