#include "qappell/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qappell/error.hpp"
#include "qappell/hermite.hpp"
#include "qappell/render.hpp"

namespace qappell {

namespace {

struct GlobalOptions {
  std::size_t order = kDefaultOrder;
  OutputFormat format = OutputFormat::json;
};

FamilyKind family_from_name(const std::string& name) {
  auto kind = parse_family_kind(name);
  if (!kind) throw range_error("unknown family '" + name + "'");
  return *kind;
}

// Symbol used for A_{n,q}(x) in LaTeX output.
std::string poly_symbol(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::bernoulli:
      return "B";
    case FamilyKind::euler:
      return "E";
    case FamilyKind::genocchi:
      return "G";
    case FamilyKind::hermite:
      return "H";
  }
  return "A";
}

std::string number_symbol(FamilyKind kind, std::size_t n) {
  const std::string idx = "{" + std::to_string(n) + ",q}";
  switch (kind) {
    case FamilyKind::bernoulli:
      return "b_" + idx;
    case FamilyKind::genocchi:
      return "g_" + idx;
    default:
      return poly_symbol(kind) + "_" + idx + "(0)";
  }
}

void require_order(std::size_t needed, std::size_t order) {
  if (needed > order) {
    throw range_error("--order " + std::to_string(order) + " is too small; this request needs at least " +
                      std::to_string(needed));
  }
}

void cmd_numbers(const GlobalOptions& g, FamilyKind kind, int max_n, std::ostream& out) {
  const auto top = static_cast<std::size_t>(max_n);
  require_order(top, g.order);
  const auto numbers = family_numbers(make_family(kind, g.order), top);
  switch (g.format) {
    case OutputFormat::json: {
      Json j;
      j["family"] = to_string(kind);
      j["order"] = g.order;
      Json rows = Json::array();
      for (std::size_t n = 0; n <= top; ++n) rows.push_back(Json{{"n", n}, {"value", to_json(numbers[n])}});
      j["numbers"] = std::move(rows);
      out << dump(j);
      break;
    }
    case OutputFormat::csv:
      out << "n,value\n";
      for (std::size_t n = 0; n <= top; ++n) out << n << "," << csv_field(to_text(numbers[n])) << "\n";
      break;
    case OutputFormat::latex:
      for (std::size_t n = 0; n <= top; ++n) out << latex_display(number_symbol(kind, n), to_latex(numbers[n])) << "\n";
      break;
  }
}

void cmd_poly(const GlobalOptions& g, FamilyKind kind, int n, const std::optional<std::string>& at_q_text,
              const std::optional<std::string>& at_x_text, std::ostream& out) {
  const auto un = static_cast<std::size_t>(n);
  require_order(un, g.order);
  const std::optional<BigRational> at_q =
      at_q_text ? std::optional<BigRational>(parse_rational(*at_q_text)) : std::nullopt;
  const std::optional<BigRational> at_x =
      at_x_text ? std::optional<BigRational>(parse_rational(*at_x_text)) : std::nullopt;

  const XPoly p = appell_polynomial(make_family(kind, g.order), un);
  std::string lhs = poly_symbol(kind) + "_{" + std::to_string(n) + ",q}(" + (at_x ? to_string(*at_x) : "x") + ")";
  if (at_q) lhs += "\\big|_{q=" + to_string(*at_q) + "}";

  Json j;
  j["family"] = to_string(kind);
  j["n"] = n;
  if (at_q) j["at_q"] = to_string(*at_q);
  if (at_x) j["at_x"] = to_string(*at_x);
  std::string text;
  std::string latex;
  if (at_q && at_x) {
    const BigRational v = eval_q(p, *at_q).eval(*at_x);
    j["value"] = to_string(v);
    text = to_string(v);
    latex = to_latex(v);
  } else if (at_q) {
    const RationalPoly r = eval_q(p, *at_q);
    j["poly"] = to_json(r);
    text = to_text(to_xpoly(r));
    latex = to_latex(to_xpoly(r));
  } else if (at_x) {
    const QRat v = eval_x(p, QRat(*at_x));
    j["value"] = to_json(v);
    text = to_text(v);
    latex = to_latex(v);
  } else {
    j["poly"] = to_json(p);
    text = to_text(p);
    latex = to_latex(p);
  }

  switch (g.format) {
    case OutputFormat::json:
      out << dump(j);
      break;
    case OutputFormat::csv:
      out << "n,value\n" << n << "," << csv_field(text) << "\n";
      break;
    case OutputFormat::latex:
      out << latex_display(lhs, latex) << "\n";
      break;
  }
}

void cmd_alpha(const GlobalOptions& g, const std::optional<std::string>& family, int max_n, std::ostream& out) {
  std::vector<FamilyKind> kinds(kAllFamilies.begin(), kAllFamilies.end());
  if (family) kinds = {family_from_name(*family)};
  std::vector<std::pair<FamilyKind, std::vector<QRat>>> tables;
  for (FamilyKind k : kinds) {
    tables.emplace_back(k, alpha_coefficients(make_family(k, g.order), static_cast<std::size_t>(max_n)));
  }
  switch (g.format) {
    case OutputFormat::json: {
      Json j;
      j["order"] = g.order;
      Json rows = Json::array();
      for (const auto& [k, alpha] : tables) {
        Json coeffs = Json::array();
        for (const auto& a : alpha) coeffs.push_back(to_json(a));
        rows.push_back(Json{{"family", to_string(k)}, {"coefficients", std::move(coeffs)}});
      }
      j["alpha"] = std::move(rows);
      out << dump(j);
      break;
    }
    case OutputFormat::csv:
      out << "family,n,value\n";
      for (const auto& [k, alpha] : tables) {
        for (std::size_t n = 0; n < alpha.size(); ++n) {
          out << to_string(k) << "," << n << "," << csv_field(to_text(alpha[n])) << "\n";
        }
      }
      break;
    case OutputFormat::latex:
      for (const auto& [k, alpha] : tables) {
        for (std::size_t n = 0; n < alpha.size(); ++n) {
          const std::string lhs = "\\alpha_{" + std::to_string(n) + "}^{(" + poly_symbol(k) + ")}";
          out << latex_display(lhs, to_latex(alpha[n])) << "\n";
        }
      }
      break;
  }
}

int cmd_verify(const GlobalOptions& g, const std::string& scope, int max_n, std::ostream& out, std::ostream& err) {
  const VerificationSuite suite = run_verification(scope, max_n, g.order);
  switch (g.format) {
    case OutputFormat::json: {
      Json j;
      Json hard = Json::array();
      for (const auto& r : suite.hard) hard.push_back(to_json(r));
      Json desc = Json::array();
      for (const auto& d : suite.descriptive) desc.push_back(to_json(d));
      j["verification"] = std::move(hard);
      j["discrepancies"] = std::move(desc);
      j["passed"] = suite.passed;
      out << dump(j);
      break;
    }
    case OutputFormat::csv:
      out << "check,family,n,status\n";
      for (const auto& r : suite.hard) {
        out << r.theorem << "," << r.family << "," << (r.first_failure ? *r.first_failure : r.n_last) << ","
            << (r.passed ? "passed" : "failed") << "\n";
      }
      for (const auto& d : suite.descriptive) {
        out << d.claim << ",," << (d.counterexample_n ? std::to_string(*d.counterexample_n) : "") << ","
            << to_string(d.status) << "\n";
      }
      break;
    case OutputFormat::latex:
      for (const auto& r : suite.hard) {
        const std::string lhs = "\\text{" + r.theorem + "}_{\\text{" + r.family + "}}";
        const std::string rhs = r.passed ? "\\text{passed}"
                                         : "\\text{failed at } n = " + std::to_string(*r.first_failure);
        out << latex_display(lhs, rhs) << "\n";
      }
      for (const auto& d : suite.descriptive) {
        std::string rhs = "\\text{" + std::string(to_string(d.status)) + "}";
        if (d.counterexample_n) rhs += ",\\ n = " + std::to_string(*d.counterexample_n);
        out << latex_display("\\text{" + d.claim + "}", rhs) << "\n";
      }
      break;
  }
  for (const auto& r : suite.hard) {
    if (!r.passed) {
      err << "FAIL " << r.theorem << " [" << r.family << "]: smallest failing n = " << *r.first_failure << "\n";
    }
  }
  return suite.passed ? 0 : 1;
}

void add_printed(VerificationSuite& s, PrintedTheorem t, int max_n) {
  s.descriptive.push_back(verify_printed_theorem(family_of(t), t, 2, max_n));
}

}  // namespace

const std::vector<std::string>& verification_scopes() {
  static const std::vector<std::string> scopes{"all", "a1", "a2", "b1",       "b2",       "e1",
                                               "e2",  "g1", "g2", "h0",       "h1",       "h2",
                                               "lowering",    "euler-relation"};
  return scopes;
}

VerificationSuite run_verification(std::string_view scope, int max_n, std::size_t order) {
  const auto& scopes = verification_scopes();
  if (std::find(scopes.begin(), scopes.end(), scope) == scopes.end()) {
    throw range_error("unknown verification scope '" + std::string(scope) + "'");
  }
  if (max_n < 1) throw range_error("--max-n must be at least 1");
  const bool all = scope == "all";
  auto wants = [&](std::string_view s) { return all || scope == s; };
  VerificationSuite suite;

  if (wants("a1") || wants("a2") || wants("lowering")) {
    require_order(static_cast<std::size_t>(max_n) + 1, order);
    for (FamilyKind k : kAllFamilies) {
      const AppellFamily fam = make_family(k, order);
      if (wants("a1")) suite.hard.push_back(verify_recurrence_a1(fam, 1, max_n));
      if (wants("a2")) suite.hard.push_back(verify_difference_a2(fam, 1, max_n));
      if (wants("lowering")) suite.hard.push_back(verify_lowering_all(fam, max_n));
    }
  }
  if (wants("h0")) {
    suite.hard.push_back(verify_hermite_cross_construction(max_n));
    suite.descriptive.push_back(check_h0_normalization(max_n));
  }
  if (wants("h1")) {
    suite.hard.push_back(max_n >= 2 ? verify_hermite_recurrence(2, max_n)
                                    : VerificationReport::from_residuals("h1", "hermite", 2, {}));
  }
  if (wants("h2")) {
    suite.hard.push_back(verify_hermite_difference(1, max_n));
    suite.hard.push_back(verify_hermite_generator_ratio(std::max(max_n, 2)));
  }
  if (wants("b1")) add_printed(suite, PrintedTheorem::b1, max_n);
  if (wants("b2")) add_printed(suite, PrintedTheorem::b2, max_n);
  if (wants("e1")) {
    add_printed(suite, PrintedTheorem::e1_number, max_n);
    add_printed(suite, PrintedTheorem::e1_polynomial, max_n);
    add_printed(suite, PrintedTheorem::e1_at_zero, max_n);
  }
  if (wants("e2")) {
    add_printed(suite, PrintedTheorem::e2_number, max_n);
    add_printed(suite, PrintedTheorem::e2_at_zero, max_n);
  }
  if (wants("g1")) add_printed(suite, PrintedTheorem::g1, max_n);
  if (wants("g2")) add_printed(suite, PrintedTheorem::g2, max_n);
  if (wants("euler-relation")) suite.descriptive.push_back(verify_euler_number_relation(max_n));

  for (const auto& r : suite.hard) suite.passed = suite.passed && r.passed;
  return suite;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-Appell polynomial tables and identity checks", "qappell"};
  app.require_subcommand(1);

  GlobalOptions g;
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"latex", OutputFormat::latex}};
  app.add_option("--order", g.order, "Series truncation order")->check(CLI::Range(2, 4096));
  app.add_option("--format", g.format, "Output format")->transform(CLI::CheckedTransformer(formats));

  std::vector<std::string> family_names;
  for (FamilyKind k : kAllFamilies) family_names.emplace_back(to_string(k));

  std::string family;
  int max_n = 0;
  int n = 0;
  std::optional<std::string> at_q;
  std::optional<std::string> at_x;
  std::optional<std::string> alpha_family;
  std::string scope = "all";

  auto* numbers = app.add_subcommand("numbers", "Table of A_{n,q}(0) for n = 0..max-n")->fallthrough();
  numbers->add_option("--family", family)->required()->check(CLI::IsMember(family_names));
  numbers->add_option("--max-n", max_n)->required()->check(CLI::NonNegativeNumber);

  auto* poly = app.add_subcommand("poly", "The polynomial A_{n,q}(x), optionally evaluated")->fallthrough();
  poly->add_option("--family", family)->required()->check(CLI::IsMember(family_names));
  poly->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--at-q", at_q, "Rational value substituted for q");
  poly->add_option("--at-x", at_x, "Rational value substituted for x");

  auto* verify = app.add_subcommand("verify", "Symbolic identity checks")->fallthrough();
  verify->add_option("--scope", scope)->check(CLI::IsMember(verification_scopes()));
  max_n = 12;
  verify->add_option("--max-n", max_n)->check(CLI::PositiveNumber);

  auto* alpha = app.add_subcommand("alpha", "Alpha coefficients of the recurrence")->fallthrough();
  alpha->add_option("--family", alpha_family)->check(CLI::IsMember(family_names));
  alpha->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  // verify defaults to 12, alpha to 8, unless given.
  if (alpha->parsed() && alpha->count("--max-n") == 0) max_n = 8;

  try {
    if (numbers->parsed()) {
      cmd_numbers(g, family_from_name(family), max_n, out);
    } else if (poly->parsed()) {
      cmd_poly(g, family_from_name(family), n, at_q, at_x, out);
    } else if (alpha->parsed()) {
      cmd_alpha(g, alpha_family, max_n, out);
    } else if (verify->parsed()) {
      return cmd_verify(g, scope, max_n, out, err);
    }
  } catch (const pole_error& e) {
    err << "pole: " << e.what() << "; denominator " << e.denominator() << "\n";
    return 3;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace qappell
