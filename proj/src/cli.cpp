#include "figeight/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "figeight/cfrac.hpp"
#include "figeight/classification.hpp"
#include "figeight/json.hpp"
#include "figeight/surgery_enum.hpp"
#include "figeight/tight_counts.hpp"
#include "figeight/torus_dynamics.hpp"

namespace figeight {

namespace {

Rational finite(const Slope& s, const char* what) {
  if (s.is_infinite()) throw std::invalid_argument(std::string(what) + " must be finite");
  return s.value();
}

std::string join(const std::vector<Slope>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += ' ';
    out += s.str();
  }
  return out;
}

std::string framing_line(const KirbyStage& st) {
  std::ostringstream os;
  os << st.label << ':';
  for (std::size_t i = 0; i < st.link.names.size(); ++i) {
    os << ' ' << st.link.names[i] << '=' << to_string(st.link.framings[i]);
  }
  if (st.link.names.empty()) os << " (empty)";
  if (st.h1_order != 0) os << "  |H1|=" << st.h1_order;
  return os.str();
}

void print_structures(std::ostream& out, const ClassificationResult& res) {
  out << "M(" << res.coefficient.str() << "): " << to_string(res.geometry) << ", "
      << res.count.str() << '\n';
  for (const auto& c : res.structures) {
    std::string ev;
    for (const auto& e : c.certificate.evaluations) ev += (ev.empty() ? "" : ",") + to_string(e);
    out << std::left << std::setw(15) << to_string(c.family()) << " (" << ev << ")"
        << "  scale=" << c.certificate.scale << "  stein=" << to_string(c.stein)
        << "  strong=" << (c.strong ? "Yes" : "No")
        << "  universally_tight=" << to_string(c.universally_tight) << '\n';
  }
}

struct TableRow {
  std::string coefficient, geometry, count, ut, stein;
};

TableRow table_row(const Slope& r) {
  const auto res = classify(r);
  TableRow row{r.str(), to_string(res.geometry), res.count.str(), "-", "-"};
  if (res.structures.empty()) return row;
  int yes = 0, candidates = 0, stein = 0;
  for (const auto& c : res.structures) {
    yes += c.universally_tight == Tightness::yes;
    candidates += c.universally_tight == Tightness::candidate_pair;
    stein += c.stein == Stein::yes;
  }
  row.ut = candidates ? std::to_string(yes) + "+" + std::to_string(candidates) + "?"
                      : std::to_string(yes);
  row.stein = stein == static_cast<int>(res.structures.size()) ? "all"
                                                                : std::to_string(stein) + "/" +
                                                                      std::to_string(res.structures.size());
  return row;
}

std::vector<Slope> table_coefficients(const Rational& from, const Rational& to,
                                      const std::string& denominator, bool reciprocal) {
  if (from > to) throw std::invalid_argument("empty range: --from exceeds --to");
  std::vector<Slope> out;
  if (reciprocal) {
    if (!is_integer(from) || !is_integer(to) || from < 1) {
      throw std::invalid_argument("--reciprocal needs positive integer bounds");
    }
    for (Integer n = num(from); n <= num(to); ++n) out.emplace_back(Integer(-1), n);
    return out;
  }
  Integer max_den = 1;
  if (!denominator.empty()) {
    const Rational d = parse_rational(denominator);
    if (!is_integer(d) || d < 1) throw std::invalid_argument("--denominator must be a positive integer");
    max_den = num(d);
  }
  // every reduced p/q in [from, to] with q <= max_den, increasing
  std::vector<Rational> values;
  for (Integer q = 1; q <= max_den; ++q) {
    for (Integer p = ceil(from * q); Rational(p, q) <= to; ++p) {
      if (boost::multiprecision::gcd(abs(p), q) == 1) values.emplace_back(p, q);
    }
  }
  std::sort(values.begin(), values.end());
  for (const auto& v : values) out.emplace_back(v);
  if (out.empty()) throw std::invalid_argument("empty range");
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight contact structures on surgeries on the figure-eight knot", "figeight"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string r_arg, s_arg, arc_arg, form_arg = "std", meridian, dividing, from, to, denominator,
                                     bound;
  bool json = false, back = false, sequences = false, reciprocal = false;

  auto* count = app.add_subcommand("count", "Number of tight contact structures on M(r)");
  count->add_option("r", r_arg, "surgery coefficient")->required();
  count->add_flag("--json", json, "print the classification record");

  auto* enumerate = app.add_subcommand("enumerate", "List the tight contact structures on M(r)");
  enumerate->add_option("r", r_arg, "surgery coefficient")->required();
  enumerate->add_flag("--json", json, "machine-readable output");

  auto* phi_cmd = app.add_subcommand("phi", "Evaluate Φ(r)");
  phi_cmd->add_option("r", r_arg)->required();
  auto* psi_cmd = app.add_subcommand("psi", "Evaluate Ψ(r)");
  psi_cmd->add_option("r", r_arg)->required();

  auto* cfrac = app.add_subcommand("cfrac", "Negative continued fraction of x");
  cfrac->add_option("x", r_arg)->required();
  cfrac->add_option("--form", form_arg, "std or st")->check(CLI::IsMember({"std", "st"}));

  auto* bypass = app.add_subcommand("bypass-step", "Dividing slope after one bypass");
  bypass->add_option("s", s_arg, "current slope")->required();
  bypass->add_option("arc", arc_arg, "slope of the attaching arc")->required();
  bypass->add_flag("--back", back, "attach from the back");

  auto* thicken = app.add_subcommand("thicken", "Thickening path from slope s");
  thicken->add_option("s", s_arg)->required();
  thicken->add_flag("--json", json);

  auto* window = app.add_subcommand("window", "Boundary slopes clockwise of r up to inf");
  window->add_option("r", r_arg)->required();
  window->add_option("--bound", bound, "denominator bound")->required();

  auto* solid = app.add_subcommand("solid-torus", "Tight structures on a solid torus");
  solid->add_option("--meridian", meridian)->required();
  solid->add_option("--dividing", dividing)->required();
  solid->add_flag("--sequences", sequences, "also list the canonical sign sequences");

  auto* framing = app.add_subcommand("check-framing", "Kirby moves for the positive-surgery diagram");
  framing->add_option("r", r_arg)->required();

  auto* table = app.add_subcommand("table", "Classification table over a range");
  table->add_option("--from", from)->required();
  table->add_option("--to", to)->required();
  table->add_option("--denominator", denominator, "include fractions up to this denominator");
  table->add_flag("--reciprocal", reciprocal, "rows -1/n for n in the range");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      const Slope r = Slope::parse(r_arg);
      finite(r, "r");
      if (json) {
        out << to_json(classify(r)).dump(2) << '\n';
      } else {
        out << tight_count(r).str() << '\n';
      }
    } else if (enumerate->parsed()) {
      const Slope r = Slope::parse(r_arg);
      finite(r, "r");
      if (!in_classified_range(r)) {
        throw std::domain_error("enumerate needs r in the classified range, got " + r.str());
      }
      const auto res = classify(r);
      if (json) {
        out << to_json(res).dump(2) << '\n';
      } else {
        print_structures(out, res);
      }
    } else if (phi_cmd->parsed()) {
      out << phi(finite(Slope::parse(r_arg), "r")).value << '\n';
    } else if (psi_cmd->parsed()) {
      out << psi(finite(Slope::parse(r_arg), "r")).value << '\n';
    } else if (cfrac->parsed()) {
      const auto form = form_arg == "st" ? CfracForm::solid_torus : CfracForm::standard;
      out << neg_cfrac(parse_rational(r_arg), form).str() << '\n';
    } else if (bypass->parsed()) {
      const BypassMove move{back ? AttachSide::back : AttachSide::front, Slope::parse(arc_arg)};
      out << bypass_step(Slope::parse(s_arg), move).str() << '\n';
    } else if (thicken->parsed()) {
      const auto path = thicken_path(Slope::parse(s_arg));
      if (json) {
        out << to_json(path).dump(2) << '\n';
      } else {
        out << join(path.slopes) << '\n'
            << "reached_minus_three=" << (path.reached_minus_three ? "true" : "false")
            << " reached_infinity=" << (path.reached_infinity ? "true" : "false") << '\n';
      }
    } else if (window->parsed()) {
      const Rational b = parse_rational(bound);
      if (!is_integer(b) || b < 1) throw std::invalid_argument("--bound must be a positive integer");
      out << join(slopes_in_window({Slope::parse(r_arg), num(b)})) << '\n';
    } else if (solid->parsed()) {
      const SolidTorusSpec spec(Slope::parse(meridian), Slope::parse(dividing));
      out << "count " << solid_torus_count(spec) << '\n'
          << "normalization " << spec.normalization() << " k=" << spec.k() << '\n'
          << "normalized dividing " << spec.normalized_dividing() << '\n'
          << "expansion " << solid_torus_expansion(spec).str() << '\n';
      if (sequences) {
        for (const auto& s : enumerate_sign_sequences(solid_torus_chain(spec))) {
          out << (s.positive.empty() ? "(empty)" : s.str()) << '\n';
        }
      }
    } else if (framing->parsed()) {
      const Rational r = finite(Slope::parse(r_arg), "r");
      for (const auto& st : smooth_framing_trace(r)) out << framing_line(st) << '\n';
      const bool ok = smooth_framing_check(r);
      out << (ok ? "ok" : "mismatch") << '\n';
      if (!ok) return kExitDomain;
    } else if (table->parsed()) {
      const auto rows = table_coefficients(parse_rational(from), parse_rational(to), denominator,
                                           reciprocal);
      out << std::left << std::setw(10) << "r" << std::setw(14) << "geometry" << std::setw(22)
          << "count" << std::setw(8) << "ut" << "stein" << '\n';
      for (const auto& r : rows) {
        const auto row = table_row(r);
        out << std::setw(10) << row.coefficient << std::setw(14) << row.geometry << std::setw(22)
            << row.count << std::setw(8) << row.ut << row.stein << '\n';
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "figeight: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "figeight: domain error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace figeight
