#include "figeight/classification.hpp"

#include <stdexcept>

#include "figeight/cfrac.hpp"

namespace figeight {

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::toroidal: return "Toroidal";
    case Geometry::small_seifert: return "SmallSeifert";
    case Geometry::hyperbolic: return "Hyperbolic";
  }
  return "?";
}

Geometry geometry_of(const Slope& r) {
  const Rational v = r.value();
  if (v == 0 || v == 4 || v == -4) return Geometry::toroidal;
  if (is_integer(v) && abs(num(v)) <= 3) return Geometry::small_seifert;
  return Geometry::hyperbolic;
}

bool in_classified_range(const Slope& r) {
  if (r.is_infinite()) return false;
  const Rational v = r.value();
  return v < -4 || (v >= -3 && v < 0) || (v >= 1 && v < 4) || v >= 5;
}

std::string to_string(TightCount::Kind k) {
  switch (k) {
    case TightCount::Kind::finite: return "Finite";
    case TightCount::Kind::infinite: return "Infinite";
    case TightCount::Kind::lower_bound: return "LowerBound";
  }
  return "?";
}

std::string TightCount::str() const {
  switch (kind) {
    case Kind::finite: return "finite " + value.str();
    case Kind::infinite: return "infinite (toroidal)";
    case Kind::lower_bound: return "lower-bound " + value.str();
  }
  return "?";
}

TightCount tight_count(const Slope& r) {
  if (geometry_of(r) == Geometry::toroidal) return {TightCount::Kind::infinite, 0};
  const Rational v = r.value();
  const Integer value = v > 0 ? Integer(2 * phi(v).value) : Integer(phi(v).value + psi(v).value);
  return {in_classified_range(r) ? TightCount::Kind::finite : TightCount::Kind::lower_bound,
          value};
}

std::string to_string(Stein s) { return s == Stein::yes ? "Yes" : "Unknown"; }

std::string to_string(Tightness t) {
  switch (t) {
    case Tightness::yes: return "Yes";
    case Tightness::no: return "No";
    case Tightness::candidate_pair: return "CandidatePair";
  }
  return "?";
}

namespace {

std::vector<Integer> budgets_of(const LegendrianChain& chain) {
  std::vector<Integer> out;
  for (const auto& c : chain.components) out.push_back(c.budget);
  return out;
}

bool extremal(const std::vector<Integer>& ups, const std::vector<Integer>& budgets,
              std::size_t count) {
  bool all_up = true, all_down = true;
  for (std::size_t i = 0; i < count; ++i) {
    if (budgets[i] == 0) continue;
    all_up = all_up && ups[i] == budgets[i];
    all_down = all_down && ups[i] == 0;
  }
  return all_up || all_down;
}

ContactStructureCert make_cert(Family family, const StabilizationTuple& t, const Integer& scale,
                               const LegendrianChain& chain, const Rational& r) {
  return {chern_certificate(family, t, scale), r, Stein::yes, true, Tightness::no, t.ups,
          budgets_of(chain)};
}

void tag(std::vector<ContactStructureCert>& certs, const Slope& r) {
  for (auto& c : certs) {
    c.stein = c.family() == Family::psi_std || c.coefficient >= -9 ? Stein::yes : Stein::unknown;
    c.strong = true;
    c.universally_tight = universal_tightness_tag(c, r);
  }
}

void append_positive(std::vector<ContactStructureCert>& out, const Rational& r) {
  const auto lp_chain = ding_geiges(-2, positive_diagram_trefoil());
  const auto lp_tuples = stabilization_tuples(lp_chain);
  LegendrianChain l_chain{{}, 0};
  std::vector<StabilizationTuple> l_tuples{{}};
  if (r != 1) {
    l_chain = ding_geiges(Rational(1) / (1 - r), positive_diagram_unknot());
    l_tuples = stabilization_tuples(l_chain);
  }
  LegendrianChain both = l_chain;
  both.components.push_back(lp_chain.components.front());
  for (const auto& lt : l_tuples) {
    for (const auto& pt : lp_tuples) {
      StabilizationTuple t = lt;
      t.rots.insert(t.rots.end(), pt.rots.begin(), pt.rots.end());
      t.ups.insert(t.ups.end(), pt.ups.begin(), pt.ups.end());
      out.push_back(make_cert(Family::positive_r, t, 1, both, r));
    }
  }
}

void append_negative(std::vector<ContactStructureCert>& out, const Rational& r) {
  if (r < -3) {
    const auto chain = ding_geiges(r + 3, figure_eight_base());
    for (const auto& t : stabilization_tuples(chain)) {
      out.push_back(make_cert(Family::psi_std, t, 1, chain, r));
    }
  }
  if (is_integer(r)) {
    out.push_back(make_cert(Family::phi_overtwisted, {{0}, {}}, abs(num(r)), {{}, r}, r));
    return;
  }
  const Integer n = floor(r);
  const auto chain = phi_family_chain(r, n);
  for (const auto& t : stabilization_tuples(chain)) {
    out.push_back(make_cert(Family::phi_overtwisted, t, abs(n), chain, r));
  }
}

}  // namespace

std::vector<ContactStructureCert> construct_structures(const Slope& r) {
  if (r.is_infinite()) throw std::domain_error("M(inf) is not a surgery of interest");
  const Rational v = r.value();
  if ((v >= 0 && v < 1) || v == -4) {
    throw std::domain_error("no construction available for M(" + r.str() + ")");
  }
  std::vector<ContactStructureCert> out;
  if (v >= 1) {
    append_positive(out, v);
  } else {
    append_negative(out, v);
  }
  tag(out, r);
  return out;
}

std::vector<ContactStructureCert> enumerate_structures(const Slope& r) {
  if (!in_classified_range(r)) {
    throw std::domain_error("r = " + r.str() + " lies outside the classified range");
  }
  return construct_structures(r);
}

ContactStructureCert involution(const ContactStructureCert& c) {
  ContactStructureCert out = c;
  for (auto& e : out.certificate.evaluations) e = -e;
  for (std::size_t i = 0; i < out.ups.size(); ++i) out.ups[i] = out.budgets[i] - out.ups[i];
  return out;
}

Tightness universal_tightness_tag(const ContactStructureCert& c, const Slope& r) {
  if (c.family() == Family::psi_std) return Tightness::no;
  // For PositiveR only the L chain must be uniform; the L′ sign is free.
  const std::size_t chain_size =
      c.family() == Family::positive_r ? c.ups.size() - 1 : c.ups.size();
  if (!extremal(c.ups, c.budgets, chain_size)) return Tightness::no;
  if (c.family() == Family::positive_r && !r.is_integer()) return Tightness::candidate_pair;
  return Tightness::yes;
}

ClassificationResult classify(const Slope& r) {
  ClassificationResult out{r, geometry_of(r), tight_count(r), {}};
  if (out.count.kind == TightCount::Kind::finite) out.structures = enumerate_structures(r);
  return out;
}

}  // namespace figeight
