#include "figeight/surgery_enum.hpp"

#include <stdexcept>

namespace figeight {

LegendrianComponent figure_eight_base() { return {-3, 0}; }

LegendrianComponent legendrian_approximation(long n, bool positive) {
  const Rational rot = positive ? -(n - 1) : n - 1;
  return {n, rot};
}

LegendrianComponent positive_diagram_unknot() { return {-1, 0}; }
LegendrianComponent positive_diagram_trefoil() { return {1, 0}; }

LegendrianChain ding_geiges(const Rational& r, const LegendrianComponent& base) {
  if (r >= 0) throw std::domain_error("Ding-Geiges needs a negative coefficient, got " + to_string(r));
  const auto c = neg_cfrac(r, CfracForm::standard).coefficients();
  LegendrianChain chain{{}, r};
  Rational tb = base.tb;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Integer budget = abs(c[i] + (i == 0 ? 1 : 2));
    tb -= budget;
    chain.components.push_back({tb, base.rot, budget, base.homology_order});
  }
  return chain;
}

std::vector<StabilizationTuple> stabilization_tuples(const LegendrianChain& chain) {
  std::vector<StabilizationTuple> out{{}};
  for (const auto& comp : chain.components) {
    std::vector<StabilizationTuple> next;
    for (const auto& prefix : out) {
      const Rational before = prefix.rots.empty() ? comp.rot : prefix.rots.back();
      for (Integer up = 0; up <= comp.budget; ++up) {
        StabilizationTuple t = prefix;
        t.rots.push_back(before + Rational(2 * up - comp.budget));
        t.ups.push_back(up);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

Integer choice_count(const Rational& r_contact) {
  const auto chain = ding_geiges(r_contact, {0, 0});
  Integer out = 1;
  for (const auto& comp : chain.components) out *= comp.budget + 1;
  return out;
}

bool uniform_sign(const LegendrianChain& chain, const StabilizationTuple& t) {
  bool all_up = true, all_down = true;
  for (std::size_t i = 0; i < chain.components.size(); ++i) {
    const Integer& budget = chain.components[i].budget;
    if (budget == 0) continue;
    all_up = all_up && t.ups[i] == budget;
    all_down = all_down && t.ups[i] == 0;
  }
  return all_up || all_down;
}

LegendrianChain phi_family_chain(const Rational& r, const Integer& n) {
  if (is_integer(r)) throw std::domain_error("the Φ family chain needs non-integral r");
  if (n > -1 || r <= n || r >= n + 1) {
    throw std::domain_error(to_string(r) + " is not in (n, n+1) for n = " + n.str() + " <= -1");
  }
  const Rational s = Rational(n + 1) - r;
  // L′ with tb_Q 2, rot_Q 0; its first stabilization is the L+/L− choice.
  return ding_geiges(Rational(-1) / (1 - s), {2, 0, 0, abs(n)});
}

std::vector<StabilizationTuple> phi_family_tuples(const Rational& r, const Integer& n) {
  return stabilization_tuples(phi_family_chain(r, n));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::psi_std: return "PsiStd";
    case Family::phi_overtwisted: return "PhiOvertwisted";
    case Family::positive_r: return "PositiveR";
  }
  return "?";
}

ChernCertificate chern_certificate(Family family, const StabilizationTuple& t,
                                   const Integer& scale) {
  if (scale < 1) throw std::invalid_argument("certificate scale must be positive");
  ChernCertificate out{family, {}, scale};
  for (const auto& rot : t.rots) out.evaluations.push_back(Rational(scale) * rot);
  return out;
}

Integer first_homology_order(const FramedLink& link) {
  const std::size_t n = link.framings.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = i == j ? Rational(num(link.framings[i])) : Rational(den(link.framings[i]) * link.linking[i][j]);
    }
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return abs(num(det));
}

FramedLink rolfsen_twist(const FramedLink& link, std::size_t i, const Integer& n) {
  FramedLink out = link;
  const Rational& f = link.framings[i];
  out.framings[i] = ratio(num(f), den(f) + n * num(f));
  for (std::size_t j = 0; j < link.framings.size(); ++j) {
    if (j == i) continue;
    out.framings[j] += Rational(n * link.linking[i][j] * link.linking[i][j]);
    for (std::size_t k = 0; k < link.framings.size(); ++k) {
      if (k != i && k != j) out.linking[j][k] += n * link.linking[i][j] * link.linking[i][k];
    }
  }
  return out;
}

FramedLink blow_down(const FramedLink& link, std::size_t i) {
  const Rational& e = link.framings[i];
  if (e != 1 && e != -1) throw std::domain_error("only a ±1-framed unknot can be blown down");
  const Integer sign = num(e);
  FramedLink out;
  for (std::size_t j = 0; j < link.framings.size(); ++j) {
    if (j == i) continue;
    out.names.push_back(link.names[j]);
    out.framings.push_back(link.framings[j] - Rational(sign * link.linking[i][j] * link.linking[i][j]));
    std::vector<Integer> row;
    for (std::size_t k = 0; k < link.framings.size(); ++k) {
      if (k == i) continue;
      row.push_back(j == k ? Integer(0)
                           : link.linking[j][k] - sign * link.linking[i][j] * link.linking[i][k]);
    }
    out.linking.push_back(std::move(row));
  }
  return out;
}

std::vector<KirbyStage> smooth_framing_trace(const Rational& r) {
  if (r < 1) throw std::domain_error("the positive-surgery diagram needs r >= 1, got " + to_string(r));
  const auto L = positive_diagram_unknot();
  const auto Lp = positive_diagram_trefoil();
  // L and L′ are geometrically linked but lk(L, L′) = 0.
  FramedLink contact;
  if (r != 1) {
    contact = {{"L", "L'"}, {Rational(1) / (1 - r), -2}, {{0, 0}, {0, 0}}};
  } else {
    contact = {{"L'"}, {-2}, {{0}}};
  }
  FramedLink smooth = contact;
  for (std::size_t i = 0; i < smooth.names.size(); ++i) {
    smooth.framings[i] += smooth.names[i] == "L" ? L.tb : Lp.tb;
  }
  std::vector<KirbyStage> out;
  // contact framings are not smooth framings, so no homology there
  out.push_back({"contact", contact, 0});
  out.push_back({"smooth", smooth, first_homology_order(smooth)});
  if (r == 1) return out;  // −1 surgery on L′ already presents M(1)
  FramedLink current = rolfsen_twist(smooth, 0, 1);
  out.push_back({"rolfsen twist on L", current, first_homology_order(current)});
  // the twist unknots L′ and knots L into the figure-eight
  current = blow_down(current, 1);
  current.names[0] = "K";
  out.push_back({"blow down L'", current, first_homology_order(current)});
  return out;
}

bool smooth_framing_check(const Rational& r) {
  const auto stages = smooth_framing_trace(r);
  if (r == 1) {
    return stages.size() == 2 && stages[1].link.framings == std::vector<Rational>{-1} &&
           stages[1].h1_order == 1;
  }
  const Integer p = abs(num(r));
  for (std::size_t i = 1; i < stages.size(); ++i) {
    if (stages[i].h1_order != p) return false;
  }
  const auto& smooth = stages[1].link;
  if (smooth.framings[0] != r / (1 - r) || smooth.framings[1] != -1) return false;
  const auto& last = stages.back().link;
  return last.framings.size() == 1 && last.framings[0] == r;
}

}  // namespace figeight
