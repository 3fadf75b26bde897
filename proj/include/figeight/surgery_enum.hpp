#pragma once

#include <string>
#include <vector>

#include "figeight/cfrac.hpp"
#include "figeight/number.hpp"

namespace figeight {

/// tb and rot may be the rational tb_Q and rot_Q when the knot is only
/// rationally null-homologous (homology_order > 1).
struct LegendrianComponent {
  Rational tb;
  Rational rot;  // before any stabilization in the chain
  Integer budget = 0;
  Integer homology_order = 1;
};

// The knots the classification consumes.
LegendrianComponent figure_eight_base();  // tb −3, rot 0 in the standard structure
/// L±n in the overtwisted structure: tb n, rot ∓(n−1).
LegendrianComponent legendrian_approximation(long n, bool positive);
LegendrianComponent positive_diagram_unknot();   // L: tb −1, rot 0
LegendrianComponent positive_diagram_trefoil();  // L′: tb 1, rot 0

struct LegendrianChain {
  std::vector<LegendrianComponent> components;
  Rational source_coefficient;
};

/// Legendrian chain realizing contact r-surgery on `base` for r < 0. Component
/// i is a push-off of component i−1 stabilized budget_i more times.
LegendrianChain ding_geiges(const Rational& r, const LegendrianComponent& base);

/// A choice of up-stabilizations per component. Push-offs inherit earlier
/// stabilizations, so rots accumulate along the chain.
struct StabilizationTuple {
  std::vector<Rational> rots;
  std::vector<Integer> ups;

  friend bool operator==(const StabilizationTuple&, const StabilizationTuple&) = default;
};

/// Every tuple, lexicographic in ups with the first component most significant.
std::vector<StabilizationTuple> stabilization_tuples(const LegendrianChain& chain);
/// Number of stabilization tuples for contact r-surgery, r < 0.
Integer choice_count(const Rational& r_contact);
/// Whether every component is stabilized all up or all down, uniformly.
bool uniform_sign(const LegendrianChain& chain, const StabilizationTuple& t);

/// Virtual chain whose tuples are the rot_Q values of the Φ family on M(r),
/// for non-integral r in (n, n+1), n <= −1.
LegendrianChain phi_family_chain(const Rational& r, const Integer& n);
std::vector<StabilizationTuple> phi_family_tuples(const Rational& r, const Integer& n);

enum class Family { psi_std, phi_overtwisted, positive_r };

std::string to_string(Family f);

struct ChernCertificate {
  Family family;
  std::vector<Rational> evaluations;
  Integer scale = 1;

  friend bool operator==(const ChernCertificate& a, const ChernCertificate& b) {
    return a.family == b.family && a.evaluations == b.evaluations;
  }
};

ChernCertificate chern_certificate(Family family, const StabilizationTuple& t,
                                   const Integer& scale);

/// A framed link for smooth Kirby moves. Framings are rational surgery
/// coefficients; linking is symmetric with an unused diagonal.
struct FramedLink {
  std::vector<std::string> names;
  std::vector<Rational> framings;
  std::vector<std::vector<Integer>> linking;
};

/// |H1| of the surgered manifold: |det| of the matrix with p_i on the diagonal
/// and q_i lk(i, j) off it.
Integer first_homology_order(const FramedLink& link);

/// Rolfsen twist n times about the unknotted component `i`.
FramedLink rolfsen_twist(const FramedLink& link, std::size_t i, const Integer& n);
/// Removes the ±1-framed unknot `i`.
FramedLink blow_down(const FramedLink& link, std::size_t i);

struct KirbyStage {
  std::string label;
  FramedLink link;
  Integer h1_order;  // 0 on the contact stage
};

/// The smooth diagrams for the positive-surgery contact diagram of M(r):
/// contact framings, smooth framings, after the twist, after the blow-down.
std::vector<KirbyStage> smooth_framing_trace(const Rational& r);
/// Every stage has |H1| = |p| and the last is the figure-eight with framing r.
bool smooth_framing_check(const Rational& r);

}  // namespace figeight
