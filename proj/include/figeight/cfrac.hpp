#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "figeight/number.hpp"

namespace figeight {

// Two normal forms of r0 - 1/(r1 - 1/(... - 1/rn)):
//   standard:    r0 <= -1, ri <= -2 for i >= 1
//   solid_torus: rn <= -1, ri <= -2 for i <  n
enum class CfracForm { standard, solid_torus };

class NegContinuedFraction {
 public:
  /// Throws std::invalid_argument if the list is empty or violates the form.
  NegContinuedFraction(std::vector<Integer> coefficients, CfracForm form);

  const std::vector<Integer>& coefficients() const { return coefficients_; }
  CfracForm form() const { return form_; }
  std::size_t size() const { return coefficients_.size(); }

  /// `[r0,r1,...,rn]:std` or `[...]:st`.
  std::string str() const;
  static NegContinuedFraction parse(std::string_view text);

  friend bool operator==(const NegContinuedFraction&, const NegContinuedFraction&) = default;

 private:
  std::vector<Integer> coefficients_;
  CfracForm form_;
};

/// Expansion of x in the requested form. The standard form covers every x < 0
/// (r0 = floor(x)); the solid-torus form requires x <= -1 and never ends in -1
/// unless the list is exactly [-1]. Throws std::domain_error outside the domain.
NegContinuedFraction neg_cfrac(const Rational& x, CfracForm form);

Rational eval_cfrac(const NegContinuedFraction& c);

/// Reverses a standard-form list into solid-torus form.
NegContinuedFraction reverse_cfrac(const NegContinuedFraction& c);

/// |r0 (r1+1) ... (rn+1)|
Integer phi_product(const NegContinuedFraction& c);
/// |(r0+1) ... (r(n-1)+1) rn|
Integer honda_product(const NegContinuedFraction& c);

enum class CountKind { phi, psi };

struct CountValue {
  Integer value;
  CountKind kind;
};

/// Φ: expands -q/p for the representative p/q of r in (0, 1].
CountValue phi(const Rational& r);
/// Ψ(r) = 0 for r >= -3, Φ(-1/(r+3)) otherwise.
CountValue psi(const Rational& r);

}  // namespace figeight
