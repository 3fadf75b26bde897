#pragma once

#include <string>
#include <vector>

#include "figeight/cfrac.hpp"
#include "figeight/slope.hpp"

namespace figeight {

/// Two basic slices for every Farey edge. Throws std::domain_error otherwise.
int basic_slice_count(const Slope& s0, const Slope& s1);

/// A Farey geodesic cut into blocks: a block is a maximal run of edges whose
/// endpoints all neighbour one common slope (a continued-fraction block).
struct BasicSliceChain {
  std::vector<Slope> slope_path;
  std::vector<std::size_t> blocks;  // sizes, in path order, summing to the edge count

  std::size_t edges() const { return slope_path.empty() ? 0 : slope_path.size() - 1; }
};

/// Geodesic from s1 counter-clockwise down to s0. Throws std::invalid_argument
/// for s0 = s1.
BasicSliceChain descent_path(const Slope& s0, const Slope& s1);

/// One sign per edge. Canonical representatives list all −'s of a block
/// before its +'s.
struct SignSequence {
  std::vector<bool> positive;
  std::vector<std::size_t> blocks;

  /// e.g. `-+|--`
  std::string str() const;
  friend bool operator==(const SignSequence&, const SignSequence&) = default;
};

/// Sorts each block of `s` into canonical order.
SignSequence canonicalize(SignSequence s);

std::vector<SignSequence> enumerate_sign_sequences(const BasicSliceChain& chain);

/// Solid torus with boundary dividing slope `dividing` and meridian slope
/// `meridian`, with the coordinate change sending the meridian to ∞ and the
/// dividing slope into [−1, 0).
class SolidTorusSpec {
 public:
  /// Throws std::invalid_argument for meridian = dividing.
  SolidTorusSpec(Slope meridian, Slope dividing);

  const Slope& meridian() const { return meridian_; }
  const Slope& dividing() const { return dividing_; }
  /// The full change of coordinates, translation included.
  const UnimodularMatrix& normalization() const { return normalization_; }
  /// The translation applied after moving the meridian to ∞.
  const Integer& k() const { return k_; }
  Slope normalized_dividing() const { return apply_unimodular(normalization_, dividing_); }

 private:
  Slope meridian_;
  Slope dividing_;
  UnimodularMatrix normalization_;
  Integer k_;
};

/// Solid-torus expansion of 1/d for the normalized dividing slope d.
NegContinuedFraction solid_torus_expansion(const SolidTorusSpec& spec);
Integer solid_torus_count(const SolidTorusSpec& spec);
/// Chain from the normalized dividing slope down to −1 (a lone vertex when
/// they coincide).
BasicSliceChain solid_torus_chain(const SolidTorusSpec& spec);

/// Counts on the surgery torus N(s) with meridian r.
Integer tight_count_n_infinity(const Slope& r);
Integer tight_count_n_minus_three(const Slope& r);

/// Left-to-right product of [[−ri, 1], [−1, 0]] over a standard expansion.
UnimodularMatrix factorization_matrix(const NegContinuedFraction& c);

}  // namespace figeight
