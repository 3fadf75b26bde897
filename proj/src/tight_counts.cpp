#include "figeight/tight_counts.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace figeight {

int basic_slice_count(const Slope& s0, const Slope& s1) {
  if (!is_farey_adjacent(s0, s1)) {
    throw std::domain_error("basic slice needs adjacent slopes, got " + s0.str() + " and " +
                            s1.str());
  }
  return 2;
}

namespace {

// The two common neighbours of an edge (a, b) are a ± b as vectors.
std::optional<Slope> shared_pivot(const Slope& a, const Slope& b, const Slope& c) {
  const Integer& p = b.numerator();
  const Integer& q = b.denominator();
  for (int e : {1, -1}) {
    const Slope w(p + e * c.numerator(), q + e * c.denominator());
    if (is_farey_adjacent(w, a)) return w;
  }
  return std::nullopt;
}

}  // namespace

BasicSliceChain descent_path(const Slope& s0, const Slope& s1) {
  if (s0 == s1) throw std::invalid_argument("descent path needs distinct slopes");
  BasicSliceChain chain{{s1}, {}};
  while (!(chain.slope_path.back() == s0)) {
    chain.slope_path.push_back(
        furthest_neighbor_toward(chain.slope_path.back(), s0, Direction::counterclockwise));
  }
  const auto& v = chain.slope_path;
  std::optional<Slope> pivot;
  std::size_t size = 1;
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    const auto w = shared_pivot(v[i], v[i + 1], v[i + 2]);
    if (w && (size == 1 || *w == *pivot)) {
      pivot = w;
      ++size;
    } else {
      chain.blocks.push_back(size);
      size = 1;
      pivot.reset();
    }
  }
  chain.blocks.push_back(size);
  return chain;
}

std::string SignSequence::str() const {
  std::string out;
  std::size_t at = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < blocks[b]; ++i) out += positive[at++] ? '+' : '-';
  }
  return out;
}

SignSequence canonicalize(SignSequence s) {
  auto it = s.positive.begin();
  for (std::size_t size : s.blocks) {
    std::sort(it, it + static_cast<std::ptrdiff_t>(size));
    it += static_cast<std::ptrdiff_t>(size);
  }
  return s;
}

std::vector<SignSequence> enumerate_sign_sequences(const BasicSliceChain& chain) {
  // A canonical block is all −'s then all +'s, so it is fixed by its + count.
  // An edgeless chain still carries one (empty) sequence.
  std::vector<SignSequence> out{{{}, chain.blocks}};
  for (std::size_t size : chain.blocks) {
    std::vector<SignSequence> next;
    next.reserve(out.size() * (size + 1));
    for (const auto& prefix : out) {
      for (std::size_t plus = 0; plus <= size; ++plus) {
        SignSequence s = prefix;
        s.positive.insert(s.positive.end(), size - plus, false);
        s.positive.insert(s.positive.end(), plus, true);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

UnimodularMatrix meridian_to_infinity(const Slope& m) {
  // [[x, y], [-q, p]] with p x + q y = 1 sends (p, q) to (1, 0).
  const Bezout e = extended_gcd(m.numerator(), m.denominator());
  return {e.x, e.y, -m.denominator(), m.numerator()};
}

}  // namespace

SolidTorusSpec::SolidTorusSpec(Slope meridian, Slope dividing)
    : meridian_(std::move(meridian)),
      dividing_(std::move(dividing)),
      normalization_(UnimodularMatrix::identity()) {
  if (meridian_ == dividing_) {
    throw std::invalid_argument("meridian and dividing slope coincide: " + meridian_.str());
  }
  const UnimodularMatrix a = meridian_to_infinity(meridian_);
  const Rational d = apply_unimodular(a, dividing_).value();
  k_ = -floor(d) - 1;
  normalization_ = UnimodularMatrix(1, k_, 0, 1) * a;
}

NegContinuedFraction solid_torus_expansion(const SolidTorusSpec& spec) {
  return neg_cfrac(Rational(1) / spec.normalized_dividing().value(), CfracForm::solid_torus);
}

Integer solid_torus_count(const SolidTorusSpec& spec) {
  return honda_product(solid_torus_expansion(spec));
}

BasicSliceChain solid_torus_chain(const SolidTorusSpec& spec) {
  const Slope d = spec.normalized_dividing();
  const Slope minus_one(-1);
  if (d == minus_one) return {{d}, {}};
  return descent_path(minus_one, d);
}

Integer tight_count_n_infinity(const Slope& r) {
  return solid_torus_count(SolidTorusSpec(r, Slope::infinity()));
}

Integer tight_count_n_minus_three(const Slope& r) {
  return solid_torus_count(SolidTorusSpec(r, Slope(-3)));
}

UnimodularMatrix factorization_matrix(const NegContinuedFraction& c) {
  if (c.form() != CfracForm::standard) {
    throw std::domain_error("factorization_matrix expects a standard-form expansion");
  }
  UnimodularMatrix out = UnimodularMatrix::identity();
  for (const Integer& r : c.coefficients()) out = out * UnimodularMatrix(-r, 1, -1, 0);
  return out;
}

}  // namespace figeight
