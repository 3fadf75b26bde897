#pragma once

#include <string>
#include <vector>

#include "figeight/slope.hpp"
#include "figeight/surgery_enum.hpp"

namespace figeight {

enum class Geometry { toroidal, small_seifert, hyperbolic };
std::string to_string(Geometry g);

/// M(r) is toroidal for r ∈ {0, ±4}, small Seifert for r ∈ {±1, ±2, ±3} and
/// hyperbolic otherwise. Throws std::domain_error for r = ∞.
Geometry geometry_of(const Slope& r);

/// (−∞, −4) ∪ [−3, 0) ∪ [1, 4) ∪ [5, ∞), where the count is known exactly.
bool in_classified_range(const Slope& r);

struct TightCount {
  enum class Kind { finite, infinite, lower_bound };
  Kind kind;
  Integer value;  // unused for infinite

  /// `finite 3`, `infinite (toroidal)`, `lower-bound 4`
  std::string str() const;
  friend bool operator==(const TightCount&, const TightCount&) = default;
};
std::string to_string(TightCount::Kind k);

TightCount tight_count(const Slope& r);

enum class Stein { yes, unknown };
enum class Tightness { yes, no, candidate_pair };
std::string to_string(Stein s);
std::string to_string(Tightness t);

struct ContactStructureCert {
  ChernCertificate certificate;
  Rational coefficient;
  Stein stein = Stein::yes;
  bool strong = true;
  Tightness universally_tight = Tightness::no;
  // Stabilization choices behind the certificate. For PositiveR the last
  // entry is L′; it is not part of the L chain.
  std::vector<Integer> ups;
  std::vector<Integer> budgets;

  Family family() const { return certificate.family; }

  friend bool operator==(const ContactStructureCert& a, const ContactStructureCert& b) {
    return a.coefficient == b.coefficient && a.certificate == b.certificate;
  }
};

/// Distinct tight structures on M(r), r in the classified range. The list is
/// complete there. Throws std::domain_error otherwise.
std::vector<ContactStructureCert> enumerate_structures(const Slope& r);
/// The same constructions for any r >= 1 or r < 0 except −4, without a
/// completeness claim. Throws std::domain_error for r in [0, 1), r = −4 or ∞.
std::vector<ContactStructureCert> construct_structures(const Slope& r);

/// The contactomorphism reversing every stabilization sign.
ContactStructureCert involution(const ContactStructureCert& c);

Tightness universal_tightness_tag(const ContactStructureCert& c, const Slope& r);

struct ClassificationResult {
  Slope coefficient;
  Geometry geometry;
  TightCount count;
  std::vector<ContactStructureCert> structures;  // filled only for finite counts
};

ClassificationResult classify(const Slope& r);

}  // namespace figeight
