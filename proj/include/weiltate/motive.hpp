#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weiltate/cm_types.hpp"
#include "weiltate/galois_model.hpp"
#include "weiltate/slopes.hpp"

namespace weiltate {

inline constexpr int kDefaultMaxPoints = 16;
/// Bitmap-based enumeration is never attempted beyond this many points.
inline constexpr int kHardMaxPoints = 26;

/// A Galois orbit of index subsets of one weight.
struct MotiveOrbit {
  int weight = 0;  // |I|
  IndexSet representative;  // lexicographically least member
  std::vector<IndexSet> orbit;  // sorted lexicographically
  std::size_t rank = 0;
  bool is_tate = false;
  bool is_lefschetz_bearing = false;
  bool is_exotic = false;
  std::optional<HodgeType> hodge;

  friend bool operator==(const MotiveOrbit&, const MotiveOrbit&) = default;
};

/// Candidate determinant submotive attached to an index-2 overgroup Z of H
/// with tau not in Z. Z is recovered from its point set {z(1) : z in Z}.
struct WeilTateEntry {
  IndexSet subset;
  std::size_t z_order = 0;
  bool is_tate = false;
  bool is_lefschetz_bearing = false;
  bool is_exotic = false;

  friend bool operator==(const WeilTateEntry&, const WeilTateEntry&) = default;
};

enum class SchtVerdict { ApplicableMildlyExotic, LefschetzOnly, NotDecided };

std::string to_string(SchtVerdict v);
SchtVerdict parse_verdict(const std::string& text);

struct ClassifierReport {
  int g = 0;
  std::vector<int> weights;  // analyzed weights 2k, ascending
  std::vector<MotiveOrbit> orbits;  // Tate orbits, by weight then representative
  std::map<int, std::uint64_t> tate_dims;  // k -> rho_k, number of Tate classes of weight 2k
  std::vector<std::size_t> exotic;  // indices into orbits
  bool mildly_exotic = false;
  std::vector<WeilTateEntry> weil_tate;
  SchtVerdict verdict = SchtVerdict::NotDecided;

  friend bool operator==(const ClassifierReport&, const ClassifierReport&) = default;
};

struct ClassifyOptions {
  std::optional<std::vector<int>> weights;  // even weights; all of 0..2g when unset
  std::optional<IndexSet> phi;  // attach Hodge types
  int max_points = kDefaultMaxPoints;
  unsigned workers = 1;
};

/// |I| even and every conjugate J of I has slope sum |I|/2.
bool is_tate_subset(const CMGaloisModel& model, const SlopeVector& s, IndexSet subset);

/// I splits into pairs {i, j} that are Tate of weight 2. When the only such
/// pairs are the conjugate pairs {i, tau i}, this is tau(I) = I.
bool is_lefschetz_subset(const CMGaloisModel& model, const SlopeVector& s, IndexSet subset);

ClassifierReport classify_orbits(const CMGaloisModel& model, const SlopeVector& s,
                                 const ClassifyOptions& options = {});

std::vector<WeilTateEntry> weil_tate_submotives(const CMGaloisModel& model, const SlopeVector& s);

/// Local Brauer invariant at a place of the Frobenius field. p-adic places are
/// listed by the points (eigenvalue indices) lying over them; archimedean
/// places have an empty point set.
struct LocalInvariant {
  IndexSet points;
  bool archimedean = false;
  std::size_t local_degree = 0;
  BigRational slope;
  BigRational invariant;  // in [0, 1)

  friend bool operator==(const LocalInvariant&, const LocalInvariant&) = default;
};

struct EndAlgebraReport {
  std::size_t frobenius_field_degree = 0;
  std::vector<LocalInvariant> local_invariants;
  BigInt index = 1;  // m
  bool commutative = true;
  BigInt abelian_variety_dim = 0;

  friend bool operator==(const EndAlgebraReport&, const EndAlgebraReport&) = default;
};

/// Throws HypothesisError on inconsistent slope data over a place.
EndAlgebraReport honda_tate_endomorphism(const CMGaloisModel& model, const SlopeVector& s);

struct StructureVerdict {
  bool pass = false;
  std::string branch;  // "commutative" or "noncommutative"
  std::string violated;  // empty on PASS

  friend bool operator==(const StructureVerdict&, const StructureVerdict&) = default;
};

/// Checks the dichotomy for mildly exotic instances. Throws HypothesisError
/// when the report is not mildly exotic.
StructureVerdict structure_check(const CMGaloisModel& model, const SlopeVector& s, const ClassifierReport& report,
                                 const EndAlgebraReport& end_report);

struct Signature {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Alternating sum of rho_0..rho_{g/2}. Throws HypothesisError for odd g or
/// missing weights.
Signature predicted_signature(const ClassifierReport& report, int g);

}  // namespace weiltate
