#pragma once

// Exhaustive and sampled checks of the image theorems over bounded boxes.
//
// Membership is decided here by an independent restatement of the
// congruences (the +2 n21 form of the height residue), then compared with the
// library's image_check / theta_check / torus_kappa and with the round trips
// through invert and reconstruct. Any disagreement is recorded as a failure.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl3web/integer.hpp"

namespace sl3web {

struct BoxSpec {
  std::optional<Int> shear_bound;  // shear entries in [-B, B]
  std::optional<Int> n_bound;      // intersection counts in [0, N]
  std::optional<Int> t_bound;      // twists in [-T, T]
  std::optional<Int> h_bound;      // heights (and pants twists) in [-H, H]

  friend bool operator==(const BoxSpec&, const BoxSpec&) = default;
};

inline constexpr std::uint64_t kMaxOraclePoints = 100'000'000;
inline constexpr std::size_t kMaxRecordedFailures = 32;

struct Failure {
  std::string check;
  std::vector<Int> point;

  friend bool operator==(const Failure&, const Failure&) = default;
  friend auto operator<=>(const Failure&, const Failure&) = default;
};

struct OracleReport {
  std::string name;
  BoxSpec box;
  std::uint64_t checked = 0;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // smallest kMaxRecordedFailures, sorted
  std::optional<std::uint64_t> seed;
  std::int64_t elapsed_ms = 0;

  bool clean() const { return failure_count == 0; }

  void record(std::string check, std::vector<Int> point);

  // Commutative and associative in counts and failures.
  void merge(const OracleReport& other);
};

// Throws CounterexampleFound carrying the first recorded failure.
void require_clean(const OracleReport& report);

// The oracle's own image test for pants tuples.
bool oracle_pants_member(Int n11, Int n12, Int n21, Int n22, Int n31, Int n32, Int tP, Int hP);

// Shear part: every x in [-B,B]^8 with x in Lambda maps into the image and
// inverts back to x. Tuple part: over the tuple box, image membership agrees
// with the oracle and with successful exact inversion. Either part runs only
// when its bounds are set (tuple part needs n_bound; t/h default to 0).
// Throws BoxTooLarge past kMaxOraclePoints.
OracleReport verify_pants_image(const BoxSpec& box);

// Enumerate only shear points whose first coordinate lies in
// [first_lo, first_hi]; verify_pants_image partitions the box this way.
OracleReport verify_shear_slab(Int bound, Int first_lo, Int first_hi);

// Torus: acceptance set of torus_kappa over n in [0,N]^2, t in [-T,T]^2 equals
// the directly evaluated condition, and reconstruction round-trips.
OracleReport verify_torus_image(const BoxSpec& box);

struct Genus2Options {
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 20260101;
  Int n_bound = 2;
  Int t_bound = 2;
  Int h_bound = 3;
};

// On standard_graph(2): half the samples uniform in the box, half drawn to
// satisfy the congruences; Theta members must round-trip through
// reconstruct and kappa, the rest must be rejected with NotInTheta.
OracleReport verify_genus2(const Genus2Options& options);

}  // namespace sl3web
