#pragma once

// Non-elliptic braided webs in the annulus with one puncture on each boundary.
//
// A web is stored by its twist tuple (n1, n2, t1, t2) together with the
// boundary signatures on A0 and A1; this pair determines the web uniquely, so
// structural equality of descriptors is equality of webs. Descriptors can only
// be obtained through validate() or one of the builders, all of which enforce
// the image condition and the word counts.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sl3web/integer.hpp"

namespace sl3web {

struct TwistTuple {
  Int n1 = 0;
  Int n2 = 0;
  Int t1 = 0;
  Int t2 = 0;

  friend bool operator==(const TwistTuple&, const TwistTuple&) = default;
  friend auto operator<=>(const TwistTuple&, const TwistTuple&) = default;
};

// n1, n2 >= 0 and t_i >= 0 whenever n_i = 0.
bool twist_image_check(const TwistTuple& t);

// Throws ImageViolation naming the offending entry.
void require_twist_image(const TwistTuple& t);

enum class Sign : char { Plus = '+', Minus = '-' };

// Strand directions at the boundary points, read in the boundary orientation
// starting from the puncture. '+' is an increasing strand, '-' a decreasing one.
class BoundaryWord {
 public:
  BoundaryWord() = default;
  explicit BoundaryWord(std::vector<Sign> symbols) : symbols_(std::move(symbols)) {}

  // Accepts '+' and '-' only; throws Malformed otherwise.
  static BoundaryWord parse(std::string_view text);
  static BoundaryWord block(Int plus, Int minus);

  std::string str() const;
  std::size_t size() const { return symbols_.size(); }
  std::size_t count(Sign s) const;
  std::span<const Sign> symbols() const { return symbols_; }

  friend bool operator==(const BoundaryWord&, const BoundaryWord&) = default;

 private:
  std::vector<Sign> symbols_;
};

enum class AnnulusKind { StrictBraid, LineCircleLeft, LineCircleRight, PureCircles };

std::string_view to_string(AnnulusKind k);

class AnnulusDescriptor {
 public:
  // The empty web.
  AnnulusDescriptor() = default;

  const TwistTuple& tuple() const { return tuple_; }
  const BoundaryWord& word0() const { return word0_; }
  const BoundaryWord& word1() const { return word1_; }

  AnnulusKind kind() const;

  friend bool operator==(const AnnulusDescriptor&, const AnnulusDescriptor&) = default;

 private:
  AnnulusDescriptor(TwistTuple t, BoundaryWord w0, BoundaryWord w1)
      : tuple_(t), word0_(std::move(w0)), word1_(std::move(w1)) {}

  friend AnnulusDescriptor validate(const TwistTuple&, BoundaryWord, BoundaryWord);

  TwistTuple tuple_;
  BoundaryWord word0_;
  BoundaryWord word1_;
};

// Throws ImageViolation or WordMismatch.
AnnulusDescriptor validate(const TwistTuple& tuple, BoundaryWord word0, BoundaryWord word1);

TwistTuple twist_coords(const AnnulusDescriptor& d);

// Block-form signature "+...+-...-" on both boundaries. Throws ImageViolation.
AnnulusDescriptor canonical_descriptor(const TwistTuple& tuple);

// A strict braid given by the twist number of each strand; t1, t2 are the sums.
AnnulusDescriptor braid_descriptor(std::span<const Int> increasing_twists,
                                   std::span<const Int> decreasing_twists, BoundaryWord word0,
                                   BoundaryWord word1);

enum class LineCircleSide { Left, Right };

// `lines` parallel strands of total twist `twist` plus `circles` closed
// components: (n,0,t,m) on the left picture, (0,n,m,t) on the right.
AnnulusDescriptor line_circle_descriptor(LineCircleSide side, Int lines, Int twist, Int circles);

}  // namespace sl3web
