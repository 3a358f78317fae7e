#include "sl3web/annulus_webs.hpp"

#include <algorithm>

namespace sl3web {

bool twist_image_check(const TwistTuple& t) {
  if (t.n1 < 0 || t.n2 < 0) return false;
  if (t.n1 == 0 && t.t1 < 0) return false;
  if (t.n2 == 0 && t.t2 < 0) return false;
  return true;
}

BoundaryWord BoundaryWord::parse(std::string_view text) {
  std::vector<Sign> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      symbols.push_back(Sign::Plus);
    } else if (c == '-') {
      symbols.push_back(Sign::Minus);
    } else {
      throw Error(ErrorKind::Malformed,
                  "boundary word may contain only '+' and '-', got '" + std::string(1, c) + "'");
    }
  }
  return BoundaryWord(std::move(symbols));
}

BoundaryWord BoundaryWord::block(Int plus, Int minus) {
  std::vector<Sign> symbols;
  symbols.reserve(static_cast<std::size_t>(plus + minus));
  symbols.insert(symbols.end(), static_cast<std::size_t>(plus), Sign::Plus);
  symbols.insert(symbols.end(), static_cast<std::size_t>(minus), Sign::Minus);
  return BoundaryWord(std::move(symbols));
}

std::string BoundaryWord::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Sign s : symbols_) out.push_back(static_cast<char>(s));
  return out;
}

std::size_t BoundaryWord::count(Sign s) const {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), s));
}

std::string_view to_string(AnnulusKind k) {
  switch (k) {
    case AnnulusKind::StrictBraid: return "strict-braid";
    case AnnulusKind::LineCircleLeft: return "line-circle-left";
    case AnnulusKind::LineCircleRight: return "line-circle-right";
    case AnnulusKind::PureCircles: return "pure-circles";
  }
  return "unknown";
}

AnnulusKind AnnulusDescriptor::kind() const {
  const TwistTuple& t = tuple_;
  if (t.n1 == 0 && t.n2 == 0) return AnnulusKind::PureCircles;
  if (t.n2 == 0 && t.t2 > 0) return AnnulusKind::LineCircleLeft;
  if (t.n1 == 0 && t.t1 > 0) return AnnulusKind::LineCircleRight;
  return AnnulusKind::StrictBraid;
}

namespace {

void check_word(const BoundaryWord& w, const TwistTuple& t, const char* name) {
  const auto plus = static_cast<Int>(w.count(Sign::Plus));
  const auto minus = static_cast<Int>(w.count(Sign::Minus));
  if (plus != t.n1 || minus != t.n2) {
    throw Error(ErrorKind::WordMismatch,
                std::string(name) + " \"" + w.str() + "\" has " + std::to_string(plus) +
                    " '+' and " + std::to_string(minus) + " '-', expected " +
                    std::to_string(t.n1) + " and " + std::to_string(t.n2),
                name);
  }
}

}  // namespace

void require_twist_image(const TwistTuple& t) {
  if (t.n1 < 0) throw Error(ErrorKind::ImageViolation, "n1 < 0", "n1");
  if (t.n2 < 0) throw Error(ErrorKind::ImageViolation, "n2 < 0", "n2");
  if (t.n1 == 0 && t.t1 < 0) throw Error(ErrorKind::ImageViolation, "t1 < 0 with n1 = 0", "t1");
  if (t.n2 == 0 && t.t2 < 0) throw Error(ErrorKind::ImageViolation, "t2 < 0 with n2 = 0", "t2");
}

AnnulusDescriptor validate(const TwistTuple& tuple, BoundaryWord word0, BoundaryWord word1) {
  require_twist_image(tuple);
  check_word(word0, tuple, "word0");
  check_word(word1, tuple, "word1");
  return AnnulusDescriptor(tuple, std::move(word0), std::move(word1));
}

TwistTuple twist_coords(const AnnulusDescriptor& d) { return d.tuple(); }

AnnulusDescriptor canonical_descriptor(const TwistTuple& tuple) {
  require_twist_image(tuple);
  return validate(tuple, BoundaryWord::block(tuple.n1, tuple.n2),
                  BoundaryWord::block(tuple.n1, tuple.n2));
}

AnnulusDescriptor braid_descriptor(std::span<const Int> increasing_twists,
                                   std::span<const Int> decreasing_twists, BoundaryWord word0,
                                   BoundaryWord word1) {
  TwistTuple t;
  t.n1 = static_cast<Int>(increasing_twists.size());
  t.n2 = static_cast<Int>(decreasing_twists.size());
  for (Int tw : increasing_twists) t.t1 = checked::add(t.t1, tw);
  for (Int tw : decreasing_twists) t.t2 = checked::add(t.t2, tw);
  return validate(t, std::move(word0), std::move(word1));
}

AnnulusDescriptor line_circle_descriptor(LineCircleSide side, Int lines, Int twist, Int circles) {
  if (lines < 0 || circles < 0) {
    throw Error(ErrorKind::ImageViolation, "line and circle counts must be nonnegative");
  }
  TwistTuple t = side == LineCircleSide::Left ? TwistTuple{lines, 0, twist, circles}
                                              : TwistTuple{0, lines, circles, twist};
  return canonical_descriptor(t);
}

}  // namespace sl3web
