#include "sl3web/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <thread>

#include "sl3web/global_coords.hpp"
#include "sl3web/pants_coords.hpp"

namespace sl3web {

void OracleReport::record(std::string check, std::vector<Int> point) {
  ++failure_count;
  Failure f{std::move(check), std::move(point)};
  auto pos = std::lower_bound(failures.begin(), failures.end(), f);
  if (failures.size() < kMaxRecordedFailures) {
    failures.insert(pos, std::move(f));
  } else if (pos != failures.end()) {
    failures.insert(pos, std::move(f));
    failures.pop_back();
  }
}

void OracleReport::merge(const OracleReport& other) {
  checked += other.checked;
  for (const auto& [key, value] : other.counts) counts[key] += value;
  failure_count += other.failure_count;
  std::vector<Failure> all;
  all.reserve(failures.size() + other.failures.size());
  std::merge(failures.begin(), failures.end(), other.failures.begin(), other.failures.end(),
             std::back_inserter(all));
  if (all.size() > kMaxRecordedFailures) all.resize(kMaxRecordedFailures);
  failures = std::move(all);
}

void require_clean(const OracleReport& report) {
  if (report.clean()) return;
  std::string detail = report.name + ": " + std::to_string(report.failure_count) + " failure(s)";
  if (!report.failures.empty()) {
    const Failure& f = report.failures.front();
    detail += ", first " + f.check + " at (";
    for (std::size_t i = 0; i < f.point.size(); ++i) {
      if (i != 0) detail += ",";
      detail += std::to_string(f.point[i]);
    }
    detail += ")";
  }
  throw Error(ErrorKind::CounterexampleFound, detail);
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Int residue(Int a, Int m) { return ((a % m) + m) % m; }

std::uint64_t checked_volume(std::initializer_list<Int> side_lengths) {
  std::uint64_t total = 1;
  for (Int side : side_lengths) {
    const auto s = static_cast<std::uint64_t>(side);
    if (total > kMaxOraclePoints / s) {
      throw Error(ErrorKind::BoxTooLarge,
                  "enumeration exceeds " + std::to_string(kMaxOraclePoints) + " points");
    }
    total *= s;
  }
  return total;
}

Int require_bound(std::optional<Int> b, const char* name) {
  Int v = b.value_or(0);
  if (v < 0) {
    throw Error(ErrorKind::Malformed, std::string(name) + " must be nonnegative", name);
  }
  return v;
}

std::vector<Int> as_point(const std::array<Int, 8>& a) { return {a.begin(), a.end()}; }

}  // namespace

bool oracle_pants_member(Int n11, Int n12, Int n21, Int n22, Int n31, Int n32, Int tP, Int hP) {
  if (n11 < 0 || n12 < 0 || n21 < 0 || n22 < 0 || n31 < 0 || n32 < 0) return false;
  const Int in = n11 + n21 + n31;
  const Int out = n12 + n22 + n32;
  return residue(out - in, 3) == 0 && residue(hP + in, 2) == 0 &&
         residue(hP - (n11 + 2 * n21 - n12 + n22), 3) == 0 && residue(3 * tP - (out - in), 6) == 0;
}

OracleReport verify_shear_slab(Int bound, Int first_lo, Int first_hi) {
  OracleReport report;
  report.name = "pants";
  std::array<Int, 8> v{};
  std::uint64_t members = 0;
  // Odometer over the last seven coordinates, outer loop over the first.
  for (Int first = first_lo; first <= first_hi; ++first) {
    v[0] = first;
    for (std::size_t i = 1; i < 8; ++i) v[i] = -bound;
    while (true) {
      ++report.checked;
      const ShearVector x = ShearVector::from_values(v);
      if (lambda_check(x)) {
        ++members;
        const PantsTuple t = forward(x);
        if (!image_check(t)) report.record("image_check(forward(x))", as_point(v));
        if (!oracle_pants_member(t.n11, t.n12, t.n21, t.n22, t.n31, t.n32, t.tP, t.hP)) {
          report.record("oracle_member(forward(x))", as_point(v));
        }
        try {
          if (invert(t) != x) report.record("invert(forward(x)) == x", as_point(v));
        } catch (const Error&) {
          report.record("invert(forward(x)) threw", as_point(v));
        }
      }
      std::size_t i = 7;
      while (i >= 1 && v[i] == bound) {
        v[i] = -bound;
        --i;
      }
      if (i == 0) break;
      ++v[i];
    }
  }
  report.counts["shear_points"] = report.checked;
  report.counts["lambda_members"] = members;
  return report;
}

namespace {

OracleReport verify_tuple_box(Int nb, Int tb, Int hb) {
  OracleReport report;
  report.name = "pants";
  std::uint64_t members = 0;
  std::array<Int, 8> v{};
  for (std::size_t i = 0; i < 6; ++i) v[i] = 0;
  v[6] = -tb;
  v[7] = -hb;
  const std::array<Int, 8> lo = {0, 0, 0, 0, 0, 0, -tb, -hb};
  const std::array<Int, 8> hi = {nb, nb, nb, nb, nb, nb, tb, hb};
  while (true) {
    ++report.checked;
    const PantsTuple t = PantsTuple::from_values(v);
    const bool expected = oracle_pants_member(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]);
    if (expected) ++members;
    if (image_check(t) != expected) report.record("image_check == oracle", as_point(v));
    bool inverted = false;
    if (const InverseResult r = try_invert(t)) {
      inverted = lambda_check(r.value) && forward_unchecked(r.value) == t;
      if (!inverted) report.record("invert(t) inconsistent", as_point(v));
    }
    if (inverted != expected) report.record("invertible == oracle", as_point(v));

    std::size_t i = 8;
    while (i > 0 && v[i - 1] == hi[i - 1]) {
      v[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++v[i - 1];
  }
  report.counts["tuple_points"] = report.checked;
  report.counts["image_members"] = members;
  return report;
}

}  // namespace

OracleReport verify_pants_image(const BoxSpec& box) {
  const auto start = Clock::now();
  OracleReport report;
  report.name = "pants";
  report.box = box;

  if (box.shear_bound) {
    const Int b = require_bound(box.shear_bound, "shear_bound");
    const Int side = 2 * b + 1;
    checked_volume({side, side, side, side, side, side, side, side});
    const auto workers = static_cast<Int>(
        std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u, 16u));
    const Int slabs = std::min(workers, side);
    std::vector<std::future<OracleReport>> parts;
    for (Int s = 0; s < slabs; ++s) {
      const Int lo = -b + (side * s) / slabs;
      const Int hi = -b + (side * (s + 1)) / slabs - 1;
      parts.push_back(std::async(slabs == 1 ? std::launch::deferred : std::launch::async,
                                 verify_shear_slab, b, lo, hi));
    }
    for (auto& part : parts) report.merge(part.get());
  }
  if (box.n_bound) {
    const Int nb = require_bound(box.n_bound, "n_bound");
    const Int tb = require_bound(box.t_bound, "t_bound");
    const Int hb = require_bound(box.h_bound, "h_bound");
    checked_volume({nb + 1, nb + 1, nb + 1, nb + 1, nb + 1, nb + 1, 2 * tb + 1, 2 * hb + 1});
    report.merge(verify_tuple_box(nb, tb, hb));
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

OracleReport verify_torus_image(const BoxSpec& box) {
  const auto start = Clock::now();
  OracleReport report;
  report.name = "torus";
  report.box = box;
  const Int nb = require_bound(box.n_bound, "n_bound");
  const Int tb = require_bound(box.t_bound, "t_bound");
  checked_volume({nb + 1, nb + 1, 2 * tb + 1, 2 * tb + 1});

  std::uint64_t accepted = 0;
  for (Int n1 = 0; n1 <= nb; ++n1) {
    for (Int n2 = 0; n2 <= nb; ++n2) {
      for (Int t1 = -tb; t1 <= tb; ++t1) {
        for (Int t2 = -tb; t2 <= tb; ++t2) {
          ++report.checked;
          const std::vector<Int> point = {n1, n2, t1, t2};
          const bool expected = (n1 != 0 || t1 >= 0) && (n2 != 0 || t2 >= 0);
          std::optional<TorusCoordinate> c;
          try {
            c = torus_kappa(n1, n2, t1, t2);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::ImageViolation) report.record("unexpected error", point);
          }
          if (c.has_value() != expected) {
            report.record("acceptance == condition", point);
            continue;
          }
          if (!c) continue;
          ++accepted;
          const AnnulusDescriptor d = torus_reconstruct(*c);
          if (d.word0() != d.word1()) report.record("closed-up words agree", point);
          if (torus_kappa(d) != *c) report.record("torus_kappa(torus_reconstruct(c)) == c", point);
        }
      }
    }
  }
  report.counts["accepted"] = accepted;
  report.counts["rejected"] = report.checked - accepted;
  report.elapsed_ms = ms_since(start);
  return report;
}

namespace {

// (n^P_11, ..., n^P_32) of pants p, resolved from the slot flags.
std::array<Int, 6> oracle_pants_counts(const DecompositionGraph& g, const GlobalCoordinate& c,
                                       std::size_t p) {
  std::array<Int, 6> n{};
  for (std::size_t k = 0; k < 3; ++k) {
    const Slot& s = g.pants[p].slots[k];
    std::size_t j = 0;
    while (g.curves[j] != s.curve) ++j;
    const bool ccw = s.flag == Orientation::Ccw;
    n[2 * k] = ccw ? c.n1[j] : c.n2[j];
    n[2 * k + 1] = ccw ? c.n2[j] : c.n1[j];
  }
  return n;
}

bool oracle_theta_member(const DecompositionGraph& g, const GlobalCoordinate& c) {
  for (std::size_t j = 0; j < g.curves.size(); ++j) {
    if (c.n1[j] < 0 || c.n2[j] < 0) return false;
    if (c.n1[j] == 0 && c.t1[j] < 0) return false;
    if (c.n2[j] == 0 && c.t2[j] < 0) return false;
  }
  for (std::size_t p = 0; p < g.pants.size(); ++p) {
    const auto n = oracle_pants_counts(g, c, p);
    if (!oracle_pants_member(n[0], n[1], n[2], n[3], n[4], n[5], c.tP[p], c.hP[p])) return false;
  }
  return true;
}

class BoxSampler {
 public:
  explicit BoxSampler(std::uint64_t seed) : rng_(seed) {}

  Int uniform(Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<Int>(rng_() % span);
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Int> flatten(const GlobalCoordinate& c) {
  std::vector<Int> out;
  for (const auto* v : {&c.n1, &c.n2, &c.t1, &c.t2, &c.tP, &c.hP}) {
    out.insert(out.end(), v->begin(), v->end());
  }
  return out;
}

GlobalCoordinate uniform_sample(BoxSampler& s, const DecompositionGraph& g,
                                const Genus2Options& o) {
  GlobalCoordinate c = GlobalCoordinate::zero(g);
  for (std::size_t j = 0; j < g.curves.size(); ++j) {
    c.n1[j] = s.uniform(0, o.n_bound);
    c.n2[j] = s.uniform(0, o.n_bound);
    c.t1[j] = s.uniform(-o.t_bound, o.t_bound);
    c.t2[j] = s.uniform(-o.t_bound, o.t_bound);
  }
  for (std::size_t p = 0; p < g.pants.size(); ++p) {
    c.tP[p] = s.uniform(-o.h_bound, o.h_bound);
    c.hP[p] = s.uniform(-o.h_bound, o.h_bound);
  }
  return c;
}

// Draws n until every pants is row-balanced, fixes signs of t where n = 0,
// then picks (tP, hP) uniformly among box values satisfying the congruences.
// Falls back to the uniform draw if the box admits no such value.
GlobalCoordinate targeted_sample(BoxSampler& s, const DecompositionGraph& g,
                                 const Genus2Options& o) {
  GlobalCoordinate c = uniform_sample(s, g, o);
  auto balanced = [&] {
    for (std::size_t p = 0; p < g.pants.size(); ++p) {
      const auto n = oracle_pants_counts(g, c, p);
      if (residue((n[1] + n[3] + n[5]) - (n[0] + n[2] + n[4]), 3) != 0) return false;
    }
    return true;
  };
  for (int attempt = 0; attempt < 1000 && !balanced(); ++attempt) {
    for (std::size_t j = 0; j < g.curves.size(); ++j) {
      c.n1[j] = s.uniform(0, o.n_bound);
      c.n2[j] = s.uniform(0, o.n_bound);
    }
  }
  for (std::size_t j = 0; j < g.curves.size(); ++j) {
    if (c.n1[j] == 0 && c.t1[j] < 0) c.t1[j] = -c.t1[j];
    if (c.n2[j] == 0 && c.t2[j] < 0) c.t2[j] = -c.t2[j];
  }
  for (std::size_t p = 0; p < g.pants.size(); ++p) {
    const auto n = oracle_pants_counts(g, c, p);
    std::vector<std::pair<Int, Int>> candidates;
    for (Int tp = -o.h_bound; tp <= o.h_bound; ++tp) {
      for (Int hp = -o.h_bound; hp <= o.h_bound; ++hp) {
        if (oracle_pants_member(n[0], n[1], n[2], n[3], n[4], n[5], tp, hp)) {
          candidates.emplace_back(tp, hp);
        }
      }
    }
    if (!candidates.empty()) {
      const auto pick = static_cast<std::size_t>(
          s.uniform(0, static_cast<Int>(candidates.size()) - 1));
      c.tP[p] = candidates[pick].first;
      c.hP[p] = candidates[pick].second;
    }
  }
  return c;
}

}  // namespace

OracleReport verify_genus2(const Genus2Options& options) {
  const auto start = Clock::now();
  OracleReport report;
  report.name = "genus2";
  report.box.n_bound = options.n_bound;
  report.box.t_bound = options.t_bound;
  report.box.h_bound = options.h_bound;
  report.seed = options.seed;
  if (options.n_bound < 0 || options.t_bound < 0 || options.h_bound < 0) {
    throw Error(ErrorKind::Malformed, "genus-2 box bounds must be nonnegative");
  }
  if (options.samples > kMaxOraclePoints) {
    throw Error(ErrorKind::BoxTooLarge,
                "sample count exceeds " + std::to_string(kMaxOraclePoints));
  }

  const DecompositionGraph g = standard_graph(2);
  BoxSampler sampler(options.seed);
  std::uint64_t valid = 0;
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const GlobalCoordinate c =
        (i % 2 == 0) ? uniform_sample(sampler, g, options) : targeted_sample(sampler, g, options);
    ++report.checked;
    const bool expected = oracle_theta_member(g, c);
    if (theta_check(g, c) != expected) {
      report.record("theta_check == oracle", flatten(c));
      continue;
    }
    if (expected) {
      ++valid;
      try {
        const SurfaceWebDescriptor w = reconstruct(g, c);
        if (kappa(w) != c) report.record("kappa(reconstruct(c)) == c", flatten(c));
      } catch (const std::exception&) {
        report.record("reconstruct threw on a Theta member", flatten(c));
      }
    } else {
      try {
        reconstruct(g, c);
        report.record("reconstruct accepted a non-member", flatten(c));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInTheta) {
          report.record("reconstruct raised the wrong error", flatten(c));
        }
      }
    }
  }
  report.counts["theta_valid"] = valid;
  report.counts["theta_invalid"] = report.checked - valid;
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace sl3web
