// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Runtime limits are part of the criteria and are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sl3web/annulus_webs.hpp"
#include "sl3web/decomposition.hpp"
#include "sl3web/global_coords.hpp"
#include "sl3web/oracle.hpp"
#include "sl3web/pants_coords.hpp"

using namespace sl3web;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

template <class F>
void for_each_tuple(Int n_bound, Int t_bound, Int h_bound, F&& f) {
  std::array<Int, 8> v{0, 0, 0, 0, 0, 0, -t_bound, -h_bound};
  const std::array<Int, 8> lo = v;
  const std::array<Int, 8> hi = {n_bound, n_bound, n_bound, n_bound, n_bound, n_bound,
                                 t_bound, h_bound};
  while (true) {
    f(PantsTuple::from_values(v));
    std::size_t i = 8;
    while (i > 0 && v[i - 1] == hi[i - 1]) {
      v[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) return;
    ++v[i - 1];
  }
}

template <class F>
void for_each_shear(Int bound, F&& f) {
  std::array<Int, 8> v{};
  v.fill(-bound);
  while (true) {
    f(ShearVector::from_values(v));
    std::size_t i = 8;
    while (i > 0 && v[i - 1] == bound) v[--i] = -bound;
    if (i == 0) return;
    ++v[i - 1];
  }
}

std::string str(std::uint64_t v) { return std::to_string(v); }

Outcome pants_inverse_box(Int bound) {
  std::uint64_t points = 0;
  std::uint64_t members = 0;
  std::uint64_t bad = 0;
  for_each_shear(bound, [&](const ShearVector& x) {
    ++points;
    if (!lambda_check(x)) return;
    ++members;
    if (invert(forward(x)) != x) ++bad;
  });
  return {bad == 0, str(points) + " points, " + str(members) + " in Lambda, " + str(bad) +
                        " mismatches"};
}

Outcome image_characterization() {
  std::uint64_t points = 0;
  std::uint64_t members = 0;
  std::uint64_t bad = 0;
  for_each_tuple(4, 6, 6, [&](const PantsTuple& t) {
    ++points;
    bool exact = false;
    try {
      const ShearVector x = invert(t);
      exact = lambda_check(x) && forward(x) == t;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonIntegral && e.kind() != ErrorKind::NotInLambda) ++bad;
    }
    const bool member = image_check(t);
    members += member;
    if (member != exact) ++bad;
  });
  return {bad == 0 && members > 0, str(points) + " tuples, " + str(members) + " in image, " +
                                       str(bad) + " counterexamples"};
}

Outcome cyclic_invariance() {
  std::uint64_t points = 0;
  std::uint64_t bad = 0;
  for_each_tuple(4, 6, 6, [&](const PantsTuple& t) {
    ++points;
    const PantsTuple r = rotate(t);
    if (image_check(r) != image_check(t)) ++bad;
    if (rotate(rotate(r)) != t) ++bad;
  });
  return {bad == 0, str(points) + " tuples, " + str(bad) + " counterexamples"};
}

Outcome congruence_forms() {
  std::uint64_t points = 0;
  std::uint64_t bad = 0;
  for_each_tuple(4, 6, 6, [&](const PantsTuple& t) {
    ++points;
    if (height_residue_signed(t) != height_residue_doubled(t)) ++bad;
  });
  return {bad == 0, str(points) + " tuples, " + str(bad) + " disagreements"};
}

Outcome torus_image() {
  std::uint64_t points = 0;
  std::uint64_t accepted = 0;
  std::uint64_t bad = 0;
  for (Int n1 = 0; n1 <= 3; ++n1) {
    for (Int n2 = 0; n2 <= 3; ++n2) {
      for (Int t1 = -3; t1 <= 3; ++t1) {
        for (Int t2 = -3; t2 <= 3; ++t2) {
          ++points;
          const bool expected = (n1 != 0 || t1 >= 0) && (n2 != 0 || t2 >= 0);
          try {
            const TorusCoordinate c = torus_kappa(n1, n2, t1, t2);
            ++accepted;
            if (!expected) ++bad;
            const AnnulusDescriptor d = torus_reconstruct(c);
            if (torus_kappa(d) != c || d.word0() != d.word1()) ++bad;
          } catch (const Error& e) {
            if (expected || e.kind() != ErrorKind::ImageViolation) ++bad;
          }
        }
      }
    }
  }
  return {bad == 0, str(points) + " points, " + str(accepted) + " accepted, " + str(bad) +
                        " counterexamples"};
}

Outcome genus2_round_trip() {
  Genus2Options opts;
  opts.samples = 10'000;
  const OracleReport r = verify_genus2(opts);
  const auto valid = r.counts.at("theta_valid");
  const auto invalid = r.counts.at("theta_invalid");
  return {r.clean() && r.checked >= 10'000 && valid > 0 && invalid > 0,
          str(r.checked) + " samples (seed " + str(*r.seed) + "), " + str(valid) +
              " Theta-valid round trips, " + str(invalid) + " rejected, " +
              str(r.failure_count) + " failures"};
}

Outcome dimension_identity() {
  std::string detail;
  bool ok = true;
  for (Int g = 2; g <= 6; ++g) {
    const auto d = GlobalCoordinate::zero(standard_graph(g)).dimension();
    ok = ok && d == static_cast<std::size_t>(16 * g - 16) &&
         coordinate_dimension(standard_graph(g)) == d;
    detail += (g == 2 ? "" : ", ") + std::string("g=") + std::to_string(g) + ":" +
              std::to_string(d);
  }
  return {ok, detail};
}

Outcome annulus_image() {
  std::uint64_t points = 0;
  std::uint64_t accepted = 0;
  std::uint64_t bad = 0;
  for (Int n1 = 0; n1 <= 3; ++n1) {
    for (Int n2 = 0; n2 <= 3; ++n2) {
      for (Int t1 = -3; t1 <= 3; ++t1) {
        for (Int t2 = -3; t2 <= 3; ++t2) {
          ++points;
          const TwistTuple t{n1, n2, t1, t2};
          const bool expected = (n1 != 0 || t1 >= 0) && (n2 != 0 || t2 >= 0);
          try {
            validate(t, BoundaryWord::block(n1, n2), BoundaryWord::block(n1, n2));
            ++accepted;
            if (!expected) ++bad;
            if (twist_coords(canonical_descriptor(t)) != t) ++bad;
          } catch (const Error& e) {
            if (expected || e.kind() != ErrorKind::ImageViolation) ++bad;
          }
        }
      }
    }
  }
  return {bad == 0, str(points) + " tuples, " + str(accepted) + " accepted, " + str(bad) +
                        " counterexamples"};
}

Outcome cli_golden() {
  struct Case {
    std::vector<std::string> args;
    std::string input;
    int exit_code;
    std::string payload;
  };
  const std::vector<Case> cases = {
      {{"pants", "invert"},
       R"({"n11":1,"n12":0,"n21":0,"n22":0,"n31":0,"n32":0,"tP":0,"hP":0})",
       1,
       "{\"error\":\"NonIntegral\",\"field\":\"x11\"}\n"},
      {{"pants", "forward"},
       R"({"x11":0,"x12":0,"x21":0,"x22":0,"x31":0,"x32":0,"xv":0,"xvp":0})",
       0,
       "{\"n11\":0,\"n12\":0,\"n21\":0,\"n22\":0,\"n31\":0,\"n32\":0,\"tP\":0,\"hP\":0}\n"},
      {{"oracle", "pants", "--bound", "1"},
       "",
       0,
       "{\"oracle\":\"pants\",\"box\":{\"shear_bound\":1},\"checked\":6561,\"counts\":{"
       "\"lambda_members\":1054,\"shear_points\":6561},\"failure_count\":0,\"failures\":[],"
       "\"seed\":null}\n"},
  };
  int good = 0;
  for (const Case& c : cases) {
    std::istringstream in1(c.input);
    std::istringstream in2(c.input);
    const auto first = cli::run(c.args, in1);
    const auto second = cli::run(c.args, in2);
    if (first.payload == second.payload && first.exit_code == second.exit_code &&
        first.payload == c.payload && first.exit_code == c.exit_code) {
      ++good;
    } else {
      std::fprintf(stderr, "golden mismatch for '%s': got exit %d payload %s", c.args[0].c_str(),
                   first.exit_code, first.payload.c_str());
    }
  }
  return {good == static_cast<int>(cases.size()),
          std::to_string(good) + "/" + std::to_string(cases.size()) +
              " cases byte-identical across two runs and equal to the frozen output"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "pants inverse exactness, box [-1,1]^8", 1.0, [] { return pants_inverse_box(1); }},
      {1, "pants inverse exactness, extended box [-3,3]^8", 60.0,
       [] { return pants_inverse_box(3); }},
      {2, "pants image characterization", 60.0, image_characterization},
      {3, "cyclic invariance of the image", 60.0, cyclic_invariance},
      {4, "congruence-form agreement", 60.0, congruence_forms},
      {5, "torus image and injectivity", 1.0, torus_image},
      {6, "genus-2 global round trip", 10.0, genus2_round_trip},
      {7, "dimension identity 16g-16", 60.0, dimension_identity},
      {8, "annulus image", 60.0, annulus_image},
      {9, "CLI golden outputs", 60.0, cli_golden},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.time_limit_s;
    const bool pass = out.pass && in_time;
    failed += !pass;
    std::printf("[%s] criterion %d: %s: %s (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL",
                c.id, c.title, out.summary.c_str(), secs, c.time_limit_s,
                in_time ? "" : ", EXCEEDED");
  }
  std::printf("%s: %d of %zu checks failed\n", failed ? "FAILED" : "ALL PASSED", failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
