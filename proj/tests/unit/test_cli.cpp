#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sl3web/json_io.hpp"

using namespace sl3web;
using sl3web::cli::CommandResult;

namespace {

CommandResult call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return cli::run(args, in);
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "sl3web_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

constexpr const char* kZeroShear =
    R"({"x11":0,"x12":0,"x21":0,"x22":0,"x31":0,"x32":0,"xv":0,"xvp":0})";
constexpr const char* kNonIntegral =
    R"({"n11":1,"n12":0,"n21":0,"n22":0,"n31":0,"n32":0,"tP":0,"hP":0})";

}  // namespace

TEST_CASE("pants subcommands") {
  auto r = call({"pants", "invert"}, kNonIntegral);
  CHECK(r.exit_code == 1);
  CHECK(r.payload == "{\"error\":\"NonIntegral\",\"field\":\"x11\"}\n");

  r = call({"pants", "forward"}, kZeroShear);
  CHECK(r.exit_code == 0);
  CHECK(r.payload == "{\"n11\":0,\"n12\":0,\"n21\":0,\"n22\":0,\"n31\":0,\"n32\":0,\"tP\":0,"
                     "\"hP\":0}\n");

  r = call({"pants", "forward"},
           R"({"x11":-1,"x12":0,"x21":0,"x22":0,"x31":0,"x32":0,"xv":0,"xvp":0})");
  CHECK(r.exit_code == 1);
  CHECK(parse_json(r.payload).at("error") == "ConstraintViolation");

  r = call({"pants", "check"}, kZeroShear);
  CHECK(r.exit_code == 0);
  CHECK(parse_json(r.payload).at("set") == "Lambda");
  r = call({"pants", "check"}, kNonIntegral);
  CHECK(r.exit_code == 1);
  CHECK(parse_json(r.payload).at("detail") == "row_balance_mod3");
  r = call({"pants", "check"}, R"({"n11":1,"n12":0,"n21":0,"n22":0,"n31":0,"n32":1,"tP":0,"hP":1})");
  CHECK(r.exit_code == 0);
}

TEST_CASE("malformed input exits 2") {
  auto r = call({"pants", "forward"}, "{not json");
  CHECK(r.exit_code == 2);
  CHECK(parse_json(r.payload).at("error") == "Malformed");
  r = call({"pants", "forward"}, R"({"x11":1.5})");
  CHECK(r.exit_code == 2);
  r = call({"no-such-command"});
  CHECK(r.exit_code == 2);
  r = call({"graph", "standard"});
  CHECK(r.exit_code == 2);
  r = call({"pants", "forward", "--in", "/nonexistent/file.json"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("annulus and torus subcommands") {
  auto r = call({"annulus", "canonical"}, R"({"n1":2,"n2":1,"t1":0,"t2":0})");
  CHECK(r.exit_code == 0);
  CHECK(parse_json(r.payload).at("word0") == "++-");
  r = call({"annulus", "validate"}, R"({"n1":1,"n2":1,"t1":0,"t2":0,"word0":"+-","word1":"++"})");
  CHECK(r.exit_code == 1);
  CHECK(parse_json(r.payload).at("error") == "WordMismatch");
  r = call({"torus", "check"}, R"({"n1":0,"n2":0,"t1":-1,"t2":0})");
  CHECK(r.exit_code == 1);
  CHECK(parse_json(r.payload).at("error") == "ImageViolation");
  r = call({"torus", "reconstruct"}, R"({"n1":1,"n2":1,"t1":0,"t2":0})");
  CHECK(r.exit_code == 0);
  CHECK(parse_json(r.payload).at("kind") == "strict-braid");
}

TEST_CASE("graph, theta, reconstruct and kappa through files") {
  const auto graph_path = scratch("g2.json");
  auto r = call({"graph", "standard", "--genus", "2", "--out", graph_path.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.out_path == graph_path.string());
  CHECK(std::filesystem::exists(graph_path));
  CHECK_FALSE(std::filesystem::exists(graph_path.string() + ".tmp"));

  r = call({"graph", "validate", "--in", graph_path.string()});
  CHECK(r.exit_code == 0);

  const auto coords_path = scratch("circles.json");
  write_file(coords_path, R"({"n1":[0,0,0],"n2":[0,0,0],"t1":[1,1,1],"t2":[1,1,1],"tP":[0,0],"hP":[0,0]})");
  r = call({"theta", "--graph", graph_path.string(), "--coords", coords_path.string()});
  CHECK(r.exit_code == 0);
  CHECK(parse_json(r.payload).at("member") == true);

  const auto web_path = scratch("web.json");
  r = call({"reconstruct", "--graph", graph_path.string(), "--coords", coords_path.string(),
            "--out", web_path.string()});
  CHECK(r.exit_code == 0);

  r = call({"kappa", "--descriptor", web_path.string()});
  CHECK(r.exit_code == 0);
  CHECK(from_json<GlobalCoordinate>(parse_json(r.payload)) ==
        from_json<GlobalCoordinate>(parse_json(
            R"({"n1":[0,0,0],"n2":[0,0,0],"t1":[1,1,1],"t2":[1,1,1],"tP":[0,0],"hP":[0,0]})")));
  r = call({"kappa", "--graph", graph_path.string(), "--descriptor", web_path.string()});
  CHECK(r.exit_code == 0);

  const auto bad_path = scratch("bad.json");
  write_file(bad_path, R"({"n1":[0,0,0],"n2":[0,0,0],"t1":[1,1,1],"t2":[1,1,1],"tP":[0,0],"hP":[1,0]})");
  r = call({"theta", "--graph", graph_path.string(), "--coords", bad_path.string()});
  CHECK(r.exit_code == 1);
  CHECK(parse_json(r.payload).at("error") == "NotInTheta");
  r = call({"reconstruct", "--graph", graph_path.string(), "--coords", bad_path.string()});
  CHECK(r.exit_code == 1);
  CHECK(parse_json(r.payload).at("error") == "NotInTheta");

  const auto short_path = scratch("short.json");
  write_file(short_path, R"({"n1":[0,0],"n2":[0,0,0],"t1":[1,1,1],"t2":[1,1,1],"tP":[0,0],"hP":[0,0]})");
  r = call({"theta", "--graph", graph_path.string(), "--coords", short_path.string()});
  CHECK(r.exit_code == 2);
  CHECK(parse_json(r.payload).at("error") == "LengthMismatch");
}

TEST_CASE("oracle subcommands") {
  auto r = call({"oracle", "pants", "--bound", "1"});
  CHECK(r.exit_code == 0);
  const Json j = parse_json(r.payload);
  CHECK(j.at("checked") == 6561);
  CHECK(j.at("failures").empty());
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(call({"oracle", "pants", "--bound", "1"}).payload == r.payload);

  r = call({"oracle", "pants", "--bound", "1", "--timing"});
  CHECK(parse_json(r.payload).contains("elapsed_ms"));

  r = call({"oracle", "torus", "--bound", "2"});
  CHECK(r.exit_code == 0);
  CHECK(parse_json(r.payload).at("checked") == 225);

  r = call({"oracle", "genus2", "--samples", "500", "--seed", "3"});
  CHECK(r.exit_code == 0);
  CHECK(parse_json(r.payload).at("seed") == 3);

  r = call({"oracle", "pants", "--bound", "9"});
  CHECK(r.exit_code == 2);
  CHECK(parse_json(r.payload).at("error") == "BoxTooLarge");
}
