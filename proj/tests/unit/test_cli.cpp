#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "hgc/io.hpp"

using namespace hgc;

namespace {

const std::string kC5 = R"({"vertices":["a","b","c","d","e"],"edges":[["a","b"],["b","c"],["c","d"],["d","e"],["a","e"]]})";

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string with(const std::string& base, const std::string& key, const std::string& value) {
  Json j = Json::parse(base);
  j[key] = Json::parse(value);
  return j.dump();
}

const std::string kLists = R"({"a":[1,2],"b":[1,2],"c":[1,2],"d":[1,2],"e":[1,2]})";
const std::string kF = R"({"a":[1,1],"b":[1,1],"c":[1,1],"d":[1,1],"e":[1,1]})";

}  // namespace

TEST_CASE("parse_input") {
  std::istringstream in(kC5);
  cli::Input i = cli::parse_input(in, "c5");
  CHECK(i.hypergraph.order() == 5);
  CHECK_FALSE(i.lists);

  std::istringstream bad(R"({"vertices":["a","b"],"edges":[["a"]]})");
  try {
    cli::parse_input(bad, "x");
    FAIL("expected InputError");
  } catch (const cli::InputError& e) {
    CHECK(std::string(e.what()).find("incidence cardinality < 2") != std::string::npos);
  }

  std::istringstream broken("{\"vertices\": [");
  CHECK_THROWS_AS(cli::parse_input(broken, "x"), cli::InputError);

  std::istringstream unknown(with(kC5, "lists", R"({"a":[1],"b":[1],"c":[1],"d":[1],"e":[1],"q":[1]})"));
  CHECK_THROWS_AS(cli::parse_input(unknown, "x"), cli::InputError);
}

TEST_CASE("round trip through the interchange format") {
  std::istringstream in(kC5);
  const Hypergraph h = cli::parse_input(in, "c5").hypergraph;
  const std::string canonical = to_json(h).dump();
  std::istringstream again(canonical);
  CHECK(to_json(cli::parse_input(again, "again").hypergraph).dump() == canonical);
}

TEST_CASE("color reports uncolorable C5 with two colors") {
  Result r = call({"color", "--property", "O"}, with(kC5, "lists", kLists));
  REQUIRE(r.code == 0);
  CHECK(r.json()["colorable"] == false);
  CHECK(r.json()["coloring"].is_null());

  r = call({"color"}, kC5);
  REQUIRE(r.code == 0);
  CHECK(r.json()["chi"] == 3);
  CHECK(r.json()["chi_list"] == 3);
}

TEST_CASE("hardpair on C5 with f = (1,1)") {
  Result r = call({"hardpair"}, with(kC5, "f", kF));
  REQUIRE(r.code == 0);
  Json cert = r.json()["certificate"];
  CHECK(cert["type"] == "C");
  CHECK(cert["t"] == 1);
  CHECK(cert["n"] == 5);
  CHECK(cert["pair"] == Json::array({1, 2}));
  CHECK(r.json()["certificate_valid"] == true);
}

TEST_CASE("blocks and bricks") {
  const std::string bowtie = R"({"vertices":["a","b","c","d","e"],"edges":[["a","b"],["a","c"],["b","c"],["c","d"],["c","e"],["d","e"]]})";
  Result r = call({"blocks"}, bowtie);
  REQUIRE(r.code == 0);
  CHECK(r.json()["blocks"].size() == 2);
  CHECK(r.json()["separating"] == Json::array({"c"}));
  r = call({"bricks"}, bowtie);
  CHECK(r.json()["blocks"][0]["brick"]["type"] == "K");
  CHECK(r.json()["brick"].is_null());
}

TEST_CASE("degeneracy") {
  Result r = call({"degeneracy", "--k", "2", "--k", "3"}, with(kC5, "f", kF));
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["degeneracy"] == 3);
  CHECK(j["strictly_degenerate"]["2"] == false);
  CHECK(j["strictly_degenerate"]["3"] == true);
  CHECK(j["f_partition"]["partitionable"] == false);
}

TEST_CASE("critical") {
  Result r = call({"critical", "--property", "O"}, with(kC5, "lists", kLists));
  REQUIRE(r.code == 0);
  CHECK(r.json()["critical"] == true);
  CHECK(r.json()["low_vertices"].size() == 5);
}

TEST_CASE("verify single instances") {
  Result r = call({"verify", "theorem3", "--property", "O"}, with(kC5, "lists", kLists));
  CHECK(r.code == 0);
  CHECK(r.json()["pass"] == true);
  r = call({"verify", "brooks", "--property", "O"}, kC5);
  CHECK(r.code == 0);
  CHECK(r.json()["report"]["clause"] == "tC");
  r = call({"verify", "theorem4"}, with(kC5, "f", kF));
  CHECK(r.code == 0);
  r = call({"verify", "sigma-lemmas", "--delta", "4"}, kC5);
  CHECK(r.code == 0);
  CHECK(r.json()["report"]["sigma"] == Json({{"num", 15}, {"den", 2}}));
}

TEST_CASE("verify sweeps") {
  Result r = call({"verify", "theorem4", "--bounds", "order=4"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["instances"].get<std::size_t>() > 0);
  CHECK(r.json()["violations"].empty());

  r = call({"verify", "theorem3", "--max-order", "4"});
  CHECK(r.code == 0);
  r = call({"verify", "theorem6", "--max-order", "4"});
  CHECK(r.code == 0);
  r = call({"verify", "sigma-lemmas", "--max-order", "7"});
  CHECK(r.code == 0);
  CHECK(r.json()["instances"].get<std::size_t>() > 0);
}

TEST_CASE("input errors exit with 2") {
  CHECK(call({"blocks"}, R"({"vertices":["a","b"],"edges":[["a"]]})").code == 2);
  CHECK(call({"blocks"}, "not json").code == 2);
  CHECK(call({"color", "--lists", "/nonexistent/lists.json"}, kC5).code == 2);
  CHECK(call({"hardpair"}, kC5).code == 2);
  CHECK(call({"verify", "theorem9"}, kC5).code == 2);
  CHECK(call({"verify", "gallai-bound", "--property", "O"}, with(kC5, "lists", kLists)).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("enumerate emits one line per class") {
  Result r = call({"enumerate", "--max-order", "3", "--simple", "--connected"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line);) {
    CHECK(Json::accept(line));
    ++count;
  }
  CHECK(count == 4);
}

TEST_CASE("reports are deterministic across thread counts") {
  const std::vector<std::string> args = {"verify", "theorem6", "--max-order", "4"};
  const std::string one = call(args).out;
  setenv("HGC_THREADS", "3", 1);
  CHECK(cli::thread_count() == 3);
  const std::string three = call(args).out;
  unsetenv("HGC_THREADS");
  CHECK(one == three);
}
