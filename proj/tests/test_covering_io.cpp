#include <doctest.h>

#include "covrough/covering_io.hpp"
#include "covrough/oracle.hpp"
#include "helpers.hpp"

using namespace covrough;

namespace {

std::filesystem::path fixture(const char* name) { return std::filesystem::path(COVROUGH_FIXTURES) / name; }

}  // namespace

TEST_CASE("render_covering emits canonical order with universe-ordered members") {
  const auto c = parse_covering(R"({"universe": ["1","2","3"], "blocks": [["3"],["2","1"],["1"]]})");
  CHECK(render_covering(c) == "{\"universe\":[\"1\",\"2\",\"3\"],\"blocks\":[[\"1\"],[\"1\",\"2\"],[\"3\"]]}\n");
}

TEST_CASE("render then parse is the identity on every covering of 4 elements") {
  auto stream = enumerate_coverings(4);
  while (auto c = stream.next()) REQUIRE(parse_covering(render_covering(*c)) == *c);
}

TEST_CASE("round trip keeps arbitrary labels") {
  const auto c = load_covering(fixture("labels.json"));
  CHECK(parse_covering(render_covering(c)) == c);
  CHECK(c.universe().names() == std::vector<std::string>{"red", "green", "blue"});
}

TEST_CASE("parser errors") {
  auto kind = [](const char* name) {
    try {
      load_covering(fixture(name));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::EmptyUniverse;
  };
  CHECK(kind("not_a_cover.json") == ErrorKind::NotACover);
  CHECK(kind("duplicate_block.json") == ErrorKind::DuplicateBlock);
  CHECK(kind("empty_block.json") == ErrorKind::EmptyBlock);
  CHECK(kind("unknown_element.json") == ErrorKind::UnknownElement);
  CHECK(kind("malformed.json") == ErrorKind::MalformedInput);
  CHECK(kind("does_not_exist.json") == ErrorKind::MalformedInput);

  CHECK_THROWS_AS(parse_covering(R"({"blocks": [["1"]]})"), Error);
  CHECK_THROWS_AS(parse_covering(R"({"universe": ["1"], "blocks": [[1]]})"), Error);
  CHECK_THROWS_AS(parse_covering(R"({"universe": [], "blocks": []})"), Error);
  CHECK_THROWS_AS(parse_covering(R"([1,2])"), Error);
}

TEST_CASE("unknown element message names the block") {
  try {
    load_covering(fixture("unknown_element.json"));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.block_index() == 1);
    CHECK(std::string(e.what()).find("block 1") != std::string::npos);
    CHECK(std::string(e.what()).find("'c'") != std::string::npos);
  }
}
