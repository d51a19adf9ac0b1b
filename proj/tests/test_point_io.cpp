#include <doctest.h>

#include <sstream>

#include "pcdpe/point_io.hpp"

using namespace pcdpe;

TEST_SUITE("point_io") {

TEST_CASE("parses whitespace and comma separated rows with comments") {
  std::istringstream in(
      "# fixture\n"
      "x,y\n"
      "0.25, 0.5\n"
      "0.125\t0.75\n"
      "\n"
      "1e-3 2e-3\n");
  const PointTable t = read_point_table(in, "mem");
  REQUIRE(t.rows.size() == 3);
  CHECK(t.columns == 2);
  CHECK(t.rows[0][0] == 0.25);
  CHECK(t.rows[1][1] == 0.75);
  CHECK(t.rows[2][0] == 1e-3);
}

TEST_CASE("column mismatch names the line") {
  std::istringstream in("0.1 0.2\n0.3 0.4 0.5\n");
  try {
    read_point_table(in, "mem");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("mem:2") != std::string::npos);
  }
}

TEST_CASE("garbage after the header is an error with a line number") {
  std::istringstream in("0.1 0.2\nnot a number\n");
  try {
    read_point_table(in, "mem");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("non-finite coordinates are rejected") {
  std::istringstream in("0.1 0.2\ninf 0.3\n");
  CHECK_THROWS_AS(read_point_table(in, "mem"), ParseError);
}

TEST_CASE("round trip through write and read") {
  const std::vector<Point> pts{{0.123456789012345, -0.5}, {1.0 / 3.0, 2e-17}};
  std::ostringstream out;
  write_points(out, pts);
  std::istringstream in(out.str());
  const PointTable t = read_point_table(in, "mem");
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][0] == pts[0].x);
  CHECK(t.rows[1][1] == pts[1].y);
}

}  // TEST_SUITE
