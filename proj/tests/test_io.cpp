#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "meshmat/io.hpp"

using namespace meshmat;

TEST_CASE("graph parsing") {
    std::istringstream in(
        "# a triangle\n"
        "v 3\n"
        "e 0 1\n"
        "e 1 2\n"
        "\n"
        "e 2 0  # closing edge\n");
    const Multigraph g = parse_graph(in);
    CHECK(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edge(0).tail == 0);
    CHECK(g.edge(2).head == 0);
}

TEST_CASE("graph parse errors") {
    auto expect_failure = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_graph(in), ParseError);
    };
    expect_failure("e 0 1\n");              // edge before vertex count
    expect_failure("v 2\ne 0 5\n");         // endpoint out of range
    expect_failure("v 2\nq 0 1\n");         // unknown directive
    expect_failure("v 2\ne 0\n");           // truncated edge
    expect_failure("v 2\nv 3\n");           // duplicate header
    expect_failure("");                     // empty file
}

TEST_CASE("complex parsing") {
    std::istringstream in(
        "# degree 2 and 3 disks on a loop\n"
        "dim 2\n"
        "boundary 1 1 1\n"
        "0\n"
        "boundary 2 1 2\n"
        "2 3\n");
    const CWComplex x = parse_complex(in);
    CHECK(x.dimension() == 2);
    CHECK(x.cell_count(0) == 1);
    CHECK(x.cell_count(2) == 2);
    CHECK(x.boundary(2)(0, 1) == 3);
    CHECK(x.valid());
}

TEST_CASE("complex parse errors") {
    auto expect_failure = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_complex(in), ParseError);
    };
    expect_failure("boundary 1 1 1\n0\n");                      // missing dim
    expect_failure("dim 0\n");                                  // bad dimension
    expect_failure("dim 1\nboundary 2 1 1\n0\n");               // out-of-order block
    expect_failure("dim 1\nboundary 1 1 1\n");                  // missing entries
    expect_failure("dim 1\nboundary 1 1 1\n0\nstray\n");        // trailing tokens
    expect_failure("dim 2\nboundary 1 1 2\n0 0\nboundary 2 1 1\n2\n");  // shape mismatch
}

TEST_CASE("parsed graphs drive the library") {
    std::istringstream in("v 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    const Multigraph c4 = parse_graph(in);
    CHECK(c4.enumerate_spanning_trees().size() == 4);
}
