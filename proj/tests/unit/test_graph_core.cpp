#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "sublin/generators.hpp"
#include "sublin/oracle.hpp"

using namespace sublin;

namespace {
Graph gen(const std::string& spec, std::uint64_t seed = 1, ListOrder order = ListOrder::PerVertexRandom) {
    return generate(GeneratorSpec::parse(spec), Seed(seed), order);
}
}  // namespace

TEST_CASE("stats of small named graphs") {
    auto k4 = stats(gen("complete:n=4"));
    CHECK(k4.n == 4);
    CHECK(k4.m == 6);
    CHECK(k4.max_degree == 3);
    CHECK(k4.avg_degree == doctest::Approx(3.0));

    auto pet = stats(gen("petersen"));
    CHECK(pet.n == 10);
    CHECK(pet.m == 15);
    CHECK(pet.max_degree == 3);
    CHECK(pet.avg_degree == doctest::Approx(3.0));

    auto empty = stats(gen("empty:n=8"));
    CHECK(empty.m == 0);
    CHECK(empty.avg_degree == 0.0);
}

TEST_CASE("star has one center and unit-degree leaves") {
    auto g = gen("star:leaves=5");
    CHECK(g.n() == 6);
    CHECK(g.degree(0) == 5);
    for (Vertex v = 1; v < 6; ++v) CHECK(g.degree(v) == 1);
}

TEST_CASE("list query on an isolated vertex returns none and is counted") {
    auto g = gen("empty:n=3");
    QueryCounters c;
    ListOracle list(g, c);
    CHECK_FALSE(list.query(1, 1).has_value());
    CHECK(c.list == 1);
    CHECK(c.matrix == 0);
}

TEST_CASE("each oracle call costs exactly one query") {
    auto g = gen("cycle:n=7");
    QueryCounters c;
    MatrixOracle mat(g, c);
    ListOracle list(g, c);
    CHECK(mat.query(0, 1));
    CHECK_FALSE(mat.query(0, 3));
    CHECK(c.matrix == 2);
    CHECK(list.query(0, 1).has_value());
    CHECK(list.query(0, 2).has_value());
    CHECK_FALSE(list.query(0, 3).has_value());
    CHECK(c.list == 3);
}

TEST_CASE("invalid queries are usage errors and cost nothing") {
    auto g = gen("path:n=4");
    QueryCounters c;
    MatrixOracle mat(g, c);
    ListOracle list(g, c);
    CHECK_THROWS_AS(mat.query(2, 2), UsageError);
    CHECK_THROWS_AS(mat.query(0, 9), UsageError);
    CHECK_THROWS_AS(list.query(0, 0), UsageError);
    CHECK_THROWS_AS(list.query(0, 5), UsageError);
    CHECK(c.total() == 0);
}

TEST_CASE("list order: global is sorted, per-vertex random is a permutation") {
    auto global = gen("complete:n=9", 4, ListOrder::Global);
    auto random = gen("complete:n=9", 4, ListOrder::PerVertexRandom);
    bool some_unsorted = false;
    for (Vertex v = 0; v < 9; ++v) {
        auto a = global.neighbors(v);
        CHECK(std::is_sorted(a.begin(), a.end()));
        std::vector<Vertex> b(random.neighbors(v).begin(), random.neighbors(v).end());
        some_unsorted = some_unsorted || !std::is_sorted(b.begin(), b.end());
        std::sort(b.begin(), b.end());
        CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }
    CHECK(some_unsorted);
}

TEST_CASE("hidden perfect matching layout") {
    auto g = gen("hidden-perfect-matching:n=10,eps=0.4", 7);
    REQUIRE(g.n() == 22);  // |L| = |R| = 10, |U| = 2
    for (Vertex l = 0; l < 10; ++l) {
        std::size_t into_r = 0;
        for (Vertex w : g.neighbors(l)) into_r += (w >= 10 && w < 20);
        CHECK(into_r == 1);
    }
    for (Vertex r = 10; r < 20; ++r) {
        std::size_t into_l = 0;
        for (Vertex w : g.neighbors(r)) into_l += (w < 10);
        CHECK(into_l == 1);
    }
    for (Vertex u = 20; u < 22; ++u) {
        CHECK(g.degree(u) == 20);
        CHECK_FALSE(g.has_edge(20, 21));
    }
    CHECK(g.m() == 10 + 2 * 20);
}

TEST_CASE("d-regular graphs are simple and regular") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = gen("d-regular:n=60,d=5", seed);
        for (Vertex v = 0; v < 60; ++v) CHECK(g.degree(v) == 5);
    }
    CHECK_THROWS_AS(gen("d-regular:n=7,d=3"), UsageError);
}

TEST_CASE("generation is deterministic in the seed") {
    auto a = gen("erdos-renyi:n=50,p=0.2", 11);
    auto b = gen("erdos-renyi:n=50,p=0.2", 11);
    auto c = gen("erdos-renyi:n=50,p=0.2", 12);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());
    for (Vertex v = 0; v < 50; ++v) {
        auto x = a.neighbors(v), y = b.neighbors(v);
        CHECK(std::equal(x.begin(), x.end(), y.begin(), y.end()));
    }
}

TEST_CASE("random bipartite has no edge inside a side") {
    auto g = gen("random-bipartite:left=12,right=9,p=0.5", 3);
    for (const auto& e : g.edges()) {
        CHECK(e.u < 12);
        CHECK(e.v >= 12);
    }
}

TEST_CASE("generator parameter errors") {
    CHECK_THROWS_AS(gen("no-such-kind:n=4"), UsageError);
    CHECK_THROWS_AS(gen("complete"), UsageError);
    CHECK_THROWS_AS(gen("complete:n=4,q=1"), UsageError);
    CHECK_THROWS_AS(gen("erdos-renyi:n=4,p=1.5"), UsageError);
    CHECK_THROWS_AS(gen("path:n=x"), UsageError);
}

TEST_CASE("graph file round trip with comments") {
    std::istringstream in("# a triangle plus a pendant\n4 4\n0 1\n1 2 # inline\n0 2\n\n2 3\n");
    auto g = read_graph(in, ListOrder::Global);
    CHECK(g.n() == 4);
    CHECK(g.m() == 4);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream again(out.str());
    CHECK(read_graph(again).edges() == g.edges());
}

TEST_CASE("malformed graph files are rejected") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_graph(in);
    };
    CHECK_THROWS_AS(parse(""), UsageError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), UsageError);
    CHECK_THROWS_AS(parse("3 1\n1 0\n"), UsageError);
    CHECK_THROWS_AS(parse("3 1\n0 3\n"), UsageError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), UsageError);
    CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), UsageError);
    CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), UsageError);
}

TEST_CASE("seed derivation") {
    Seed s(42);
    CHECK(s.derive("edbs") == Seed(42).derive("edbs"));
    CHECK_FALSE(s.derive("edbs") == s.derive("classify"));
    CHECK_FALSE(s.derive(0) == s.derive(1));
    CHECK_FALSE(Seed(1).derive("x") == Seed(2).derive("x"));
    std::set<std::uint64_t> values;
    for (std::uint64_t i = 0; i < 1000; ++i) values.insert(s.derive(i).value());
    CHECK(values.size() == 1000);
}
