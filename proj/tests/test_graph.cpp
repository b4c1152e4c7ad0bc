#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qperc/errors.hpp"
#include "qperc/graph.hpp"

using namespace qperc;

namespace {

// Count k-cycles by DFS from the smallest vertex of the cycle; each cycle is
// found twice (two orientations).
long count_cycles(const Graph& g, int k) {
    long found = 0;
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(g.size()), 0);
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (static_cast<int>(path.size()) == k) {
            if (g.has_edge(v, start)) ++found;
            return;
        }
        for (int w : g.neighbors(v)) {
            if (w <= start || used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            dfs(start, w);
            path.pop_back();
            used[static_cast<size_t>(w)] = 0;
        }
    };
    for (int v = 0; v < g.size(); ++v) {
        used[static_cast<size_t>(v)] = 1;
        path = {v};
        dfs(v, v);
        used[static_cast<size_t>(v)] = 0;
    }
    return found / 2;
}

}  // namespace

TEST_CASE("graph invariants") {
    auto g = Graph::petersen();
    CHECK(g.size() == 10);
    CHECK(g.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    for (auto [u, v] : g.edges()) {
        CHECK(g.has_edge(u, v));
        CHECK(g.has_edge(v, u));
    }
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    RngStream rng = RngStream::keyed(3, 3);
    auto g = Graph::random_regular(30, 3, rng);
    std::stringstream ss;
    g.save_edge_list(ss);
    auto h = Graph::load_edge_list(ss);
    CHECK(h.size() == g.size());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("random regular") {
    RngStream rng = RngStream::keyed(11, 0);
    SUBCASE("K4 is the unique 3-regular graph on 4 vertices") {
        auto g = Graph::random_regular(4, 3, rng);
        CHECK(g.edge_count() == 6);
        for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    }
    SUBCASE("degrees") {
        auto g = Graph::random_regular(1000, 3, rng);
        for (int v = 0; v < g.size(); ++v) CHECK(g.degree(v) == 3);
    }
    SUBCASE("parity error") {
        CHECK_THROWS_AS(Graph::random_regular(5, 3, rng), std::invalid_argument);
    }
    SUBCASE("cycle counts match the Poisson limit") {
        // E[#k-cycles] -> (d-1)^k / (2k) for random d-regular graphs.
        const int reps = 100, n = 1000, d = 3;
        double sum3 = 0, sum4 = 0, sum5 = 0;
        for (int r = 0; r < reps; ++r) {
            RngStream s = RngStream::keyed(500, static_cast<std::uint64_t>(r));
            auto g = Graph::random_regular(n, d, s);
            sum3 += count_cycles(g, 3);
            sum4 += count_cycles(g, 4);
            sum5 += count_cycles(g, 5);
        }
        auto check = [&](double sum, int k) {
            double lambda = std::pow(d - 1.0, k) / (2.0 * k);
            double se = std::sqrt(lambda / reps);
            CHECK(std::abs(sum / reps - lambda) < 3 * se + 0.05);
        };
        check(sum3, 3);
        check(sum4, 4);
        check(sum5, 5);
    }
}

TEST_CASE("percolate") {
    auto k4 = Graph::complete(4);
    RngStream rng = RngStream::keyed(42, 1);
    CHECK(percolate(k4, 1.0, rng).edge_count() == 6);
    CHECK(percolate(k4, 0.0, rng).edge_count() == 0);
    CHECK(percolate(k4, 0.0, rng).size() == 4);

    SUBCASE("edge count moments match Binomial(6, 1/2)") {
        const int trials = 10000;
        double sum = 0, sum2 = 0;
        for (int t = 0; t < trials; ++t) {
            RngStream s = RngStream::keyed(600, static_cast<std::uint64_t>(t));
            double m = static_cast<double>(percolate(k4, 0.5, s).edge_count());
            sum += m;
            sum2 += m * m;
        }
        double mean = sum / trials;
        double var = sum2 / trials - mean * mean;
        CHECK(std::abs(mean - 3.0) < 3 * std::sqrt(1.5 / trials));
        CHECK(std::abs(var - 1.5) < 0.15);
    }
    SUBCASE("same seed, same outcome") {
        RngStream a = RngStream::keyed(7, 7), b = RngStream::keyed(7, 7);
        auto g = Graph::cycle(50);
        CHECK(percolate(g, 0.6, a).edges() == percolate(g, 0.6, b).edges());
    }
    SUBCASE("retention frequency is uniform across edges") {
        // chi-square over the 6 edges of K4 at p = 0.5, 10^4 trials.
        const int trials = 10000;
        std::map<std::pair<int, int>, int> kept;
        for (int t = 0; t < trials; ++t) {
            RngStream s = RngStream::keyed(601, static_cast<std::uint64_t>(t));
            for (auto e : percolate(k4, 0.5, s).edges()) kept[e]++;
        }
        double chi2 = 0.0;
        for (auto [e, c] : kept) {
            double expect = trials * 0.5;
            chi2 += (c - expect) * (c - expect) / (expect * 0.5);
        }
        CHECK(kept.size() == 6);
        CHECK(chi2 < 22.5);  // chi2_6 at p ~ 0.999
    }
}

TEST_CASE("ball") {
    auto c10 = Graph::cycle(10);
    CHECK(ball(c10, 3, 0).graph.size() == 1);
    auto b4 = ball(c10, 0, 4);
    CHECK(b4.graph.size() == 9);
    CHECK(b4.graph.edge_count() == 8);  // a path
    auto b5 = ball(c10, 0, 5);
    CHECK(b5.graph.size() == 10);
    CHECK(b5.graph.edge_count() == 10);  // the cycle itself

    SUBCASE("BFS depths are reproduced inside the ball") {
        RngStream rng = RngStream::keyed(10, 10);
        auto g = Graph::random_regular(200, 3, rng);
        auto b = ball(g, 17, 3);
        auto again = ball(b.graph, 0, 3);
        CHECK(again.graph.size() == b.graph.size());
        CHECK(again.depth == b.depth);
    }
}

TEST_CASE("tree ball test") {
    auto c10 = Graph::cycle(10);
    CHECK(tree_ball_test(c10, 0, 4, 1));
    CHECK(!tree_ball_test(c10, 0, 5, 1));

    auto pet = Graph::petersen();
    CHECK(tree_ball_test(pet, 0, 1, 2));
    CHECK(!tree_ball_test(pet, 0, 2, 2));

    SUBCASE("regular graph: test reduces to the ball being a tree") {
        RngStream rng = RngStream::keyed(6, 6);
        auto g = Graph::random_regular(400, 3, rng);
        for (int v = 0; v < 50; ++v) {
            auto b = ball(g, v, 3);
            bool is_tree = b.graph.edge_count() == b.graph.size() - 1;
            CHECK(tree_ball_test(g, v, 3, 2) == is_tree);
        }
    }
}

TEST_CASE("ball report") {
    SUBCASE("cycle") {
        auto r = ball_report(Graph::cycle(20), 3, 1);
        for (int v = 0; v < 20; ++v) {
            CHECK(r.n_h[static_cast<size_t>(v)] == 7);
            CHECK(r.is_target_ball[static_cast<size_t>(v)] == 1);
        }
        CHECK(r.b_count == 0);
        CHECK(r.m_h == doctest::Approx(7.0));
    }
    SUBCASE("K4 at h=1") {
        auto r = ball_report(Graph::complete(4), 1, 2);
        for (int v = 0; v < 4; ++v) CHECK(r.n_h[static_cast<size_t>(v)] == 4);
        CHECK(r.m_h == doctest::Approx(4.0));
        CHECK(r.b_count == 4);
    }
    SUBCASE("quadratic mean dominates the arithmetic mean") {
        RngStream rng = RngStream::keyed(9, 9);
        auto g = percolate(Graph::random_regular(300, 3, rng), 0.7, rng);
        auto r = ball_report(g, 2, 2);
        double avg = 0;
        for (int x : r.n_h) avg += x;
        avg /= g.size();
        CHECK(r.m_h >= avg - 1e-12);
    }
    SUBCASE("sparse random regular graph has few failing vertices") {
        // Poisson cycle-count limit: vertices within distance h of a short
        // cycle are rare at n = 2000.
        const int reps = 20;
        double total = 0;
        for (int r = 0; r < reps; ++r) {
            RngStream s = RngStream::keyed(700, static_cast<std::uint64_t>(r));
            auto g = Graph::random_regular(2000, 3, s);
            total += static_cast<double>(ball_report(g, 3, 2).b_count);
        }
        CHECK(total / reps < 250.0);
        CHECK(total / reps > 0.0);
    }
}

TEST_CASE("girth") {
    CHECK(girth(Graph::cycle(10)) == 10);
    CHECK(girth(Graph::petersen()) == 5);
    CHECK(girth(Graph::complete(4)) == 3);
    CHECK(!girth(Graph::path(6)).has_value());
    CHECK(!girth(Graph::star(4)).has_value());
    CHECK(girth(Graph::cycle(3)) == 3);
}

TEST_CASE("named graph builder") {
    RngStream rng = RngStream::keyed(1, 1);
    CHECK(build_named_graph("cycle:6", rng).size() == 6);
    CHECK(build_named_graph("petersen", rng).edge_count() == 15);
    CHECK(build_named_graph("random_regular:20:3", rng).degree(0) == 3);
    CHECK_THROWS_AS(build_named_graph("torus:3", rng), std::invalid_argument);
}
