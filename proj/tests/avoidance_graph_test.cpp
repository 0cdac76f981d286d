#include "gfcodes/avoidance_graph.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace gfcodes;

namespace {

Word W(const std::string& text) { return word_from_string(text); }

std::set<std::string> strings(const std::vector<Word>& words) {
    std::set<std::string> out;
    for (const Word& w : words) out.insert(w.to_string());
    return out;
}

std::vector<Word> collect(const AvoidanceGraph& g) {
    std::vector<Word> out;
    for (const Word v : g.vertices()) out.push_back(v);
    return out;
}

}  // namespace

TEST(AvoidanceGraph, Vertices) {
    EXPECT_EQ(strings(collect(AvoidanceGraph::run_avoiding(3, 2))),
              (std::set<std::string>{"000", "001", "010", "100", "101"}));
    EXPECT_EQ(strings(collect(AvoidanceGraph::run_avoiding(2, 2))),
              (std::set<std::string>{"00", "01", "10"}));
    const AvoidanceGraph q3(3, W("1111"));
    EXPECT_TRUE(q3.is_cube());
    EXPECT_EQ(collect(q3).size(), 8u);
    EXPECT_EQ(q3.descriptor(), "Q3");
}

TEST(AvoidanceGraph, VerticesAscendingAndCapacity) {
    const auto v = collect(AvoidanceGraph::run_avoiding(12, 3));
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_EQ(v.size(), vertex_count(12, 3));
    EXPECT_THROW((void)AvoidanceGraph::run_avoiding(31, 2).vertices(), CapacityError);
}

TEST(AvoidanceGraph, Descriptors) {
    EXPECT_EQ(AvoidanceGraph::run_avoiding(7, 5).descriptor(), "Gamma7(1^5)");
    EXPECT_EQ(AvoidanceGraph::run_avoiding(7, 8).descriptor(), "Q7");
    EXPECT_EQ(AvoidanceGraph::run_avoiding(7, 40).descriptor(), "Q7");
    EXPECT_EQ(AvoidanceGraph(5, W("010")).descriptor(), "Gamma5(010)");
    EXPECT_EQ(AvoidanceGraph::cube(63).vertex_count(), std::uint64_t{1} << 63);
    EXPECT_TRUE(AvoidanceGraph::cube(63).contains(Word::ones(63)));
    EXPECT_THROW(AvoidanceGraph::run_avoiding(5, 0), RangeError);
}

TEST(AvoidanceGraph, Neighbors) {
    const AvoidanceGraph fib3 = AvoidanceGraph::run_avoiding(3, 2);
    EXPECT_EQ(strings(fib3.neighbors(W("010"))), (std::set<std::string>{"000"}));
    EXPECT_EQ(strings(fib3.neighbors(W("000"))), (std::set<std::string>{"001", "010", "100"}));
    EXPECT_EQ(AvoidanceGraph(3, W("1111")).neighbors(W("000")).size(), 3u);
    EXPECT_THROW(fib3.neighbors(W("110")), DomainError);
}

TEST(VertexCount, Examples) {
    EXPECT_EQ(vertex_count(3, 2), 5u);
    EXPECT_EQ(vertex_count(4, 2), 8u);
    EXPECT_EQ(vertex_count(7, 8), 128u);
    EXPECT_EQ(vertex_count(9, 1), 1u);
    EXPECT_THROW(vertex_count(0, 2), RangeError);
    EXPECT_THROW(vertex_count(3, 0), RangeError);
}

TEST(VertexCount, AgreesWithEnumeration) {
    for (int n = 1; n <= 20; ++n) {
        for (int s = 1; s <= 8; ++s) {
            const AvoidanceGraph g = AvoidanceGraph::run_avoiding(n, s);
            const auto streamed = static_cast<std::uint64_t>(std::ranges::distance(g.vertices()));
            ASSERT_EQ(vertex_count(n, s), streamed) << n << "," << s;
            ASSERT_EQ(g.vertex_count(), streamed);
        }
    }
}

TEST(VertexCount, FibonacciRecurrence) {
    for (int n = 3; n <= 60; ++n) {
        ASSERT_EQ(vertex_count(n, 2), vertex_count(n - 1, 2) + vertex_count(n - 2, 2));
    }
}

TEST(VertexCount, GenericPatternsMatchStringOracle) {
    for (int pl = 1; pl <= 4; ++pl) {
        for (const Word f : enumerate_words(pl)) {
            for (int n = 1; n <= 10; ++n) {
                ASSERT_EQ(AvoidanceGraph(n, f).vertex_count(),
                          oracle::avoiding(n, f.to_string()).size())
                    << f.to_string() << " n=" << n;
            }
        }
    }
}

TEST(AvoidanceGraphProperties, DegreeBound) {
    for (int n = 1; n <= 12; ++n) {
        for (int s = 1; s <= n + 1; ++s) {
            const AvoidanceGraph g = AvoidanceGraph::run_avoiding(n, s);
            for (const Word v : g.vertices()) ASSERT_LE(g.neighbors(v).size(), std::size_t(n));
            if (s >= 2) EXPECT_EQ(g.neighbors(Word::zeros(n)).size(), std::size_t(n));
        }
    }
}

TEST(AvoidanceGraphProperties, Monotone) {
    for (int n = 1; n <= 12; ++n) {
        for (int s = 1; s <= n; ++s) {
            const AvoidanceGraph small = AvoidanceGraph::run_avoiding(n, s);
            const AvoidanceGraph big = AvoidanceGraph::run_avoiding(n, s + 1);
            for (const Word v : small.vertices()) ASSERT_TRUE(big.contains(v));
        }
    }
}

TEST(VerifyPerfectInGamma, PaperCodes) {
    const Code fib = Code(3, {W("010"), W("101")});
    EXPECT_TRUE(verify_perfect_in_gamma(fib, AvoidanceGraph::run_avoiding(3, 2)).perfect());

    const auto g7 = verify_perfect_in_gamma(example_gamma7_code(), AvoidanceGraph::run_avoiding(7, 5));
    EXPECT_TRUE(g7.perfect());
    EXPECT_EQ(g7.graph, "Gamma7(1^5)");

    EXPECT_TRUE(verify_perfect_in_gamma(construct_run_avoiding_code(4),
                                        AvoidanceGraph::run_avoiding(15, 12))
                    .perfect());
}

TEST(VerifyPerfectInGamma, FailureStatuses) {
    const AvoidanceGraph fib4 = AvoidanceGraph::run_avoiding(4, 2);
    // {0000} leaves 1010 (mask 5) as the smallest undominated vertex.
    const auto lone = verify_perfect_in_gamma(Code(4, {W("0000")}), fib4);
    EXPECT_EQ(lone.status, Status::NotDominated);
    EXPECT_EQ(lone.witness->first, W("1010"));

    // 0000 lies next to both 1000 and 0001.
    const auto twice = verify_perfect_in_gamma(Code(4, {W("1000"), W("0001")}), fib4);
    EXPECT_EQ(twice.status, Status::MultiplyDominated);
    EXPECT_EQ(twice.witness->first, W("0000"));

    EXPECT_THROW(verify_perfect_in_gamma(Code(4, {W("1100")}), fib4), DomainError);
    EXPECT_THROW(verify_perfect_in_gamma(Code(3, {W("010")}), fib4), DimensionError);
    EXPECT_THROW(verify_perfect_in_gamma(Code::from_masks(26, {0}),
                                         AvoidanceGraph::run_avoiding(26, 2)),
                 CapacityError);
}

TEST(VerifyPerfectInGamma, SharedNeighbourInSubgraph) {
    // 100 is adjacent to both 000 and 101 inside Gamma3(1^2).
    const AvoidanceGraph g(3, W("11"));
    const auto report = verify_perfect_in_gamma(Code(3, {W("000"), W("101")}), g);
    EXPECT_EQ(report.status, Status::MultiplyDominated);
    EXPECT_EQ(report.witness->first, W("100"));
}

TEST(VerifyPerfectInGamma, AgreesWithStringOracle) {
    for (int n = 1; n <= 4; ++n) {
        for (int s = 1; s <= n + 1; ++s) {
            const AvoidanceGraph g = AvoidanceGraph::run_avoiding(n, s);
            const auto vs = oracle::avoiding(n, std::string(static_cast<std::size_t>(s), '1'));
            const auto vertices = collect(g);
            for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << vertices.size()); ++subset) {
                std::vector<Word> words;
                std::set<std::string> code;
                for (std::size_t i = 0; i < vertices.size(); ++i) {
                    if ((subset >> i) & 1U) {
                        words.push_back(vertices[i]);
                        code.insert(vertices[i].to_string());
                    }
                }
                ASSERT_EQ(verify_perfect_in_gamma(Code(n, words), g).perfect(),
                          oracle::is_perfect(vs, code));
            }
        }
    }
}

// Perfect in Q_n and avoiding the pattern implies perfect in the subgraph.
TEST(AvoidanceGraphProperties, DominationTransfers) {
    for (int p = 2; p <= 4; ++p) {
        const Code c = construct_run_avoiding_code(p);
        ASSERT_TRUE(verify_perfect_qn(c).perfect());
        const int bound = run_avoiding_bound(p);
        for (int s = bound; s <= c.n() + 1; ++s) {
            ASSERT_TRUE(verify_perfect_in_gamma(c, AvoidanceGraph::run_avoiding(c.n(), s)).perfect())
                << "p=" << p << " s=" << s;
        }
    }
}
