#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "qident/partitions.hpp"

using namespace qident;

namespace {

Partition part(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent oracle: distinct-part partitions of w are subsets of {1..w}
// with sum w; count them by brute force over bitmasks.
long long subset_sum_count(int w) {
    long long count = 0;
    for (unsigned mask = 0; mask < (1u << w); ++mask) {
        int sum = 0;
        for (int i = 1; i <= w; ++i)
            if (mask & (1u << (i - 1))) sum += i;
        if (sum == w) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("Partition validates strict decrease") {
    CHECK_NOTHROW(part({7, 6, 5, 2}));
    CHECK_NOTHROW(Partition());
    CHECK_THROWS_AS(part({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(part({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(part({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(part({-1}), std::invalid_argument);
}

TEST_CASE("partition_stats reads off the five statistics") {
    const PartitionStats st(part({7, 6, 5, 2}));
    CHECK(st.weight() == 20);
    CHECK(st.num_parts() == 4);
    CHECK(st.largest() == 7);
    CHECK(st.smallest() == 2);
    CHECK(st.run_length() == 3);  // 7,6,5 step down by 1; then the gap to 2
}

TEST_CASE("run_length stops at the first gap") {
    CHECK(PartitionStats(part({5, 3})).run_length() == 1);
    CHECK(PartitionStats(part({5, 4, 3, 1})).run_length() == 3);
    CHECK(PartitionStats(part({4})).run_length() == 1);
    CHECK(PartitionStats(part({3, 2, 1})).run_length() == 3);
}

TEST_CASE("the empty partition has weight and largest 0 but no a or b") {
    const PartitionStats st((Partition()));
    CHECK(st.weight() == 0);
    CHECK(st.num_parts() == 0);
    CHECK(st.largest() == 0);
    CHECK_THROWS_AS(st.smallest(), std::logic_error);
    CHECK_THROWS_AS(st.run_length(), std::logic_error);
}

TEST_CASE("classify_franklin separates the staircase families") {
    CHECK(classify_franklin(Partition()).kind ==
          FranklinClass::Kind::ExceptionalEmpty);
    // smallest == run: (1), (3,2), (5,4,3)
    CHECK(classify_franklin(part({1})) ==
          FranklinClass{FranklinClass::Kind::ExceptionalFirst, 1});
    CHECK(classify_franklin(part({3, 2})) ==
          FranklinClass{FranklinClass::Kind::ExceptionalFirst, 2});
    // smallest == run + 1: (2), (4,3), (6,5,4)
    CHECK(classify_franklin(part({2})) ==
          FranklinClass{FranklinClass::Kind::ExceptionalSecond, 1});
    CHECK(classify_franklin(part({4, 3})) ==
          FranklinClass{FranklinClass::Kind::ExceptionalSecond, 2});
    // near misses are regular
    CHECK(classify_franklin(part({2, 1})).regular());
    CHECK(classify_franklin(part({3})).regular());
    CHECK(classify_franklin(part({5, 2})).regular());
    CHECK(classify_franklin(part({4, 3, 1})).regular());
}

TEST_CASE("staircase builders produce the exceptional partitions") {
    for (int r = 1; r <= 10; ++r) {
        const Partition first = staircase_first(r);
        CHECK(classify_franklin(first) ==
              FranklinClass{FranklinClass::Kind::ExceptionalFirst, r});
        CHECK(PartitionStats(first).weight() == r * (3 * r - 1) / 2);
        CHECK(PartitionStats(first).num_parts() == r);
        CHECK(PartitionStats(first).largest() == (r == 0 ? 0 : 2 * r - 1));

        const Partition second = staircase_second(r);
        CHECK(classify_franklin(second) ==
              FranklinClass{FranklinClass::Kind::ExceptionalSecond, r});
        CHECK(PartitionStats(second).weight() == r * (3 * r + 1) / 2);
        CHECK(PartitionStats(second).num_parts() == r);
        CHECK(PartitionStats(second).largest() == 2 * r);
    }
}

TEST_CASE("franklin_map moves the worked examples correctly") {
    CHECK(franklin_map(part({2, 1})) == part({3}));
    CHECK(franklin_map(part({3})) == part({2, 1}));
    CHECK(franklin_map(part({5, 3})) == part({4, 3, 1}));
    CHECK(franklin_map(part({4, 3, 1})) == part({5, 3}));
}

TEST_CASE("franklin_map refuses exceptional input by name") {
    CHECK_THROWS_WITH_AS(franklin_map(Partition()),
                         doctest::Contains("ExceptionalEmpty"),
                         std::domain_error);
    CHECK_THROWS_WITH_AS(franklin_map(part({3, 2})),
                         doctest::Contains("ExceptionalFirst"),
                         std::domain_error);
    CHECK_THROWS_WITH_AS(franklin_map(part({4, 3})),
                         doctest::Contains("ExceptionalSecond"),
                         std::domain_error);
}

TEST_CASE("enumerate_distinct lists partitions in decreasing lex order") {
    const std::vector<Partition> none = enumerate_distinct(0);
    REQUIRE(none.size() == 1);
    CHECK(none[0].empty());

    const std::vector<Partition> three = enumerate_distinct(3);
    REQUIRE(three.size() == 2);
    CHECK(three[0] == part({3}));
    CHECK(three[1] == part({2, 1}));

    const std::vector<Partition> ten = enumerate_distinct(10);
    CHECK(ten.size() == 10);
    CHECK(ten.front() == part({10}));
    CHECK(ten.back() == part({4, 3, 2, 1}));
    for (size_t i = 1; i < ten.size(); ++i)
        CHECK(ten[i - 1].parts() > ten[i].parts());
}

TEST_CASE("enumeration counts match the subset-sum oracle") {
    for (int w = 0; w <= 16; ++w)
        CHECK(enumerate_distinct(w).size() == subset_sum_count(w));
}

TEST_CASE("enumeration output is structurally valid and duplicate-free") {
    for (int w = 0; w <= 30; ++w) {
        std::set<std::vector<int>> seen;
        for (const Partition& p : enumerate_distinct(w)) {
            CHECK(PartitionStats(p).weight() == w);
            CHECK(seen.insert(p.parts()).second);
        }
    }
}

TEST_CASE("for_each_distinct_stats visits every partition once") {
    const int max_weight = 25;
    std::vector<long long> counted(max_weight + 1, 0);
    for_each_distinct_stats(max_weight, [&](int w, int, int) { ++counted[w]; });
    for (int w = 0; w <= max_weight; ++w)
        CHECK(counted[w] == static_cast<long long>(enumerate_distinct(w).size()));
}

TEST_CASE("for_each_distinct_stats reports the right statistics") {
    // reconcile against the materializing enumeration, weight by weight
    const int max_weight = 18;
    std::multiset<std::tuple<int, int, int>> expected, visited;
    for (int w = 0; w <= max_weight; ++w)
        for (const Partition& p : enumerate_distinct(w)) {
            const PartitionStats st(p);
            expected.emplace(w, st.num_parts(), st.largest());
        }
    for_each_distinct_stats(max_weight, [&](int w, int n, int m) {
        visited.emplace(w, n, m);
    });
    CHECK(expected == visited);
}

TEST_CASE("franklin involution properties hold through weight 45") {
    long long checked = 0;
    for (int w = 0; w <= 45; ++w) {
        for (const Partition& p : enumerate_distinct(w)) {
            if (!classify_franklin(p).regular()) continue;
            const Partition image = franklin_map(p);
            const PartitionStats before(p), after(image);
            CHECK(franklin_map(image) == p);
            CHECK(after.weight() == before.weight());
            CHECK(((after.num_parts() - before.num_parts() == 1) ||
                   (after.num_parts() - before.num_parts() == -1)));
            CHECK(after.largest() + after.num_parts() ==
                  before.largest() + before.num_parts());
            const int dm = after.largest() - before.largest();
            CHECK((dm == 1 || dm == -1));
            ++checked;
        }
    }
    CHECK(checked > 1000);  // the loop really ran
}

TEST_CASE("exceptional partitions through weight 60 are exactly the staircases") {
    int staircases_seen = 0;
    for (int w = 0; w <= 60; ++w) {
        std::vector<Partition> exceptional;
        for (const Partition& p : enumerate_distinct(w))
            if (!classify_franklin(p).regular()) exceptional.push_back(p);

        // weights of the two families below 60: 1,2,5,7,12,15,22,26,35,40,51,57
        bool is_first = false, is_second = false;
        int r_of = 0;
        for (int r = 1; r * (3 * r - 1) / 2 <= w; ++r) {
            if (r * (3 * r - 1) / 2 == w) { is_first = true; r_of = r; }
            if (r * (3 * r + 1) / 2 == w) { is_second = true; r_of = r; }
        }
        if (w == 0) {
            REQUIRE(exceptional.size() == 1);
            CHECK(exceptional[0].empty());
        } else if (is_first) {
            REQUIRE(exceptional.size() == 1);
            CHECK(exceptional[0] == staircase_first(r_of));
            ++staircases_seen;
        } else if (is_second) {
            REQUIRE(exceptional.size() == 1);
            CHECK(exceptional[0] == staircase_second(r_of));
            ++staircases_seen;
        } else {
            CHECK(exceptional.empty());
        }
    }
    CHECK(staircases_seen == 12);
}

TEST_CASE("partitions print in tuple form") {
    CHECK(part({5, 3, 1}).to_string() == "(5,3,1)");
    CHECK(Partition().to_string() == "()");
}
