#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qident/ints.hpp"

namespace qident {

/* A partition into distinct parts: a strictly decreasing sequence of
 * positive integers.  The empty sequence is the (valid) empty partition. */
class Partition {
public:
    Partition() = default;
    // Validates strict decrease and positivity; throws std::invalid_argument.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;  // "(5,3,1)"; the empty partition is "()"

    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
};

/* The statistics the involution machinery runs on, for lambda with parts
 * lambda_1 > lambda_2 > ... > lambda_n:
 *
 *   weight      N = sum of parts
 *   num_parts   n
 *   largest     m = lambda_1 (0 for the empty partition)
 *   smallest    a = lambda_n
 *   run_length  b = the largest b with lambda_b = lambda_1 + 1 - b, i.e. the
 *               length of the initial staircase of step -1.
 *
 * smallest/run_length are meaningless for the empty partition and throw. */
class PartitionStats {
public:
    explicit PartitionStats(const Partition& p);

    long long weight() const { return weight_; }
    int num_parts() const { return num_parts_; }
    int largest() const { return largest_; }
    int smallest() const;    // throws std::logic_error on the empty partition
    int run_length() const;  // throws std::logic_error on the empty partition

private:
    long long weight_ = 0;
    int num_parts_ = 0;
    int largest_ = 0;
    int smallest_ = 0;
    int run_ = 0;
};

inline PartitionStats partition_stats(const Partition& p) {
    return PartitionStats(p);
}

/* Where a partition stands with respect to the sign-reversing involution:
 * almost all partitions are Regular (the map pairs them off); the fixed
 * obstructions are the empty partition and the two staircase families
 *   (2r-1, 2r-2, ..., r)   of weight r(3r-1)/2   [smallest == run_length]
 *   (2r,   2r-1, ..., r+1) of weight r(3r+1)/2   [smallest == run_length+1]
 */
struct FranklinClass {
    enum class Kind { Regular, ExceptionalEmpty, ExceptionalFirst, ExceptionalSecond };
    Kind kind = Kind::Regular;
    int r = 0;  // staircase index; 0 unless kind is one of the two staircases

    bool regular() const { return kind == Kind::Regular; }
    std::string to_string() const;

    friend bool operator==(const FranklinClass& a, const FranklinClass& b) = default;
};

FranklinClass classify_franklin(const Partition& p);

/* The involution itself.  With a = smallest part and b = staircase run:
 *   a <= b: remove the smallest part, add 1 to each of the largest a parts;
 *   a >  b: subtract 1 from each of the largest b parts, append a part b.
 * Defined exactly on Regular partitions; exceptional input throws
 * std::domain_error naming the class.  The map flips the parity of the
 * number of parts, preserves the weight, and is its own inverse. */
Partition franklin_map(const Partition& p);

// All partitions of `weight` into distinct parts, ordered lexicographically
// decreasing by part sequence ((10), (9,1), (8,2), (7,3), (7,2,1), ...).
std::vector<Partition> enumerate_distinct(int weight);

Partition staircase_first(int r);   // (2r-1, 2r-2, ..., r), weight r(3r-1)/2
Partition staircase_second(int r);  // (2r, 2r-1, ..., r+1), weight r(3r+1)/2

/* Visit the stats (weight, num_parts, largest) of every distinct-part
 * partition of every weight <= max_weight, empty partition included, without
 * materializing the partitions.  Identity checks that only need statistics
 * run through here; order of visits is unspecified. */
template <class Visitor>
void for_each_distinct_stats(int max_weight, Visitor&& visit) {
    visit(0, 0, 0);
    auto extend = [&](auto&& self, int prev, int sum, int n, int m) -> void {
        const int cap = std::min(prev - 1, max_weight - sum);
        for (int next = cap; next >= 1; --next) {
            visit(sum + next, n + 1, m);
            self(self, next, sum + next, n + 1, m);
        }
    };
    for (int first = 1; first <= max_weight; ++first) {
        visit(first, 1, first);
        extend(extend, first, first, 1, first);
    }
}

}  // namespace qident
