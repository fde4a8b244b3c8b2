#include "qident/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace qident {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("partition parts must strictly decrease");
    }
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    out += ")";
    return out;
}

PartitionStats::PartitionStats(const Partition& p) {
    const std::vector<int>& parts = p.parts();
    num_parts_ = static_cast<int>(parts.size());
    if (num_parts_ == 0) return;
    weight_ = std::accumulate(parts.begin(), parts.end(), 0LL);
    largest_ = parts.front();
    smallest_ = parts.back();
    run_ = 1;
    while (run_ < num_parts_ && parts[run_] == parts[run_ - 1] - 1) ++run_;
}

int PartitionStats::smallest() const {
    if (num_parts_ == 0)
        throw std::logic_error("the empty partition has no smallest part");
    return smallest_;
}

int PartitionStats::run_length() const {
    if (num_parts_ == 0)
        throw std::logic_error("the empty partition has no staircase run");
    return run_;
}

std::string FranklinClass::to_string() const {
    switch (kind) {
        case Kind::Regular: return "Regular";
        case Kind::ExceptionalEmpty: return "ExceptionalEmpty";
        case Kind::ExceptionalFirst:
            return "ExceptionalFirst(r=" + std::to_string(r) + ")";
        case Kind::ExceptionalSecond:
            return "ExceptionalSecond(r=" + std::to_string(r) + ")";
    }
    return "?";
}

FranklinClass classify_franklin(const Partition& p) {
    if (p.empty()) return {FranklinClass::Kind::ExceptionalEmpty, 0};
    const PartitionStats st(p);
    // The whole partition is one staircase and the smallest part meets it:
    // those are exactly the two fixed families.
    if (st.num_parts() == st.run_length()) {
        if (st.smallest() == st.run_length())
            return {FranklinClass::Kind::ExceptionalFirst, st.num_parts()};
        if (st.smallest() == st.run_length() + 1)
            return {FranklinClass::Kind::ExceptionalSecond, st.num_parts()};
    }
    return {FranklinClass::Kind::Regular, 0};
}

Partition franklin_map(const Partition& p) {
    const FranklinClass cls = classify_franklin(p);
    if (!cls.regular())
        throw std::domain_error("franklin_map is undefined on " + cls.to_string() +
                                " " + p.to_string());
    const PartitionStats st(p);
    const int a = st.smallest();
    const int b = st.run_length();
    std::vector<int> parts = p.parts();
    if (a <= b) {
        // Fold the smallest part onto the leading staircase.  Regularity
        // rules out a == num_parts, so the pop leaves at least a parts.
        parts.pop_back();
        for (int i = 0; i < a; ++i) parts[i] += 1;
    } else {
        // Peel one unit off the staircase and drop it below the rest.
        for (int i = 0; i < b; ++i) parts[i] -= 1;
        parts.push_back(b);
    }
    return Partition(std::move(parts));  // re-validates strict decrease
}

namespace {

void extend_partitions(std::vector<int>& prefix, int remaining, int max_part,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        // Parts below p can contribute at most p(p-1)/2; once that cannot
        // cover the remainder, no smaller p can either.
        if (static_cast<long long>(p) * (p - 1) / 2 < remaining - p) break;
        prefix.push_back(p);
        extend_partitions(prefix, remaining - p, p - 1, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_distinct(int weight) {
    if (weight < 0) throw std::invalid_argument("weight must be >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend_partitions(prefix, weight, weight, out);
    return out;
}

Partition staircase_first(int r) {
    if (r < 1) throw std::invalid_argument("staircase index must be >= 1");
    std::vector<int> parts(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) parts[i] = 2 * r - 1 - i;
    return Partition(std::move(parts));
}

Partition staircase_second(int r) {
    if (r < 1) throw std::invalid_argument("staircase index must be >= 1");
    std::vector<int> parts(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) parts[i] = 2 * r - i;
    return Partition(std::move(parts));
}

}  // namespace qident
