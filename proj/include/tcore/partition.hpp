#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tcore {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a part list is not a weakly decreasing sequence of positive
/// integers. `index()` is the position of the first offending part.
class PartitionError : public std::invalid_argument {
public:
    PartitionError(const std::string& what, std::size_t index)
        : std::invalid_argument(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// An integer partition stored as its list of parts, largest first.
/// The empty part list is the empty partition of size 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); zero past the last part.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition make_partition(std::vector<int> parts);

/// Hook length of every cell, row by row. Row i has parts()[i] entries.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

/// Walks the partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n);

    bool done() const noexcept { return done_; }
    const Partition& current() const noexcept { return current_; }
    void next();

private:
    std::vector<int> parts_;
    Partition current_;
    bool done_ = false;
};

void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(int n);

/// p(n) by Euler's pentagonal-number recurrence.
BigInt partition_count(int n);
/// p(0), ..., p(n).
std::vector<BigInt> partition_counts(int n);

/// "(5,4,2,2,1)", or "∅" for the empty partition.
std::string to_string(const Partition& lambda);
/// Bare comma list "5,4,2,2,1"; empty string for the empty partition.
std::string to_comma_list(const Partition& lambda);
/// Inverse of to_comma_list. Throws PartitionError on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace tcore
