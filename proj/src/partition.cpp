#include "tcore/partition.hpp"

#include <charconv>
#include <numeric>

namespace tcore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw PartitionError("part at index " + std::to_string(i) + " is not positive", i);
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PartitionError("part at index " + std::to_string(i) + " exceeds its predecessor", i);
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    const auto& rows = lambda.parts();
    std::vector<std::vector<int>> hooks(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        hooks[i].resize(static_cast<std::size_t>(rows[i]));
        // cells below (i, j) in column j; shrinks as j moves right
        std::size_t below = rows.size() - 1 - i;
        for (int j = 1; j <= rows[i]; ++j) {
            while (below > 0 && rows[i + below] < j) --below;
            hooks[i][static_cast<std::size_t>(j - 1)] = (rows[i] - j) + static_cast<int>(below) + 1;
        }
    }
    return hooks;
}

PartitionGenerator::PartitionGenerator(int n) {
    if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    if (n > 0) parts_.push_back(n);
    current_ = Partition(parts_);
}

void PartitionGenerator::next() {
    if (done_) return;
    // drop trailing ones, remembering how much they held
    int freed = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++freed;
    }
    if (parts_.empty()) {
        done_ = true;
        return;
    }
    const int v = --parts_.back();
    freed += 1;
    while (freed > 0) {
        const int take = std::min(v, freed);
        parts_.push_back(take);
        freed -= take;
    }
    current_ = Partition(parts_);
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    for (PartitionGenerator gen(n); !gen.done(); gen.next()) visit(gen.current());
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<BigInt> partition_counts(int n) {
    if (n < 0) throw std::invalid_argument("partition_count of a negative integer");
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const int g2 = k * (3 * k + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return p;
}

BigInt partition_count(int n) { return partition_counts(n).back(); }

std::string to_comma_list(const Partition& lambda) {
    std::string s;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda.parts()[i]);
    }
    return s;
}

std::string to_string(const Partition& lambda) {
    if (lambda.empty()) return "∅";
    return "(" + to_comma_list(lambda) + ")";
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    if (text.empty() || text == "∅") return Partition();
    std::size_t index = 0;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view token = text.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw PartitionError("malformed part '" + std::string(token) + "' at index " + std::to_string(index),
                                 index);
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        ++index;
    }
    return Partition(std::move(parts));
}

}  // namespace tcore
