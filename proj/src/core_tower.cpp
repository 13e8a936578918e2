#include "tcore/core_tower.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace tcore {

namespace {

void require_modulus(int t) {
    if (t < 2) throw std::invalid_argument("modulus t must be at least 2, got " + std::to_string(t));
}

bool all_empty(const std::vector<Partition>& row) {
    return std::all_of(row.begin(), row.end(), [](const Partition& p) { return p.empty(); });
}

// Beads on runner r, as positions (b - r) / t, largest first.
std::vector<std::vector<int>> runners(const BetaSet& beta, int t) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(t));
    for (int b : beta.beads()) out[static_cast<std::size_t>(b % t)].push_back(b / t);
    return out;
}

std::size_t round_up(std::size_t k, int t) {
    const auto m = static_cast<std::size_t>(t);
    return (k + m - 1) / m * m;
}

std::vector<Partition> next_pre_tower_row(const std::vector<Partition>& row, int t) {
    std::vector<Partition> next;
    next.reserve(row.size() * static_cast<std::size_t>(t));
    for (const auto& p : row) {
        if (p.empty()) {
            next.insert(next.end(), static_cast<std::size_t>(t), Partition());
        } else {
            auto q = t_quotient(p, t);
            std::move(q.begin(), q.end(), std::back_inserter(next));
        }
    }
    return next;
}

}  // namespace

BetaSet::BetaSet(const Partition& lambda, std::size_t bead_count) {
    if (bead_count < lambda.length())
        throw std::invalid_argument("bead count " + std::to_string(bead_count) + " is below the partition length " +
                                    std::to_string(lambda.length()));
    beads_.resize(bead_count);
    for (std::size_t i = 0; i < bead_count; ++i)
        beads_[i] = lambda.part(i) + static_cast<int>(bead_count - 1 - i);
}

BetaSet BetaSet::normalized(const Partition& lambda, int t) {
    require_modulus(t);
    return BetaSet(lambda, round_up(lambda.length(), t));
}

BetaSet BetaSet::from_beads(std::vector<int> beads) {
    std::sort(beads.begin(), beads.end(), std::greater<>());
    if (std::adjacent_find(beads.begin(), beads.end()) != beads.end())
        throw std::invalid_argument("beta-set beads must be distinct");
    if (!beads.empty() && beads.back() < 0) throw std::invalid_argument("beta-set beads must be nonnegative");
    BetaSet out;
    out.beads_ = std::move(beads);
    return out;
}

Partition BetaSet::to_partition() const {
    std::vector<int> parts;
    const std::size_t k = beads_.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int part = beads_[i] - static_cast<int>(k - 1 - i);
        if (part == 0) break;
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

CoreTower::CoreTower(int t, std::vector<std::vector<Partition>> rows) : t_(t), rows_(std::move(rows)) {
    require_modulus(t);
    if (rows_.empty()) rows_.push_back({Partition()});
}

int CoreTower::row_size(std::size_t j) const noexcept {
    if (j >= rows_.size()) return 0;
    int s = 0;
    for (const auto& p : rows_[j]) s += p.size();
    return s;
}

int CoreTower::total_size() const noexcept {
    int s = 0;
    for (std::size_t j = 0; j < rows_.size(); ++j) s += row_size(j);
    return s;
}

long long CoreTower::weighted_size() const noexcept {
    long long s = 0;
    long long scale = 1;
    for (std::size_t j = 0; j < rows_.size(); ++j, scale *= t_) s += scale * row_size(j);
    return s;
}

Partition t_core(const Partition& lambda, int t) {
    const auto beta = BetaSet::normalized(lambda, t);
    std::vector<int> counts(static_cast<std::size_t>(t), 0);
    for (int b : beta.beads()) ++counts[static_cast<std::size_t>(b % t)];
    // slide every bead down its runner as far as it goes
    std::vector<int> packed;
    packed.reserve(beta.bead_count());
    for (int r = 0; r < t; ++r)
        for (int pos = 0; pos < counts[static_cast<std::size_t>(r)]; ++pos) packed.push_back(r + pos * t);
    return BetaSet::from_beads(std::move(packed)).to_partition();
}

std::vector<Partition> t_quotient(const Partition& lambda, int t) {
    const auto beta = BetaSet::normalized(lambda, t);
    std::vector<Partition> quotient;
    quotient.reserve(static_cast<std::size_t>(t));
    for (auto& runner : runners(beta, t)) quotient.push_back(BetaSet::from_beads(std::move(runner)).to_partition());
    return quotient;
}

bool is_t_core(const Partition& lambda, int t) { return t_core(lambda, t) == lambda; }

Partition reconstruct(const Partition& core, const std::vector<Partition>& quotient, int t) {
    require_modulus(t);
    if (quotient.size() != static_cast<std::size_t>(t))
        throw std::invalid_argument("quotient has " + std::to_string(quotient.size()) + " components, expected " +
                                    std::to_string(t));
    if (!is_t_core(core, t)) throw std::invalid_argument("partition " + to_string(core) + " is not a t-core");

    const auto beta = BetaSet::normalized(core, t);
    std::vector<std::size_t> counts(static_cast<std::size_t>(t), 0);
    for (int b : beta.beads()) ++counts[static_cast<std::size_t>(b % t)];

    // every runner needs room for its component's parts; adding one bead to
    // each runner keeps the core and the labelling unchanged
    std::size_t extra = 0;
    for (std::size_t r = 0; r < counts.size(); ++r)
        if (quotient[r].length() > counts[r]) extra = std::max(extra, quotient[r].length() - counts[r]);

    std::vector<int> beads;
    for (std::size_t r = 0; r < counts.size(); ++r) {
        const BetaSet runner(quotient[r], counts[r] + extra);
        for (int pos : runner.beads()) beads.push_back(static_cast<int>(r) + pos * t);
    }
    return BetaSet::from_beads(std::move(beads)).to_partition();
}

std::vector<Partition> pre_tower_row(const Partition& lambda, int t, int j, std::size_t max_entries) {
    require_modulus(t);
    if (j < 0) throw std::invalid_argument("pre-tower row index must be nonnegative");
    std::size_t width = 1;
    for (int k = 0; k < j; ++k) {
        if (width > max_entries / static_cast<std::size_t>(t))
            throw std::length_error("pre-tower row " + std::to_string(j) + " has more than " +
                                    std::to_string(max_entries) + " entries");
        width *= static_cast<std::size_t>(t);
    }
    std::vector<Partition> row{lambda};
    for (int k = 0; k < j; ++k) {
        if (all_empty(row)) return std::vector<Partition>(width, Partition());
        row = next_pre_tower_row(row, t);
    }
    return row;
}

CoreTower core_tower(const Partition& lambda, int t) {
    require_modulus(t);
    std::vector<std::vector<Partition>> rows;
    std::vector<Partition> pre{lambda};
    do {
        std::vector<Partition> cores;
        cores.reserve(pre.size());
        for (const auto& p : pre) cores.push_back(t_core(p, t));
        rows.push_back(std::move(cores));
        pre = next_pre_tower_row(pre, t);
    } while (!all_empty(pre));
    // trim trailing all-∅ rows, keeping row 0
    while (rows.size() > 1 && all_empty(rows.back())) rows.pop_back();
    return CoreTower(t, std::move(rows));
}

int row_size(const Partition& lambda, int t, int j) {
    if (j < 0) throw std::invalid_argument("tower row index must be nonnegative");
    return core_tower(lambda, t).row_size(static_cast<std::size_t>(j));
}

int defect(const Partition& lambda, int t) {
    const auto tower = core_tower(lambda, t);
    const int numerator = lambda.size() - tower.total_size();
    // Σ_j (t^j - 1)|β_j| is always divisible by t - 1
    return numerator / (t - 1);
}

bool is_generalized_core(const Partition& lambda, int j, int t) {
    require_modulus(t);
    if (j < 0) throw std::invalid_argument("generalized core level must be nonnegative");
    std::vector<Partition> row{lambda};
    for (int k = 0; k <= j; ++k) {
        if (all_empty(row)) return true;
        row = next_pre_tower_row(row, t);
    }
    return all_empty(row);
}

}  // namespace tcore
