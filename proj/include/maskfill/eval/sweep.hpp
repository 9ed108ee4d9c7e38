#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "maskfill/engine/attack.hpp"
#include "maskfill/eval/metrics.hpp"

namespace maskfill::eval {

// One cell of a (k, l) threshold grid. Metrics that are absent for the cell
// (no successes, or everything skipped) are stored as NaN.
struct SweepPoint {
    double k = 0.0;
    double l = 0.0;
    double a_rate = 0.0;
    double sim = 0.0;
    double ppl = 0.0;
};

// Runs one attack_dataset per grid cell (every k crossed with every l).
// Throws std::invalid_argument on an empty grid.
std::vector<SweepPoint> sweep(const text::Dataset& dataset, const models::ModelSet& models,
                              const engine::AttackConfig& base, std::span<const double> ks,
                              std::span<const double> ls, std::size_t workers = 1);

// CSV with the exact header "k,l,a_rate,sim,ppl"; numbers use the shortest
// round-trip formatting so a re-parse is bit-exact.
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepPoint>& points);
std::vector<SweepPoint> read_sweep_csv(const std::filesystem::path& path);

} // namespace maskfill::eval
