#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wcg/simplicial.hpp"

namespace wcg {

struct BenchOptions {
    /// Ground-set sizes are drawn from 1..max_ground.
    std::size_t max_ground = 5;
    /// Complexes with more non-empty faces are redrawn.
    std::size_t max_faces = 12;
    std::size_t count = 50;
    std::uint64_t seed = 1;
    /// Each timing is the median of this many runs.
    std::size_t runs = 5;
};

struct BenchRow {
    std::size_t id = 0;
    std::string graph6;
    std::size_t vertices = 0;
    double oracle_us = 0;
    double checker_us = 0;
    double zerodiv_us = 0;
    /// Oracle, domination checker, zero-divisor route and purity of the
    /// complex all agree.
    bool agreement = false;
};

/// Random complexes with at most max_faces non-empty faces, reproducible from
/// the seed.
std::vector<SimplicialComplex> random_complexes(const BenchOptions& options);

/// Times the three well-coveredness routes on the non-comparability graph of
/// each random complex, using its dimension-level cover.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Header "graph_id,graph6,vertices,oracle_us,checker_us,zerodiv_us,agreement".
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace wcg
