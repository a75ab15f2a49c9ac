#pragma once

#include <cstdint>
#include <vector>

namespace concentra {

/// Key for a reproducible random stream. Identical (master_seed, stream_id)
/// reproduce byte-identical sequences across runs and thread schedules.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    /// Independent child stream, e.g. one per sample slot or grid cell.
    SeedSpec substream(std::uint64_t slot) const;
};

/// Counter-based generator: output i depends only on (key, i), so values can
/// be produced in any order on any number of threads.
class RngStream {
  public:
    explicit RngStream(SeedSpec spec);

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double next_double();
    /// Uniform on (0, 1] (safe for logs).
    double next_double_open();
    /// Standard normal (Box-Muller, two uniforms per call, no caching).
    double next_normal();
    std::vector<double> next_normal_vec(int d);
    /// Uniform integer in [0, m).
    std::uint64_t next_below(std::uint64_t m);

    std::uint64_t counter() const { return counter_; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace concentra
