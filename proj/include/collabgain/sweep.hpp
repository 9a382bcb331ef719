#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace collabgain {

enum class SweepKind { PlaneGain, CollinearGain, RateRatio, ResourceRatio, EnergyRatio };

std::string_view to_string(SweepKind kind) noexcept;
std::optional<SweepKind> parse_sweep_kind(std::string_view name) noexcept;

/// Inclusive grid lo, lo + step, ... <= hi. With `logarithmic` the bounds and
/// step are in log10 units and the points are 10^v.
struct GridAxis {
    double lo;
    double hi;
    double step;
    bool logarithmic = false;

    /// Throws ValidationError when the grid is empty (step > hi - lo) or malformed.
    std::vector<double> points() const;

    static GridAxis with_count(double lo, double hi, int count, bool logarithmic = false);
};

struct SweepConfig {
    SweepKind kind = SweepKind::CollinearGain;
    double epsilon = 0.01;
    double eta = 3.0;
    double k = 1.0;
    std::optional<double> rate;  ///< required by resource_ratio and energy_ratio
    GridAxis x{-1.0, 1.0, 0.01};
    GridAxis y{-0.75, 0.75, 0.01};
    GridAxis d{0.001, 0.999, 0.001};
    GridAxis k_axis{-2.0, 2.0, 0.05, true};
    double d_fixed = 0.5;  ///< relay position for rate_ratio
    unsigned threads = 1;  ///< 0 picks hardware concurrency
};

struct SweepRecord {
    std::vector<double> coordinates;
    std::optional<double> gain;
    std::vector<std::optional<double>> extra;
    bool feasible = false;
};

struct SweepResult {
    SweepKind kind;
    std::vector<std::string> coordinate_names;
    std::vector<std::string> extra_names;
    std::vector<SweepRecord> records;  ///< grid order: first axis outer
};

/// plane_gain: collaboration gain over relay positions (x, y) with source at
/// (-1/2, 0) and destination at (1/2, 0). collinear_gain: over d on the
/// segment. rate_ratio: over k at d_fixed. resource_ratio: total NCP over
/// total CP resource usage at the demanded rate. energy_ratio: NCP over CP
/// minimal TERN at the demanded rate.
SweepResult sweep(const SweepConfig& config);

/// Header row then one line per record; 12 significant digits, '\n' endings,
/// empty cells for missing values, booleans as 0/1.
void write_csv(std::ostream& out, const SweepResult& result);

/// Shortest round-trippable rendering with at most 12 significant digits.
std::string format_number(double value);

}  // namespace collabgain
