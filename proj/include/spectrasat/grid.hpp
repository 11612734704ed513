#pragma once

#include <cstdint>
#include <vector>

namespace spectrasat {

// Uniform wavenumber axis, stored high-to-low (IR convention, e.g. 1800 -> 900).
class WavenumberGrid {
public:
    WavenumberGrid(double start_cm1, double end_cm1, int points);

    double start_cm1() const { return start_cm1_; }
    double end_cm1() const { return end_cm1_; }
    int points() const { return points_; }

    // positive step between consecutive (decreasing) wavenumbers
    double spacing() const { return (start_cm1_ - end_cm1_) / (points_ - 1); }

    double wavenumber(int index) const;
    std::vector<double> wavenumbers() const;

    // index of the grid point closest to the given wavenumber
    int nearest_index(double cm1) const;

    bool operator==(const WavenumberGrid& other) const;

private:
    double start_cm1_;
    double end_cm1_;
    int points_;
};

} // namespace spectrasat
