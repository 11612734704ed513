#include "spectrasat/grid.hpp"

#include "spectrasat/error.hpp"

#include <cmath>
#include <string>

namespace spectrasat {

WavenumberGrid::WavenumberGrid(double start_cm1, double end_cm1, int points)
    : start_cm1_(start_cm1), end_cm1_(end_cm1), points_(points) {
    if (points < 3) {
        throw ValidationError("grid must have at least 3 points, got " + std::to_string(points));
    }
    if (!(start_cm1 > end_cm1) || !(end_cm1 > 0.0)) {
        throw ValidationError("grid requires start_cm1 > end_cm1 > 0, got [" +
                              std::to_string(start_cm1) + ", " + std::to_string(end_cm1) + "]");
    }
    if (!std::isfinite(start_cm1) || !std::isfinite(end_cm1)) {
        throw ValidationError("grid bounds must be finite");
    }
}

double WavenumberGrid::wavenumber(int index) const {
    if (index == points_ - 1) return end_cm1_; // both endpoints exact
    const double t = static_cast<double>(index) / (points_ - 1);
    return start_cm1_ + (end_cm1_ - start_cm1_) * t;
}

std::vector<double> WavenumberGrid::wavenumbers() const {
    std::vector<double> out(points_);
    for (int i = 0; i < points_; ++i) out[i] = wavenumber(i);
    return out;
}

int WavenumberGrid::nearest_index(double cm1) const {
    const double raw = (start_cm1_ - cm1) / spacing();
    int idx = static_cast<int>(std::lround(raw));
    if (idx < 0) idx = 0;
    if (idx >= points_) idx = points_ - 1;
    return idx;
}

bool WavenumberGrid::operator==(const WavenumberGrid& other) const {
    return start_cm1_ == other.start_cm1_ && end_cm1_ == other.end_cm1_ &&
           points_ == other.points_;
}

} // namespace spectrasat
