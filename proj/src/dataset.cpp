#include "spectrasat/dataset.hpp"

#include "spectrasat/error.hpp"

#include <algorithm>
#include <cmath>

namespace spectrasat {

Dataset::Dataset(WavenumberGrid grid, std::vector<std::string> class_names)
    : grid_(grid), class_names_(std::move(class_names)) {}

void Dataset::add(Spectrum s) {
    if (class_index(s.label) < 0) {
        throw ValidationError("unknown label '" + s.label + "' for spectrum '" + s.id + "'");
    }
    if (static_cast<int>(s.values.size()) != grid_.points()) {
        throw ValidationError("grid mismatch for spectrum '" + s.id + "': expected " +
                              std::to_string(grid_.points()) + " values, got " +
                              std::to_string(s.values.size()));
    }
    for (double v : s.values) {
        if (!std::isfinite(v)) {
            throw ValidationError("non-finite value in spectrum '" + s.id + "'");
        }
    }
    spectra_.push_back(std::move(s));
}

int Dataset::class_index(const std::string& label) const {
    const auto it = std::find(class_names_.begin(), class_names_.end(), label);
    return it == class_names_.end() ? -1 : static_cast<int>(it - class_names_.begin());
}

std::vector<int> Dataset::label_indices() const {
    std::vector<int> out;
    out.reserve(spectra_.size());
    for (const auto& s : spectra_) out.push_back(class_index(s.label));
    return out;
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
    Dataset out(grid_, class_names_);
    out.provenance_ = provenance_;
    for (std::size_t i : indices) out.add(spectra_.at(i));
    return out;
}

Dataset crop_to_fingerprint(const Dataset& ds, double start_cm1, double end_cm1) {
    const WavenumberGrid& g = ds.grid();
    if (start_cm1 <= end_cm1) {
        throw ValidationError("crop range requires start > end");
    }
    if (start_cm1 > g.start_cm1() || end_cm1 < g.end_cm1()) {
        throw ValidationError("crop range [" + std::to_string(end_cm1) + ", " +
                              std::to_string(start_cm1) + "] lies outside grid [" +
                              std::to_string(g.end_cm1()) + ", " +
                              std::to_string(g.start_cm1()) + "]");
    }
    // tolerance absorbs round-off when boundary wavenumbers are recomputed
    // on an already-cropped grid, keeping the operation idempotent
    const double tol = g.spacing() * 1e-9;
    std::vector<int> keep;
    for (int i = 0; i < g.points(); ++i) {
        const double w = g.wavenumber(i);
        if (w <= start_cm1 + tol && w >= end_cm1 - tol) keep.push_back(i);
    }
    if (keep.size() < 3) {
        throw ValidationError("crop range keeps fewer than 3 grid points");
    }
    WavenumberGrid cropped(g.wavenumber(keep.front()), g.wavenumber(keep.back()),
                           static_cast<int>(keep.size()));
    Dataset out(cropped, ds.class_names());
    out.provenance() = ds.provenance();
    for (const auto& s : ds.spectra()) {
        Spectrum c;
        c.id = s.id;
        c.label = s.label;
        c.cohort = s.cohort;
        c.meta = s.meta;
        c.values.reserve(keep.size());
        for (int i : keep) c.values.push_back(s.values[i]);
        out.add(std::move(c));
    }
    return out;
}

} // namespace spectrasat
