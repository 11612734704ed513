#pragma once

#include "spectrasat/grid.hpp"

#include <map>
#include <string>
#include <vector>

namespace spectrasat {

// One absorbance trace plus labeling; `meta` carries optional provenance
// (augmentation parents, mixing coefficients, ...).
struct Spectrum {
    std::string id;
    std::string label;
    std::string cohort;
    std::vector<double> values;
    std::map<std::string, std::string> meta;
};

// Ordered spectra sharing one grid. Treated as immutable after construction;
// transforms return new datasets.
class Dataset {
public:
    Dataset(WavenumberGrid grid, std::vector<std::string> class_names);

    const WavenumberGrid& grid() const { return grid_; }
    const std::vector<std::string>& class_names() const { return class_names_; }
    const std::vector<Spectrum>& spectra() const { return spectra_; }
    std::size_t size() const { return spectra_.size(); }
    const Spectrum& operator[](std::size_t i) const { return spectra_[i]; }

    std::map<std::string, std::string>& provenance() { return provenance_; }
    const std::map<std::string, std::string>& provenance() const { return provenance_; }

    // validates label membership, value length, and finiteness
    void add(Spectrum s);

    int class_index(const std::string& label) const;
    std::vector<int> label_indices() const;

    // new dataset holding the rows at `indices`, order preserved
    Dataset subset(const std::vector<std::size_t>& indices) const;

private:
    WavenumberGrid grid_;
    std::vector<std::string> class_names_;
    std::vector<Spectrum> spectra_;
    std::map<std::string, std::string> provenance_;
};

// Slices every spectrum to the grid points whose wavenumber lies in
// [end_cm1, start_cm1]. Throws if the requested range falls outside the grid.
Dataset crop_to_fingerprint(const Dataset& ds, double start_cm1 = 1800.0,
                            double end_cm1 = 900.0);

} // namespace spectrasat
