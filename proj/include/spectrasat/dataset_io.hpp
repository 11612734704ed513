#pragma once

#include "spectrasat/dataset.hpp"

#include <string>

namespace spectrasat {

enum class DatasetFormat { jsonl, csv };

DatasetFormat format_from_name(const std::string& name);

// Infers the format from the file extension (.jsonl / .csv) when not given.
Dataset load_dataset(const std::string& path, DatasetFormat format);
Dataset load_dataset(const std::string& path);

// Values are written with 17 significant digits so a reload is bit-exact.
void save_dataset(const Dataset& ds, const std::string& path, DatasetFormat format);
void save_dataset(const Dataset& ds, const std::string& path);

} // namespace spectrasat
