#ifndef KICKFREEZE_DATASET_HPP
#define KICKFREEZE_DATASET_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "kickfreeze/config.hpp"

namespace kickfreeze {

/// Column layout of every time-resolved dataset.
inline const std::vector<std::string> trajectory_columns = {"t",       "gt",       "concurrence",
                                                            "kicks",   "fidelity", "p00"};

/// Column-named table of doubles plus free-form metadata (config echo,
/// convention, code version, notes).
struct Dataset {
  nlohmann::json metadata = nlohmann::json::object();
  std::vector<std::string> columns = trajectory_columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const;
  std::vector<double> values(const std::string& name) const;
};

const char* library_version();

/// Metadata block shared by all runner outputs.
nlohmann::json make_metadata(const std::string& label, const ExperimentConfig& cfg);

/// Formats a value with 12 significant digits ("%.12g").
std::string format_number(double x);

/// Header row, then one line per row; every line ends in '\n'.
std::string to_csv(const Dataset& d);
/// {"metadata": {...}, "columns": [...], "rows": [[...], ...]}, two-space indent.
std::string to_json_text(const Dataset& d);
Dataset dataset_from_json_text(const std::string& text);

/// Writes the dataset; throws std::runtime_error naming the path on I/O failure.
void emit(const Dataset& d, OutputFormat format, const std::filesystem::path& path);

}  // namespace kickfreeze

#endif  // KICKFREEZE_DATASET_HPP
