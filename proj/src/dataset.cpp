#include "kickfreeze/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#ifndef KICKFREEZE_VERSION
#define KICKFREEZE_VERSION "unknown"
#endif

namespace kickfreeze {

std::size_t Dataset::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("dataset has no column '" + name + "'");
}

std::vector<double> Dataset::values(const std::string& name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(c));
  return out;
}

const char* library_version() { return KICKFREEZE_VERSION; }

nlohmann::json make_metadata(const std::string& label, const ExperimentConfig& cfg) {
  return {{"label", label},
          {"config", config_to_json(cfg)},
          {"convention", to_string(cfg.convention)},
          {"version", library_version()},
          {"notes", nlohmann::json::array()}};
}

std::string format_number(double x) {
  if (x == 0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_csv(const Dataset& d) {
  std::string out;
  for (std::size_t i = 0; i < d.columns.size(); ++i) {
    if (i) out += ',';
    out += d.columns[i];
  }
  out += '\n';
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json_text(const Dataset& d) {
  const nlohmann::json j = {{"metadata", d.metadata}, {"columns", d.columns}, {"rows", d.rows}};
  return j.dump(2) + "\n";
}

Dataset dataset_from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Dataset d;
  d.metadata = j.at("metadata");
  d.columns = j.at("columns").get<std::vector<std::string>>();
  d.rows = j.at("rows").get<std::vector<std::vector<double>>>();
  return d;
}

void emit(const Dataset& d, OutputFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << (format == OutputFormat::csv ? to_csv(d) : to_json_text(d));
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace kickfreeze
