#include "emit.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "maxkin/version.hpp"

namespace maxkin::cli {
namespace {

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_cell(const Json& value) {
  if (value.is_number_float()) {
    return format_real(value.get<double>());
  }
  if (value.is_number_unsigned()) {
    return std::to_string(value.get<unsigned long long>());
  }
  if (value.is_number_integer()) {
    return std::to_string(value.get<long long>());
  }
  if (value.is_boolean()) {
    return value.get<bool>() ? "true" : "false";
  }
  if (value.is_string()) {
    return value.get<std::string>();
  }
  return value.dump();
}

void append_metadata_comments(std::ostringstream& out, const Envelope& e,
                              bool with_timestamp) {
  out << "# tool: maxkin " << kVersion << "\n";
  out << "# schema_version: 1\n";
  out << "# command: " << e.command << "\n";
  for (const auto& [key, value] : e.parameters.items()) {
    out << "# " << key << ": " << csv_cell(value) << "\n";
  }
  if (with_timestamp) {
    out << "# generated_at: " << utc_timestamp() << "\n";
  }
}

std::string render_csv(const Envelope& e, bool with_timestamp) {
  std::ostringstream out;
  append_metadata_comments(out, e, with_timestamp);

  if (!e.columns.empty()) {
    for (std::size_t i = 0; i < e.columns.size(); ++i) {
      out << (i ? "," : "") << e.columns[i];
    }
    out << "\n";
    for (const auto& row : e.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_cell(row[i]);
      }
      out << "\n";
    }
    for (const auto& [key, value] : e.summary.items()) {
      out << "# summary " << key << ": " << csv_cell(value) << "\n";
    }
  } else {
    // flat report: one header row of keys, one row of values
    bool first = true;
    for (const auto& [key, value] : e.report.items()) {
      out << (first ? "" : ",") << key;
      first = false;
    }
    out << "\n";
    first = true;
    for (const auto& [key, value] : e.report.items()) {
      out << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_json(const Envelope& e, bool with_timestamp) {
  Json doc;
  Json metadata;
  metadata["tool"] = "maxkin";
  metadata["version"] = kVersion;
  metadata["schema_version"] = "1";
  metadata["command"] = e.command;
  metadata["parameters"] = e.parameters;
  if (with_timestamp) {
    metadata["generated_at"] = utc_timestamp();
  }
  doc["metadata"] = metadata;

  if (!e.columns.empty()) {
    Json rows = Json::array();
    for (const auto& row : e.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < e.columns.size() && i < row.size(); ++i) {
        obj[e.columns[i]] = row[i];
      }
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    if (!e.summary.empty()) {
      doc["summary"] = e.summary;
    }
  } else {
    doc["report"] = e.report;
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

std::string render(const Envelope& envelope, Format format,
                   bool with_timestamp) {
  return format == Format::Csv ? render_csv(envelope, with_timestamp)
                               : render_json(envelope, with_timestamp);
}

void write_output(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  file << body;
  if (!file.good()) {
    throw std::runtime_error("failed writing output file: " + path);
  }
}

}  // namespace maxkin::cli
