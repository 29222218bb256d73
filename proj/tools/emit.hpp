#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace maxkin::cli {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

/// One renderable output: shared metadata plus either a row table, a flat
/// report object, or both a table and a summary. Every emission embeds the
/// resolved parameters (and seed, when present) so it can be regenerated
/// from its own header.
struct Envelope {
  std::string command;
  Json parameters = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  Json report = Json::object();   // used when columns is empty
  Json summary = Json::object();  // optional trailer for row tables
};

/// Reals are rendered in scientific notation with 17 significant digits.
std::string format_real(double value);

std::string render(const Envelope& envelope, Format format,
                   bool with_timestamp);

/// Writes body to the path, or to standard output when path is empty.
/// The file is only created once the body is fully rendered.
void write_output(const std::string& body, const std::string& path);

}  // namespace maxkin::cli
