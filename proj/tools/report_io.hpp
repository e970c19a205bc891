#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace starq::cli {

using Json = nlohmann::ordered_json;

/// All numbers are emitted with 9 significant digits so re-running a command
/// reproduces output files byte for byte.
std::string fmt9(double v);

/// Round a value through the 9-significant-digit representation before it is
/// stored in JSON.
double round9(double v);

/// RFC 4180: quote fields containing commas, quotes, or newlines.
std::string csv_escape(const std::string& field);

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

/// Write to path, or stdout when path is empty. Throws std::ios_base::failure
/// on I/O errors.
void write_output(const std::string& path, const std::string& content);

}  // namespace starq::cli
