#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "witkit/operator.hpp"
#include "witkit/states.hpp"

namespace witkit {

inline constexpr int kOperatorSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

struct OperatorMetadata {
  std::optional<std::string> label;
  std::optional<Provenance> provenance;
};

struct OperatorFile {
  HermitianOperator op;
  OperatorMetadata metadata;
};

/// {schema_version, dims:{dA,dB}, entries:[[[re,im],...],...], metadata?}
nlohmann::json operator_to_json(const HermitianOperator& a, const OperatorMetadata& meta = {});
OperatorFile operator_from_json(const nlohmann::json& j);

void save_operator(const HermitianOperator& a, const std::filesystem::path& path,
                   const OperatorMetadata& meta = {});
OperatorFile load_operator_file(const std::filesystem::path& path);
HermitianOperator load_operator(const std::filesystem::path& path);

/// Shortest decimal that parses back to the same double; '.' separator
/// regardless of locale.
std::string format_double(double x);

/// RFC 4180 field quoting when needed.
std::string csv_field(const std::string& s);

}  // namespace witkit
