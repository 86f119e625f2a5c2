#include "witkit/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "witkit/error.hpp"

namespace witkit {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

int read_dim(const json& dims, const char* key) {
  if (!dims.contains(key) || !dims[key].is_number_integer()) {
    parse_fail(std::string("dims.") + key + " missing or not an integer");
  }
  return dims[key].get<int>();
}

}  // namespace

json operator_to_json(const HermitianOperator& a, const OperatorMetadata& meta) {
  const int n = a.size();
  json rows = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int s = 0; s < n; ++s) row.push_back({a(r, s).real(), a(r, s).imag()});
    rows.push_back(std::move(row));
  }
  json j = {{"schema_version", kOperatorSchemaVersion},
            {"dims", {{"dA", a.dims().dA()}, {"dB", a.dims().dB()}}},
            {"entries", std::move(rows)}};
  if (meta.label || meta.provenance) {
    json m = json::object();
    if (meta.label) m["label"] = *meta.label;
    if (meta.provenance) m["provenance"] = std::string(to_string(*meta.provenance));
    j["metadata"] = std::move(m);
  }
  return j;
}

OperatorFile operator_from_json(const json& j) {
  if (!j.is_object()) parse_fail("top level must be an object");
  if (!j.contains("schema_version") || j["schema_version"] != kOperatorSchemaVersion) {
    parse_fail("unsupported or missing schema_version");
  }
  if (!j.contains("dims") || !j["dims"].is_object()) parse_fail("missing dims object");
  const Dims dims(read_dim(j["dims"], "dA"), read_dim(j["dims"], "dB"));
  const int n = dims.dAB();

  if (!j.contains("entries") || !j["entries"].is_array()) parse_fail("missing entries array");
  const json& rows = j["entries"];
  if (static_cast<int>(rows.size()) != n) {
    std::ostringstream os;
    os << "entries has " << rows.size() << " rows, dims require " << n;
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = rows[r];
    if (!row.is_array()) parse_fail("row " + std::to_string(r) + " is not an array");
    if (static_cast<int>(row.size()) != n) {
      std::ostringstream os;
      os << "row " << r << " has " << row.size() << " entries, dims require " << n;
      throw Error(ErrorKind::DimensionMismatch, os.str());
    }
    for (int s = 0; s < n; ++s) {
      const json& e = row[s];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        std::ostringstream os;
        os << "entry (" << r << ", " << s << ") must be [re, im]";
        parse_fail(os.str());
      }
      m(r, s) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }

  OperatorMetadata meta;
  if (j.contains("metadata")) {
    const json& md = j["metadata"];
    if (!md.is_object()) parse_fail("metadata must be an object");
    if (md.contains("label")) meta.label = md["label"].get<std::string>();
    if (md.contains("provenance")) {
      meta.provenance = provenance_from_string(md["provenance"].get<std::string>());
    }
  }
  return OperatorFile{HermitianOperator(dims, std::move(m)), std::move(meta)};
}

void save_operator(const HermitianOperator& a, const std::filesystem::path& path,
                   const OperatorMetadata& meta) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << operator_to_json(a, meta).dump(1) << '\n';
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

OperatorFile load_operator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    parse_fail(path.string() + ": " + e.what());
  }
  try {
    return operator_from_json(j);
  } catch (const json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

HermitianOperator load_operator(const std::filesystem::path& path) {
  return load_operator_file(path).op;
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace witkit
