#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "steercorr/error.hpp"
#include "steercorr_app/app.hpp"

namespace steercorr::app {

namespace {

double as_number(const nlohmann::json& v, const char* what) {
  if (!v.is_number()) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a number");
  }
  return v.get<double>();
}

}  // namespace

StateInput parse_state(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError, "state document must be a JSON object");
  }
  if (doc.contains("c")) {
    const auto& c = doc.at("c");
    if (!c.is_array() || c.size() != 3) {
      throw Error(ErrorCode::ParseError, "\"c\" must be an array of three numbers");
    }
    const CorrelationVector cv(as_number(c[0], "c1"), as_number(c[1], "c2"), as_number(c[2], "c3"));
    cv.require_bell_admissible();
    return cv;
  }
  if (doc.contains("matrix")) {
    const auto& rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != 4) {
      throw Error(ErrorCode::ParseError, "\"matrix\" must have 4 rows");
    }
    Matrix4c m;
    for (int i = 0; i < 4; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != 4) {
        throw Error(ErrorCode::ParseError, "matrix row " + std::to_string(i) + " must have 4 entries");
      }
      for (int j = 0; j < 4; ++j) {
        const auto& entry = row[static_cast<std::size_t>(j)];
        if (!entry.is_array() || entry.size() != 2) {
          throw Error(ErrorCode::ParseError, "matrix entries must be [re, im] pairs");
        }
        m(i, j) = Complex(as_number(entry[0], "re"), as_number(entry[1], "im"));
      }
    }
    return validate_density_matrix(m);
  }
  throw Error(ErrorCode::ParseError, "state document needs a \"c\" or \"matrix\" key");
}

StateInput load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return parse_state(doc);
}

std::string format_number(double x) {
  if (x == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (const SweepRecord& r : records) {
    const double fields[] = {r.c[0], r.c[1], r.c[2], r.F2, r.F3, r.S2, r.S3,
                             r.C2,   r.C3,   r.residual_14, r.residual_17};
    bool first = true;
    for (double f : fields) {
      if (!first) out += ',';
      out += format_number(f);
      first = false;
    }
    out += '\n';
  }
  return out;
}

nlohmann::json sweep_json(const std::vector<SweepRecord>& records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRecord& r : records) {
    nlohmann::json row;
    row["c"] = {r.c[0], r.c[1], r.c[2]};
    row["F2"] = r.F2;
    row["F3"] = r.F3;
    row["S2"] = r.S2;
    row["S3"] = r.S3;
    row["C2"] = r.C2;
    row["C3"] = r.C3;
    if (r.C2_numeric) row["C2_numeric"] = *r.C2_numeric;
    if (r.C3_numeric) row["C3_numeric"] = *r.C3_numeric;
    row["residual_14"] = r.residual_14;
    row["residual_17"] = r.residual_17;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace steercorr::app
