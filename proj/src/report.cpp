#include "qalg/report.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qalg::report {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

nlohmann::json wrap(const std::string& verb, std::string_view canonical_input, nlohmann::json body,
                    bool with_timestamp) {
  nlohmann::json out;
  out["schema"] = kSchema;
  out["tool"] = kToolName;
  out["version"] = kVersion;
  out["verb"] = verb;
  out["input_hash"] = sha256_hex(canonical_input);
  out["body"] = std::move(body);
  if (with_timestamp) {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ts;
    ts << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    out["envelope"] = {{"timestamp", ts.str()}};
  }
  return out;
}

namespace {

void render(const nlohmann::json& j, int indent, std::ostringstream& os) {
  const std::string pad(indent * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render(v, indent + 1, os);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty()) {
        os << pad << "-\n";
        render(v, indent + 1, os);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string to_text(const nlohmann::json& body) {
  std::ostringstream os;
  render(body, 0, os);
  return os.str();
}

}  // namespace qalg::report
