#include "skein/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace skein {

using nlohmann::ordered_json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + s);
}

namespace {

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["identity"] = r.identity;
  j["parameter"] = r.parameter;
  j["residuals"] = ordered_json::array();
  for (auto& x : r.residuals) j["residuals"].push_back({{"class", x.cls}, {"value", x.value}});
  j["verdict"] = r.verdict();
  // fixed precision keeps the text stable
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
  j["seconds"] = std::stod(buf);
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.identity << " [" << r.parameter << "]\n";
  os << "  classes checked: " << r.checked << "\n";
  for (auto& x : r.residuals) os << "  residual " << x.cls << ": " << x.value << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
  os << "  time: " << buf << " s\n";
  os << r.verdict() << "\n";
  return os.str();
}

}  // namespace

std::string render(const VerificationReport& r, Format f) {
  if (f == Format::Json) return to_json(r).dump(2) + "\n";
  return to_text(r);
}

std::string render(const std::vector<VerificationReport>& rs, Format f) {
  if (f == Format::Json) {
    ordered_json a = ordered_json::array();
    for (auto& r : rs) a.push_back(to_json(r));
    return a.dump(2) + "\n";
  }
  std::string out;
  for (auto& r : rs) out += to_text(r);
  return out;
}

VerificationReport report_from_json(const std::string& text) {
  auto j = ordered_json::parse(text);
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  r.parameter = j.at("parameter").get<std::string>();
  for (auto& x : j.at("residuals")) r.residuals.push_back({x.at("class").get<std::string>(), x.at("value").get<std::string>()});
  r.seconds = j.at("seconds").get<double>();
  if (j.at("verdict").get<std::string>() != r.verdict()) throw std::invalid_argument("verdict inconsistent with residuals");
  return r;
}

}  // namespace skein
