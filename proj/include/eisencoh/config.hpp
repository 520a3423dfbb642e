#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "eisencoh/error.hpp"
#include "eisencoh/sweep.hpp"

namespace eisencoh {

/// "2x1,4x3" → block pairs.
inline std::vector<BlockPair> parseBlocks(const std::string& text) {
  std::vector<BlockPair> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    if (item.empty() || x == std::string::npos)
      throw Error(ErrorCode::InvalidConfig, "bad block pair '" + item + "' (expected NxM)");
    try {
      std::size_t used1 = 0, used2 = 0;
      const std::string left = item.substr(0, x), right = item.substr(x + 1);
      const long long n = std::stoll(left, &used1);
      const long long np = std::stoll(right, &used2);
      if (used1 != left.size() || used2 != right.size()) throw std::invalid_argument("trailing");
      out.push_back(BlockPair::make(n, np));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidConfig, "bad block pair '" + item + "' (expected NxM)");
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidConfig, e.what());
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidConfig, "no block pairs given");
  return out;
}

/// "auto", "auto:3" or "lo:hi".
inline TwistRange parseTwistRange(const std::string& text) {
  TwistRange r;
  auto toInt = [&](const std::string& s) -> std::int64_t {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidConfig, "bad twist range '" + text + "'");
    }
  };
  if (text == "auto") return r;
  if (text.rfind("auto:", 0) == 0) {
    r.margin = toInt(text.substr(5));
    return r;
  }
  // lo:hi; the separator is the first ':' not at position 0 so "-3:-1" works.
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidConfig, "bad twist range '" + text + "'");
  r.automatic = false;
  r.lo = toInt(text.substr(0, colon));
  r.hi = toInt(text.substr(colon + 1));
  return r;
}

inline ReportFormat parseFormat(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "text") return ReportFormat::Text;
  throw Error(ErrorCode::InvalidConfig, "unknown format '" + s + "'");
}

inline Verbosity parseVerbosity(const std::string& s) {
  if (s == "summary") return Verbosity::Summary;
  if (s == "full") return Verbosity::Full;
  throw Error(ErrorCode::InvalidConfig, "unknown verbosity '" + s + "'");
}

/// Flat `key = value` document; '#' starts a comment. Keys: blocks,
/// bound, twists, output, format, verbosity, threads.
inline std::map<std::string, std::string> readKeyValue(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineNo = 0;
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
  };
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::InvalidConfig, "line " + std::to_string(lineNo) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

inline void applyKeyValue(SweepConfig& config, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "blocks") {
      config.block_pairs = parseBlocks(value);
    } else if (key == "bound") {
      try {
        config.entry_bound = std::stoll(value);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidConfig, "bad bound '" + value + "'");
      }
    } else if (key == "twists") {
      config.twist_range = parseTwistRange(value);
    } else if (key == "output") {
      config.output_path = value;
    } else if (key == "format") {
      config.format = parseFormat(value);
    } else if (key == "verbosity") {
      config.verbosity = parseVerbosity(value);
    } else if (key == "threads") {
      try {
        config.threads = static_cast<unsigned>(std::stoul(value));
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidConfig, "bad threads '" + value + "'");
      }
    } else {
      throw Error(ErrorCode::InvalidConfig, "unknown config key '" + key + "'");
    }
  }
}

inline SweepConfig loadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open config file " + path);
  SweepConfig config;
  applyKeyValue(config, readKeyValue(in));
  return config;
}

}  // namespace eisencoh
