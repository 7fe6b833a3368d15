#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace wsn {

/// Invalid configuration. Carries the key and, for file input, the 1-based line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message, std::optional<int> line = std::nullopt);

  const std::string& key() const { return key_; }
  std::optional<int> line() const { return line_; }

 private:
  std::string key_;
  std::optional<int> line_;
};

class IoError : public std::runtime_error {
 public:
  IoError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace wsn
