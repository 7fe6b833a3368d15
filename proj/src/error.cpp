#include "wsn/error.hpp"

namespace wsn {

namespace {

std::string describe(const std::string& key, const std::string& message, std::optional<int> line) {
  std::string text = line ? "line " + std::to_string(*line) + ": " : std::string{};
  text += key.empty() ? message : key + ": " + message;
  return text;
}

}  // namespace

ConfigError::ConfigError(std::string key, const std::string& message, std::optional<int> line)
    : std::runtime_error(describe(key, message, line)), key_(std::move(key)), line_(line) {}

IoError::IoError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

}  // namespace wsn
