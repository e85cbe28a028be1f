#pragma once

// Command results are staged in memory and committed together: each file is
// written to a temporary name and renamed into place only after every file of
// the command has been produced, so a failed command leaves no partial output.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fkfront::app {

struct OutputFile {
  std::string name;
  std::string content;
};

class OutputSet {
 public:
  void add(std::string name, std::string content);
  /// Adds `<stem>.json` describing `csv_name`: command, config hash and
  /// config, merged with `extra`.
  void add_sidecar(const std::string& csv_name, const std::string& command,
                   const std::string& config_hash, const nlohmann::ordered_json& config,
                   const nlohmann::ordered_json& extra = nlohmann::ordered_json::object());
  void warn(std::string message) { warnings_.push_back(std::move(message)); }

  const std::vector<OutputFile>& files() const noexcept { return files_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  const OutputFile* find(const std::string& name) const;

  /// Creates `dir` if needed and writes every file atomically.
  void commit(const std::filesystem::path& dir) const;

 private:
  std::vector<OutputFile> files_;
  std::vector<std::string> warnings_;
};

}  // namespace fkfront::app
