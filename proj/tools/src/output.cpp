#include "fkfront_app/output.hpp"

#include <fstream>
#include <stdexcept>
#include <system_error>

namespace fkfront::app {

void OutputSet::add(std::string name, std::string content) {
  if (find(name) != nullptr) throw std::logic_error("duplicate output file " + name);
  files_.push_back({std::move(name), std::move(content)});
}

void OutputSet::add_sidecar(const std::string& csv_name, const std::string& command,
                            const std::string& config_hash, const nlohmann::ordered_json& config,
                            const nlohmann::ordered_json& extra) {
  nlohmann::ordered_json j;
  j["file"] = csv_name;
  j["command"] = command;
  j["config_hash"] = config_hash;
  for (const auto& [key, value] : extra.items()) j[key] = value;
  j["config"] = config;
  const auto dot = csv_name.rfind('.');
  add(csv_name.substr(0, dot) + ".json", j.dump(2) + "\n");
}

const OutputFile* OutputSet::find(const std::string& name) const {
  for (const auto& f : files_) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

void OutputSet::commit(const std::filesystem::path& dir) const {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<fs::path> staged;
  const auto discard = [&] {
    std::error_code ec;
    for (const auto& p : staged) fs::remove(p, ec);
  };
  for (const auto& f : files_) {
    const fs::path tmp = dir / (f.name + ".tmp");
    staged.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << f.content;
    out.close();
    if (!out) {
      discard();
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  for (std::size_t i = 0; i < files_.size(); ++i) {
    fs::rename(staged[i], dir / files_[i].name);
  }
}

}  // namespace fkfront::app
