#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mselab/mse_instance.hpp"
#include "mselab/reduction.hpp"

namespace mselab {

// {"s", "t", "p", "k", "stage", "layoutDigest", "graph"}; the digest is null
// for instances without a layout.
nlohmann::ordered_json instance_to_json(const MseInstance& inst, std::string_view layout_digest = {});

struct LoadedInstance {
  MseInstance instance;
  std::string layout_digest;  // empty when absent
};
LoadedInstance instance_from_json(const nlohmann::json& doc);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
nlohmann::json read_json_file(const std::filesystem::path& path);

void save_reduction(const Reduction& r, const std::filesystem::path& instance_path,
                    const std::filesystem::path& layout_path);

// Throws ParseError if the layout digest recorded in the instance does not
// match the layout file.
Reduction load_reduction(const std::filesystem::path& instance_path,
                         const std::filesystem::path& layout_path);

}  // namespace mselab
