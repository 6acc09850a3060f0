#include "mselab/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "mselab/error.hpp"
#include "mselab/graph_io.hpp"

namespace mselab {

using nlohmann::ordered_json;

ordered_json instance_to_json(const MseInstance& inst, std::string_view layout_digest) {
  ordered_json doc;
  doc["s"] = index_of(inst.s);
  doc["t"] = index_of(inst.t);
  doc["p"] = inst.p;
  doc["k"] = inst.k;
  doc["stage"] = std::string(to_string(inst.stage));
  doc["layoutDigest"] =
      layout_digest.empty() ? ordered_json(nullptr) : ordered_json(std::string(layout_digest));
  doc["graph"] = graph_to_json(inst.graph);
  return doc;
}

LoadedInstance instance_from_json(const nlohmann::json& doc) {
  LoadedInstance out;
  try {
    MseInstance& inst = out.instance;
    inst.graph = graph_from_json(doc.at("graph"));
    inst.s = vertex_id(doc.at("s").get<std::size_t>());
    inst.t = vertex_id(doc.at("t").get<std::size_t>());
    inst.p = doc.at("p").get<std::int64_t>();
    inst.k = doc.at("k").get<std::int64_t>();
    inst.stage = stage_from_string(doc.at("stage").get<std::string>());
    const auto& digest = doc.value("layoutDigest", nlohmann::json(nullptr));
    if (!digest.is_null()) out.layout_digest = digest.get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed instance JSON: ") + ex.what());
  }
  try {
    out.instance.validate();
  } catch (const PreconditionError& ex) {
    throw ParseError(ex.what());
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
}

void save_reduction(const Reduction& r, const std::filesystem::path& instance_path,
                    const std::filesystem::path& layout_path) {
  const ordered_json layout = layout_to_json(r.layout);
  const std::string layout_text = layout.dump();
  write_text_file(layout_path, layout_text);
  write_text_file(instance_path, instance_to_json(r.instance, fnv1a_hex(layout_text)).dump(1));
}

Reduction load_reduction(const std::filesystem::path& instance_path,
                         const std::filesystem::path& layout_path) {
  LoadedInstance loaded = instance_from_json(read_json_file(instance_path));
  const std::string layout_text = read_text_file(layout_path);
  const std::string digest = fnv1a_hex(layout_text);
  if (!loaded.layout_digest.empty() && loaded.layout_digest != digest) {
    throw ParseError("layout " + layout_path.string() + " does not match the instance digest");
  }
  Reduction r;
  r.instance = std::move(loaded.instance);
  try {
    r.layout = layout_from_json(nlohmann::json::parse(layout_text));
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(layout_path.string() + ": " + ex.what());
  }
  if (r.layout.stage != r.instance.stage) {
    throw ParseError("layout stage differs from instance stage");
  }
  return r;
}

}  // namespace mselab
