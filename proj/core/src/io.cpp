#include "nestoh/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nestoh {

namespace {

nlohmann::json parse_json(const std::string& text, const char* what) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw error(errc::parse_error, std::string("malformed JSON in ") + what);
  return doc;
}

int get_int(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw error(errc::parse_error,
                std::string(what) + " requires an integer field \"" + key + "\"");
  return j[key].get<int>();
}

}  // namespace

BuildingSet building_set_from_json(const std::string& text) {
  nlohmann::json doc = parse_json(text, "building set");
  int n = get_int(doc, "n", "building set");
  if (!doc.contains("sets") || !doc["sets"].is_array())
    throw error(errc::parse_error, "building set requires an array field \"sets\"");
  std::vector<std::vector<int>> sets;
  for (const auto& entry : doc["sets"]) {
    if (!entry.is_array())
      throw error(errc::parse_error, "each member must be an array of integers");
    std::vector<int> s;
    for (const auto& e : entry) {
      if (!e.is_number_integer())
        throw error(errc::parse_error, "set elements must be integers");
      s.push_back(e.get<int>());
    }
    sets.push_back(std::move(s));
  }
  return BuildingSet::validate(n, sets);
}

std::string to_json(const BuildingSet& b) {
  std::ostringstream os;
  os << "{\"n\":" << b.ground_size() << ",\"sets\":[";
  bool first = true;
  for (const auto& s : b.member_lists()) {
    if (!first) os << ",";
    first = false;
    os << "[";
    const char* sep = "";
    for (int e : s) {
      os << sep << e;
      sep = ",";
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

std::vector<Poset> posets_from_json(const std::string& text) {
  nlohmann::json doc = parse_json(text, "poset list");
  if (!doc.is_array())
    throw error(errc::parse_error, "poset list must be a JSON array");
  std::vector<Poset> out;
  for (const auto& entry : doc) {
    int n = get_int(entry, "n", "poset");
    if (!entry.contains("covers") || !entry["covers"].is_array())
      throw error(errc::parse_error, "poset requires an array field \"covers\"");
    std::vector<std::pair<int, int>> covers;
    for (const auto& cover : entry["covers"]) {
      if (!cover.is_array() || cover.size() != 2 ||
          !cover[0].is_number_integer() || !cover[1].is_number_integer())
        throw error(errc::parse_error, "each cover must be [lower, upper]");
      covers.push_back({cover[0].get<int>(), cover[1].get<int>()});
    }
    out.emplace_back(n, std::move(covers));
  }
  return out;
}

std::string to_json(std::span<const Poset> posets) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const Poset& p : posets) {
    if (!first) os << ",";
    first = false;
    os << "{\"n\":" << p.size() << ",\"covers\":[";
    bool first_cover = true;
    for (auto [a, b] : p.covers()) {
      if (!first_cover) os << ",";
      first_cover = false;
      os << "[" << a << "," << b << "]";
    }
    os << "]}";
  }
  os << "]";
  return os.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (n < 0) {
      int value = 0;
      if (first != "n" || !(ls >> value)) {
        std::ostringstream msg;
        msg << "line " << lineno << ": expected header \"n <N>\"";
        throw error(errc::parse_error, msg.str());
      }
      n = value;
      continue;
    }
    int a = 0, b = 0;
    try {
      a = std::stoi(first);
    } catch (...) {
      a = 0;
    }
    if (a == 0 || !(ls >> b)) {
      std::ostringstream msg;
      msg << "line " << lineno << ": expected an edge \"i j\"";
      throw error(errc::parse_error, msg.str());
    }
    for (int v : {a, b})
      if (v < 1 || v > n) {
        std::ostringstream msg;
        msg << "line " << lineno << ": vertex " << v
            << " is out of range for n=" << n;
        throw error(errc::parse_error, msg.str());
      }
    edges.push_back({a, b});
  }
  if (n < 0) throw error(errc::parse_error, "missing header \"n <N>\"");
  return Graph(n, std::move(edges));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace nestoh
