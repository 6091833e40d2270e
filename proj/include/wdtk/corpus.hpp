// Bundled knot corpus: corpus/<name>.pd with a corpus/<name>.meta.json
// sidecar carrying declared tunnel numbers and hyperbolicity flags (knots
// named by their Rolfsen table entries).

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wdtk/certificates.hpp"
#include "wdtk/diagram.hpp"
#include "wdtk/json_io.hpp"

namespace wdtk {

struct CorpusEntry {
    std::string name;
    Diagram diagram;
    CompanionMeta meta;
    std::optional<LaurentPoly> alexander;  // table value, for cross-checks
    std::string source;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(in.good(), "EmptyInput", "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline CorpusEntry load_corpus_entry(const std::filesystem::path& dir, const std::string& name) {
    CorpusEntry e;
    e.name = name;
    e.diagram = parse_pd(read_file(dir / (name + ".pd")));
    auto meta_path = dir / (name + ".meta.json");
    if (std::filesystem::exists(meta_path)) {
        json j = json::parse(read_file(meta_path));
        e.meta.name = name;
        if (j.contains("tunnel_number"))
            e.meta.tunnel_number = j["tunnel_number"].get<long>();
        if (j.contains("hyperbolic"))
            e.meta.is_hyperbolic = j["hyperbolic"].get<bool>();
        if (j.contains("jsj_hyperbolic_pieces"))
            e.meta.jsj_hyperbolic_pieces = j["jsj_hyperbolic_pieces"].get<long>();
        if (j.contains("alexander"))
            e.alexander = laurent_from_json(j["alexander"]);
        if (j.contains("source"))
            e.source = j["source"].get<std::string>();
        e.meta.validate();
    }
    return e;
}

inline std::vector<std::string> corpus_names(const std::filesystem::path& dir) {
    std::vector<std::string> names;
    if (!std::filesystem::exists(dir))
        return names;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".pd")
            names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

}  // namespace wdtk
