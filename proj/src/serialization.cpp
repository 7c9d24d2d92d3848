#include "covering/serialization.hpp"

#include <fstream>
#include <sstream>

namespace covering {

using nlohmann::json;

json code_to_json(const Code& code) {
  json words = json::array();
  for (const Word& w : code.words()) words.push_back(format_word(code.space(), w));
  return json{{"q", code.space().q()}, {"n", code.space().n()}, {"words", std::move(words)}};
}

Code code_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("code file must hold a JSON object");
    for (const char* key : {"q", "n", "words"}) {
      if (!j.contains(key)) throw ParseError(std::string("code file is missing \"") + key + "\"");
    }
    if (!j.at("q").is_number_unsigned() || !j.at("n").is_number_unsigned()) {
      throw ParseError("\"q\" and \"n\" must be non-negative integers");
    }
    if (!j.at("words").is_array()) throw ParseError("\"words\" must be an array");
    const HammingSpace space(j.at("q").get<unsigned>(), j.at("n").get<unsigned>());
    std::vector<Word> words;
    words.reserve(j.at("words").size());
    for (const json& w : j.at("words")) {
      if (!w.is_string()) throw ParseError("every word must be a string");
      words.push_back(parse_word(space, w.get<std::string>()));
    }
    return Code(space, std::move(words));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

json density_to_json(const DensityValue& d) { return json{{"exact", d.exact_string()}, {"approx", d.approx}}; }

json trace_to_json(const ConstructionTrace& trace) {
  json levels = json::array();
  for (const TraceLevel& l : trace.levels) {
    json rec{{"n", l.n}, {"kind", l.split ? "split" : "base"}, {"method", l.method}, {"size", l.level_size}};
    if (l.split) {
      rec["r"] = l.r;
      rec["r_prime"] = l.r_prime;
      rec["x_size"] = l.x_size;
      rec["n_bar_size"] = l.n_bar_size;
      rec["k2_size"] = l.k2_size;
      rec["x_budget"] = l.x_budget;
      rec["n_bar_threshold"] = l.n_bar_threshold;
      rec["trials"] = l.trials;
    } else {
      rec["optimal"] = l.optimal;
    }
    levels.push_back(std::move(rec));
  }
  return json{{"q", trace.q},
              {"R", trace.radius},
              {"x", trace.x},
              {"y", trace.y},
              {"seed", trace.seed},
              {"base_policy", to_string(trace.base_policy)},
              {"levels", std::move(levels)},
              {"total_size", trace.total_size},
              {"density", density_to_json(trace.density)}};
}

json solve_result_to_json(const SolveResult& result, unsigned radius) {
  return json{{"R", radius},
              {"optimal_size", result.optimal_size},
              {"status", result.status == SolveStatus::optimal ? "optimal" : "budget_exceeded"},
              {"nodes", result.nodes},
              {"density", density_to_json(result.density)},
              {"code", code_to_json(result.code)}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw ParseError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_code_file(const std::filesystem::path& path, const Code& code) {
  write_text_file(path, canonical_dump(code_to_json(code)));
}

Code read_code_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return code_from_json(j);
}

}  // namespace covering
