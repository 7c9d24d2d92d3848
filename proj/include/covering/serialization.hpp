#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "covering/code.hpp"
#include "covering/construction.hpp"
#include "covering/exact_solver.hpp"

namespace covering {

/// {"n": int, "q": int, "words": [string, ...]}; keys sorted, words in
/// lexicographic order, so equal codes serialize to identical bytes.
nlohmann::json code_to_json(const Code& code);
Code code_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const DensityValue& d);
nlohmann::json trace_to_json(const ConstructionTrace& trace);
nlohmann::json solve_result_to_json(const SolveResult& result, unsigned radius);

/// Two-space indented dump followed by a newline.
std::string canonical_dump(const nlohmann::json& j);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

void write_code_file(const std::filesystem::path& path, const Code& code);
/// Throws ParseError on unreadable files, malformed JSON or invalid words.
Code read_code_file(const std::filesystem::path& path);

}  // namespace covering
