#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilt/quiver/representation.hpp"

namespace tilt::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kJobSchema = "tiltbench/job/1";

// Malformed or inconsistent job file. `field` is a JSON pointer, `line` is 1-based when the
// error comes from the parser.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& field, const std::string& message, std::size_t line = 0);
    const std::string& field() const { return field_; }
    std::size_t line() const { return line_; }

private:
    std::string field_;
    std::size_t line_;
};

struct CheckRequest {
    std::string check;
    std::size_t d = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
};

// Check names in the order they run.
const std::vector<std::string>& known_checks();
bool check_takes_d(const std::string& check);

struct JobSpec {
    std::string name;
    Json source;
    quiver::PathAlgebra::Ptr algebra;
    std::vector<quiver::Representation> generators;
    std::vector<quiver::Representation> declared_indecomposables;
    std::vector<CheckRequest> checks;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::size_t resolution_cap = 20;
    std::size_t max_path_len = 12;
};

struct IngestOptions {
    std::optional<std::size_t> max_path_len;
    std::optional<std::size_t> resolution_cap;
};

JobSpec ingest(const Json& job, const IngestOptions& opt = {});
JobSpec ingest_text(const std::string& text, const IngestOptions& opt = {});
JobSpec ingest_file(const std::filesystem::path& path, const IngestOptions& opt = {});

// Module described by a summand entry of the job grammar.
quiver::Representation parse_module(const quiver::PathAlgebra::Ptr& alg, const Json& spec, const std::string& where);

// Matrices as row-major arrays of integers reduced mod p.
Json matrix_to_json(const ff::Matrix& m);
ff::Matrix matrix_from_json(const Json& rows, std::size_t nrows, std::size_t ncols, std::uint32_t p,
                            const std::string& where);

}  // namespace tilt::cli
