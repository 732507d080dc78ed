#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plz {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected parameter or argument.
struct validation_error : error {
    using error::error;
};

// Container does not look like one of ours (magic/version).
struct unsupported_format_error : error {
    using error::error;
};

// Structurally broken container or payload. `byte_offset` points at the
// first offending byte when known; chunk/token indices locate decode
// failures.
struct corruption_error : error {
    std::size_t byte_offset = 0;
    std::size_t chunk_index = SIZE_MAX;
    std::size_t token_index = SIZE_MAX;

    explicit corruption_error(const std::string& msg, std::size_t offset = 0)
        : error(msg), byte_offset(offset) {}
    corruption_error(const std::string& msg, std::size_t chunk, std::size_t token)
        : error(msg), chunk_index(chunk), token_index(token) {}
};

// Violated internal contract between pipeline stages.
struct contract_error : error {
    using error::error;
};

}  // namespace plz
