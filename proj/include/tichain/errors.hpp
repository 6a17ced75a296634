#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tichain {

// Domain error with a stable machine-readable name; the CLI surfaces it
// as {"error": <name>, "message": <what>} on stderr with exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct SizeError : Error {
    explicit SizeError(const std::string& what) : Error("size_error", what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what)
        : Error("dimension_mismatch", what) {}
};

// Zero (or numerically zero) vector where a state is required.
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what)
        : Error("degenerate_input", what) {}
};

struct NotNormalized : Error {
    explicit NotNormalized(const std::string& what)
        : Error("not_normalized", what) {}
};

struct PhaseIndexError : Error {
    explicit PhaseIndexError(const std::string& what)
        : Error("phase_index_out_of_range", what) {}
};

// Misuse of a Hamiltonian specification (e.g. a non-ZZ spec passed to the
// witness routines) or an unparseable spec/angle string.
struct SpecError : Error {
    explicit SpecError(const std::string& what) : Error("bad_spec", what) {}
};

struct FileFormatError : Error {
    explicit FileFormatError(const std::string& what)
        : Error("bad_state_file", what) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& what) : Error("empty_input", what) {}
};

}  // namespace tichain
