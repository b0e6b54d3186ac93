#pragma once

#include <stdexcept>
#include <string>

namespace graphpoly {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range ids, bad residues, missing edges.
class input_error : public error {
public:
    using error::error;
};

// A configured cap (edge-subset enumeration, brute-force work) was exceeded.
// The message always names the cap and the offending size.
class resource_error : public error {
public:
    using error::error;
};

// The rotation system does not describe a sphere embedding (dart
// inconsistency, disconnected graph, Euler formula violation).
class embedding_error : public error {
public:
    using error::error;
};

// A function was handed a value that breaks its stated contract,
// e.g. an unbalanced flow where a balanced one is required.
class contract_violation : public error {
public:
    using error::error;
};

// Text input that does not conform to the graph file format.
class parse_error : public input_error {
public:
    parse_error(int line, const std::string& what)
        : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace graphpoly
