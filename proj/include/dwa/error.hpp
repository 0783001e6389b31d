#pragma once

#include <stdexcept>
#include <string>

namespace dwa {

// Error taxonomy shared by the core, the C API and the CLI.
//   argument_error  -> bad call (position out of range, flavor mismatch, ...)
//   config_error    -> inconsistent session state (non-prime p, mixed primes)
//   parse_error     -> expression syntax error, carries a byte offset
//   resource_error  -> a configured cap (degree, budget, rows) was exceeded

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class argument_error : public error {
public:
    explicit argument_error(const std::string& what) : error(what) {}
};

class config_error : public error {
public:
    explicit config_error(const std::string& what) : error(what) {}
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class resource_error : public error {
public:
    explicit resource_error(const std::string& what) : error(what) {}
};

}  // namespace dwa
