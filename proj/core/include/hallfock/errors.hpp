#pragma once

#include <stdexcept>
#include <string>

namespace hallfock {

// Base for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class division_by_zero_error : public error {
public:
    explicit division_by_zero_error(const std::string& what = "division by zero")
        : error(what) {}
};

// eval_at hit a point where the denominator vanishes; caller retries elsewhere.
class evaluation_pole_error : public error {
public:
    explicit evaluation_pole_error(const std::string& what = "denominator vanishes at evaluation point")
        : error(what) {}
};

class argument_error : public error {
public:
    explicit argument_error(const std::string& what) : error(what) {}
};

class degree_cap_error : public error {
public:
    explicit degree_cap_error(const std::string& what) : error(what) {}
};

// Requested computation is outside the exact-mode limits (e.g. too many
// symmetrization variables).
class capability_error : public error {
public:
    explicit capability_error(const std::string& what) : error(what) {}
};

// A series truncation bound was set too low for the requested coefficient.
class internal_error : public error {
public:
    explicit internal_error(const std::string& what) : error(what) {}
};

class degenerate_input_error : public error {
public:
    explicit degenerate_input_error(const std::string& what) : error(what) {}
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

} // namespace hallfock
