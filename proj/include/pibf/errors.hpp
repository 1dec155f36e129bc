#pragma once

#include <stdexcept>
#include <string>

namespace pibf {

// Malformed bytes on the wire or in a serialized table: truncation, bad
// magic, version or length fields that do not add up.
class WireError : public std::runtime_error {
public:
    explicit WireError(const std::string& what) : std::runtime_error(what) {}
};

// A peer violated the message sequence or sent inconsistent parameters
// (mismatched sketch geometry, wrong reference, unknown key fingerprint).
class ProtocolError : public std::runtime_error {
public:
    explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pibf
