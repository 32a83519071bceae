#pragma once

#include <stdexcept>
#include <string>

namespace thetadet {

// Malformed input text: PD codes, graph files, symmetric-graph files, table rows.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid diagram or graph (failed Euler count, disconnected
// diagram, impossible checkerboard colouring, ...).
struct InvalidDiagramError : std::runtime_error {
    explicit InvalidDiagramError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computation paths returned different values.  This never
// fires on valid inputs; it indicates a bug or a corrupted fixture.
struct DisagreementError : std::runtime_error {
    explicit DisagreementError(const std::string& msg) : std::runtime_error(msg) {}
};

// The brute-force spanning-tree enumerator refuses graphs above its size cap.
struct OracleGuardError : std::runtime_error {
    explicit OracleGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace thetadet
