// Copyright 2026 The Blockgame Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace blockgame {

// Error taxonomy, aligned with the CLI exit codes: parse/input 1,
// precondition 2, certification 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

// A documented operation precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// A certified bound failed when evaluated exactly; the message carries the
// offending quantities.
struct CertificationError : Error {
    using Error::Error;
};

}  // namespace blockgame
