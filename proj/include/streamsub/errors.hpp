#pragma once

#include <stdexcept>
#include <string>

namespace streamsub {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (bad argument, e already in S, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// An element id was used outside its declared scope (not in any matroid
// ground, not in the function domain, unknown universe item, ...).
struct UnknownElementError : Error {
  using Error::Error;
};

// An exhaustive routine was asked to run past its configured size limit.
struct LimitError : Error {
  using Error::Error;
};

// Stream protocol misuse: an element processed twice by one instance,
// duplicate stream ids, finish() called twice, and similar.
struct ProtocolError : Error {
  using Error::Error;
};

// A user-supplied oracle contradicted its own contract (matroid axioms,
// submodularity, no feasible single-element exchange, ...).
struct OracleError : Error {
  using Error::Error;
};

// Internal consistency trap: an invariant this library maintains itself was
// observed broken.  Always a bug, never a user error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace streamsub
