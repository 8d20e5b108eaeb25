#pragma once

#include <stdexcept>
#include <string>

namespace polydeza {

/* Every failure mode raised by the library. Callers that want to branch on the
 * kind catch Error and inspect kind(); the message carries the offending
 * vertex/dart/value so reports stay actionable. */
enum class ErrorKind {
  AsymmetricDart,    /* u lists v but v does not list u */
  DuplicateNeighbour,/* a rotation lists the same neighbour twice */
  Loop,              /* a vertex lists itself */
  NonSpherical,      /* rotation system closes up with genus > 0 */
  Disconnected,      /* operation requires a connected graph */
  SameVertex,        /* a vertex pair argument with u == v */
  UnknownVertex,     /* vertex id out of range */
  TooSmall,          /* graph below the operation's minimum order */
  TooLarge,          /* graph above the operation's configured cap */
  NotPolyhedral,     /* input is not 3-connected planar (or result not simple) */
  NotPlanar,         /* operation requires a planar graph */
  NotRegular,        /* operation requires a regular graph */
  NotQuartic,        /* operation requires a 4-regular polyhedron */
  ExceptionalInput,  /* graph is excluded from type prediction by name */
  TypeMismatch,      /* common-neighbour profile lacks the required entry */
  SiteNotOnFace,     /* (v,u,w) are not consecutive on a face */
  IllegalSite,       /* expansion site violates its degree/arc preconditions */
  KTooSmall,         /* parametric family index below its minimum */
  PreconditionViolated, /* named precondition of a report does not hold */
  MalformedPlanarCode,
  MalformedGraph6,
  OrderOverflow,     /* graph too large for the encoding */
  FormatLoss,        /* conversion would drop the embedding */
  UnknownSuite,
  IoError,
  BadConfig,
  Internal,          /* invariant breach that should be unreachable */
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace polydeza
