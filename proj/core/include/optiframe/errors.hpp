#pragma once

#include <stdexcept>
#include <string>

namespace optiframe {

/// Base for every error the library raises on a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define OPTIFRAME_DECLARE_ERROR(Name)            \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what_arg)   \
        : Error(#Name ": " + what_arg) {}        \
  }

OPTIFRAME_DECLARE_ERROR(InvalidArgument);

// geometry
OPTIFRAME_DECLARE_ERROR(InvalidPolarVector);
OPTIFRAME_DECLARE_ERROR(ZeroSumViolation);
OPTIFRAME_DECLARE_ERROR(DegenerateEdge);
OPTIFRAME_DECLARE_ERROR(RepeatedDirection);
OPTIFRAME_DECLARE_ERROR(NonUnitDirection);
OPTIFRAME_DECLARE_ERROR(EmptyEdgeSet);
OPTIFRAME_DECLARE_ERROR(NotStrictlyConvex);

// cyclotomic / enumeration
OPTIFRAME_DECLARE_ERROR(InvalidSignVector);
OPTIFRAME_DECLARE_ERROR(ArithmeticOverflow);
OPTIFRAME_DECLARE_ERROR(InexactDivision);
OPTIFRAME_DECLARE_ERROR(MTooLarge);

// frames / constructions
OPTIFRAME_DECLARE_ERROR(NotTight);
OPTIFRAME_DECLARE_ERROR(NotIrreducible);
OPTIFRAME_DECLARE_ERROR(NotASolution);
OPTIFRAME_DECLARE_ERROR(NoOddFactor);
OPTIFRAME_DECLARE_ERROR(NonUnitEdges);

// serialization
OPTIFRAME_DECLARE_ERROR(ParseError);

#undef OPTIFRAME_DECLARE_ERROR

}  // namespace optiframe
