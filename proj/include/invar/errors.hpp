// Error taxonomy shared by all invar modules.
#pragma once

#include <stdexcept>
#include <string>

namespace invar {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define INVAR_DEFINE_ERROR(Name)                  \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    }

INVAR_DEFINE_ERROR(IoError);                 // missing files, unreadable data
INVAR_DEFINE_ERROR(FormatError);             // malformed geometry / image / manifest text
INVAR_DEFINE_ERROR(ConfigError);             // bad parameters, unknown names, invalid ranges
INVAR_DEFINE_ERROR(EmptyGeometryError);      // render called on a mesh without faces
INVAR_DEFINE_ERROR(OutOfCanvasError);        // 2D transform would push the object off-canvas
INVAR_DEFINE_ERROR(InsufficientSamplesError); // pair sampling cannot satisfy the request
INVAR_DEFINE_ERROR(TrainingDivergedError);   // non-finite loss during optimization
INVAR_DEFINE_ERROR(ShapeError);              // tensor/vector dimension mismatch
INVAR_DEFINE_ERROR(DegenerateVectorError);   // similarity of an all-zero vector
INVAR_DEFINE_ERROR(DegenerateUniformityError); // adjusted invariance with 1-U below floor
INVAR_DEFINE_ERROR(EmptyRunError);           // report requested for a run with no results

#undef INVAR_DEFINE_ERROR

} // namespace invar
