#ifndef SECBEAM_ERRORS_HPP
#define SECBEAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace secbeam {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct InvalidGeometry : Error {
    using Error::Error;
};

struct FieldTooSmall : Error {
    using Error::Error;
};

struct InvalidParameters : Error {
    using Error::Error;
};

struct IncompleteReception : Error {
    using Error::Error;
};

struct OracleInfeasible : Error {
    using Error::Error;
};

/// SDP solution is not rank-one within tolerance; carries the eigenvalue ratio.
struct RelaxationNotExact : Error {
    double eig_ratio;
    explicit RelaxationNotExact(double ratio, const std::string& what)
        : Error(what), eig_ratio(ratio) {}
};

/// One phase of the periodic synthesis has an empty feasible set.
struct PhaseInfeasible : Error {
    int phase;
    explicit PhaseInfeasible(int phase_idx, const std::string& what)
        : Error(what), phase(phase_idx) {}
};

}  // namespace secbeam

#endif
