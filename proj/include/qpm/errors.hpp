#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dispersion / beta evaluation
struct OutOfValidityRange : Error { using Error::Error; };
struct UnknownPolarization : Error { using Error::Error; };
struct StencilOutOfRange : Error { using Error::Error; };
struct NonConverged : Error { using Error::Error; };

// Phase matching / solvers
struct NonPositiveMismatch : Error { using Error::Error; };
struct NoRootInBracket : Error { using Error::Error; };
struct DegenerateRoot : Error { using Error::Error; };
struct NonUnique : Error { using Error::Error; };

struct MultipleRoots : Error {
    MultipleRoots(const std::string& msg, std::vector<std::pair<double, double>> br)
        : Error(msg), brackets(std::move(br)) {}
    std::vector<std::pair<double, double>> brackets;
};

// Spectra
struct NormalizationError : Error { using Error::Error; };
struct NonPhysical : Error { using Error::Error; };
struct DegenerateSpectrum : Error { using Error::Error; };
struct EmptySpectrum : Error { using Error::Error; };
struct FractionOutOfRange : Error { using Error::Error; };
struct InsufficientRange : Error { using Error::Error; };

// Metrology
struct NoFringeFound : Error { using Error::Error; };
struct GainImplied : Error { using Error::Error; };
struct InvalidReflectivity : Error { using Error::Error; };
struct InvalidIndex : Error { using Error::Error; };
struct NegativeNetRate : Error { using Error::Error; };

// Files / configuration
struct ParseError : Error {
    ParseError(const std::string& msg, int line_number) : Error(msg), line(line_number) {}
    int line;
};
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace qpm
