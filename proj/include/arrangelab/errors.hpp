#ifndef ARRANGELAB_ERRORS_HPP
#define ARRANGELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arrangelab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input could not be parsed (graph files, polynomial text, CLI values).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct NotChordalError : Error {
    explicit NotChordalError(const std::string& msg) : Error("not chordal: " + msg) {}
};

// An enumeration (circuits, flats, monomials) exceeded the configured cap.
struct SizeLimitExceeded : Error {
    explicit SizeLimitExceeded(const std::string& msg) : Error("size limit exceeded: " + msg) {}
};

// A pair queue or weight computation exceeded the configured cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error("cap exceeded: " + msg) {}
};

struct VarTableMismatch : Error {
    VarTableMismatch() : Error("operands belong to different variable tables") {}
};

struct NotQuadraticError : Error {
    int min_degree;
    explicit NotQuadraticError(int deg)
        : Error("ideal has no quadratic Groebner basis in this order; irreducible element of degree " +
                std::to_string(deg)),
          min_degree(deg) {}
};

struct HilbertIdentityError : Error {
    int degree;
    explicit HilbertIdentityError(int deg)
        : Error("Hilbert series identity h_A(t)*h_dual(-t) = 1 fails at degree " + std::to_string(deg)),
          degree(deg) {}
};

struct NotQuadraticInput : Error {
    explicit NotQuadraticInput(const std::string& msg) : Error("presentation is not quadratic: " + msg) {}
};

struct NotAntisymmetric : Error {
    NotAntisymmetric() : Error("dual relation space is not antisymmetric; input DGA was not commutative-quadratic") {}
};

struct MalformedQla : Error {
    explicit MalformedQla(const std::string& msg) : Error("malformed quadratic-linear data: " + msg) {}
};

struct GenusZeroUnsupported : Error {
    GenusZeroUnsupported() : Error("projective models require genus >= 1") {}
};

} // namespace arrangelab

#endif
