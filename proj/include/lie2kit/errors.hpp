#ifndef LIE2KIT_ERRORS_HPP
#define LIE2KIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lie2kit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "matrix is singular") : Error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& what = "linear system has no solution") : Error(what) {}
};

struct DegreeOutOfRange : Error {
    explicit DegreeOutOfRange(const std::string& what) : Error(what) {}
};

struct BadGrading : Error {
    explicit BadGrading(const std::string& what) : Error(what) {}
};

struct BadStructure : Error {
    explicit BadStructure(const std::string& what) : Error(what) {}
};

struct NotJacobi : BadStructure {
    explicit NotJacobi(const std::string& what = "bracket does not satisfy the Jacobi identity") : BadStructure(what) {}
};

struct NotStrict : Error {
    explicit NotStrict(const std::string& what = "l3 is nonzero") : Error(what) {}
};

struct NotChainMap : Error {
    explicit NotChainMap(const std::string& what = "maps do not commute with the differentials") : Error(what) {}
};

struct InvalidRep : Error {
    explicit InvalidRep(const std::string& what) : Error(what) {}
};

struct ImageNotInKernel : Error {
    explicit ImageNotInKernel(const std::string& what) : Error(what) {}
};

struct NotStrictMorphism : Error {
    explicit NotStrictMorphism(const std::string& what) : Error(what) {}
};

struct NotAMorphism : Error {
    explicit NotAMorphism(const std::string& what) : Error(what) {}
};

struct NotComposable : Error {
    explicit NotComposable(const std::string& what = "arrows are not composable") : Error(what) {}
};

struct NotStrictGroupMorphism : Error {
    explicit NotStrictGroupMorphism(const std::string& what) : Error(what) {}
};

struct NotCentral : Error {
    explicit NotCentral(const std::string& what) : Error(what) {}
};

struct SchemaError : Error {
    std::string path;
    SchemaError(const std::string& path_, const std::string& what)
        : Error(path_ + ": " + what), path(path_) {}
};

} // namespace lie2kit

#endif
