#pragma once

#include <stdexcept>
#include <string>

namespace patchnet {

// Base for everything this library throws. The category is a stable
// one-word identifier the CLI prints in front of the human-readable text.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& what)
        : std::runtime_error(what), category_(std::move(category)) {}

    const std::string& category() const { return category_; }

private:
    std::string category_;
};

// Malformed input: files, schemas, indices, mesh topology.
class InputError : public Error {
public:
    using Error::Error;
};

// Degenerate geometry encountered while computing.
class GeometryError : public Error {
public:
    using Error::Error;
};

class IdealPointError : public GeometryError {
public:
    explicit IdealPointError(const std::string& what)
        : GeometryError("IdealPoint", what) {}
};

class ZeroVectorError : public GeometryError {
public:
    explicit ZeroVectorError(const std::string& what)
        : GeometryError("ZeroVector", what) {}
};

class DegenerateTangentsError : public GeometryError {
public:
    explicit DegenerateTangentsError(const std::string& what)
        : GeometryError("DegenerateTangents", what) {}
};

class ProjectionCollapseError : public GeometryError {
public:
    explicit ProjectionCollapseError(const std::string& what)
        : GeometryError("ProjectionCollapse", what) {}
};

class MissingNormalError : public InputError {
public:
    explicit MissingNormalError(const std::string& what)
        : InputError("MissingNormal", what) {}
};

class InvalidIndexError : public InputError {
public:
    explicit InvalidIndexError(const std::string& what)
        : InputError("InvalidIndex", what) {}
};

class DegenerateFaceError : public InputError {
public:
    explicit DegenerateFaceError(const std::string& what)
        : InputError("DegenerateFace", what) {}
};

class NonManifoldEdgeError : public InputError {
public:
    explicit NonManifoldEdgeError(const std::string& what)
        : InputError("NonManifoldEdge", what) {}
};

class ParseError : public InputError {
public:
    explicit ParseError(const std::string& what)
        : InputError("ParseError", what) {}
};

class SchemaError : public InputError {
public:
    explicit SchemaError(const std::string& what)
        : InputError("SchemaError", what) {}
};

class IoError : public InputError {
public:
    explicit IoError(const std::string& what)
        : InputError("IoError", what) {}
};

}  // namespace patchnet
