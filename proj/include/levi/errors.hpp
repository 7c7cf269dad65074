#pragma once

#include <stdexcept>
#include <string>

namespace levi {

// Every failure the library reports derives from Error so callers can catch
// the family or a specific condition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidMap : public Error {
public:
    explicit InvalidMap(const std::string& reason) : Error(reason) {}
};

class MalformedWalk : public Error {
public:
    explicit MalformedWalk(const std::string& reason) : Error(reason) {}
};

class CornersNotCofacial : public Error {
public:
    CornersNotCofacial() : Error("corners do not lie on the same face") {}
};

class SameCurve : public Error {
public:
    SameCurve() : Error("crossing count requested for a curve with itself") {}
};

class StaleBigon : public Error {
public:
    StaleBigon() : Error("bigon certificate does not match the trace") {}
};

class NoProgress : public Error {
public:
    explicit NoProgress(const std::string& reason) : Error("no progress: " + reason) {}
};

class Unreachable : public Error {
public:
    Unreachable() : Error("target cell unreachable from the trace") {}
};

class InvalidTrace : public Error {
public:
    explicit InvalidTrace(const std::string& reason) : Error("invalid trace: " + reason) {}
};

class SamePoint : public Error {
public:
    SamePoint() : Error("p and q are the same cell") {}
};

class SameLine : public Error {
public:
    explicit SameLine(int curve)
        : Error("p and q lie on pseudoline " + std::to_string(curve)), curve_(curve) {}
    int curve() const noexcept { return curve_; }

private:
    int curve_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class UnknownCurve : public Error {
public:
    explicit UnknownCurve(int curve) : Error("unknown curve " + std::to_string(curve)) {}
};

}  // namespace levi
