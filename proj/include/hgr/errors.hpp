#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hgr {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact-linalg
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& m = "matrix is singular") : Error(m) {}
};

// diagram-core
struct NotQSphere : Error {
    explicit NotQSphere(const std::string& m = "diagram does not present a rational homology sphere")
        : Error(m) {}
};
struct CrossingNotOnCurve : Error {
    explicit CrossingNotOnCurve(const std::string& m) : Error(m) {}
};
struct CapExceeded : Error {
    std::size_t found;
    explicit CapExceeded(std::size_t found_so_far)
        : Error("matching cap exceeded, found " + std::to_string(found_so_far) + " so far"),
          found(found_so_far) {}
};
struct InvalidMatching : Error {
    explicit InvalidMatching(const std::string& m) : Error(m) {}
};
struct NotACycle : Error {
    explicit NotACycle(const std::string& m = "coefficient map is not a 2-cycle") : Error(m) {}
};

// rect-layout parsing
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(m) {}
};
struct DuplicateId : ParseError {
    explicit DuplicateId(const std::string& m) : ParseError(m) {}
};
struct UnknownReference : ParseError {
    explicit UnknownReference(const std::string& m) : ParseError(m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error(m) {}
};

// rect-layout geometry
struct AntiparallelStep : Error {
    explicit AntiparallelStep(const std::string& m = "consecutive directions are antiparallel")
        : Error(m) {}
};
struct NonHorizontalEnds : Error {
    explicit NonHorizontalEnds(const std::string& m = "first/last direction is not horizontal")
        : Error(m) {}
};
struct OddBetaDegree : Error {
    explicit OddBetaDegree(const std::string& m) : Error(m) {}
};
struct SignMismatch : Error {
    explicit SignMismatch(const std::string& m) : Error(m) {}
};
struct DegenerateTangent : Error {
    explicit DegenerateTangent(const std::string& m) : Error(m) {}
};

// invariants
struct MatchingMismatch : Error {
    explicit MatchingMismatch(const std::string& m) : Error(m) {}
};

struct Violation {
    std::string rule;
    std::string entity;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
    void add(std::string rule, std::string entity, std::string message) {
        violations.push_back({std::move(rule), std::move(entity), std::move(message)});
    }
    bool has_rule(const std::string& rule) const {
        for (const auto& v : violations)
            if (v.rule == rule) return true;
        return false;
    }
};

}  // namespace hgr
