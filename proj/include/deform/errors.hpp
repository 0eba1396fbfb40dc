#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace deform {

class WindowTooSmall : public std::runtime_error {
public:
    explicit WindowTooSmall(const std::string& what) : std::runtime_error(what) {}
};

class InvalidMorphism : public std::runtime_error {
public:
    explicit InvalidMorphism(const std::string& what) : std::runtime_error(what) {}
};

class NegativeCohomology : public std::runtime_error {
public:
    explicit NegativeCohomology(const std::string& what) : std::runtime_error(what) {}
};

class NotConcentrated : public std::runtime_error {
public:
    explicit NotConcentrated(const std::string& what) : std::runtime_error(what) {}
};

class NotSmallExtension : public std::runtime_error {
public:
    explicit NotSmallExtension(const std::string& what) : std::runtime_error(what) {}
};

class NotMC : public std::runtime_error {
public:
    explicit NotMC(const std::string& what) : std::runtime_error(what) {}
};

class InvalidAction : public std::runtime_error {
public:
    explicit InvalidAction(const std::string& what) : std::runtime_error(what) {}
};

class NotStable : public std::runtime_error {
public:
    explicit NotStable(const std::string& what) : std::runtime_error(what) {}
};

class NotAveragable : public std::runtime_error {
public:
    explicit NotAveragable(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// One broken axiom together with the basis tuple that witnesses it.
struct Violation {
    std::string kind;                  // e.g. "JacobiViolation"
    std::vector<std::string> witness;  // basis labels involved
    std::string detail;

    std::string str() const {
        std::ostringstream os;
        os << kind << " at (";
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i) os << ", ";
            os << witness[i];
        }
        os << ")";
        if (!detail.empty()) os << ": " << detail;
        return os.str();
    }
};

/// Violations are data, not exceptions: an empty report means all checked
/// axioms hold.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string kind, std::vector<std::string> witness, std::string detail = "") {
        violations.push_back({std::move(kind), std::move(witness), std::move(detail)});
    }

    std::string str() const {
        std::ostringstream os;
        for (const auto& v : violations) os << v.str() << "\n";
        return os.str();
    }
};

}  // namespace deform
