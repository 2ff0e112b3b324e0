#ifndef PCF_ERRORS_HPP
#define PCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcf {

/** \brief Error categories shared by every module. */
enum class ErrorKind { domain, branch, convergence, pole, range, usage, contour, resolution, singularity, config };

inline const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::branch: return "branch";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::pole: return "pole";
    case ErrorKind::range: return "range";
    case ErrorKind::usage: return "usage";
    case ErrorKind::contour: return "contour";
    case ErrorKind::resolution: return "resolution";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::config: return "config";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + " error: " + what), kind_(kind)
    {
    }
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace pcf

#endif
