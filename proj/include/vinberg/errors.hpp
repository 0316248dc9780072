#ifndef VINBERG_ERRORS_HPP_
#define VINBERG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vinberg {

// Base of everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct ZeroVectorError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
// Exact integer arithmetic would leave the 64-bit range.
struct OverflowError : Error { using Error::Error; };
struct InconsistentSystem : Error { using Error::Error; };
struct EnumerationBudgetExceeded : Error { using Error::Error; };

// A pair of walls whose normalized Gram entry is not cos^2(pi/m) for an
// integer m, nor 0, nor >= 1.
struct NonCoxeterAngle : Error {
  NonCoxeterAngle(std::size_t i_, std::size_t j_, std::string c_)
      : Error("non-Coxeter angle between walls " + std::to_string(i_) + " and " +
              std::to_string(j_) + ": c = " + c_),
        i(i_), j(j_), c(std::move(c_)) {}
  std::size_t i, j;
  std::string c;
};

struct CertificationFailed : Error {
  CertificationFailed(std::string step_, const std::string& what)
      : Error("certification failed at step '" + step_ + "': " + what), step(std::move(step_)) {}
  std::string step;
};

// Malformed input document.  `field` is a path such as "roots[2][1]";
// line and column are 1-based and zero when unknown.
struct ParseError : Error {
  ParseError(std::string field_, const std::string& what, std::size_t line_ = 0, std::size_t column_ = 0)
      : Error(describe(field_, what, line_, column_)), field(std::move(field_)), line(line_), column(column_) {}
  std::string field;
  std::size_t line, column;

private:
  static std::string describe(const std::string& field, const std::string& what, std::size_t line,
                              std::size_t column) {
    std::string out;
    if (line)
      out += "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
    if (!field.empty())
      out += field + ": ";
    return out + what;
  }
};

} // namespace vinberg

#endif
