#ifndef FLOERCX_ERRORS_HPP
#define FLOERCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace floercx {

// Error taxonomy mirrors the CLI exit-code contract:
//   parse(2), genericity(3), window(4), mismatch(5).
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : std::runtime_error(msg), line(line_), column(column_) {}
};

struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace floercx

#endif
