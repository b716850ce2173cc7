#ifndef DPB_ERROR_HPP
#define DPB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpb
{

// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error
{
public:
    DivisionByZero() : Error("division by zero") {}
};

// Divisor series whose constant term (after the optional single t-cancellation)
// is not a unit of the coefficient ring.
class NonUnitLeadingCoefficient : public Error
{
public:
    using Error::Error;
};

class NonzeroInnerConstant : public Error
{
public:
    using Error::Error;
};

class NotDelta : public Error
{
public:
    using Error::Error;
};

class NotInvertible : public Error
{
public:
    using Error::Error;
};

class ConstantTermNotOne : public Error
{
public:
    using Error::Error;
};

class NonzeroConstantTerm : public Error
{
public:
    using Error::Error;
};

class PrecisionExceeded : public Error
{
public:
    using Error::Error;
};

class UnknownIdentity : public Error
{
public:
    explicit UnknownIdentity(const std::string &id) : Error("unknown identity '" + id + "'") {}
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

// Byte range [begin, end) in a parsed input string.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Span &, const Span &) = default;
};

class SyntaxError : public Error
{
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string &found)
        : Error(make_message(offset, expected, found)), offset_(offset), expected_(std::move(expected)), found_(found)
    {
    }

    std::size_t offset() const noexcept
    {
        return offset_;
    }
    const std::vector<std::string> &expected() const noexcept
    {
        return expected_;
    }
    const std::string &found() const noexcept
    {
        return found_;
    }

private:
    static std::string make_message(std::size_t offset, const std::vector<std::string> &expected,
                                    const std::string &found)
    {
        std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i != 0) {
                msg += i + 1 == expected.size() ? " or " : ", ";
            }
            msg += expected[i];
        }
        return msg + ", found " + found;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
    std::string found_;
};

class ArityError : public Error
{
public:
    ArityError(Span span, const std::string &name, std::size_t expected, std::size_t found)
        : Error("'" + name + "' at offset " + std::to_string(span.begin) + " takes " + std::to_string(expected)
                + " argument" + (expected == 1 ? "" : "s") + ", got " + std::to_string(found)),
          span_(span)
    {
    }

    Span span() const noexcept
    {
        return span_;
    }

private:
    Span span_;
};

// A series-level failure raised while evaluating an expression, tagged with
// the source span of the offending sub-expression.
class EvalError : public Error
{
public:
    EvalError(Span span, const std::string &what)
        : Error("evaluation error at [" + std::to_string(span.begin) + ", " + std::to_string(span.end)
                + "): " + what),
          span_(span)
    {
    }

    Span span() const noexcept
    {
        return span_;
    }

private:
    Span span_;
};

} // namespace dpb

#endif // DPB_ERROR_HPP
