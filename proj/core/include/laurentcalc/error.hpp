#ifndef LAURENTCALC_ERROR_HPP
#define LAURENTCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lc
{

// Raised when an operation's precondition does not hold. The code is a short
// machine-readable tag, the message carries the human-readable detail.
class precondition_error : public std::runtime_error
{
public:
    precondition_error(std::string code, const std::string &detail)
        : std::runtime_error(detail), m_code(std::move(code))
    {
    }

    const std::string &code() const noexcept
    {
        return m_code;
    }

private:
    std::string m_code;
};

// Raised on malformed serialized input.
class parse_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace lc

#endif
