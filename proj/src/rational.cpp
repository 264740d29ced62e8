#include "gcx/rational.hpp"

#include "gcx/error.hpp"

#include <cctype>

namespace gcx {

const char* error_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::LowValence: return "LowValence";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::UnitInput: return "UnitInput";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::EmptyLeft: return "EmptyLeft";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotMixed: return "NotMixed";
    case ErrorCode::NotABoundary: return "NotABoundary";
    case ErrorCode::NoSuchRoute: return "NoSuchRoute";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

std::string to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

static bool valid_int(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace gcx
