#include "latpoly/types.hpp"

#include <cctype>

namespace latpoly {

IntMatrix to_integer(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
    {
        for (Index j = 0; j < m.cols(); ++j)
        {
            if (!is_integral(m(i, j)))
                throw PreconditionError("non-integral entry " + to_string(m(i, j)));
            out(i, j) = numerator(m(i, j));
        }
    }
    return out;
}

IntVector to_integer(const RatVector& v)
{
    RatMatrix m = v;
    return to_integer(m).col(0);
}

std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool is_integer_literal(const std::string& s)
{
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer parse_integer(std::string s)
{
    if (!s.empty() && s[0] == '+')
        s.erase(0, 1);
    return Integer(s);
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
    {
        if (!is_integer_literal(text))
            throw std::invalid_argument("malformed rational '" + text + "'");
        return Rational(parse_integer(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + text + "'");
    Integer d = parse_integer(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_integer(num), d);
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Integer factorial(long n)
{
    Integer r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

bool next_combination(std::vector<Index>& c, Index n)
{
    const Index k = static_cast<Index>(c.size());
    Index i = k - 1;
    while (i >= 0 && c[i] == n - k + i)
        --i;
    if (i < 0)
        return false;
    ++c[i];
    for (Index j = i + 1; j < k; ++j)
        c[j] = c[j - 1] + 1;
    return true;
}

std::vector<std::vector<Index>> combinations(Index n, Index k)
{
    std::vector<std::vector<Index>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<Index> c(k);
    for (Index i = 0; i < k; ++i)
        c[i] = i;
    do
        out.push_back(c);
    while (k > 0 && next_combination(c, n));
    return out;
}

}  // namespace latpoly
