#pragma once

#include <vector>

#include "latpoly/types.hpp"

namespace latpoly {

/// e_0, ..., e_n of the given values (e_0 = 1), by the product recurrence.
template <typename Scalar>
std::vector<Scalar> elementary_symmetric(const std::vector<Scalar>& values)
{
    std::vector<Scalar> e(values.size() + 1, Scalar(0));
    e[0] = 1;
    for (std::size_t k = 0; k < values.size(); ++k)
        for (std::size_t i = k + 1; i >= 1; --i)
            e[i] += e[i - 1] * values[k];
    return e;
}

/// i-th elementary symmetric polynomial; PreconditionError when i > n.
template <typename Scalar>
Scalar sigma(const std::vector<Scalar>& values, Index i)
{
    if (i < 0 || i > static_cast<Index>(values.size()))
        throw PreconditionError("sigma: index exceeds the number of values");
    return elementary_symmetric(values)[static_cast<std::size_t>(i)];
}

}  // namespace latpoly
