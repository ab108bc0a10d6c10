#ifndef SWEEPLAB_ENUMERATE_HPP
#define SWEEPLAB_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sweeplab/params.hpp"
#include "sweeplab/word.hpp"

namespace sweeplab {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultEnumerationLimit = 40;

/// The enumeration cap on dm+dn: SWEEPLAB_LIMIT if set, else the default.
std::size_t default_enumeration_limit();

/// Visits every Dyck path of `params` once, in lexicographic order with
/// N < E. Throws LimitExceeded when dm+dn exceeds `limit`.
void for_each_dyck(const Params& params,
                   const std::function<void(const StepWord&)>& visit,
                   std::size_t limit = default_enumeration_limit());

std::vector<StepWord> enumerate_dyck(const Params& params,
                                     std::size_t limit = default_enumeration_limit());

/// Number of Dyck paths by dynamic programming over lattice points with
/// nonnegative rank. No size limit.
BigCount count_dyck(const Params& params);

}  // namespace sweeplab

#endif  // SWEEPLAB_ENUMERATE_HPP
