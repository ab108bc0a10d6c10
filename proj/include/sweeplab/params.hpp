#ifndef SWEEPLAB_PARAMS_HPP
#define SWEEPLAB_PARAMS_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace sweeplab {

using rank_t = std::int64_t;

/// Shape of a (dm,dn) rectangle: m,n co-prime, d the dilation factor.
///
/// A North step raises the rank by m, an East step lowers it by n. Only
/// make_params constructs a validated instance.
class Params {
public:
    rank_t m() const noexcept { return m_; }
    rank_t n() const noexcept { return n_; }
    rank_t d() const noexcept { return d_; }

    /// dn, the number of North steps.
    rank_t north_count() const noexcept { return d_ * n_; }
    /// dm, the number of East steps.
    rank_t east_count() const noexcept { return d_ * m_; }
    rank_t length() const noexcept { return north_count() + east_count(); }
    /// dmn, the height of the path diagram.
    rank_t height() const noexcept { return d_ * m_ * n_; }

    std::string to_string() const;

    friend auto operator<=>(const Params&, const Params&) = default;

private:
    friend Params make_params(rank_t m, rank_t n, rank_t d);
    Params(rank_t m, rank_t n, rank_t d) : m_(m), n_(n), d_(d) {}

    rank_t m_;
    rank_t n_;
    rank_t d_;
};

// Upper bound on dmn. Keeps rank sums over a whole path inside 64 bits.
inline constexpr rank_t kMaxHeight = rank_t{1} << 31;

Params make_params(rank_t m, rank_t n, rank_t d);

}  // namespace sweeplab

#endif  // SWEEPLAB_PARAMS_HPP
