#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <ostream>

namespace mis {

/// A non-negative count or BOTTOM (an infeasible configuration, i.e. -infinity).
/// BOTTOM absorbs addition and loses every comparison against a finite value.
class ExtInt {
public:
    constexpr ExtInt() = default;  // BOTTOM
    constexpr ExtInt(std::int32_t value) : raw_(value) { assert(value >= 0); }  // NOLINT: implicit by intent

    static constexpr ExtInt bottom() { return ExtInt(); }

    constexpr bool is_bottom() const { return raw_ == kBottomRaw; }
    constexpr bool is_finite() const { return raw_ != kBottomRaw; }
    constexpr std::int32_t value() const {
        assert(is_finite());
        return raw_;
    }

    friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
        if (a.is_bottom() || b.is_bottom()) return bottom();
        return ExtInt(a.raw_ + b.raw_);
    }

    friend constexpr bool operator==(ExtInt, ExtInt) = default;
    friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) { return a.raw_ <=> b.raw_; }

    friend std::ostream& operator<<(std::ostream& os, ExtInt x) {
        if (x.is_bottom()) return os << "BOTTOM";
        return os << x.raw_;
    }

private:
    static constexpr std::int32_t kBottomRaw = -1;
    std::int32_t raw_ = kBottomRaw;
};

constexpr ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

/// A diffusion round 0..lambda, or NEVER (not influenced within lambda rounds).
class RoundIndex {
public:
    static constexpr RoundIndex never() { return RoundIndex(kNeverRaw); }
    static constexpr RoundIndex at(std::int32_t round) { return RoundIndex(round); }

    constexpr bool is_never() const { return raw_ == kNeverRaw; }
    constexpr std::int32_t round() const {
        assert(!is_never());
        return raw_;
    }

    /// Position in a table whose last round slot (lambda + 1) stands for NEVER.
    constexpr std::size_t slot(std::int32_t lambda) const {
        return static_cast<std::size_t>(is_never() ? lambda + 1 : raw_);
    }
    static constexpr RoundIndex from_slot(std::size_t slot, std::int32_t lambda) {
        return static_cast<std::int32_t>(slot) == lambda + 1 ? never() : at(static_cast<std::int32_t>(slot));
    }

    friend constexpr bool operator==(RoundIndex, RoundIndex) = default;

private:
    static constexpr std::int32_t kNeverRaw = -1;
    constexpr explicit RoundIndex(std::int32_t raw) : raw_(raw) {}
    std::int32_t raw_;
};

inline std::ostream& operator<<(std::ostream& os, RoundIndex r) {
    if (r.is_never()) return os << "NEVER";
    return os << r.round();
}

} // namespace mis
