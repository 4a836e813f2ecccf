#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace lbw {

/// Finite or cofinite subset of the naturals. Elements (or, for cofinite sets,
/// the excluded elements) must be below 64.
class MembershipSet {
public:
    enum class Kind { Finite, Cofinite };

    static MembershipSet naturals() { return MembershipSet(Kind::Cofinite, 0); }
    static MembershipSet finite(std::initializer_list<unsigned> elements);
    static MembershipSet cofinite_except(std::initializer_list<unsigned> excluded);
    static MembershipSet from_mask(Kind kind, std::uint64_t mask) { return MembershipSet(kind, mask); }

    // "{1}", "{0,1}", "N", "N\{0}", "N\{0,1}". The empty finite set is rejected.
    static MembershipSet parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    // Members (finite) or excluded values (cofinite), bit i = value i.
    std::uint64_t mask() const noexcept { return mask_; }
    bool is_naturals() const noexcept { return kind_ == Kind::Cofinite && mask_ == 0; }

    bool contains(std::uint64_t x) const noexcept {
        const bool listed = x < 64 && ((mask_ >> x) & 1U);
        return kind_ == Kind::Finite ? listed : !listed;
    }

    std::string to_string() const;

    friend bool operator==(const MembershipSet&, const MembershipSet&) = default;

private:
    MembershipSet(Kind kind, std::uint64_t mask) : kind_(kind), mask_(mask) {}

    Kind kind_;
    std::uint64_t mask_;
};

// d(N) = 0; otherwise 1 + the largest member (finite) or the largest
// non-member (cofinite).
std::size_t d_of(const MembershipSet& mu);

enum class Objective { Maximize, Minimize };

struct SigmaRhoSpec {
    MembershipSet sigma = MembershipSet::naturals();
    MembershipSet rho = MembershipSet::naturals();
    Objective objective = Objective::Maximize;
    std::size_t d = 0;

    static SigmaRhoSpec make(MembershipSet sigma, MembershipSet rho, Objective objective);

    // ({1}, N), maximize.
    static SigmaRhoSpec induced_matching();
    // ({0}, N), maximize.
    static SigmaRhoSpec independent_set();
    // (N, N∖{0}), minimize.
    static SigmaRhoSpec dominating_set();

    // "mim", "independent-set", "dominating-set"; throws Error otherwise.
    static SigmaRhoSpec preset(std::string_view name);
};

}  // namespace lbw
