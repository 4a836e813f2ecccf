#include "lbw/sigma_rho.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "lbw/error.hpp"

namespace lbw {
namespace {

std::uint64_t mask_of(std::initializer_list<unsigned> values) {
    std::uint64_t m = 0;
    for (unsigned v : values) {
        if (v >= 64) throw ContractViolation("membership set: element " + std::to_string(v) + " is not below 64");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::uint64_t parse_braced(const std::string& s, std::string_view whole) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw Error("membership set '" + std::string(whole) + "': expected {a,b,...}");
    std::uint64_t mask = 0;
    const std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        const std::string item = body.substr(pos, comma - pos);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error("membership set '" + std::string(whole) + "': '" + item + "' is not a natural number");
        const unsigned long value = std::stoul(item);
        if (value >= 64) throw Error("membership set '" + std::string(whole) + "': elements must be below 64");
        mask |= std::uint64_t{1} << value;
        pos = comma + 1;
    }
    return mask;
}

}  // namespace

MembershipSet MembershipSet::finite(std::initializer_list<unsigned> elements) {
    if (elements.size() == 0) throw ContractViolation("membership set: the empty set has no defined d-value");
    return MembershipSet(Kind::Finite, mask_of(elements));
}

MembershipSet MembershipSet::cofinite_except(std::initializer_list<unsigned> excluded) {
    return MembershipSet(Kind::Cofinite, mask_of(excluded));
}

MembershipSet MembershipSet::parse(std::string_view text) {
    const std::string s = strip(text);
    if (s == "N" || s == "ℕ") return naturals();
    for (std::string_view prefix : {std::string_view("N\\"), std::string_view("N-")}) {
        if (s.rfind(prefix, 0) == 0) return MembershipSet(Kind::Cofinite, parse_braced(s.substr(prefix.size()), text));
    }
    const std::uint64_t mask = parse_braced(s, text);
    if (mask == 0) throw Error("membership set '" + std::string(text) + "': the empty set is not allowed");
    return MembershipSet(Kind::Finite, mask);
}

std::string MembershipSet::to_string() const {
    std::string items;
    for (unsigned i = 0; i < 64; ++i) {
        if ((mask_ >> i) & 1U) {
            if (!items.empty()) items += ',';
            items += std::to_string(i);
        }
    }
    if (kind_ == Kind::Finite) return "{" + items + "}";
    return mask_ == 0 ? "N" : "N\\{" + items + "}";
}

std::size_t d_of(const MembershipSet& mu) {
    if (mu.mask() == 0) return 0;  // N, or the rejected empty finite set
    return 1 + static_cast<std::size_t>(63 - __builtin_clzll(mu.mask()));
}

SigmaRhoSpec SigmaRhoSpec::make(MembershipSet sigma, MembershipSet rho, Objective objective) {
    SigmaRhoSpec spec;
    spec.sigma = sigma;
    spec.rho = rho;
    spec.objective = objective;
    spec.d = std::max(d_of(sigma), d_of(rho));
    return spec;
}

SigmaRhoSpec SigmaRhoSpec::induced_matching() {
    return make(MembershipSet::finite({1}), MembershipSet::naturals(), Objective::Maximize);
}

SigmaRhoSpec SigmaRhoSpec::independent_set() {
    return make(MembershipSet::finite({0}), MembershipSet::naturals(), Objective::Maximize);
}

SigmaRhoSpec SigmaRhoSpec::dominating_set() {
    return make(MembershipSet::naturals(), MembershipSet::cofinite_except({0}), Objective::Minimize);
}

SigmaRhoSpec SigmaRhoSpec::preset(std::string_view name) {
    if (name == "mim") return induced_matching();
    if (name == "independent-set") return independent_set();
    if (name == "dominating-set") return dominating_set();
    throw Error("unknown problem preset '" + std::string(name) + "'");
}

}  // namespace lbw
