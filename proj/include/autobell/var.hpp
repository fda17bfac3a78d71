#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace autobell
{

// Interned symbol. Identity comparison uses the intern id; the rendering
// order is the registry order given by `precedes`:
//   u < a < x < x1 < x2 < ... < y < z < w < t < (anything else, by name).
class Var
{
public:
    // Creates the symbol on first use. Names are [A-Za-z][A-Za-z0-9_]*.
    static Var named(std::string_view name);

    const std::string &name() const;
    std::uint32_t id() const noexcept
    {
        return id_;
    }

    friend bool operator==(Var, Var) = default;
    friend auto operator<=>(Var, Var) = default;

    // Registry order used for printing and graded-lex comparison.
    static bool precedes(Var lhs, Var rhs);

private:
    explicit Var(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

// x1, x2, ...; index >= 1.
Var indexed_var(std::string_view prefix, unsigned index);

} // namespace autobell

template <>
struct std::hash<autobell::Var> {
    std::size_t operator()(autobell::Var v) const noexcept
    {
        return v.id();
    }
};
