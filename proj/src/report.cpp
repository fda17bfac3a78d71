#include <autobell/errors.hpp>
#include <autobell/report.hpp>

#include <algorithm>

namespace autobell
{

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::Verified:
        return "verified";
    case Status::RefutedAsPrinted:
        return "refuted-as-printed";
    case Status::VerifiedWithOffset:
        return "verified-with-offset";
    }
    return "?";
}

const std::vector<Erratum> &known_errata()
{
    static const std::vector<Erratum> errata{
        {"auto.base_case", "A_1^(k)(a) is printed as 1; f_k = a e^{x1} forces A_1^(k)(a) = a"},
        {"seq.a4.golden", "A_3^(4)(1) = C(7,3) + C(7,7) = 36 is printed as 35, and A_4^(4)(1) = 6306 as 6140"},
        {"seq.d.identification", "the printed d-sequence is the Stirling-transform shift sequence, not A_n^(4)(1,1)"},
        {"seq.zigzag.item4", "no single-index shift of the printed form holds"},
        {"seq.zigzag.item5", "printed indices do not match; the row sums give zigzag(n+1)"},
        {"seq.zigzag.item6", "printed indices do not match; the row sums give zigzag(n+1)"},
        {"table.k4.entry_6_2", "printed 32a^2, expansion gives 22a^2 + 10a (equal at a = 1)"},
        {"listing.k4_autonomous", "A_10^(4)(x,a) printed with 32a x^2 inside a(...); the expansion gives (22a + 10) x^2, equal at a = 1"},
        {"table.k4.entry_7_3", "printed 64a + 175, expansion gives 64a^2 + 175a (equal at a = 1)"},
    };
    return errata;
}

std::optional<std::string_view> erratum_note(std::string_view id)
{
    for (const auto &e : known_errata()) {
        if (e.id == id) {
            return e.note;
        }
    }
    return std::nullopt;
}

void VerificationReport::add(CheckResult check)
{
    const auto pos = std::lower_bound(checks_.begin(), checks_.end(), check.id,
                                      [](const CheckResult &c, const std::string &id) { return c.id < id; });
    if (pos != checks_.end() && pos->id == check.id) {
        throw ArgumentError("duplicate check id " + check.id);
    }
    check.known_erratum = check.status == Status::RefutedAsPrinted && erratum_note(check.id).has_value();
    checks_.insert(pos, std::move(check));
}

void VerificationReport::merge(const VerificationReport &other)
{
    for (const auto &c : other.checks_) {
        add(c);
    }
}

const CheckResult *VerificationReport::find(std::string_view id) const
{
    const auto pos = std::lower_bound(checks_.begin(), checks_.end(), id,
                                      [](const CheckResult &c, std::string_view key) { return c.id < key; });
    if (pos != checks_.end() && pos->id == id) {
        return &*pos;
    }
    return nullptr;
}

std::size_t VerificationReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [s](const CheckResult &c) { return c.status == s; }));
}

bool VerificationReport::has_unexcused_refutation() const
{
    return std::any_of(checks_.begin(), checks_.end(), [](const CheckResult &c) {
        return c.status == Status::RefutedAsPrinted && !c.known_erratum;
    });
}

std::string range_label(std::string_view var, long lo, long hi)
{
    return std::string(var) + " in [" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
}

} // namespace autobell
