#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autobell
{

enum class Status { Verified, RefutedAsPrinted, VerifiedWithOffset };

std::string_view status_name(Status s);

struct CheckResult {
    std::string id;
    // The identity under test, in plain notation.
    std::string anchor;
    std::string range;
    Status status = Status::Verified;
    // First counterexample, or the alignment that holds.
    std::string details;
    // Set when a refutation is a known print error.
    bool known_erratum = false;

    friend bool operator==(const CheckResult &, const CheckResult &) = default;
};

// Known print errors: check ids whose refutation does not count as a
// failure. Each entry carries a short note on what is wrong with the print.
struct Erratum {
    std::string_view id;
    std::string_view note;
};
const std::vector<Erratum> &known_errata();
std::optional<std::string_view> erratum_note(std::string_view id);

// Checks keyed by id, kept sorted; an id may appear only once.
class VerificationReport
{
public:
    // ArgumentError on a duplicate id. Marks known errata.
    void add(CheckResult check);
    void merge(const VerificationReport &other);

    const std::vector<CheckResult> &checks() const noexcept
    {
        return checks_;
    }
    const CheckResult *find(std::string_view id) const;
    std::size_t count(Status s) const;
    // Any refuted-as-printed check that is not a known erratum.
    bool has_unexcused_refutation() const;

    friend bool operator==(const VerificationReport &, const VerificationReport &) = default;

private:
    std::vector<CheckResult> checks_;
};

// Prefix + "[lo..hi]" style range labels.
std::string range_label(std::string_view var, long lo, long hi);

} // namespace autobell
