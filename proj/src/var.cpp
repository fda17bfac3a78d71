#include <autobell/errors.hpp>
#include <autobell/var.hpp>

#include <cctype>
#include <deque>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace autobell
{

namespace
{

struct Registry {
    std::mutex mutex;
    std::deque<std::string> names;
    std::unordered_map<std::string, std::uint32_t> ids;
};

Registry &registry()
{
    static Registry r;
    return r;
}

bool valid_name(std::string_view name)
{
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

// Sort key: (rank, numeric suffix, name).
std::tuple<int, unsigned long, std::string_view> order_key(std::string_view name)
{
    static constexpr std::string_view fixed[] = {"u", "a", "x"};
    for (int i = 0; i < 3; ++i) {
        if (name == fixed[i]) {
            return {i, 0, name};
        }
    }
    if (name.size() > 1 && name.front() == 'x' && name.size() < 12) {
        bool digits = true;
        for (char c : name.substr(1)) {
            digits = digits && std::isdigit(static_cast<unsigned char>(c));
        }
        if (digits) {
            return {3, std::stoul(std::string(name.substr(1))), name};
        }
    }
    static constexpr std::string_view tail[] = {"y", "z", "w", "t"};
    for (int i = 0; i < 4; ++i) {
        if (name == tail[i]) {
            return {4 + i, 0, name};
        }
    }
    return {8, 0, name};
}

} // namespace

Var Var::named(std::string_view name)
{
    if (!valid_name(name)) {
        throw ArgumentError("invalid variable name '" + std::string(name) + "'");
    }
    auto &r = registry();
    std::lock_guard lock(r.mutex);
    const std::string key(name);
    if (auto it = r.ids.find(key); it != r.ids.end()) {
        return Var(it->second);
    }
    const auto id = static_cast<std::uint32_t>(r.names.size());
    r.names.push_back(key);
    r.ids.emplace(key, id);
    return Var(id);
}

const std::string &Var::name() const
{
    auto &r = registry();
    std::lock_guard lock(r.mutex);
    return r.names[id_];
}

bool Var::precedes(Var lhs, Var rhs)
{
    if (lhs == rhs) {
        return false;
    }
    const std::string &a = lhs.name();
    const std::string &b = rhs.name();
    return order_key(a) < order_key(b);
}

Var indexed_var(std::string_view prefix, unsigned index)
{
    return Var::named(std::string(prefix) + std::to_string(index));
}

} // namespace autobell
