#ifndef ASKEYVS_REPORT_HPP
#define ASKEYVS_REPORT_HPP

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace askeyvs {

enum class Status { Pass, Fail, Error };

inline std::string_view status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Error: return "ERROR";
    }
    return "ERROR";
}

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

/// Ordered list of named checks, printed one per line as
/// "CHECK <name>: PASS|FAIL|ERROR <detail>".
class Report {
public:
    void add(std::string name, Status status, std::string detail = {})
    {
        checks_.push_back({std::move(name), status, std::move(detail)});
    }
    void expect(std::string name, bool ok, std::string detail = {})
    {
        add(std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail));
    }
    void error(std::string name, const std::exception& e) { add(std::move(name), Status::Error, e.what()); }

    /// Appends `other`, prefixing each check name with `prefix` when given.
    void merge(const Report& other, const std::string& prefix = {})
    {
        for (const auto& c : other.checks_)
            checks_.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.status, c.detail});
    }

    const std::vector<Check>& checks() const noexcept { return checks_; }
    bool empty() const noexcept { return checks_.empty(); }

    bool all_pass() const
    {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Pass; });
    }

    std::size_t count(Status s) const
    {
        return static_cast<std::size_t>(
            std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
    }

    /// 0 when every check passed, 1 otherwise.
    int exit_code() const { return all_pass() ? 0 : 1; }

    void print(std::ostream& os) const
    {
        for (const auto& c : checks_) {
            os << "CHECK " << c.name << ": " << status_name(c.status);
            if (!c.detail.empty())
                os << ' ' << c.detail;
            os << '\n';
        }
    }

    std::string to_string() const
    {
        std::ostringstream os;
        print(os);
        return os.str();
    }

private:
    std::vector<Check> checks_;
};

} // namespace askeyvs

#endif
