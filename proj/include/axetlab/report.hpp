#pragma once

#include <string>
#include <utility>
#include <vector>

#include "axetlab/errors.hpp"

namespace axetlab {

/// One named pass/fail item with an optional explanation (residual,
/// witness or derived value).
struct Check {
    std::string anchor;
    bool ok = false;
    std::string detail;
};

struct CheckList {
    std::string title;
    std::vector<Check> items;

    void add(std::string anchor, bool ok, std::string detail = {})
    {
        items.push_back({std::move(anchor), ok, std::move(detail)});
    }

    void append(const CheckList& other)
    {
        for (const auto& c : other.items) {
            items.push_back({other.title.empty() ? c.anchor : other.title + ": " + c.anchor, c.ok, c.detail});
        }
    }

    bool ok() const
    {
        for (const auto& c : items) {
            if (!c.ok) {
                return false;
            }
        }
        return !items.empty();
    }

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& c : items) {
            n += c.ok ? 0 : 1;
        }
        return n;
    }
};

/// Throws `kind` naming the first failing item, if any.
inline void require_ok(const CheckList& list, ErrorKind kind)
{
    for (const auto& c : list.items) {
        if (!c.ok) {
            fail(kind, list.title + ": " + c.anchor + (c.detail.empty() ? "" : " (" + c.detail + ")"));
        }
    }
}

} // namespace axetlab
