#pragma once

#include <functional>
#include <string_view>

namespace fracdiff {

using WarningSink = std::function<void(std::string_view)>;

struct SolveOptions {
    /// Keep every time level in the result.
    bool keep_history = false;
    /// Receives non-fatal diagnostics such as a violated explicit stability bound.
    /// Defaults to printing `warning: <message>` on stderr.
    WarningSink warn;
};

}  // namespace fracdiff
