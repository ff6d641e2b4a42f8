#pragma once

#include <string>
#include <string_view>

namespace storyfear {

// Porter (1980) suffix stripper, all five steps, matching the canonical
// reference implementation (including its step-2 bli/logi rules and the
// leave-short-words-alone guard). Input must be lowercase a-z.
std::string porter_stem(std::string_view word);

}  // namespace storyfear
