#pragma once

#include <map>
#include <string>
#include <string_view>

namespace annular::detail {

// Raw b-file text keyed by sequence id ("A003239", ...).
const std::map<std::string, std::string_view>& bundled_bfiles();

}  // namespace annular::detail
