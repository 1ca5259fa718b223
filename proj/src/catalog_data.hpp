#pragma once

#include <string_view>

namespace logsurf::catalog::detail {

// Contents of data/catalog.json, embedded at configure time.
std::string_view catalog_json();

} // namespace logsurf::catalog::detail
