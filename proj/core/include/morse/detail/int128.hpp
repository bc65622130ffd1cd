#pragma once

namespace morse::detail {

__extension__ typedef __int128 int128;

}  // namespace morse::detail
