#pragma once

namespace circhad::detail {

__extension__ typedef unsigned __int128 u128;

}  // namespace circhad::detail
