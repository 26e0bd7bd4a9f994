#pragma once

#include <cstddef>

namespace symgame {

// Absolute tolerance used by the symmetry checks on float payoffs.
inline constexpr double kDefaultTolerance = 1e-9;

// Every dense expansion is guarded by a global entry cap (rows * cols).
// Default is 2^24 entries; the CLI can override it via SYMGAME_SIZE_CAP.
std::size_t size_cap() noexcept;
void set_size_cap(std::size_t cap) noexcept;

// Checked base^exp for index spaces; throws SizeLimitError past the cap.
std::size_t checked_pow(std::size_t base, unsigned exp);

}  // namespace symgame
