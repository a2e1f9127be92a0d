#ifndef PEDIGREE_TEXT_FORMAT_HPP
#define PEDIGREE_TEXT_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pedigree/history.hpp"

namespace pedigree {

// Tour text: whitespace-separated node labels, one tour per line.
// History text: one line "n: i j" per node n = 4..N, in order.
// Blank lines and lines starting with '#' are ignored in both.

/// All tours in `text`. Errors carry the line and column of the bad token.
std::vector<Tour> parse_tours(std::string_view text);

/// Exactly one tour.
Tour parse_tour(std::string_view text);

InsertionHistory parse_history(std::string_view text);

/// Either format; a ':' anywhere selects the history format. Tours are
/// decoded into their history.
InsertionHistory parse_tour_or_history(std::string_view text);

std::string format_tour(const Tour& t);
std::string format_history(const InsertionHistory& h);

}  // namespace pedigree

#endif  // PEDIGREE_TEXT_FORMAT_HPP
