#pragma once

// Combinatorics-on-words primitives: rotations, borders, periods, nice
// rotations, suffix/prefix overlaps and w-strings.
//
// Strings are byte sequences ordered by unsigned byte value. Rotation
// indices in the public interface are 1-based.

#include <cstddef>
#include <string>
#include <string_view>

namespace superstring {

using Text = std::string;

/// Symbol order used for lexicographic comparison. `Reversed` flips the
/// alphabet, which turns minimal rotations into maximal ones and back.
enum class SymbolOrder { Natural, Reversed };

enum class RotationKind { MaxRotation, MinRotation };

/// A primitive string equal to its own nice rotation.
///
/// For a nice word w, either w = w_max and alpha = |pmax| <= |w|/2, or
/// w = w_min and alpha = |pmin| < |w|/2. Single-symbol words are carried as
/// `degenerate` with pmax_len = 1, pmin_len = 0 and alpha = 0.
struct NiceWord {
  Text word;
  RotationKind kind = RotationKind::MaxRotation;
  std::size_t pmin_len = 0;
  std::size_t pmax_len = 0;
  std::size_t alpha = 0;
  bool degenerate = false;

  std::size_t length() const { return word.size(); }
  std::string_view pmax() const;
  std::string_view pmin() const;

  friend bool operator==(const NiceWord&, const NiceWord&) = default;
};

/// Start (1-based) of the lexicographically least rotation; smallest index
/// among equal rotations. Throws std::invalid_argument("empty text").
std::size_t minimal_rotation_index(std::string_view w,
                                   SymbolOrder order = SymbolOrder::Natural);
std::size_t maximal_rotation_index(std::string_view w,
                                   SymbolOrder order = SymbolOrder::Natural);

/// The rotation of `w` starting at 1-based position `start`.
Text rotation(std::string_view w, std::size_t start);

bool is_primitive(std::string_view w);

/// Throws std::invalid_argument("not primitive") for proper powers and
/// ("empty text") for the empty string.
NiceWord nice_rotation(std::string_view w);

/// Longest suffix of `u` that is a prefix of `v`. When u and v have the same
/// content the result is the longest proper border of u.
std::string_view overlap(std::string_view u, std::string_view v);

/// `u` with overlap(u, v) removed from its end.
std::string_view prefix_part(std::string_view u, std::string_view v);

std::string_view longest_border(std::string_view w);
std::size_t min_period(std::string_view w);

/// First n symbols of w^inf. Throws std::invalid_argument for an empty word.
Text w_string_prefix(const NiceWord& w, std::size_t n);
bool is_w_string(std::string_view x, const NiceWord& w);

bool rotations_equivalent(std::string_view u, std::string_view v);

}  // namespace superstring
