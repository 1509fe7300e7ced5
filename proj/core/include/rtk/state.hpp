#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rtk {

/// Recurrent issue-type letters as bits of a state mask.
enum class Letter : std::uint8_t { B = 1, I = 2, F = 4, T = 8 };

/// One element of the 17-symbol state alphabet: a non-empty subset of
/// {B, I, F, T}, the pooled non-recurrent state X, or the clean state Z.
class StateSymbol {
 public:
  static constexpr std::size_t kAlphabetSize = 17;

  /// Default-constructed symbol is Z.
  constexpr StateSymbol() = default;

  static constexpr StateSymbol zen() { return StateSymbol{}; }
  static constexpr StateSymbol other() { return StateSymbol{kOtherCode}; }
  static constexpr StateSymbol of(Letter l) { return StateSymbol{static_cast<std::uint8_t>(l)}; }

  /// mask must be in 1..15.
  static StateSymbol from_mask(unsigned mask);

  /// Dense code in [0, 17): Z = 0, letter masks 1..15, X = 16.
  static StateSymbol from_code(std::size_t code);

  constexpr bool is_zen() const { return code_ == 0; }
  constexpr bool is_other() const { return code_ == kOtherCode; }
  constexpr bool is_letter_state() const { return code_ != 0 && code_ != kOtherCode; }
  constexpr bool has(Letter l) const {
    return is_letter_state() && (code_ & static_cast<std::uint8_t>(l)) != 0;
  }

  /// Bitmask over Letter; 0 for X and Z.
  constexpr unsigned letters() const { return is_letter_state() ? code_ : 0U; }
  constexpr std::size_t code() const { return code_; }

  /// Number of issue types involved: |letters|, 1 for X, 0 for Z.
  int complexity() const;

  /// Position in the canonical order B < I < F < T < multi-letter (by
  /// rendering) < X < Z.
  std::size_t rank() const;

  friend constexpr bool operator==(StateSymbol a, StateSymbol b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(StateSymbol a, StateSymbol b) {
    return a.rank() <=> b.rank();
  }

 private:
  static constexpr std::uint8_t kOtherCode = 16;
  constexpr explicit StateSymbol(std::uint8_t code) : code_(code) {}

  std::uint8_t code_ = 0;
};

/// Global-state composition. Letters unite, X is absorbed by any letter
/// state, Z is the identity.
StateSymbol state_union(StateSymbol a, StateSymbol b);

/// Canonical text: letters in B, I, F, T order, or "X" / "Z".
std::string render_state(StateSymbol s);

/// Inverse of render_state. Letters may come in any order but must not repeat.
std::optional<StateSymbol> parse_state(std::string_view text);

/// All 17 symbols in canonical order.
const std::array<StateSymbol, StateSymbol::kAlphabetSize>& full_alphabet();

}  // namespace rtk
