#include "rtk/state.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rtk {
namespace {

constexpr std::array<std::pair<char, Letter>, 4> kLetterOrder{{
    {'B', Letter::B}, {'I', Letter::I}, {'F', Letter::F}, {'T', Letter::T}}};

struct CanonicalOrder {
  std::array<StateSymbol, StateSymbol::kAlphabetSize> symbols{};
  std::array<std::size_t, StateSymbol::kAlphabetSize> rank_of_code{};

  CanonicalOrder() {
    for (std::size_t code = 0; code < StateSymbol::kAlphabetSize; ++code) {
      symbols[code] = StateSymbol::from_code(code);
    }
    auto group = [](StateSymbol s) {
      if (s.is_other()) return 2;
      if (s.is_zen()) return 3;
      return s.complexity() == 1 ? 0 : 1;
    };
    std::sort(symbols.begin(), symbols.end(), [&](StateSymbol a, StateSymbol b) {
      const int ga = group(a);
      const int gb = group(b);
      if (ga != gb) return ga < gb;
      if (ga == 0) return a.letters() < b.letters();  // B=1 < I=2 < F=4 < T=8
      return render_state(a) < render_state(b);
    });
    for (std::size_t r = 0; r < symbols.size(); ++r) rank_of_code[symbols[r].code()] = r;
  }
};

const CanonicalOrder& canonical() {
  static const CanonicalOrder order;
  return order;
}

}  // namespace

StateSymbol StateSymbol::from_mask(unsigned mask) {
  if (mask == 0 || mask > 15) throw std::invalid_argument("letter mask out of range");
  return StateSymbol{static_cast<std::uint8_t>(mask)};
}

StateSymbol StateSymbol::from_code(std::size_t code) {
  if (code >= kAlphabetSize) throw std::invalid_argument("state code out of range");
  return StateSymbol{static_cast<std::uint8_t>(code)};
}

int StateSymbol::complexity() const {
  if (is_zen()) return 0;
  if (is_other()) return 1;
  return std::popcount(static_cast<unsigned>(code_));
}

std::size_t StateSymbol::rank() const { return canonical().rank_of_code[code_]; }

StateSymbol state_union(StateSymbol a, StateSymbol b) {
  if (a.is_letter_state() || b.is_letter_state()) {
    return StateSymbol::from_mask(a.letters() | b.letters());
  }
  if (a.is_other() || b.is_other()) return StateSymbol::other();
  return StateSymbol::zen();
}

std::string render_state(StateSymbol s) {
  if (s.is_zen()) return "Z";
  if (s.is_other()) return "X";
  std::string out;
  for (const auto& [c, l] : kLetterOrder) {
    if (s.has(l)) out.push_back(c);
  }
  return out;
}

std::optional<StateSymbol> parse_state(std::string_view text) {
  if (text == "Z") return StateSymbol::zen();
  if (text == "X") return StateSymbol::other();
  if (text.empty()) return std::nullopt;
  unsigned mask = 0;
  for (char c : text) {
    const auto it = std::find_if(kLetterOrder.begin(), kLetterOrder.end(),
                                 [c](const auto& entry) { return entry.first == c; });
    if (it == kLetterOrder.end()) return std::nullopt;
    const auto bit = static_cast<unsigned>(it->second);
    if ((mask & bit) != 0) return std::nullopt;
    mask |= bit;
  }
  return StateSymbol::from_mask(mask);
}

const std::array<StateSymbol, StateSymbol::kAlphabetSize>& full_alphabet() {
  return canonical().symbols;
}

}  // namespace rtk
