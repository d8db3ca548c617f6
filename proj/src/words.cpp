#include "superstring/words.hpp"

#include <stdexcept>
#include <vector>

namespace superstring {

namespace {

void require_nonempty(std::string_view w) {
  if (w.empty()) throw std::invalid_argument("empty text");
}

int symbol(unsigned char c, SymbolOrder order) {
  return order == SymbolOrder::Natural ? c : 255 - c;
}

// Two-pointer least rotation scan; returns a 0-based start and picks the
// smallest index when several rotations are equal.
std::size_t least_rotation(std::string_view w, SymbolOrder order) {
  const std::size_t n = w.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int a = symbol(static_cast<unsigned char>(w[(i + k) % n]), order);
    const int b = symbol(static_cast<unsigned char>(w[(j + k) % n]), order);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

SymbolOrder flip(SymbolOrder order) {
  return order == SymbolOrder::Natural ? SymbolOrder::Reversed : SymbolOrder::Natural;
}

// KMP failure function: pi[i] = length of the longest proper border of w[0..i].
std::vector<std::size_t> prefix_function(std::string_view w) {
  std::vector<std::size_t> pi(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

}  // namespace

std::string_view NiceWord::pmax() const {
  const std::string_view w = word;
  return kind == RotationKind::MaxRotation ? w.substr(0, pmax_len) : w.substr(pmin_len);
}

std::string_view NiceWord::pmin() const {
  const std::string_view w = word;
  return kind == RotationKind::MinRotation ? w.substr(0, pmin_len) : w.substr(pmax_len);
}

std::size_t minimal_rotation_index(std::string_view w, SymbolOrder order) {
  require_nonempty(w);
  return least_rotation(w, order) + 1;
}

std::size_t maximal_rotation_index(std::string_view w, SymbolOrder order) {
  require_nonempty(w);
  return least_rotation(w, flip(order)) + 1;
}

Text rotation(std::string_view w, std::size_t start) {
  if (start == 0 || start > w.size()) throw std::out_of_range("rotation start");
  Text r;
  r.reserve(w.size());
  r.append(w.substr(start - 1));
  r.append(w.substr(0, start - 1));
  return r;
}

bool is_primitive(std::string_view w) {
  require_nonempty(w);
  const std::size_t p = min_period(w);
  return p == w.size() || w.size() % p != 0;
}

NiceWord nice_rotation(std::string_view w) {
  require_nonempty(w);
  if (w.size() == 1) {
    return NiceWord{Text(w), RotationKind::MaxRotation, 0, 1, 0, true};
  }
  if (!is_primitive(w)) throw std::invalid_argument("not primitive");

  const std::size_t n = w.size();
  const std::size_t i_min = minimal_rotation_index(w);
  const std::size_t i_max = maximal_rotation_index(w);
  // w_max starts |pmin| symbols after w_min.
  const std::size_t pmin_len = (i_max + n - i_min) % n;
  const std::size_t pmax_len = n - pmin_len;

  NiceWord out;
  out.pmin_len = pmin_len;
  out.pmax_len = pmax_len;
  if (pmax_len <= pmin_len) {
    out.kind = RotationKind::MaxRotation;
    out.word = rotation(w, i_max);
    out.alpha = pmax_len;
  } else {
    out.kind = RotationKind::MinRotation;
    out.word = rotation(w, i_min);
    out.alpha = pmin_len;
  }
  return out;
}

std::string_view overlap(std::string_view u, std::string_view v) {
  if (u.empty() || v.empty()) return u.substr(u.size());
  if (u == v) return u.substr(u.size() - longest_border(u).size());

  // Run the KMP automaton of v over u; the final state is the overlap.
  const auto pi = prefix_function(v);
  std::size_t state = 0;
  for (char c : u) {
    if (state == v.size()) state = pi[state - 1];
    while (state > 0 && v[state] != c) state = pi[state - 1];
    if (v[state] == c) ++state;
  }
  return u.substr(u.size() - state);
}

std::string_view prefix_part(std::string_view u, std::string_view v) {
  return u.substr(0, u.size() - overlap(u, v).size());
}

std::string_view longest_border(std::string_view w) {
  if (w.empty()) return w;
  const auto pi = prefix_function(w);
  return w.substr(0, pi.back());
}

std::size_t min_period(std::string_view w) {
  require_nonempty(w);
  return w.size() - longest_border(w).size();
}

Text w_string_prefix(const NiceWord& w, std::size_t n) {
  if (w.word.empty()) throw std::invalid_argument("empty nice word");
  Text out;
  out.reserve(n);
  while (out.size() < n) out.append(w.word, 0, std::min(w.word.size(), n - out.size()));
  return out;
}

bool is_w_string(std::string_view x, const NiceWord& w) {
  if (w.word.empty()) return x.empty();
  const std::size_t l = w.word.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != w.word[i % l]) return false;
  }
  return true;
}

bool rotations_equivalent(std::string_view u, std::string_view v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  Text vv;
  vv.reserve(2 * v.size());
  vv.append(v);
  vv.append(v);
  return vv.find(u) != Text::npos;
}

}  // namespace superstring
