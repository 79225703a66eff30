//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_ELEMENT_H_
#define MOLGA_ELEMENT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "molga/small_vector.h"

namespace molga {

// The supported organic subset.
enum class Element : std::uint8_t { kB, kC, kN, kO, kP, kS, kF, kCl, kBr, kI };

inline constexpr std::array<Element, 10> kAllElements = {
    Element::kB, Element::kC,  Element::kN,  Element::kO, Element::kP,
    Element::kS, Element::kF, Element::kCl, Element::kBr, Element::kI};

inline constexpr int kMinCharge = -2;
inline constexpr int kMaxCharge = 2;

std::string_view symbol(Element e);
int atomic_number(Element e);
std::optional<Element> element_from_symbol(std::string_view sym);

// Allowed total valences (bond order sum + hydrogens), ascending.
//
// This is the single valence table used everywhere in the library:
//
//   element   neutral   charge rule
//   B         3         v - q           (B- 4, B+ 2)
//   C         4         v - |q|         (C+ 3, C- 3)
//   N         3         v + q           (N+ 4, N- 2)
//   O         2         v + q           (O+ 3, O- 1)
//   P         3, 5      v + q
//   S         2, 4, 6   v + q
//   F Cl Br I 1         v + q           (Cl- 0)
//
// Negative results are dropped. An empty list means the element/charge
// combination cannot exist.
ValenceList allowed_valences(Element e, int charge);

}  // namespace molga

#endif  // MOLGA_ELEMENT_H_
