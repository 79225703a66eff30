//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/element.h"

#include <cstdlib>

namespace molga {
namespace {

struct ElementInfo {
  std::string_view symbol;
  int atomic_number;
  ValenceList neutral;
};

const ElementInfo &info(Element e) {
  static const std::array<ElementInfo, 10> table = {{
      {"B", 5, {3}},
      {"C", 6, {4}},
      {"N", 7, {3}},
      {"O", 8, {2}},
      {"P", 15, {3, 5}},
      {"S", 16, {2, 4, 6}},
      {"F", 9, {1}},
      {"Cl", 17, {1}},
      {"Br", 35, {1}},
      {"I", 53, {1}},
  }};
  return table[static_cast<std::size_t>(e)];
}

}  // namespace

std::string_view symbol(Element e) { return info(e).symbol; }

int atomic_number(Element e) { return info(e).atomic_number; }

std::optional<Element> element_from_symbol(std::string_view sym) {
  for (Element e : kAllElements) {
    if (info(e).symbol == sym) return e;
  }
  return std::nullopt;
}

ValenceList allowed_valences(Element e, int charge) {
  ValenceList out;
  if (charge < kMinCharge || charge > kMaxCharge) return out;
  for (int v : info(e).neutral) {
    int adjusted = v;
    switch (e) {
      case Element::kB:
        adjusted = v - charge;
        break;
      case Element::kC:
        adjusted = v - std::abs(charge);
        break;
      default:
        adjusted = v + charge;
        break;
    }
    if (adjusted >= 0) out.push_back(adjusted);
  }
  return out;
}

}  // namespace molga
