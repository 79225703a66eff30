//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_SRC_WRITER_INTERNAL_H_
#define MOLGA_SRC_WRITER_INTERNAL_H_

#include <span>
#include <string>
#include <vector>

#include "molga/molgraph.h"

namespace molga::internal {

// Ranked DFS serialization; also reports the atom visit order so that two
// leaves with equal strings yield an automorphism.
std::string write_ranked(const MolGraph &g, std::span<const int> ranks,
                         std::vector<int> *visit_order);

}  // namespace molga::internal

#endif  // MOLGA_SRC_WRITER_INTERNAL_H_
