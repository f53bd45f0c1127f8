#pragma once

#include <string>
#include <variant>
#include <vector>

#include "zptower/bigint.hpp"
#include "zptower/graph.hpp"

namespace zpt {

// Path v1..vk with multiplicities[i] parallel edges between v_{i+1} and v_{i+2}.
struct LineSpec {
  std::vector<unsigned> multiplicities;
};

// Path v1..vk plus one extra edge v_n - v_m.
struct ModifiedLineSpec {
  unsigned k = 0, n = 0, m = 0;
};

// Cycle v1..vn plus a chord v_i - v_j, marked v1 and v_t.
struct ChordedCycleSpec {
  unsigned n = 0, t = 0, i = 0, j = 0;
};

// Complete graph on v1..vn, marked v1 and v2.
struct CompleteSpec {
  unsigned n = 0;
};

using FamilySpec = std::variant<LineSpec, ModifiedLineSpec, ChordedCycleSpec, CompleteSpec>;

std::string variant_name(const FamilySpec& s);

// Throws InputError on a parameter constraint violation. Chorded cycles are
// normalised to i < j.
FamilySpec validate(const FamilySpec& s);

RamifiedGraph make_family(const FamilySpec& s);

BigInt f2_closed_form(const FamilySpec& s);

}  // namespace zpt
