#pragma once

// Seeded generators shared by the property tests.

#include <random>
#include <vector>

#include "regdec/field.hpp"
#include "regdec/group.hpp"

namespace regdec::gen {

std::mt19937_64& rng();

FieldElement random_element(const FieldRef& f, bool nonzero = false);

/// Random group with at most `max_rank` factors, each in [2, max_factor],
/// and order at most `max_order`.
FinAbGroup random_group(std::size_t max_order, std::size_t max_rank = 3, std::uint32_t max_factor = 8);

GroupElement random_member(const FinAbGroup& g);

/// `count` uniformly random field codes.
std::vector<Field::Code> random_codes(const Field& f, std::size_t count);

}  // namespace regdec::gen
