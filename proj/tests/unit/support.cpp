#include "support.hpp"

namespace regdec::gen {

std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

FieldElement random_element(const FieldRef& f, bool nonzero) {
  std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, f->size() - 1);
  return {f, static_cast<Field::Code>(d(rng()))};
}

FinAbGroup random_group(std::size_t max_order, std::size_t max_rank, std::uint32_t max_factor) {
  std::uniform_int_distribution<std::size_t> rank_d(1, max_rank);
  std::uniform_int_distribution<std::uint32_t> n_d(2, max_factor);
  for (;;) {
    std::vector<std::uint32_t> orders(rank_d(rng()));
    std::size_t total = 1;
    for (auto& n : orders) {
      n = n_d(rng());
      total *= n;
    }
    if (total <= max_order) return FinAbGroup(orders);
  }
}

GroupElement random_member(const FinAbGroup& g) {
  std::uniform_int_distribution<std::size_t> d(0, g.size() - 1);
  return g.element(d(rng()));
}

std::vector<Field::Code> random_codes(const Field& f, std::size_t count) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.size() - 1);
  std::vector<Field::Code> out(count);
  for (auto& c : out) c = static_cast<Field::Code>(d(rng()));
  return out;
}

}  // namespace regdec::gen
