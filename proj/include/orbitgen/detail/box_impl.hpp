#ifndef ORBITGEN_DETAIL_BOX_IMPL_HPP
#define ORBITGEN_DETAIL_BOX_IMPL_HPP

#include <stdexcept>

namespace orbitgen {

template <typename Visit>
void for_each_box_vector(std::size_t n, const BoxConstraint& box, Visit&& visit) {
  std::vector<std::int64_t> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::int64_t> b = box.max_part;
    if (box.ceiling)
      b = b ? std::min<std::int64_t>(*b, (*box.ceiling)[i]) : (*box.ceiling)[i];
    if (!b && box.degree)
      b = *box.degree;
    if (!b && box.max_degree)
      b = *box.max_degree;
    if (!b)
      throw std::invalid_argument("brute force: unbounded box");
    bound[i] = *b;
  }
  std::optional<std::int64_t> cap = box.degree;
  if (box.max_degree)
    cap = cap ? std::min(*cap, *box.max_degree) : *box.max_degree;
  IntegerVector v(n);
  std::int64_t sum = 0;
  // odometer, last coordinate fastest
  while (true) {
    if ((!box.degree || sum == *box.degree) && (!box.max_degree || sum <= *box.max_degree))
      visit(static_cast<const IntegerVector&>(v));
    std::size_t k = n;
    while (k > 0) {
      --k;
      const bool room = v[k] < bound[k] && (!cap || sum < *cap);
      if (room) {
        ++v[k];
        ++sum;
        break;
      }
      sum -= v[k];
      v[k] = 0;
      if (k == 0)
        return;
    }
    if (n == 0)
      return;
  }
}

} // namespace orbitgen

#endif // ORBITGEN_DETAIL_BOX_IMPL_HPP
