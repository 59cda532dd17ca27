#include "coxcanon/cohomology.hpp"

namespace coxcanon {

Integer bott_dimension(long n, long d, long i) {
  if (n < 1) throw DimensionMismatch("bott_dimension needs n >= 1");
  if (i == 0 && d >= 0) return binomial(Integer(d) + n, n);
  if (i == n && d <= -n - 1) return binomial(Integer(-d) - 1, n);
  return 0;
}

namespace {

Integer kunneth_rec(const CohomologyQuery& q, std::size_t factor, long remaining_index) {
  if (factor == q.factor_dims.size()) return remaining_index == 0 ? 1 : 0;
  Integer total = 0;
  const long n = q.factor_dims[factor];
  for (long i = 0; i <= n && i <= remaining_index; ++i) {
    Integer h = bott_dimension(n, q.twists[factor], i);
    if (h == 0) continue;
    total += h * kunneth_rec(q, factor + 1, remaining_index - i);
  }
  return total;
}

}  // namespace

Integer kunneth_dimension(const CohomologyQuery& q) {
  if (q.factor_dims.empty() || q.factor_dims.size() != q.twists.size())
    throw DimensionMismatch("kunneth query shape mismatch");
  long total_dim = 0;
  for (long n : q.factor_dims) total_dim += n;
  if (q.index < 0 || q.index > total_dim) return 0;
  return kunneth_rec(q, 0, q.index);
}

}  // namespace coxcanon
