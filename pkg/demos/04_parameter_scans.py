"""Monte-Carlo and grid scans over the deformation charts.

Two experiments at orders (3,3,3,3):

* the distribution of a4*v44 at fixed (T13, T24): near the concurrent
  locus (T = 16) the minimum collapses to 0, while at T = 6 it stays
  pinned just above 2 (the infimum is approached only as v23 -> 0-);
* the grid minimum of T13 * T24 over the concurrent chart, attained at
  the all-(-1) point with value exactly 256.
"""

from projcox import QuadPrismOrders, concurrent_t_scan, standard_scan

orders = QuadPrismOrders(3, 3, 3, 3)

for t, box in ((6.0, (-10.0, -1e-8)), (16.0, (-10.0, -0.01))):
    report = standard_scan(orders, t, t, samples=100_000, seed=0, box=box)
    print(f"T13 = T24 = {t}: min a4*v44 = {report.min_a4_v44:.6f} "
          f"at (v23, v24, v34) = "
          f"({report.argmin[0]:.3g}, {report.argmin[1]:.3g}, "
          f"{report.argmin[2]:.3g})")
    print(f"  max a4*v44 = {report.max_a4_v44:.4g}, "
          f"{report.valid_samples} valid samples")

grid = concurrent_t_scan(orders, grid_points_per_axis=9)
print(f"\nconcurrent grid: min T13*T24 = {grid.min_product:.6f} "
      f"at {grid.argmin}")
print(f"value at the all-(-1) point: {grid.product_at_all_minus_one:.6f}")
