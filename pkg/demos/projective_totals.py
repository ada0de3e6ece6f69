"""
Global characteristic numbers on projective space
=================================================

On ``P^n`` with a degree-``d`` foliation and a degree-``k`` invariant
hypersurface, the totals of the local indices are polynomial in
``(n, d, k)``.  Each total is computed from truncated Chern series and from
a closed form, and the two must agree.
"""

from foliation_indices import GlobalData, identity_sweep
from foliation_indices.chern import gsv_total_closed, poincare_bound_checks

g = GlobalData(n=4, d=0, k=3, mu_list=(16,))
print("integral_X =", g.integral_X())
print("GSV total  =", g.gsv_total())
print("Sch total  =", g.schwartz_total())
print("chi(D)     =", g.euler_char())
for name, check in poincare_bound_checks(g).items():
    print(f"  {name}: {check['status']} ({check['lhs']} vs {check['rhs']})")

# Exhaustive check of the identities on a box of triples
result = identity_sweep(8, 10, 10)
for name, count in result.checks.items():
    print(f"{name}: {count} checks, {len(result.failures_for(name))} failures")

# The GSV total is negative once k > d + 2 only in even dimension;
# the cubic cone in P^3 (d=0, k=3) has total 9
for n in (2, 3, 4, 5):
    print(n, [gsv_total_closed(n, 0, k) for k in range(3, 7)])
