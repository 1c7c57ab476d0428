"""Certified quadratic programming on filter-sized problems.

Solves a few tiny box-and-affine QPs and prints the KKT certificate that the
safety filter relies on: the minimizer, the active constraints, nonnegative
multipliers, and the residual that bounds how far all of it is from exact
optimality.
"""

import numpy as np

from safelift import QpProblem, solve_qp

# 1. Unconstrained minimum already inside the box: nothing to do.
problem = QpProblem(
    hessian_diag=[1.0],
    linear_term=[-0.3],  # pulls toward u = 0.3
    ineq_normals=np.zeros((0, 1)),
    ineq_offsets=[],
    lower_bounds=[-1.0],
    upper_bounds=[1.0],
)
sol = solve_qp(problem)
print(f"free minimum        u* = {sol.x_star[0]:+.6f}   kkt = {sol.kkt_residual:.1e}")

# 2. A half-space pushes the answer to its boundary; the dual tells how hard.
problem = QpProblem(
    hessian_diag=[1.0],
    linear_term=[0.0],
    ineq_normals=[[1.0]],
    ineq_offsets=[0.5],  # require u >= 0.5
    lower_bounds=[-1.0],
    upper_bounds=[1.0],
)
sol = solve_qp(problem)
print(
    f"projection          u* = {sol.x_star[0]:+.6f}   dual = {sol.duals[0]:.3f}"
    f"   active rows = {sol.active_set}"
)

# 3. The filter's slack pattern: a zero-normal row can only be satisfied by
# its slack variable, so everything lands on xi while u stays nominal.
lam_xi = 1e4
problem = QpProblem(
    hessian_diag=[1.0, 2.0 * lam_xi],
    linear_term=[-0.3, 0.0],
    ineq_normals=[[0.0, 1.0]],
    ineq_offsets=[0.7],
    lower_bounds=[-1.0, 0.0],
    upper_bounds=[1.0, np.inf],
)
sol = solve_qp(problem)
print(f"slack absorption    u* = {sol.x_star[0]:+.6f}   xi* = {sol.x_star[1]:.6f}")

# 4. Conflicting requirements are detected, not papered over.
from safelift.numerics import Infeasible

problem = QpProblem(
    hessian_diag=[1.0],
    linear_term=[0.0],
    ineq_normals=[[-1.0]],
    ineq_offsets=[0.5],  # u <= -0.5 against a box starting at 0
    lower_bounds=[0.0],
    upper_bounds=[1.0],
)
try:
    solve_qp(problem)
except Infeasible as exc:
    print(f"infeasible verdict  {exc}")
